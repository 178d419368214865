// Floquet color code on the ruby lattice: each honeycomb vertex carries one
// qubit per adjacent hexagon.
#include <array>
#include <map>

#include "floqsim/errors.hpp"
#include "lattice.hpp"

namespace floqsim::detail {

namespace {

using Hex = std::pair<int, int>;
// Honeycomb vertex: sublattice (0 = A, 1 = B) and cell.
struct Vert {
  int sub, a, b;
  bool operator<(const Vert& o) const { return std::tie(sub, a, b) < std::tie(o.sub, o.a, o.b); }
  bool operator==(const Vert& o) const { return sub == o.sub && a == o.a && b == o.b; }
};

const char* kColorName[] = {"red", "green", "blue"};
const char kColorLetter[] = {'R', 'G', 'B'};

}  // namespace

CodeInstance build_color(int L) {
  if (L % 3) throw UnsupportedSize("floquet-color needs L divisible by 3 for the hexagon 3-coloring");
  CodeInstance c;
  c.family = Family::floquet_color;
  c.L = L;
  c.period = {9 * L, 9 * L};
  auto A = [L](int a, int b) { return Vert{0, mod(a, L), mod(b, L)}; };
  auto B = [L](int a, int b) { return Vert{1, mod(a, L), mod(b, L)}; };
  std::vector<Hex> hexes;
  std::map<Hex, std::array<Vert, 6>> verts;
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) {
      hexes.push_back({a, b});
      verts[{a, b}] = {A(a, b), B(a, b), A(a + 1, b), B(a + 1, b - 1), A(a + 1, b - 1), B(a, b - 1)};
    }
  auto color = [](Hex h) { return mod(h.first - h.second, 3); };
  std::map<std::pair<Vert, Hex>, std::size_t> qid;
  auto pos = [](const Vert& v) {
    return std::array<int, 2>{3 * v.a + (v.sub ? -1 : -2), 3 * v.b + (v.sub ? 2 : 1)};
  };
  for (const auto& h : hexes)
    for (const auto& v : verts[h]) {
      qid[{v, h}] = c.qubits.size();
      // Qubit sits two thirds of the way from the hexagon center to its vertex.
      auto p = pos(v);
      int P = 3 * L;
      std::array<int, 2> ctr = {3 * h.first, 3 * h.second};
      std::vector<int> co(2);
      for (int i = 0; i < 2; ++i) {
        int d = mod(ctr[i] - p[i] + P / 2, P) - P / 2;  // nearest image of the center
        co[i] = mod(3 * p[i] + d, 9 * L);
      }
      c.qubits.push_back({co, std::string(v.sub ? "B" : "A") + kColorLetter[color(h)]});
    }
  const std::size_t n = c.qubits.size();
  // Edges of the honeycomb with the two hexagons sharing each.
  std::map<std::pair<Vert, Vert>, std::vector<Hex>> e2h;
  std::vector<std::pair<Vert, Vert>> edge_order;
  for (const auto& h : hexes) {
    const auto& vs = verts[h];
    for (int i = 0; i < 6; ++i) {
      Vert u = vs[i], w = vs[(i + 1) % 6];
      if (w < u) std::swap(u, w);
      auto& hs = e2h[{u, w}];
      if (hs.empty()) edge_order.push_back({u, w});
      hs.push_back(h);
    }
  }
  for (const auto& e : edge_order) {
    const auto& hs = e2h[e];
    if (hs.size() != 2 || color(hs[0]) == color(hs[1]))
      throw StructureMismatch("ruby lattice: edge not shared by two differently colored hexagons");
    for (int side = 0; side < 2; ++side) {
      Hex h = hs[side], other = hs[1 - side];
      int hc = color(h), oc = color(other);
      bool xlab = oc == mod(hc - 1, 3);
      // Round 0 holds x-edges of red and blue hexagons and y-edges of green ones.
      std::string r = (xlab == (hc != 1)) ? "0" : "1";
      std::string alt_own = std::string(1, kColorLetter[hc]) + (xlab ? "0" : "1");
      std::string alt_facing = std::string(1, kColorLetter[oc]) + "0";
      add_check(c, pair_op(n, qid[{e.first, h}], qid[{e.second, h}], xlab ? 'X' : 'Y'),
                {r, alt_own, alt_facing}, kColorName[hc], xlab ? "x-edge" : "y-edge");
    }
  }
  // Triangle ZZ checks at each honeycomb vertex.
  std::map<Vert, std::vector<Hex>> v2h;
  std::vector<Vert> vert_order;
  for (const auto& h : hexes)
    for (const auto& v : verts[h]) {
      if (v2h[v].empty()) vert_order.push_back(v);
      v2h[v].push_back(h);
    }
  for (const auto& v : vert_order) {
    const auto& hs = v2h[v];
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        int third = 3 - color(hs[i]) - color(hs[j]);
        add_check(c, pair_op(n, qid[{v, hs[i]}], qid[{v, hs[j]}], 'Z'),
                  {"2", std::string(1, kColorLetter[third]) + "1"}, "z", "triangle");
      }
  }
  for (const auto& h : hexes) {
    std::string at = "(" + std::to_string(h.first) + "," + std::to_string(h.second) + ")";
    const auto& vs = verts[h];
    PauliOp hz(n), hx(n), infl(n);
    for (const auto& v : vs) {
      hz.set(qid[{v, h}], 'Z');
      hx.set(qid[{v, h}], 'X');
    }
    c.named_generators.push_back({"hexagon" + at, hz});
    // Inflated hexagon: X on h times the loop through the neighbouring
    // hexagons' qubits at each vertex of h, closed by their edge checks and
    // the vertex ZZ checks.
    for (int i = 0; i < 6; ++i) {
      Vert u = vs[i], w = vs[(i + 1) % 6];
      Vert lo = u < w ? u : w, hi = u < w ? w : u;
      const auto& hs = e2h[{lo, hi}];
      Hex nb = hs[0] == h ? hs[1] : hs[0];
      bool xlab = color(h) == mod(color(nb) - 1, 3);
      PauliOp e = pair_op(n, qid[{u, nb}], qid[{w, nb}], xlab ? 'X' : 'Y');
      infl *= e;
      std::vector<Hex> others;
      for (const auto& g : v2h[u])
        if (g != h) others.push_back(g);
      infl *= pair_op(n, qid[{u, others[0]}], qid[{u, others[1]}], 'Z');
    }
    infl *= hx;
    c.named_generators.push_back({"inflated-hexagon" + at, infl});
    if (color(h) != 1) c.loop_products.push_back({"hexagon-X" + at, hx});
  }
  for (const auto& e : edge_order) {
    const auto& hs = e2h[e];
    PauliOp sq(n);
    for (const auto& h : hs) {
      sq.set(qid[{e.first, h}], 'Z');
      sq.set(qid[{e.second, h}], 'Z');
    }
    c.loop_products.push_back({"square-Z" + std::to_string(c.loop_products.size()), sq});
  }
  c.schedules = {{"012", {"0", "1", "2"}, {}},
                 {"012102", {"0", "1", "2", "1", "0", "2"}, {}},
                 {"012021", {"0", "1", "2", "0", "2", "1"}, {}},
                 {"alt6", {"B0", "B1", "G0", "G1", "R0", "R1"}, {}}};
  return c;
}

}  // namespace floqsim::detail
