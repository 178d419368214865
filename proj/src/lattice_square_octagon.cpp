// Square-octagon layers: the 2D code and the two coupled-layer 3D codes.
#include <array>
#include <map>
#include <tuple>

#include "floqsim/errors.hpp"
#include "lattice.hpp"

namespace floqsim::detail {

namespace {

enum Corner { N = 0, E = 1, S = 2, W = 3 };

void add_layer_schedules(CodeInstance& c, const std::string& init) {
  c.schedules = {{"GBRBGR", {"G", "B", "R", "B", "G", "R"}, {}},
                 {"GBR", {"G", "B", "R"}, {}}};
  std::vector<std::string> pre;
  for (char ch : init) pre.emplace_back(1, ch);
  for (auto& s : c.schedules) s.init = pre;
}

}  // namespace

CodeInstance build_square_octagon(int L) {
  if (L % 2) throw UnsupportedSize("floquet-tc-2d needs even L for the two-coloring of squares");
  CodeInstance c;
  c.family = Family::floquet_tc_2d;
  c.L = L;
  c.period = {4 * L, 4 * L};
  const std::size_t n = 4 * L * L;
  auto q = [L](int i, int j, int k) {
    return static_cast<std::size_t>(4 * (mod(i, L) + L * mod(j, L)) + k);
  };
  const char* tags[] = {"N", "E", "S", "W"};
  c.qubits.resize(n);
  for (int j = 0; j < L; ++j)
    for (int i = 0; i < L; ++i) {
      int x = 4 * i, y = 4 * j;
      c.qubits[q(i, j, N)] = {{x, mod(y + 1, 4 * L)}, tags[N]};
      c.qubits[q(i, j, E)] = {{mod(x + 1, 4 * L), y}, tags[E]};
      c.qubits[q(i, j, S)] = {{x, mod(y - 1, 4 * L)}, tags[S]};
      c.qubits[q(i, j, W)] = {{mod(x - 1, 4 * L), y}, tags[W]};
    }
  for (int j = 0; j < L; ++j)
    for (int i = 0; i < L; ++i) {
      bool par = (i + j) % 2;
      // NE and SW edges are red (XX) on even squares, blue (ZZ) on odd ones.
      const char* ca = par ? "B" : "R";
      const char* cb = par ? "R" : "B";
      char pa = par ? 'Z' : 'X', pb = par ? 'X' : 'Z';
      add_check(c, pair_op(n, q(i, j, N), q(i, j, E), pa), {ca}, ca == std::string("R") ? "red" : "blue");
      add_check(c, pair_op(n, q(i, j, S), q(i, j, W), pa), {ca}, ca == std::string("R") ? "red" : "blue");
      add_check(c, pair_op(n, q(i, j, E), q(i, j, S), pb), {cb}, cb == std::string("R") ? "red" : "blue");
      add_check(c, pair_op(n, q(i, j, W), q(i, j, N), pb), {cb}, cb == std::string("R") ? "red" : "blue");
      add_check(c, pair_op(n, q(i, j, E), q(i + 1, j, W), 'Y'), {"G"}, "green");
      add_check(c, pair_op(n, q(i, j, N), q(i, j + 1, S), 'Y'), {"G"}, "green");
    }
  for (int j = 0; j < L; ++j)
    for (int i = 0; i < L; ++i) {
      std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      PauliOp sq(n), sx(n), sz(n);
      for (int k = 0; k < 4; ++k) sq.set(q(i, j, k), 'Y');
      bool par = (i + j) % 2;
      // Red edges multiply to X^4, blue edges to Z^4.
      for (int k = 0; k < 4; ++k) {
        sx.set(q(i, j, k), 'X');
        sz.set(q(i, j, k), 'Z');
      }
      c.named_generators.push_back({"square" + at, sq});
      std::array<std::size_t, 8> oct = {q(i, j, N),         q(i, j, E),         q(i + 1, j, W),
                                        q(i + 1, j, N),     q(i + 1, j + 1, S), q(i + 1, j + 1, W),
                                        q(i, j + 1, E),     q(i, j + 1, S)};
      PauliOp o(n), oy(n);
      for (auto k : oct) {
        o.set(k, par ? 'X' : 'Z');
        oy.set(k, 'Y');
      }
      c.named_generators.push_back({"octagon" + at, o});
      c.loop_products.push_back({"square-X" + at, sx});
      c.loop_products.push_back({"square-Z" + at, sz});
      c.loop_products.push_back({"octagon-Y" + at, oy});
    }
  add_layer_schedules(c, "RBGR");
  return c;
}

namespace {

const std::array<std::string, 3> kPlanes = {"xy", "xz", "yz"};

int axis_of(char a) { return a - 'x'; }

}  // namespace

CodeInstance build_coupled_layers(Family family, int L) {
  if (L % 2) throw UnsupportedSize(family_name(family) + " needs even L for the two-coloring of squares");
  CodeInstance c;
  c.family = family;
  c.L = L;
  c.period = {4 * L, 4 * L, 4 * L};
  using V = std::array<int, 3>;
  // Per cubic vertex: 3 planes x 2 in-plane axes x 2 signs = 12 qubits.
  auto vidx = [L](V v) { return mod(v[0], L) * L * L + mod(v[1], L) * L + mod(v[2], L); };
  auto q = [&](V v, int plane, char axis, int sign) {
    const std::string& P = kPlanes[plane];
    int a = P[0] == axis ? 0 : 1;
    return static_cast<std::size_t>(12 * vidx(v) + 4 * plane + 2 * a + (sign > 0 ? 0 : 1));
  };
  const std::size_t n = 12 * L * L * L;
  c.qubits.resize(n);
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int z = 0; z < L; ++z)
        for (int p = 0; p < 3; ++p)
          for (char a : kPlanes[p])
            for (int s : {1, -1}) {
              std::vector<int> co = {4 * x, 4 * y, 4 * z};
              co[axis_of(a)] = mod(co[axis_of(a)] + s, 4 * L);
              c.qubits[q({x, y, z}, p, a, s)] = {co, kPlanes[p]};
            }
  auto shift = [](V v, char a, int s) {
    v[axis_of(a)] += s;
    return v;
  };
  std::vector<std::size_t> green_only;
  for (int p = 0; p < 3; ++p) {
    char a = kPlanes[p][0], b = kPlanes[p][1];
    for (int x = 0; x < L; ++x)
      for (int y = 0; y < L; ++y)
        for (int z = 0; z < L; ++z) {
          V v = {x, y, z};
          bool par = (v[axis_of(a)] + v[axis_of(b)]) % 2;
          const char* c1 = par ? "B" : "R";
          const char* c2 = par ? "R" : "B";
          char p1 = par ? 'Z' : 'X', p2 = par ? 'X' : 'Z';
          auto col = [](const char* r) { return std::string(r) == "R" ? "red" : "blue"; };
          std::string tag = kPlanes[p];
          add_check(c, pair_op(n, q(v, p, a, 1), q(v, p, b, 1), p1), {c1}, col(c1), tag);
          add_check(c, pair_op(n, q(v, p, a, -1), q(v, p, b, -1), p1), {c1}, col(c1), tag);
          add_check(c, pair_op(n, q(v, p, a, 1), q(v, p, b, -1), p2), {c2}, col(c2), tag);
          add_check(c, pair_op(n, q(v, p, a, -1), q(v, p, b, 1), p2), {c2}, col(c2), tag);
          for (char e : {a, b})
            add_check(c, pair_op(n, q(v, p, e, 1), q(shift(v, e, 1), p, e, -1), 'Y'), {"G", "g"}, "green",
                      tag);
        }
  }
  // Two-qubit YY condensation checks between layers, measured with the green round.
  using End = std::pair<int, std::string>;  // plane index, signed axis
  std::vector<std::pair<End, End>> pairs;
  if (family == Family::floquet_tc_3d) {
    pairs = {{{0, "+y"}, {1, "+z"}}, {{0, "+x"}, {2, "+z"}}, {{1, "+x"}, {2, "+y"}}};
  } else {
    for (auto [ax, p1, p2] : {std::tuple{'x', 0, 1}, std::tuple{'y', 0, 2}, std::tuple{'z', 1, 2}})
      for (char s : {'+', '-'}) {
        std::string d{s, ax};
        pairs.push_back({{p1, d}, {p2, d}});
      }
  }
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int z = 0; z < L; ++z)
        for (const auto& [e1, e2] : pairs) {
          V v = {x, y, z};
          auto qq = [&](const End& e) { return q(v, e.first, e.second[1], e.second[0] == '+' ? 1 : -1); };
          add_check(c, pair_op(n, qq(e1), qq(e2), 'Y'), {"G"}, "green",
                    "condensation " + kPlanes[e1.first] + e1.second + "|" + kPlanes[e2.first] + e2.second);
        }
  // Named stabilizers: squares, and per truncated cube a product of octagons
  // on its faces: the three through its lowest corner for the toric code,
  // all six for the X-cube code.
  auto octagon = [&](V v, int p, char pauli) {
    char a = kPlanes[p][0], b = kPlanes[p][1];
    V va = shift(v, a, 1), vb = shift(v, b, 1), vab = shift(va, b, 1);
    PauliOp o(n);
    for (auto k : {q(v, p, a, 1), q(v, p, b, 1), q(va, p, a, -1), q(va, p, b, 1), q(vab, p, a, -1),
                   q(vab, p, b, -1), q(vb, p, a, 1), q(vb, p, b, -1)})
      o.set(k, pauli);
    return o;
  };
  auto octagon_type = [&](V v, int p) {
    char a = kPlanes[p][0], b = kPlanes[p][1];
    return (v[axis_of(a)] + v[axis_of(b)]) % 2 ? 'X' : 'Z';
  };
  for (int x = 0; x < L; ++x)
    for (int y = 0; y < L; ++y)
      for (int z = 0; z < L; ++z) {
        V v = {x, y, z};
        std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
        PauliOp cube(n);
        for (int p = 0; p < 3; ++p) {
          char a = kPlanes[p][0], b = kPlanes[p][1];
          char third = static_cast<char>('x' + 'y' + 'z' - a - b);
          PauliOp sq(n), sx(n), sz(n);
          for (char e : {a, b})
            for (int s : {1, -1}) {
              sq.set(q(v, p, e, s), 'Y');
              sx.set(q(v, p, e, s), 'X');
              sz.set(q(v, p, e, s), 'Z');
            }
          c.named_generators.push_back({"square" + kPlanes[p] + at, sq});
          cube *= octagon(v, p, octagon_type(v, p));
          if (family == Family::xcube_floquet) {
            V w = shift(v, third, 1);
            cube *= octagon(w, p, octagon_type(w, p));
          }
          c.loop_products.push_back({"square-X" + kPlanes[p] + at, sx});
          c.loop_products.push_back({"square-Z" + kPlanes[p] + at, sz});
          c.loop_products.push_back({"octagon-Y" + kPlanes[p] + at, octagon(v, p, 'Y')});
        }
        c.named_generators.push_back({"cube" + at, cube});
      }
  add_layer_schedules(c, "RBgR");
  return c;
}

}  // namespace floqsim::detail
