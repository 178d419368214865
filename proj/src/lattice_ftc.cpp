// 3D fermionic toric code: a diamond lattice with every site split into two
// qubits joined by a z-edge, so each qubit has one x-, y- and z-edge.
#include <algorithm>
#include <array>
#include <map>
#include <functional>
#include <set>
#include <tuple>

#include "floqsim/errors.hpp"
#include "lattice.hpp"

namespace floqsim::detail {

namespace {

using P3 = std::array<int, 3>;
const std::array<P3, 4> kLeg = {{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
const std::array<P3, 4> kFcc = {{{0, 0, 0}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0}}};
// Legs 0,1 attach to half 0 of a site, legs 2,3 to half 1.
const int kHalf[4] = {0, 0, 1, 1};
const char kLegPauli[4] = {'X', 'Y', 'X', 'Y'};

// Round matchings on the L=2 lattice, one bit per edge in construction order
// (most significant hex digit first). Larger even L repeat them with period 8.
const std::vector<std::pair<std::string, std::string>> kMasks = {
    {"F0", "b0c501b0c501501b0c501b0cb0c501b0c501501b0c501b0c"},
    {"F1", "31406c31406c06c31406c31431406c31406c06c31406c314"},
    {"F2", "501b0c501b0cb0c501b0c501501b0c501b0cb0c501b0c501"},
    {"F3", "06c31406c31431406c31406c06c31406c31431406c31406c"},
    {"B0", "84a49284a49249284a49284a84a49284a49249284a49284a"},
    {"B1", "4a12924a12922924a12924a14a12924a12922924a12924a1"},
    {"B2", "49284a49284a84a49284a49249284a49284a84a49284a492"},
    {"B3", "2924a12924a14a12924a12922924a12924a14a12924a1292"},
    {"R0", "4b40524b40520524b40524b44b40524b40520524b40524b4"},
    {"R1", "d01492d01492492d01492d01d01492d01492492d01492d01"},
    {"R2", "0524b40524b44b40524b40520524b40524b44b40524b4052"},
    {"R3", "492d01492d01d01492d01492492d01492d01d01492d01492"},
};

bool mask_bit(const std::string& hex, std::size_t i) {
  std::size_t digit = hex.size() - 1 - i / 4;
  char ch = hex[digit];
  int v = ch <= '9' ? ch - '0' : ch - 'a' + 10;
  return (v >> (i % 4)) & 1;
}

struct Lattice {
  int P;
  std::vector<std::pair<P3, int>> sites;  // position, sublattice
  std::map<std::pair<P3, int>, std::size_t> sid;
  // Edge: qubits, Pauli, key (kind, site position mod 8, sublattice, leg).
  struct Edge {
    std::size_t a, b;
    char pauli;
    std::tuple<int, P3, int, int> key;
  };
  std::vector<Edge> edges;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_qubits;

  P3 wrap(P3 p) const {
    for (auto& x : p) x = mod(x, P);
    return p;
  }

  explicit Lattice(int L) : P(4 * L) {
    for (int c0 = 0; c0 < L; ++c0)
      for (int c1 = 0; c1 < L; ++c1)
        for (int c2 = 0; c2 < L; ++c2)
          for (const auto& f : kFcc) {
            P3 a = wrap({4 * c0 + f[0], 4 * c1 + f[1], 4 * c2 + f[2]});
            sites.push_back({a, 0});
            sites.push_back({wrap({a[0] + 1, a[1] + 1, a[2] + 1}), 1});
          }
    for (std::size_t s = 0; s < sites.size(); ++s) sid[sites[s]] = s;
    auto m8 = [](P3 p) {
      for (auto& x : p) x = mod(x, 8);
      return p;
    };
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const auto& [pos, sub] = sites[s];
      add_edge(2 * s, 2 * s + 1, 'Z', {0, m8(pos), sub, 0});
      if (sub) continue;
      for (int k = 0; k < 4; ++k) {
        P3 b = wrap({pos[0] + kLeg[k][0], pos[1] + kLeg[k][1], pos[2] + kLeg[k][2]});
        add_edge(2 * s + kHalf[k], 2 * sid.at({b, 1}) + kHalf[k], kLegPauli[k], {1, m8(pos), 0, k});
      }
    }
  }

  void add_edge(std::size_t a, std::size_t b, char p, std::tuple<int, P3, int, int> key) {
    by_qubits[{std::min(a, b), std::max(a, b)}] = edges.size();
    edges.push_back({a, b, p, key});
  }

  std::size_t edge_between(std::size_t a, std::size_t b) const {
    return by_qubits.at({std::min(a, b), std::max(a, b)});
  }

  // Site reached along leg k.
  std::size_t neighbor(std::size_t s, int k) const {
    const auto& [pos, sub] = sites[s];
    int sg = sub ? -1 : 1;
    P3 b = wrap({pos[0] + sg * kLeg[k][0], pos[1] + sg * kLeg[k][1], pos[2] + sg * kLeg[k][2]});
    return sid.at({b, 1 - sub});
  }
};

struct Armchair {
  int orientation;
  std::vector<std::size_t> edges;
  std::vector<std::size_t> sites;
};

// Six-site rings of the diamond lattice; each ring misses exactly one leg
// direction, which is the armchair orientation.
std::vector<Armchair> armchairs(const Lattice& lat) {
  std::vector<Armchair> out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> path;
  std::vector<int> dirs;
  std::function<void()> dfs = [&]() {
    std::size_t last = path.back();
    if (path.size() == 6) {
      for (int k = 0; k < 4; ++k) {
        if (lat.neighbor(last, k) != path[0]) continue;
        std::vector<std::size_t> key = path;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        std::vector<int> d = dirs;
        d.push_back(k);
        Armchair a;
        for (int i = 0; i < 6; ++i) {
          std::size_t s = path[i], t = path[(i + 1) % 6];
          int kin = d[(i + 5) % 6], kout = d[i];
          if (kHalf[kin] != kHalf[kout]) a.edges.push_back(lat.edge_between(2 * s, 2 * s + 1));
          a.edges.push_back(lat.edge_between(2 * s + kHalf[kout], 2 * t + kHalf[kout]));
        }
        a.orientation = -1;
        for (int o = 0; o < 4; ++o)
          if (std::find(d.begin(), d.end(), o) == d.end()) a.orientation = o;
        a.sites = key;
        out.push_back(std::move(a));
        return;
      }
      return;
    }
    for (int k = 0; k < 4; ++k) {
      if (!dirs.empty() && dirs.back() == k) continue;
      std::size_t t = lat.neighbor(last, k);
      if (std::find(path.begin(), path.end(), t) != path.end()) continue;
      path.push_back(t);
      dirs.push_back(k);
      dfs();
      path.pop_back();
      dirs.pop_back();
    }
  };
  for (std::size_t s0 = 0; s0 < lat.sites.size(); ++s0) {
    if (lat.sites[s0].second) continue;
    path = {s0};
    dirs.clear();
    dfs();
  }
  return out;
}

}  // namespace

CodeInstance build_ftc(int L) {
  if (L % 2) throw UnsupportedSize("ftc-3d needs even L so the round matchings tile the torus");
  Lattice lat(L);
  Lattice base(2);
  std::map<std::tuple<int, P3, int, int>, std::size_t> base_index;
  for (std::size_t i = 0; i < base.edges.size(); ++i) base_index[base.edges[i].key] = i;

  CodeInstance c;
  c.family = Family::ftc_3d;
  c.L = L;
  c.period = {8 * L, 8 * L, 8 * L};
  const std::size_t n = 2 * lat.sites.size();
  c.qubits.resize(n);
  for (std::size_t s = 0; s < lat.sites.size(); ++s) {
    const auto& [pos, sub] = lat.sites[s];
    for (int h = 0; h < 2; ++h) {
      int dx = (h == 0 ? 1 : -1) * (sub ? -1 : 1);
      P3 p = {2 * pos[0] + dx, 2 * pos[1], 2 * pos[2]};
      // Emitted with x and y exchanged.
      c.qubits[2 * s + h] = {{mod(p[1], 8 * L), mod(p[0], 8 * L), mod(p[2], 8 * L)}, sub ? "B" : "A"};
    }
  }
  for (const auto& e : lat.edges) {
    std::size_t bi = base_index.at(e.key);
    std::vector<std::string> rounds;
    for (const auto& [label, hex] : kMasks)
      if (mask_bit(hex, bi)) rounds.push_back(label);
    std::string color(1, static_cast<char>(e.pauli - 'X' + 'x'));
    add_check(c, pair_op(n, e.a, e.b, e.pauli), rounds, color, std::get<0>(e.key) ? "leg" : "dimer");
  }
  auto arms = armchairs(lat);
  std::vector<PauliOp> ops;
  for (std::size_t i = 0; i < arms.size(); ++i) {
    PauliOp op(n);
    for (auto e : arms[i].edges) op *= c.checks[e].op;
    ops.push_back(op);
    c.named_generators.push_back({"armchair-" + std::to_string(arms[i].orientation) + "-" + std::to_string(i), op});
  }
  // 3-cells: one armchair per orientation, pairwise sharing sites, ten sites in
  // total, multiplying to the identity.
  std::array<std::vector<std::size_t>, 4> by_orient;
  for (std::size_t i = 0; i < arms.size(); ++i) by_orient[arms[i].orientation].push_back(i);
  auto shared = [&](std::size_t i, std::size_t j) {
    std::vector<std::size_t> common;
    std::set_intersection(arms[i].sites.begin(), arms[i].sites.end(), arms[j].sites.begin(), arms[j].sites.end(),
                          std::back_inserter(common));
    return common.size();
  };
  for (auto i : by_orient[0]) {
    std::array<std::vector<std::size_t>, 3> cand;
    for (int o = 1; o < 4; ++o)
      for (auto j : by_orient[o])
        if (shared(i, j) >= 2) cand[o - 1].push_back(j);
    for (auto a : cand[0])
      for (auto b : cand[1])
        for (auto d : cand[2]) {
          PauliOp prod = ops[i] * ops[a] * ops[b] * ops[d];
          if (!prod.is_identity()) continue;
          std::set<std::size_t> uni;
          for (auto x : {i, a, b, d}) uni.insert(arms[x].sites.begin(), arms[x].sites.end());
          if (uni.size() == 10) c.cells.push_back({i, a, b, d});
        }
  }
  std::vector<std::string> fbfr;
  for (std::string s : {"F0", "F1", "F2", "F3", "F0", "B0", "B1", "B2", "B3", "B0", "F0", "R0", "R1", "R2", "R3", "R0"})
    fbfr.push_back(s);
  std::vector<std::string> fbr = fbfr;
  fbr.erase(fbr.begin() + 10);
  c.schedules = {{"FBFR", fbfr, {}}, {"FBR", fbr, {}}};
  return c;
}

}  // namespace floqsim::detail
