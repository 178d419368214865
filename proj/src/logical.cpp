#include "floqsim/logical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "floqsim/errors.hpp"

namespace floqsim {

std::vector<PauliOp> LogicalFrame::flat() const {
  std::vector<PauliOp> out;
  for (const auto& p : pairs) out.push_back(p.first);
  for (const auto& p : pairs) out.push_back(p.second);
  return out;
}

LogicalFrame logical_basis(const StabilizerGroup& s) {
  const std::size_t n = s.n_qubits();
  PauliEchelon mod_s(n);
  for (const auto& g : s.generators()) mod_s.insert(g);
  std::deque<PauliOp> reps;
  for (auto& c : commutant(n, s.generators()))
    if (mod_s.insert(c)) reps.push_back(std::move(c));
  LogicalFrame f{s, {}};
  // Symplectic Gram-Schmidt; the form is nondegenerate on C(S)/S.
  while (!reps.empty()) {
    PauliOp a = reps.front();
    reps.pop_front();
    auto it = std::find_if(reps.begin(), reps.end(), [&](const PauliOp& b) { return symplectic_product(a, b); });
    if (it == reps.end()) throw StructureMismatch("logical_basis: degenerate commutant quotient");
    PauliOp b = *it;
    reps.erase(it);
    for (auto& c : reps) {
      bool ca = symplectic_product(c, a), cb = symplectic_product(c, b);
      if (cb) c *= a;
      if (ca) c *= b;
    }
    f.pairs.push_back({std::move(a), std::move(b)});
  }
  return f;
}

BitVec frame_coordinates(const LogicalFrame& f, const PauliOp& p) {
  const std::size_t k = f.k();
  BitVec out(2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (symplectic_product(p, f.pairs[i].second)) out.set(i);
    if (symplectic_product(p, f.pairs[i].first)) out.set(k + i);
  }
  return out;
}

std::optional<PauliOp> evolve_logical(const PauliOp& l, const StabilizerGroup& s_curr,
                                      const std::vector<PauliOp>& next_checks) {
  const std::size_t m = next_checks.size();
  BitVec target(m);
  for (std::size_t j = 0; j < m; ++j)
    if (symplectic_product(l, next_checks[j])) target.set(j);
  if (!target.any()) return l;
  const auto& gens = s_curr.generators();
  BitMatrix a(0, m);
  for (const auto& g : gens) {
    BitVec row(m);
    for (std::size_t j = 0; j < m; ++j)
      if (symplectic_product(g, next_checks[j])) row.set(j);
    a.add_row(std::move(row));
  }
  auto x = f2_solve(a, target);
  if (!x) return std::nullopt;
  PauliOp out = l;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (x->get(i)) out *= gens[i];
  return out;
}

std::size_t matrix_order(const BitMatrix& m, std::size_t max_order) {
  if (m.row_count() != m.col_count()) return 0;
  BitMatrix p = m;
  for (std::size_t k = 1; k <= max_order; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return 0;
}

AutomorphismReport period_automorphism(const CodeInstance& code, const IsgHistory& history) {
  const std::size_t p = history.schedule.period.size();
  if (history.snapshots.size() < p) throw ConfigError("history does not cover a full period");
  if (!(history.snapshots[p - 1].group == history.start))
    throw PeriodicityViolation("group after one period differs from the group before it");
  std::vector<std::vector<PauliOp>> rounds;
  for (const auto& idx : history.schedule.period_checks) {
    rounds.emplace_back();
    for (auto i : idx) rounds.back().push_back(code.checks[i].op);
  }
  LogicalFrame frame = logical_basis(history.start);
  const auto flat = frame.flat();
  AutomorphismReport rep;
  rep.k = frame.k();
  std::vector<BitVec> rows;
  for (std::size_t a = 0; a < flat.size(); ++a) {
    PauliOp cur = flat[a];
    const StabilizerGroup* prev = &history.start;
    bool measured = false;
    for (std::size_t t = 0; t < p && !measured; ++t) {
      auto r = evolve_logical(cur, *prev, rounds[t]);
      if (!r) {
        measured = true;
        break;
      }
      cur = std::move(*r);
      prev = &history.snapshots[t].group;
    }
    if (measured)
      rep.measured_logicals.push_back(a);
    else
      rows.push_back(frame_coordinates(frame, cur));
  }
  rep.matrix = BitMatrix(0, 2 * frame.k());
  for (auto& r : rows) rep.matrix.add_row(std::move(r));
  rep.order = rep.measured_logicals.empty() ? matrix_order(rep.matrix) : 0;
  return rep;
}

bool reversibility_check(const StabilizerGroup& a, const StabilizerGroup& b) {
  const std::size_t n = a.n_qubits();
  if (b.n_qubits() != n) throw DimensionError("reversibility_check: qubit counts differ");
  std::vector<PauliOp> both = a.generators();
  both.insert(both.end(), b.generators().begin(), b.generators().end());
  const auto joint = commutant(n, both);
  for (const auto* s : {&a, &b}) {
    PauliEchelon e(n);
    for (const auto& g : s->generators()) e.insert(g);
    std::size_t base = e.rank();
    for (const auto& c : joint) e.insert(c);
    if (e.rank() - base != 2 * (n - s->rank())) return false;
  }
  return true;
}

std::vector<BitVec> periodic_boxes(const CodeInstance& code, int d) {
  const std::size_t n = code.n_qubits();
  if (n == 0) return {};
  const std::size_t dim = code.qubits.front().coord.size();
  std::vector<int> lo(dim, 0), span(dim);
  bool wrap = !code.period.empty();
  for (std::size_t a = 0; a < dim; ++a) {
    if (wrap) {
      span[a] = code.period[a];
    } else {
      int mn = code.qubits.front().coord[a], mx = mn;
      for (const auto& q : code.qubits) {
        mn = std::min(mn, q.coord[a]);
        mx = std::max(mx, q.coord[a]);
      }
      lo[a] = mn;
      span[a] = std::max(1, mx - mn - d + 1);
    }
  }
  std::set<BitVec> seen;
  std::vector<BitVec> out;
  std::vector<int> off(dim, 0);
  while (true) {
    BitVec box(n);
    for (std::size_t q = 0; q < n; ++q) {
      bool in = true;
      for (std::size_t a = 0; a < dim && in; ++a) {
        int c = code.qubits[q].coord[a] - lo[a] - off[a];
        if (wrap) c = ((c % span[a]) + span[a]) % span[a];
        in = c >= 0 && c <= d;
      }
      if (in) box.set(q);
    }
    if (box.any() && seen.insert(box).second) out.push_back(std::move(box));
    std::size_t a = 0;
    while (a < dim && ++off[a] == span[a]) off[a++] = 0;
    if (a == dim) break;
  }
  return out;
}

std::size_t nonlocal_count(const StabilizerGroup& s, const CodeInstance& code, int d) {
  if (s.n_qubits() != code.n_qubits()) throw DimensionError("group and code qubit counts differ");
  PauliEchelon local(s.n_qubits());
  for (const auto& box : periodic_boxes(code, d)) {
    for (const auto& e : restricted_elements(s.generators(), box)) local.insert(e);
    if (local.rank() == s.rank()) break;
  }
  return s.rank() - local.rank();
}

StabilizerGroup surviving_subgroup(const StabilizerGroup& s_curr, const std::vector<PauliOp>& next_checks) {
  return centralizer_within(s_curr, next_checks);
}

SurvivingSummary summarize_surviving(const StabilizerGroup& survivors, const std::vector<PauliOp>& modulo,
                                     const std::vector<BitVec>& regions) {
  const std::size_t n = survivors.n_qubits();
  PauliEchelon mod(n);
  for (const auto& m : modulo) mod.insert(m);
  SurvivingSummary out;
  PauliEchelon joint = mod;
  for (const auto& g : survivors.generators()) joint.insert(g);
  out.quotient_rank = joint.rank() - mod.rank();
  for (const auto& r : regions) {
    std::size_t best = 0;
    for (const auto& e : restricted_elements(survivors.generators(), r)) {
      if (mod.reduce(e).is_identity()) continue;
      std::size_t w = e.weight();
      if (best == 0 || w < best) best = w;
    }
    if (best) out.local_weights.push_back(best);
  }
  return out;
}

Verdict validate_effective_map(const EffectiveQubitMap& m, const StabilizerGroup& s) {
  const std::size_t n = s.n_qubits();
  BitVec block(n);
  for (auto q : m.block) {
    if (q >= n) return {false, "block qubit " + std::to_string(q) + " out of range"};
    block.set(q);
  }
  auto inside = [&](const PauliOp& p) {
    for (auto q : p.support())
      if (!block.get(q)) return false;
    return true;
  };
  if (m.x_eff.n_qubits() != n || m.z_eff.n_qubits() != n) return {false, "effective operator size mismatch"};
  for (std::size_t i = 0; i < m.block_stabilizers.size(); ++i) {
    const auto& b = m.block_stabilizers[i];
    if (!s.contains(b)) return {false, "block stabilizer " + std::to_string(i) + " is not in the group"};
    if (!inside(b)) return {false, "block stabilizer " + std::to_string(i) + " leaves the block"};
  }
  if (!inside(m.x_eff)) return {false, "x_eff leaves the block"};
  if (!inside(m.z_eff)) return {false, "z_eff leaves the block"};
  if (!symplectic_product(m.x_eff, m.z_eff)) return {false, "x_eff and z_eff commute"};
  for (std::size_t i = 0; i < m.block_stabilizers.size(); ++i) {
    if (symplectic_product(m.x_eff, m.block_stabilizers[i]))
      return {false, "x_eff anticommutes with block stabilizer " + std::to_string(i)};
    if (symplectic_product(m.z_eff, m.block_stabilizers[i]))
      return {false, "z_eff anticommutes with block stabilizer " + std::to_string(i)};
  }
  return {};
}

std::vector<std::pair<std::vector<int>, PauliOp>> winding_loops(const CodeInstance& code) {
  if (code.period.empty()) throw InvalidSpec("winding loops need a torus code");
  const std::size_t n = code.n_qubits();
  const std::size_t dim = code.period.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < code.checks.size(); ++i) {
    auto sup = code.checks[i].op.support();
    if (sup.size() != 2) continue;
    adj[sup[0]].push_back(i);
    adj[sup[1]].push_back(i);
  }
  auto step = [&](std::size_t u, std::size_t v) {
    std::vector<int> d(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      int P = code.period[a];
      int x = code.qubits[v].coord[a] - code.qubits[u].coord[a];
      d[a] = ((x + P / 2) % P + P) % P - P / 2;
    }
    return d;
  };
  std::vector<std::vector<int>> pos(n);
  std::vector<PauliOp> to_root(n, PauliOp(n));
  std::vector<bool> seen(n, false), tree(code.checks.size(), false);
  std::map<std::vector<int>, PauliOp> found;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    pos[root] = std::vector<int>(dim, 0);
    std::deque<std::size_t> queue = {root};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto e : adj[u]) {
        auto sup = code.checks[e].op.support();
        std::size_t v = sup[0] == u ? sup[1] : sup[0];
        if (seen[v]) continue;
        seen[v] = true;
        tree[e] = true;
        auto d = step(u, v);
        pos[v] = pos[u];
        for (std::size_t a = 0; a < dim; ++a) pos[v][a] += d[a];
        to_root[v] = to_root[u] * code.checks[e].op;
        queue.push_back(v);
      }
    }
  }
  for (std::size_t e = 0; e < code.checks.size(); ++e) {
    auto sup = code.checks[e].op.support();
    if (sup.size() != 2 || tree[e]) continue;
    auto d = step(sup[0], sup[1]);
    std::vector<int> w(dim);
    bool any = false;
    for (std::size_t a = 0; a < dim; ++a) {
      int total = pos[sup[0]][a] + d[a] - pos[sup[1]][a];
      w[a] = ((total / code.period[a]) % 2 + 2) % 2;
      any = any || w[a];
    }
    if (!any || found.count(w)) continue;
    found.emplace(w, to_root[sup[0]] * to_root[sup[1]] * code.checks[e].op);
  }
  return {found.begin(), found.end()};
}

}  // namespace floqsim
