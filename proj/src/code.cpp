#include "floqsim/code.hpp"

#include <algorithm>
#include <set>

#include "floqsim/errors.hpp"
#include "lattice.hpp"

namespace floqsim {

namespace {

const std::vector<std::pair<Family, std::string>> kFamilies = {
    {Family::floquet_tc_2d, "floquet-tc-2d"}, {Family::floquet_color, "floquet-color"},
    {Family::floquet_tc_3d, "floquet-tc-3d"}, {Family::xcube_floquet, "xcube-floquet"},
    {Family::ftc_3d, "ftc-3d"}};

bool is_layered(Family f) {
  return f == Family::floquet_tc_2d || f == Family::floquet_tc_3d || f == Family::xcube_floquet;
}

char color_letter(const std::string& color) {
  if (color == "red") return 'R';
  if (color == "green") return 'G';
  if (color == "blue") return 'B';
  return '?';
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilies)
    if (fam == f) return name;
  return "unknown";
}

Family family_from_name(const std::string& s) {
  for (const auto& [fam, name] : kFamilies)
    if (name == s) return fam;
  throw ConfigError("unknown family '" + s + "'");
}

std::vector<std::string> CodeInstance::labels() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    for (const auto& r : c.rounds)
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
  return out;
}

std::vector<std::size_t> CodeInstance::round_indices(const std::string& label) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < checks.size(); ++i)
    if (std::find(checks[i].rounds.begin(), checks[i].rounds.end(), label) != checks[i].rounds.end())
      out.push_back(i);
  if (out.empty()) throw UnknownLabel("round label '" + label + "' has no checks in " + family_name(family));
  return out;
}

std::vector<PauliOp> CodeInstance::round_checks(const std::string& label) const {
  std::vector<PauliOp> out;
  for (auto i : round_indices(label)) out.push_back(checks[i].op);
  return out;
}

std::vector<PauliOp> CodeInstance::all_checks() const {
  std::vector<PauliOp> out;
  for (const auto& c : checks) out.push_back(c.op);
  return out;
}

const NamedSchedule& CodeInstance::schedule(const std::string& name) const {
  for (const auto& s : schedules)
    if (s.name == name) return s;
  throw ConfigError("schedule '" + name + "' is not declared for " + family_name(family));
}

bool CodeInstance::has_schedule(const std::string& name) const {
  return std::any_of(schedules.begin(), schedules.end(), [&](const auto& s) { return s.name == name; });
}

CodeInstance build_code(Family family, int L, const std::map<std::string, std::string>& options) {
  if (L < 2) throw UnsupportedSize("L must be at least 2");
  std::string boundary = "torus";
  if (auto it = options.find("boundary"); it != options.end()) boundary = it->second;
  if (boundary == "planar") {
    CodeInstance c = build_planar(family, L);
    c.options = options;
    return c;
  }
  if (boundary != "torus") throw ConfigError("boundary must be 'torus' or 'planar', got '" + boundary + "'");
  CodeInstance c;
  switch (family) {
    case Family::floquet_tc_2d: c = detail::build_square_octagon(L); break;
    case Family::floquet_tc_3d:
    case Family::xcube_floquet: c = detail::build_coupled_layers(family, L); break;
    case Family::floquet_color: c = detail::build_color(L); break;
    case Family::ftc_3d: c = detail::build_ftc(L); break;
  }
  c.options = options;
  return c;
}

StabilizerGroup stabilizers_of_check_group(const CodeInstance& code) {
  StabilizerGroup z = center_of_group(code.n_qubits(), code.all_checks());
  for (const auto& g : code.named_generators)
    if (!z.contains(g.op))
      throw StructureMismatch("named generator " + g.name + " is not in the center of the check group");
  return z;
}

BoundarySpec planar_spec(Family family, int L) {
  BoundarySpec s;
  if (family == Family::floquet_tc_2d) {
    // Left and right faces cut green edges; top and bottom cut squares in half.
    s.name = "green-cut";
    s.lo = {3, 0};
    s.hi = {4 * L + 1, 4 * L + 4};
    s.face_cut = {"G", "G", "RB", "RB"};
  } else if (family == Family::floquet_tc_3d || family == Family::xcube_floquet) {
    // x faces cut green edges; y and z faces cut red and blue edges on the
    // lower halves of squares, away from every condensation check.
    s.name = "mixed-cut";
    s.lo = {3, 4, 4};
    s.hi = {4 * L + 1, 4 * L + 3, 4 * L + 3};
    s.face_cut = {"G", "G", "RB", "RB", "RB", "RB"};
  } else {
    throw InvalidSpec("no planar truncation is documented for " + family_name(family));
  }
  return s;
}

CodeInstance truncate_planar(const CodeInstance& code, const BoundarySpec& spec) {
  if (spec.name == "torus" && spec.lo.empty() && spec.hi.empty()) return code;
  if (code.period.empty()) throw InvalidSpec("truncate_planar needs a torus code");
  if (!is_layered(code.family)) throw InvalidSpec("no planar truncation is documented for " + family_name(code.family));
  const std::size_t dim = code.period.size();
  bool known = (spec.name == "green-cut" && code.family == Family::floquet_tc_2d) ||
               (spec.name == "mixed-cut" && code.family != Family::floquet_tc_2d);
  if (!known) throw InvalidSpec("cut '" + spec.name + "' is not a documented truncation for " + family_name(code.family));
  if (spec.lo.size() != dim || spec.hi.size() != dim || spec.face_cut.size() != 2 * dim)
    throw InvalidSpec("boundary spec dimension does not match the lattice");
  for (std::size_t a = 0; a < dim; ++a)
    if (spec.lo[a] < 0 || spec.hi[a] >= code.period[a] || spec.lo[a] > spec.hi[a])
      throw InvalidSpec("boundary box exceeds the torus along axis " + std::to_string(a));

  const std::size_t n = code.n_qubits();
  std::vector<std::size_t> remap(n, npos);
  CodeInstance out;
  out.family = code.family;
  out.L = code.L;
  out.options = code.options;
  out.schedules = code.schedules;
  for (std::size_t q = 0; q < n; ++q) {
    const auto& co = code.qubits[q].coord;
    bool in = true;
    for (std::size_t a = 0; a < dim; ++a) in = in && co[a] >= spec.lo[a] && co[a] <= spec.hi[a];
    if (in) {
      remap[q] = out.qubits.size();
      out.qubits.push_back(code.qubits[q]);
    }
  }
  const std::size_t m = out.qubits.size();
  auto restrict_op = [&](const PauliOp& p, bool& whole) {
    PauliOp r(m);
    whole = true;
    for (auto q : p.support()) {
      if (remap[q] == npos)
        whole = false;
      else
        r.set(remap[q], p.get(q));
    }
    return r;
  };
  out.boundary = spec;
  out.boundary.single_qubit_checks.clear();
  for (const auto& c : code.checks) {
    bool whole;
    PauliOp r = restrict_op(c.op, whole);
    if (r.is_identity()) continue;
    if (!whole) {
      // Every face the check crosses must allow its color.
      for (auto q : c.op.support()) {
        if (remap[q] != npos) continue;
        const auto& co = code.qubits[q].coord;
        for (std::size_t a = 0; a < dim; ++a) {
          int face = -1;
          if (co[a] < spec.lo[a]) face = 2 * static_cast<int>(a);
          if (co[a] > spec.hi[a]) face = 2 * static_cast<int>(a) + 1;
          if (face < 0) continue;
          if (c.note.rfind("condensation", 0) == 0 ||
              spec.face_cut[face].find(color_letter(c.color)) == std::string::npos)
            throw InvalidSpec("cut through a " + c.color + " " + (c.note.empty() ? "check" : c.note) + " on face " +
                              std::to_string(face) + " is not allowed by " + spec.name);
        }
      }
      if (r.weight() == 1) out.boundary.single_qubit_checks.push_back(out.checks.size());
    }
    out.checks.push_back({r, c.rounds, c.color, whole ? c.note : c.note + " (cut)"});
  }
  for (const auto* src : {&code.named_generators, &code.loop_products})
    for (const auto& g : *src) {
      bool whole;
      PauliOp r = restrict_op(g.op, whole);
      if (!whole) continue;
      (src == &code.named_generators ? out.named_generators : out.loop_products).push_back({g.name, r});
    }
  return out;
}

CodeInstance build_planar(Family family, int L) {
  if (!is_layered(family)) throw InvalidSpec("no planar truncation is documented for " + family_name(family));
  CodeInstance torus = build_code(family, L + 2);
  CodeInstance c = truncate_planar(torus, planar_spec(family, L));
  c.L = L;
  c.options["boundary"] = "planar";
  return c;
}

ParentCode parent_code(const CodeInstance& code) {
  if (code.family == Family::ftc_3d) throw InvalidSpec("no parent code is documented for ftc-3d");
  const std::size_t n = code.n_qubits();
  StabilizerGroup z = stabilizers_of_check_group(code);
  const auto& extra = code.loop_products;
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j)
      if (symplectic_product(extra[i].op, extra[j].op))
        throw ValidationFailed(extra[i].name + " anticommutes with " + extra[j].name, i, j);
    for (std::size_t j = 0; j < z.rank(); ++j)
      if (symplectic_product(extra[i].op, z.generators()[j]))
        throw ValidationFailed(extra[i].name + " anticommutes with a check-group stabilizer", i, j);
  }
  PauliEchelon span(n);
  for (const auto& c : code.checks) span.insert(c.op);
  for (std::size_t i = 0; i < extra.size(); ++i)
    if (!span.reduce(extra[i].op).is_identity())
      throw ValidationFailed(extra[i].name + " is not a product of checks", i, i);
  std::vector<PauliOp> gens = z.generators();
  for (const auto& e : extra) gens.push_back(e.op);
  return {StabilizerGroup::from_generators(n, gens), extra};
}

std::vector<std::size_t> translation_map(const CodeInstance& code, const std::vector<int>& shift) {
  if (code.period.empty()) throw InvalidSpec("translations need a torus code");
  if (shift.size() != code.period.size()) throw DimensionError("shift dimension does not match the lattice");
  std::map<std::pair<std::vector<int>, std::string>, std::size_t> where;
  for (std::size_t q = 0; q < code.n_qubits(); ++q) where[{code.qubits[q].coord, code.qubits[q].tag}] = q;
  std::vector<std::size_t> perm(code.n_qubits());
  for (std::size_t q = 0; q < code.n_qubits(); ++q) {
    std::vector<int> co = code.qubits[q].coord;
    for (std::size_t a = 0; a < co.size(); ++a) co[a] = detail::mod(co[a] + shift[a], code.period[a]);
    auto it = where.find({co, code.qubits[q].tag});
    if (it == where.end()) throw InvalidSpec("shift is not a lattice translation");
    perm[q] = it->second;
  }
  return perm;
}

PauliOp permute(const PauliOp& p, const std::vector<std::size_t>& perm) {
  if (perm.size() != p.n_qubits()) throw DimensionError("permutation size does not match the operator");
  PauliOp out(p.n_qubits());
  for (auto q : p.support()) out.set(perm[q], p.get(q));
  return out;
}

std::map<std::string, std::size_t> cut_colors(const CodeInstance& code, const BitVec& region) {
  if (region.size() != code.n_qubits()) throw DimensionError("region mask size does not match the code");
  std::map<std::string, std::size_t> out;
  for (const auto& c : code.checks) {
    std::size_t inside = 0, total = 0;
    for (auto q : c.op.support()) {
      ++total;
      inside += region.get(q);
    }
    if (inside && inside < total) ++out[c.color];
  }
  return out;
}

}  // namespace floqsim
