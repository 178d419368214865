#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "floqsim/pauli.hpp"
#include "floqsim/stabilizer.hpp"

namespace floqsim {

enum class Family { floquet_tc_2d, floquet_color, floquet_tc_3d, xcube_floquet, ftc_3d };

std::string family_name(Family f);
Family family_from_name(const std::string& s);  // throws ConfigError

struct Qubit {
  std::vector<int> coord;
  std::string tag;  // foliation plane, square corner or sublattice
};

struct Check {
  PauliOp op;
  std::vector<std::string> rounds;  // labels this check is measured under
  std::string color;
  std::string note;
};

struct NamedSchedule {
  std::string name;
  std::vector<std::string> period;
  std::vector<std::string> init;
};

struct NamedOperator {
  std::string name;
  PauliOp op;
};

// A planar cut: the kept coordinate box and, per face, the check colors the
// cut is allowed to pass through. Faces are ordered (axis 0 low, axis 0 high, ...).
struct BoundarySpec {
  std::string name = "torus";
  std::vector<int> lo, hi;
  std::vector<std::string> face_cut;
  std::vector<std::size_t> single_qubit_checks;  // filled by truncate_planar
};

struct CodeInstance {
  Family family = Family::floquet_tc_2d;
  int L = 0;
  std::map<std::string, std::string> options;
  std::vector<Qubit> qubits;
  std::vector<int> period;  // coordinate period per axis; empty once truncated
  std::vector<Check> checks;
  BoundarySpec boundary;
  std::vector<NamedSchedule> schedules;
  std::vector<NamedOperator> named_generators;  // expected members of the check-group center
  std::vector<NamedOperator> loop_products;     // closed-loop check products added by parent_code
  std::vector<std::vector<std::size_t>> cells;  // ftc-3d: armchair indices per 3-cell

  std::size_t n_qubits() const { return qubits.size(); }
  std::vector<std::string> labels() const;
  std::vector<std::size_t> round_indices(const std::string& label) const;
  std::vector<PauliOp> round_checks(const std::string& label) const;
  std::vector<PauliOp> all_checks() const;
  const NamedSchedule& schedule(const std::string& name) const;
  bool has_schedule(const std::string& name) const;
};

// L >= 2. UnsupportedSize: odd L for the square-octagon and ftc families,
// L not divisible by 3 for floquet-color.
CodeInstance build_code(Family family, int L, const std::map<std::string, std::string>& options = {});

// Throws StructureMismatch naming the first named generator outside the center.
StabilizerGroup stabilizers_of_check_group(const CodeInstance& code);

// The two supported cuts: "green-cut" for floquet-tc-2d and "mixed-cut" for
// floquet-tc-3d / xcube-floquet, each on a torus padded by two cells.
BoundarySpec planar_spec(Family family, int L);
CodeInstance truncate_planar(const CodeInstance& code, const BoundarySpec& spec);
// Planar code of linear size L built from a padded torus.
CodeInstance build_planar(Family family, int L);

struct ParentCode {
  StabilizerGroup group;
  std::vector<NamedOperator> generators;  // the added closed-loop products
};
// Throws ValidationFailed on a noncommuting pair or a generator outside <checks>.
ParentCode parent_code(const CodeInstance& code);

// Qubit permutation induced by a coordinate shift (torus only).
std::vector<std::size_t> translation_map(const CodeInstance& code, const std::vector<int>& shift);
PauliOp permute(const PauliOp& p, const std::vector<std::size_t>& perm);

// Checks straddling a region boundary are cut; returns count per check color.
std::map<std::string, std::size_t> cut_colors(const CodeInstance& code, const BitVec& region);

}  // namespace floqsim

namespace floqsim {

// Versioned JSON document ("floqsim-code/1"): qubits with coordinates, checks
// as sparse Pauli strings with round and color tags, boundary and schedules.
std::string code_to_json(const CodeInstance& code);

}  // namespace floqsim
