#include <json.hpp>

#include "floqsim/code.hpp"

namespace floqsim {

std::string code_to_json(const CodeInstance& code) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["format"] = "floqsim-code/1";
  j["family"] = family_name(code.family);
  j["L"] = code.L;
  j["options"] = code.options;
  j["n_qubits"] = code.n_qubits();
  j["period"] = code.period;
  auto& qs = j["qubits"] = ordered_json::array();
  for (std::size_t q = 0; q < code.n_qubits(); ++q)
    qs.push_back({{"index", q}, {"coord", code.qubits[q].coord}, {"tag", code.qubits[q].tag}});
  auto& cs = j["checks"] = ordered_json::array();
  for (const auto& c : code.checks)
    cs.push_back({{"pauli", c.op.to_sparse()}, {"rounds", c.rounds}, {"color", c.color}, {"note", c.note}});
  j["boundary"] = {{"name", code.boundary.name},
                   {"lo", code.boundary.lo},
                   {"hi", code.boundary.hi},
                   {"face_cut", code.boundary.face_cut},
                   {"single_qubit_checks", code.boundary.single_qubit_checks}};
  auto& ss = j["schedules"] = ordered_json::array();
  for (const auto& s : code.schedules) ss.push_back({{"name", s.name}, {"period", s.period}, {"init", s.init}});
  auto& gs = j["named_generators"] = ordered_json::array();
  for (const auto& g : code.named_generators) gs.push_back({{"name", g.name}, {"pauli", g.op.to_sparse()}});
  auto& ls = j["loop_products"] = ordered_json::array();
  for (const auto& g : code.loop_products) ls.push_back({{"name", g.name}, {"pauli", g.op.to_sparse()}});
  if (!code.cells.empty()) j["cells"] = code.cells;
  return j.dump(2);
}

}  // namespace floqsim
