#include "quartet/json_io.hpp"

#include <stdexcept>

namespace quartet {

namespace {

nlohmann::json complex_to_json(const Complex& c) {
  return nlohmann::json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument("expected [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json state_to_json(const PureState& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (int i = 0; i < s.dim(); ++i) amps.push_back(complex_to_json(s.amplitudes[i]));
  return {{"n", s.n}, {"amplitudes", amps}};
}

PureState state_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("state file: missing integer field 'n'");
  const int n = j["n"].get<int>();
  if (n < 1 || n > 24) throw std::invalid_argument("state file: 'n' out of range");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw std::invalid_argument("state file: missing array field 'amplitudes'");
  const auto& amps = j["amplitudes"];
  if (int(amps.size()) != (1 << n))
    throw std::invalid_argument("state file: expected " + std::to_string(1 << n) +
                                " amplitudes, got " + std::to_string(amps.size()));
  PureState s = PureState::zero(n);
  for (int i = 0; i < s.dim(); ++i) s.amplitudes[i] = complex_from_json(amps[i]);
  return s;
}

nlohmann::json point_to_json(const CartanPoint& z) {
  nlohmann::json arr = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) arr.push_back(complex_to_json(z[i]));
  return {{"z", arr}};
}

CartanPoint point_from_json(const nlohmann::json& j) {
  if (!j.contains("z") || !j["z"].is_array() || j["z"].size() != 4)
    throw std::invalid_argument("cartan point: expected field 'z' with 4 entries");
  CartanPoint z;
  for (int i = 0; i < 4; ++i) z[i] = complex_from_json(j["z"][i]);
  return z;
}

nlohmann::json fingerprint_to_json(const InvariantFingerprint& fp) {
  nlohmann::json j = {{"F1", fp.f1}, {"F3", fp.f3}, {"F4", fp.f4}, {"F6", fp.f6}};
  if (fp.hdet) j["Hdet"] = *fp.hdet;
  return j;
}

nlohmann::json report_to_json(const StationaryReport& r) {
  nlohmann::json j;
  j["point"] = point_to_json(r.point);
  j["invariant"] = std::string(invariant_name(r.invariant));
  j["residual_s7"] = r.residual_s7;
  j["residual_s15"] = r.residual_s15;
  j["value"] = r.value;
  j["stationary"] = r.stationary;
  if (r.has_hessian) {
    nlohmann::json evs = nlohmann::json::array();
    for (int i = 0; i < r.hessian_eigenvalues.size(); ++i)
      evs.push_back(r.hessian_eigenvalues[i]);
    j["hessian_eigenvalues"] = evs;
    j["signature"] = {r.signature[0], r.signature[1], r.signature[2]};
  }
  return j;
}

nlohmann::json purity_to_json(const PurityReport& r) {
  nlohmann::json j;
  j["pass"] = r.pass;
  j["r"] = r.r;
  j["tol"] = r.tol;
  j["worst_basis_deviation"] = r.worst_basis_deviation;
  j["worst_random_deviation"] = r.worst_random_deviation;
  nlohmann::json marginals = nlohmann::json::array();
  for (const auto& m : r.worst_marginals) {
    marginals.push_back({{"kept_qubits", m.kept_qubits}, {"deviation", m.deviation}});
  }
  j["marginals"] = marginals;
  return j;
}

}  // namespace quartet
