// Copyright 2026 The petzsim developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "petzsim/serialize.hpp"

namespace petzsim {

Json matrix_to_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j, int rows, int cols) {
  if (!j.is_array() || j.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("matrix_from_json: entry count mismatch");
  ComplexMatrix m(rows, cols);
  size_t k = 0;
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c, ++k)
      m(i, c) = Complex(j[k][0].get<double>(), j[k][1].get<double>());
  return m;
}

Json channel_to_json(const QuantumChannel& c) {
  Json out;
  out["dim_in"] = c.dim_in();
  out["dim_out"] = c.dim_out();
  Json kraus = Json::array();
  for (const auto& k : c.kraus()) kraus.push_back(matrix_to_json(k));
  out["kraus"] = std::move(kraus);
  return out;
}

QuantumChannel channel_from_json(const Json& j) {
  const int di = j.at("dim_in").get<int>();
  const int dout = j.at("dim_out").get<int>();
  std::vector<ComplexMatrix> kraus;
  for (const auto& jk : j.at("kraus"))
    kraus.push_back(matrix_from_json(jk, dout, di));
  // Serialized channels may carry relaxed closures (e.g. recovered maps).
  ComplexMatrix s = ComplexMatrix::Zero(di, di);
  for (const auto& k : kraus) s += k.adjoint() * k;
  const double defect =
      (s - ComplexMatrix::Identity(di, di)).cwiseAbs().maxCoeff();
  return QuantumChannel(di, dout, std::move(kraus),
                        std::max(1e-9, defect + 1e-12));
}

Json poly_to_json(const ChebyshevPoly& p) {
  Json out;
  out["degree"] = p.degree();
  out["theta"] = p.theta;
  out["delta"] = p.delta;
  out["coeffs"] = p.coeffs;
  out["cap"] = p.cap;
  out["sup_error_cert"] = p.sup_error_cert;
  return out;
}

ChebyshevPoly poly_from_json(const Json& j) {
  ChebyshevPoly p;
  p.coeffs = j.at("coeffs").get<std::vector<double>>();
  p.theta = j.at("theta").get<double>();
  p.delta = j.at("delta").get<double>();
  p.cap = j.at("cap").get<double>();
  p.sup_error_cert = j.at("sup_error_cert").get<double>();
  if (j.at("degree").get<int>() != p.degree())
    throw std::invalid_argument("poly_from_json: degree/coeffs mismatch");
  return p;
}

Json ensemble_to_json(const Ensemble& e) {
  Json out;
  out["labels"] = e.labels();
  out["probs"] = std::vector<double>(e.probs().data(),
                                     e.probs().data() + e.probs().size());
  Json states = Json::array();
  for (const auto& s : e.states()) states.push_back(matrix_to_json(s.matrix()));
  out["states"] = std::move(states);
  out["dim_b"] = e.dim_b();
  return out;
}

Ensemble ensemble_from_json(const Json& j) {
  const auto labels = j.at("labels").get<std::vector<std::string>>();
  const auto pv = j.at("probs").get<std::vector<double>>();
  RealVector probs = Eigen::Map<const RealVector>(pv.data(), pv.size());
  const int db = j.at("dim_b").get<int>();
  std::vector<DensityMatrix> states;
  for (const auto& js : j.at("states"))
    states.emplace_back(matrix_from_json(js, db, db));
  return Ensemble(labels, probs, std::move(states));
}

Json diagnostics_to_json(const PipelineDiagnostics& d) {
  Json out;
  out["p_success_measured"] = d.p_success_measured;
  out["n_rep"] = d.n_rep;
  out["w_tilde_subnorm"] = d.w_tilde_subnorm;
  out["isometry_defect"] = d.isometry_defect;
  out["deg_f1"] = d.deg_f1;
  out["deg_f2"] = d.deg_f2;
  out["queries_u_sigma"] = d.modeled_queries.u_sigma;
  out["queries_u_nsigma"] = d.modeled_queries.u_nsigma;
  out["queries_u_channel"] = d.modeled_queries.u_channel;
  out["error_budget"] = d.error_budget;
  out["amplified_defect"] = d.amplified_defect;
  out["choi_lower"] = d.choi_lower;
  out["choi_upper"] = d.choi_upper;
  out["tp_defect"] = d.tp_defect;
  out["support_leak"] = d.support_leak;
  return out;
}

} // namespace petzsim
