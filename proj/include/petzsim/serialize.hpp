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

#ifndef PETZSIM_SERIALIZE_HPP
#define PETZSIM_SERIALIZE_HPP

#include <json.hpp>

#include "petzsim/chebyshev.hpp"
#include "petzsim/pgm.hpp"

namespace petzsim {

// Key order is fixed (ordered_json) so identical inputs serialize to
// identical bytes.
using Json = nlohmann::ordered_json;

// Complex matrices serialize as row-major [re, im] pairs.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j, int rows, int cols);

// {dim_in, dim_out, kraus: [[[re,im],...], ...]}; round-trips bit-exactly.
Json channel_to_json(const QuantumChannel& c);
QuantumChannel channel_from_json(const Json& j);

// {degree, theta, delta, coeffs, cap, sup_error_cert}
Json poly_to_json(const ChebyshevPoly& p);
ChebyshevPoly poly_from_json(const Json& j);

// {labels, probs, states}
Json ensemble_to_json(const Ensemble& e);
Ensemble ensemble_from_json(const Json& j);

Json diagnostics_to_json(const PipelineDiagnostics& d);

} // namespace petzsim

#endif // PETZSIM_SERIALIZE_HPP
