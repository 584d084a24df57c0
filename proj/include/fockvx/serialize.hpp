#pragma once

// JSON forms shared by the library and the command-line tool.
//   Scalar             "n/d" when real, otherwise {"re": "n/d", "im": "n/d"}
//   OneParticleVector  {"modes": K, "entries": [[mode, scalar], ...]}
//   MultiIndex         {"mode": exponent, ...}
//   TuplePair          {"p": MultiIndex, "q": MultiIndex}
//   Cutoffs            {"modes": K, "order": M, "degree": D}
//   SchurOperator      {"w": int, "cutoffs": Cutoffs, "terms": [{"p", "q", "coeff"}, ...]}
//   LaurentSlice       {"coeffs": {"w": scalar, ...}, "cutoffs": Cutoffs}
//   Polynomial         {"terms": [{"monomial": MultiIndex, "coeff": scalar}, ...]}
//   BasisConfig        {"modes": K, "F": [[scalar, ...], ...], "G": [...]}  (F, G default to I)
//
// Malformed input raises std::invalid_argument (std::out_of_range for modes
// beyond K); basis problems raise config_error.

#include <json.hpp>

#include <fockvx/basis.hpp>
#include <fockvx/multi_index.hpp>
#include <fockvx/one_particle.hpp>
#include <fockvx/polynomial.hpp>
#include <fockvx/scalar.hpp>
#include <fockvx/tuples.hpp>
#include <fockvx/vertex.hpp>

namespace fockvx
{

using json = nlohmann::ordered_json;

json to_json(const Scalar &s);
json to_json(const OneParticleVector &v);
json to_json(const MultiIndex &p);
json to_json(const TuplePair &pq);
json to_json(const Cutoffs &c);
json to_json(const SchurOperator &op);
json to_json(const LaurentSlice &slice);
json to_json(const Polynomial &poly);
json to_json(const BasisConfig &basis);

Scalar scalar_from_json(const json &j);
OneParticleVector vector_from_json(const json &j);
MultiIndex multiindex_from_json(const json &j);
TuplePair tuple_pair_from_json(const json &j);
Cutoffs cutoffs_from_json(const json &j);
SchurOperator schur_operator_from_json(const json &j);
LaurentSlice laurent_slice_from_json(const json &j);
Polynomial polynomial_from_json(const json &j);
BasisConfig basis_from_json(const json &j);

} // namespace fockvx
