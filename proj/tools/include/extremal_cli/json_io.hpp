#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "extremal/index_set.hpp"
#include "extremal/lorentz.hpp"
#include "extremal/rational.hpp"
#include "extremal/signed_permutation.hpp"
#include "extremal/sparse_vec.hpp"

// JSON forms used by the command-line tool. Every reader throws
// std::invalid_argument on malformed input.
//
//   Rational         "3", "-1/2"  (integers are also accepted on input)
//   SparseVec        {"coords": {"3": "1", "4": "-1/2"}}
//   IndexSet         [3, 5, 9]
//   WeightSeq        {"generator": "harmonic"}
//                    {"generator": "explicit", "values": ["1", "1/3"]}
//                    {"generator": "power", "q": "1"}
//                    each optionally with "scale": "2"
//   SignedPermutation {"pi": [2, 1], "eps": [1, -1]}
namespace extremal::cli {

using nlohmann::json;

json to_json(const Rational& value);
json to_json(const SparseVec& x);
json to_json(const IndexSet& set);
json to_json(const lorentz::WeightSeq& w);
json to_json(const SignedPermutation& t);

Rational rational_from_json(const json& j);
SparseVec sparse_vec_from_json(const json& j);
IndexSet index_set_from_json(const json& j);
lorentz::WeightSeq weights_from_json(const json& j);
SignedPermutation signed_permutation_from_json(const json& j);

// Inline JSON when the text starts with '{' or '[', otherwise a file path.
json load_json_argument(const std::string& text);

// "harmonic" is accepted as shorthand for {"generator": "harmonic"}.
lorentz::WeightSeq weights_argument(const std::string& text);

}  // namespace extremal::cli
