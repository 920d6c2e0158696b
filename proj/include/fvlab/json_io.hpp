#pragma once

#include <vector>

#include <json.hpp>

#include "fvlab/bigint.hpp"
#include "fvlab/cd_algebra.hpp"
#include "fvlab/poset.hpp"
#include "fvlab/rank5.hpp"
#include "fvlab/simplicial_decider.hpp"
#include "fvlab/vector_calculus.hpp"

// Integers always cross this boundary as decimal strings. Readers also take
// JSON integers so that hand-written input stays convenient.

namespace fvlab::json_io {

using Json = nlohmann::ordered_json;

Json to_json(const std::vector<BigInt>& values);
std::vector<BigInt> bigints_from_json(const Json& j);
/// Accepts integers, decimals and "p/q" strings; used where non-integers are a verdict, not an error.
std::vector<Rational> rationals_from_json(const Json& j);
BigInt bigint_from_json(const Json& j);

Json to_json(const FVector& f);
Json to_json(const HVector& h);
Json to_json(const GVector& g, int d);

/// {"elements": [{"id": i, "rank": r}, ...], "covers": [[lower, upper], ...]}
Json to_json(const GradedPoset& p);
GradedPoset poset_from_json(const Json& j);

/// {"d": d, "flag": {"<subset bitmask>": "<count>", ...}}; missing masks read as 0.
Json to_json(const FlagVector& v);
FlagVector flag_from_json(const Json& j);

/// {"<word>": "<coefficient>", ...}
Json to_json(const AbPolynomial& p);
Json to_json(const CdPolynomial& q);
/// Degree is taken from the words; an empty object needs `degree`.
CdPolynomial cd_from_json(const Json& j, int degree = -1);

Json to_json(const Decision& decision);
Json to_json(const Rank5Witness& w);

}  // namespace fvlab::json_io
