#pragma once

#include <json.hpp>

#include "schur/abelian.hpp"
#include "schur/amalgam.hpp"
#include "schur/integer.hpp"

namespace schur {

using Json = nlohmann::ordered_json;

/// {"rank": r, "factors": [d1, ...], "text": "..."}; factors that do not fit in 64 bits are
/// written as decimal strings.
Json to_json(const FgAbelianGroup& a);
/// Reads {"rank", "factors"} ("text" is ignored) and normalizes. Throws InvalidArgument.
FgAbelianGroup abelian_from_json(const Json& j);

/// Row-major nested arrays.
Json to_json(const IntMatrix& m);
/// Reads a rows x cols matrix; `[]` stands for any matrix with no entries. Throws
/// InvalidArgument on a shape mismatch.
IntMatrix matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols);

/// Fields M_H, M_G1, M_G2, H_ab, G1_ab, G2_ab, alpha (optional or null), beta. Throws
/// IllDefinedMap on missing fields or malformed values.
AmalgamProblem amalgam_problem_from_json(const Json& j);
Json to_json(const AmalgamProblem& p);

}  // namespace schur
