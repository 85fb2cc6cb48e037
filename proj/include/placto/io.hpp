#pragma once

#include <json.hpp>

#include "placto/cauchy.hpp"
#include "placto/matrix.hpp"
#include "placto/plactic.hpp"
#include "placto/schur.hpp"
#include "placto/tableau.hpp"

namespace placto {

using Json = nlohmann::json;

/// JSON forms. Parsers throw std::invalid_argument on malformed input.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {shape:{outer,inner}, alphabet, rows, rotated}; rows are the stored rows.
Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

/// {rows, cols, entries:[[i,j,count],...]}.
Json to_json(const GeneralizedMatrix& m);
GeneralizedMatrix matrix_from_json(const Json& j);

/// [{exp,num,den},...] in increasing exponent.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const RationalPair& p);
Json to_json(const NormalForm& nf);
/// [{pair:{S,T}, coeff}, ...]
Json to_json(const PlacticElement& x);
/// [{mu, nu, coeff}, ...]
Json to_json(const SAlgebraElement& x);
/// {ok, failures, stats:{domain_size, max_degree, elapsed_ms, checks}}.
Json to_json(const Report& r);
/// {Yp, Xp, Z} plus trace lines when present.
Json to_json(const BijectionResult& r);

}  // namespace placto
