#pragma once

#include <string>

#include "json.hpp"

#include "affclass/affgebra.hpp"
#include "affclass/canonical.hpp"
#include "affclass/derivations.hpp"
#include "affclass/isomorphism.hpp"
#include "affclass/lie_algebra.hpp"
#include "affclass/matrix.hpp"
#include "affclass/rational.hpp"

namespace affclass {

/// All serialization preserves key order so output is reproducible.
using Json = nlohmann::ordered_json;

/// Parse a JSON document; wraps the library's parse failure in ParseError.
Json parse_text(const std::string& text);

/// Rationals travel as strings, "p" or "p/q" with q > 1.
Json rat_to_json(const Rat& value);
Rat rat_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j);

/// Lie algebra layout:
///   {"dim": n, "brackets": [{"i": 1, "j": 2, "result": ["0","1","0"]}, ...]}
/// Emission lists only nonzero brackets, 1-based with i < j; parsing
/// accepts zero results but rejects indices outside 1 <= i < j <= dim.
Json lie_to_json(const LieAlgebra& algebra);
LieAlgebra lie_from_json(const Json& j);

/// {"algebra": ..., "dimension": d, "basis": [{"f": ..., "g": ...}, ...]}
Json pair_space_to_json(const PairSpace& space);

/// {"algebra": ..., "f": ..., "g": ..., "s": [...]}
Json affgebra_to_json(const Affgebra& x);
Affgebra affgebra_from_json(const Json& j);

/// {"family": "F1", "lambda": null | "p/q", "params": {"beta1": "2", ...}}
/// The "lambda" key is always present; it is null for r3 and r2c families.
Json form_to_json(const CanonicalForm& form);
CanonicalForm form_from_json(const Json& j);

/// [{"psi": [[...], ...], "a": [...]}, ...]
Json chain_to_json(const std::vector<IsoMove>& chain);
std::vector<IsoMove> chain_from_json(const Json& j);

} // namespace affclass
