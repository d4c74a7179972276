#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affclass/derivations.hpp"
#include "affclass/lie_algebra.hpp"

namespace affclass {

/// Ternary heap operation of the affine space: <a, b, c> = a - b + c.
Vec heap(const Vec& a, const Vec& b, const Vec& c);

/// Scalar action of the affine line: (alpha, a, b) = (1 - alpha) a + alpha b.
Vec action(const Rat& alpha, const Vec& a, const Vec& b);

/// A Lie bracket on an affine space, realized over a Lie algebra L by a
/// map pair (f, g) and a constant vector s:
///
///     {a, b} = [a, b] + g(a) + f(b - a) + s.
///
/// The instance stores whether (f, g) satisfies the compatibility law;
/// unverified instances can still be constructed and probed (that is how
/// the axiom checker exhibits failures).
class Affgebra {
public:
    Affgebra(LieAlgebra algebra, DerivationPair pair, Vec s);

    const LieAlgebra& algebra() const { return m_algebra; }
    const DerivationPair& pair() const { return m_pair; }
    const QMatrix& f() const { return m_pair.f; }
    const QMatrix& g() const { return m_pair.g; }
    const Vec& s() const { return m_s; }

    /// True when (f, g) passed verify_pair at construction.
    bool verified() const { return m_verified; }

    bool operator==(const Affgebra& other) const {
        return m_algebra == other.m_algebra && m_pair == other.m_pair && m_s == other.m_s;
    }
    bool operator!=(const Affgebra& other) const { return !(*this == other); }

private:
    LieAlgebra m_algebra;
    DerivationPair m_pair;
    Vec m_s;
    bool m_verified;
};

/// The affine bracket {a, b} of two points.
Vec aff_bracket(const Affgebra& x, const Vec& a, const Vec& b);

/// First axiom failure found by check_axioms: which law broke
/// ("affine-antisymmetry" or "affine-jacobi") and the witness points.
struct AxiomViolation {
    std::string axiom;
    std::vector<Vec> witness;
};

/// Evaluate the affine antisymmetry law
///     <{a,b}, {a,a}, {b,a}> = {b,b}
/// on all ordered pairs and the affine Jacobi law
///     {a,{b,c}} - {a,{a,a}} + {b,{c,a}} - {b,{b,b}} + {c,{a,b}} = {c,{c,c}}
/// on all ordered triples from the grid {0, e1, e2, e3}. Returns the
/// first violation in scan order, or std::nullopt when all checks pass.
std::optional<AxiomViolation> check_axioms(const Affgebra& x);

/// Lie algebra tangent to the affgebra at the point e: the bracket of
/// tangent vectors u, v is
///     [u,v]_e = {e+u, e+v} - {e+u, e} - {e, e+v} + {e, e}.
/// Throws BadParameter when the result is not antisymmetric (possible
/// only for unverified instances).
LieAlgebra tangent_lie(const Affgebra& x, const Vec& e);

} // namespace affclass
