#pragma once

#include "affclass/affgebra.hpp"
#include "affclass/random_source.hpp"

namespace affclass {

/// One isomorphism of affgebras over a fixed Lie algebra: an algebra
/// automorphism psi together with a translation vector a. It acts by
///
///     g' = psi g psi^-1
///     f' = psi (f - ad_a) psi^-1
///     s' = psi (s + a - g(a)).
struct IsoMove {
    QMatrix psi;
    Vec a;

    bool operator==(const IsoMove& other) const { return psi == other.psi && a == other.a; }
    bool operator!=(const IsoMove& other) const { return !(*this == other); }
};

/// The do-nothing move (identity matrix, zero translation).
IsoMove identity_move(std::size_t dim);

bool is_identity(const IsoMove& move);

/// Transform an affgebra by one move. Throws NotAutomorphism when psi is
/// not an automorphism of the underlying algebra.
Affgebra apply_iso(const Affgebra& x, const IsoMove& move);

/// The single move equivalent to `first` followed by `second`:
/// psi = psi2 psi1, a = a1 + psi1^-1 a2.
IsoMove compose(const IsoMove& second, const IsoMove& first);

/// Fold a chain of moves (applied left to right) into one move.
/// The empty chain gives the identity move.
IsoMove compose_chain(const std::vector<IsoMove>& chain, std::size_t dim);

/// Random move for a catalog algebra: automorphism parameters drawn from
/// the family (nonzero ones redrawn until nonzero, the lambda = 1 block
/// redrawn until invertible) and a random translation vector.
IsoMove random_move(const LieAlgebra& algebra, RandomSource& rng);

/// An affgebra reduced to its normal gauge, plus the move that got there.
struct GaugeResult {
    Affgebra reduced;
    IsoMove move;
};

/// Translate (and for lambda = 1 also conjugate) a verified affgebra on a
/// catalog algebra into the reduced gauge:
///
///   r3:                  f = diag(b1, t, t)
///   r3lambda, lambda!=1: f = diag(b1, 0, t)
///   r3lambda, lambda==1: f = diag(b1, 0, t), t >= 0, or the nilpotent
///                        block f(e2) = e3, f(e3) = 0 (via jordan_split)
///   r2c:                 f(e2) = 0 and f(e1) has no e2 component
///
/// Throws NotCatalogAlgebra off the catalog, BadParameter for unverified
/// input, and (lambda == 1 only) FieldExtensionRequired when the
/// eigenvalues of the f block are irrational.
GaugeResult gauge_reduce(const Affgebra& x);

/// Conjugation type of the f block after the gauge translation for
/// lambda = 1: diagonalizable over the rationals, or nonzero nilpotent.
enum class JordanBranch { diagonal, nilpotent };

struct JordanResult {
    JordanBranch branch;
    Affgebra reduced;
    IsoMove move;
};

/// Full gauge reduction for r3lambda with lambda = 1: translate by the
/// smaller eigenvalue of the f block, then conjugate the block to
/// diag(0, d) with d >= 0 (diagonal branch) or to the nilpotent normal
/// form f(e2) = e3, f(e3) = 0 (nilpotent branch). The branch is an
/// isomorphism invariant. Throws FieldExtensionRequired when the
/// eigenvalues are irrational.
JordanResult jordan_split(const Affgebra& x);

} // namespace affclass
