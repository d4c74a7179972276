#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affclass/lie_algebra.hpp"
#include "affclass/matrix.hpp"

namespace affclass {

/// A pair of linear maps (f, g) on a Lie algebra subject to the
/// compatibility law
///
///     f([a,b]) = [f(a), b] + [a, f(b)] - [a, g(b)].
///
/// Matrices act on coefficient vectors; columns are basis images.
struct DerivationPair {
    QMatrix f;
    QMatrix g;

    bool operator==(const DerivationPair& other) const {
        return f == other.f && g == other.g;
    }
    bool operator!=(const DerivationPair& other) const { return !(*this == other); }
};

/// Check the compatibility law on every ordered basis pair (bilinearity
/// makes that sufficient). Returns the 0-based indices (i, j) of the
/// first violation in scan order, or std::nullopt when the pair is valid.
std::optional<std::pair<std::size_t, std::size_t>> verify_pair(const LieAlgebra& algebra,
                                                               const DerivationPair& pair);

/// The vector space of all valid pairs on one algebra: a deterministic
/// basis obtained from the kernel of the compatibility constraints.
struct PairSpace {
    LieAlgebra algebra;
    std::vector<DerivationPair> basis;

    std::size_t dimension() const { return basis.size(); }
};

/// Solve the compatibility law exactly. Unknowns are ordered as the
/// entries of f (row-major) followed by the entries of g (row-major);
/// the basis comes from the nullspace free-column convention, so it is
/// reproducible across runs.
PairSpace solve_pairs(const LieAlgebra& algebra);

/// Build a pair on a catalog algebra from named parameters:
///
///   r3:                   beta1..beta5
///       f(e1) = b1 e1 + b2 e2 + b3 e3, f(e2) = b4 e2,
///       f(e3) = b5 e2 + b4 e3,         g = b1 id
///   r3lambda, lambda != 1: beta1..beta5
///       f(e1) = b1 e1 + b2 e2 + b3 e3, f(e2) = b4 e2,
///       f(e3) = b5 e3,                 g = b1 id
///   r3lambda, lambda == 1: beta1..beta7
///       f(e1) = b1 e1 + b2 e2 + b3 e3, f(e2) = b4 e2 + b6 e3,
///       f(e3) = b7 e2 + b5 e3,         g = b1 id
///   r2c:                  beta1..beta5, gamma1..gamma3
///       f as for r3lambda (lambda != 1);
///       g(e1) = b1 e1 + g1 e3, g(e2) = b1 e2 + g2 e3, g(e3) = g3 e3
///
/// The parameter name set must match exactly; throws BadParameter
/// otherwise. Every result satisfies verify_pair by construction.
DerivationPair pair_from_params(AlgebraTag tag, const std::optional<Rat>& lambda,
                                const std::map<std::string, Rat>& params);

/// Names accepted by pair_from_params for the given catalog algebra.
std::vector<std::string> pair_param_names(AlgebraTag tag, const std::optional<Rat>& lambda);

} // namespace affclass
