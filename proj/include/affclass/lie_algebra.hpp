#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affclass/matrix.hpp"
#include "affclass/rational.hpp"

namespace affclass {

/// The built-in three-dimensional algebras the classification covers.
enum class AlgebraTag { r3, r3lambda, r2c };

/// Command-line / JSON name of a catalog tag ("r3", "r3lambda", "r2c").
std::string tag_name(AlgebraTag tag);

/// Inverse of tag_name; std::nullopt for unknown names.
std::optional<AlgebraTag> tag_from_name(const std::string& name);

/// Finite-dimensional Lie algebra given by structure constants over a
/// fixed basis e_1..e_n: [e_i, e_j] = sum_k c(i,j,k) e_k. Indices here
/// are 0-based; the JSON layer uses 1-based basis indices.
class LieAlgebra {
public:
    /// Abelian algebra (all brackets zero) of the given dimension.
    explicit LieAlgebra(std::size_t dim);

    std::size_t dim() const { return m_dim; }

    /// Structure constant: coefficient of e_k in [e_i, e_j].
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const {
        return m_c[(i * m_dim + j) * m_dim + k];
    }

    /// Set [e_i, e_j] = result and [e_j, e_i] = -result.
    void set_bracket(std::size_t i, std::size_t j, const Vec& result);

    /// Bracket of two coefficient vectors (bilinear extension).
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of ad_a : x -> [a, x] (columns are ad_a(e_j)).
    QMatrix ad(const Vec& a) const;

    bool operator==(const LieAlgebra& other) const {
        return m_dim == other.m_dim && m_c == other.m_c;
    }
    bool operator!=(const LieAlgebra& other) const { return !(*this == other); }

private:
    std::size_t m_dim;
    std::vector<Rat> m_c;
};

/// First axiom failure found by validate: which law broke and at which
/// basis indices (0-based; k unused for antisymmetry).
struct StructureViolation {
    std::string kind; // "antisymmetry" or "jacobi"
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
};

/// Check antisymmetry and the Jacobi identity on all basis triples.
/// Returns the first violation in scan order, or std::nullopt if valid.
std::optional<StructureViolation> validate(const LieAlgebra& algebra);

/// Catalog constructor.
///
///   r3:        [e1,e2] = e2, [e1,e3] = e2 + e3
///   r3lambda:  [e1,e2] = e2, [e1,e3] = lambda e3   (lambda != 0)
///   r2c:       [e1,e2] = e2
///
/// lambda is required for r3lambda (BadParameter when missing or zero)
/// and must be absent for the other tags.
LieAlgebra catalog(AlgebraTag tag, const std::optional<Rat>& lambda = std::nullopt);

/// Identify a 3-dimensional algebra as a catalog member, returning its
/// tag and (for r3lambda) the lambda value. std::nullopt when the
/// structure constants match no catalog entry exactly.
std::optional<std::pair<AlgebraTag, std::optional<Rat>>> detect_catalog(const LieAlgebra& algebra);

/// Parametric description of the full automorphism group of a catalog
/// algebra. Parameters are named "alpha1", "alpha2", ...; `free_params`
/// may take any rational value, `nonzero_params` any nonzero value. For
/// r3lambda with lambda = 1 the four block parameters alpha3..alpha6 are
/// all formally free but must jointly give an invertible matrix.
struct AutomorphismFamily {
    AlgebraTag tag;
    std::optional<Rat> lambda;
    std::vector<std::string> free_params;
    std::vector<std::string> nonzero_params;

    /// Build the matrix for a full parameter assignment. Throws
    /// BadParameter on missing/extra names, a zero value for a nonzero
    /// parameter, or a singular result.
    QMatrix instantiate(const std::map<std::string, Rat>& params) const;
};

/// Automorphism family of a catalog algebra (lambda required for r3lambda).
AutomorphismFamily automorphisms(AlgebraTag tag, const std::optional<Rat>& lambda = std::nullopt);

/// True when psi is invertible and psi([x,y]) = [psi(x), psi(y)] on all
/// basis pairs.
bool is_automorphism(const LieAlgebra& algebra, const QMatrix& psi);

} // namespace affclass
