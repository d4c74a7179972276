#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affclass/isomorphism.hpp"
#include "affclass/random_source.hpp"

namespace affclass {

/// A point of the classification: family tag ("F1".."F4", "H1".."H5",
/// "K1".."K3", "L1".."L24"), the lambda of the underlying algebra for the
/// H/K families (null otherwise), and the residual parameters in registry
/// order.
struct CanonicalForm {
    std::string family;
    std::optional<Rat> lambda;
    std::vector<std::pair<std::string, Rat>> params;

    bool operator==(const CanonicalForm& other) const {
        return family == other.family && lambda == other.lambda && params == other.params;
    }
    bool operator!=(const CanonicalForm& other) const { return !(*this == other); }
};

struct CanonicalResult {
    CanonicalForm form;
    /// Moves applied left to right turn the input into the representative.
    std::vector<IsoMove> chain;
    /// The representative itself (equals the input transformed by chain;
    /// canonicalize re-checks that before returning).
    Affgebra representative;
};

/// Walk a verified affgebra on a catalog algebra down the reduction tree
/// to its canonical representative. Normalization steps are solved
/// numerically against apply_iso (probe three values of the one free
/// parameter, check the dependence is affine, solve), so the chain is
/// correct by construction; the final representative is cross-checked
/// against the family's builder and the replayed chain.
///
/// Throws NotCatalogAlgebra off the catalog, BadParameter for unverified
/// input, FieldExtensionRequired when the lambda = 1 block has irrational
/// eigenvalues, and InternalError if a case guard fails (a bug, not an
/// input problem).
CanonicalResult canonicalize(const Affgebra& x);

/// Cheap isomorphism invariants: a stratum marker plus named values read
/// off the reduced gauge. Equal for isomorphic inputs; unequal values
/// prove two inputs non-isomorphic (the converse needs orbit_search).
struct InvariantMap {
    std::string stratum;
    std::vector<std::pair<std::string, Rat>> values;

    bool operator==(const InvariantMap& other) const {
        return stratum == other.stratum && values == other.values;
    }
    bool operator!=(const InvariantMap& other) const { return !(*this == other); }
};

InvariantMap invariants(const Affgebra& x);

struct OrbitSearchResult {
    bool found;
    std::optional<IsoMove> move;
    /// Automorphism candidates actually tested.
    std::uint64_t examined;
};

/// Decide x1 ~ x2 by exhaustion over a finite automorphism grid: each
/// family parameter of psi ranges over `grid` (values that would make
/// psi singular are skipped), and for every candidate psi the translation
/// a is solved for *exactly* as a linear system, so a move is found
/// whenever one with a grid psi exists -- a is not restricted to the
/// grid. Enumeration order is deterministic (nested loops over the grid
/// in the given order, parameters in family order). Stops early after
/// `budget` candidates.
OrbitSearchResult orbit_search(const Affgebra& x1, const Affgebra& x2,
                               const std::vector<Rat>& grid, std::uint64_t budget);

/// Registry entry describing one canonical family.
struct FamilyInfo {
    std::string name;
    AlgebraTag tag;
    /// Residual parameter names in canonical order.
    std::vector<std::string> param_names;
    /// Human-readable residual-domain restriction; "" when none.
    std::string side_condition;
    /// Human-readable representative data, for the table command.
    std::string data_desc;
    /// Check family tag, parameter names and side condition of a form.
    std::function<bool(const CanonicalForm&)> admissible;
    /// Draw a random form in the family's residual domain (lambda is
    /// used by the H/K families and ignored elsewhere).
    std::function<CanonicalForm(RandomSource&, const std::optional<Rat>&)> sample;
    /// Build the representative affgebra of an admissible form.
    std::function<Affgebra(const CanonicalForm&)> build;
};

/// All 36 families in fixed order: F1..F4, H1..H5, K1..K3, L1..L24.
const std::vector<FamilyInfo>& family_registry();

/// Lookup by name; throws BadParameter for unknown names.
const FamilyInfo& family_info(const std::string& name);

/// The families arising on one catalog algebra: F* for r3, H* for
/// r3lambda (plus K* when lambda = 1), L* for r2c.
std::vector<const FamilyInfo*> families_for(AlgebraTag tag, const std::optional<Rat>& lambda);

} // namespace affclass
