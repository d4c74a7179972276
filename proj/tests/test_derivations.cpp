#include "doctest.h"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affclass/derivations.hpp"
#include "affclass/errors.hpp"
#include "affclass/lie_algebra.hpp"
#include "affclass/matrix.hpp"
#include "affclass/random_source.hpp"

using namespace affclass;

namespace {

/// Flatten a pair into one row: f row-major, then g row-major (the same
/// coordinate order solve_pairs uses for its unknowns).
Vec flatten(const DerivationPair& pair) {
    Vec row;
    for (const QMatrix* m : {&pair.f, &pair.g}) {
        for (std::size_t i = 0; i < m->rows(); ++i) {
            for (std::size_t j = 0; j < m->cols(); ++j) {
                row.push_back((*m)(i, j));
            }
        }
    }
    return row;
}

QMatrix stack_rows(const std::vector<Vec>& rows) {
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

std::map<std::string, Rat> unit_assignment(const std::vector<std::string>& names,
                                           const std::string& hot) {
    std::map<std::string, Rat> params;
    for (const auto& name : names) {
        params[name] = (name == hot) ? Rat(1) : Rat(0);
    }
    return params;
}

const std::pair<AlgebraTag, std::optional<Rat>> kConfigs[] = {
    {AlgebraTag::r3, std::nullopt},
    {AlgebraTag::r3lambda, ratio(1, 2)},
    {AlgebraTag::r3lambda, Rat(2)},
    {AlgebraTag::r3lambda, Rat(-1)},
    {AlgebraTag::r3lambda, Rat(1)},
    {AlgebraTag::r2c, std::nullopt},
};

} // namespace

TEST_CASE("solution space dimensions") {
    CHECK(solve_pairs(catalog(AlgebraTag::r3)).dimension() == 5);
    CHECK(solve_pairs(catalog(AlgebraTag::r3lambda, ratio(1, 2))).dimension() == 5);
    CHECK(solve_pairs(catalog(AlgebraTag::r3lambda, Rat(2))).dimension() == 5);
    CHECK(solve_pairs(catalog(AlgebraTag::r3lambda, Rat(-1))).dimension() == 5);
    CHECK(solve_pairs(catalog(AlgebraTag::r3lambda, Rat(1))).dimension() == 7);
    CHECK(solve_pairs(catalog(AlgebraTag::r2c)).dimension() == 8);
    // On an abelian algebra the law is vacuous: every (f, g) qualifies.
    CHECK(solve_pairs(LieAlgebra(3)).dimension() == 18);
}

TEST_CASE("solved basis elements satisfy the law and are independent") {
    for (const auto& [tag, lambda] : kConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        const PairSpace space = solve_pairs(algebra);
        std::vector<Vec> rows;
        for (const DerivationPair& pair : space.basis) {
            CHECK_FALSE(verify_pair(algebra, pair).has_value());
            rows.push_back(flatten(pair));
        }
        CHECK(rank(stack_rows(rows)) == space.dimension());
    }
}

TEST_CASE("solved space equals the named-parameter space") {
    for (const auto& [tag, lambda] : kConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        const PairSpace space = solve_pairs(algebra);
        const std::vector<std::string> names = pair_param_names(tag, lambda);
        REQUIRE(names.size() == space.dimension());

        std::vector<Vec> solved;
        for (const DerivationPair& pair : space.basis) {
            solved.push_back(flatten(pair));
        }
        std::vector<Vec> named;
        for (const std::string& hot : names) {
            const DerivationPair pair = pair_from_params(tag, lambda, unit_assignment(names, hot));
            CHECK_FALSE(verify_pair(algebra, pair).has_value());
            named.push_back(flatten(pair));
        }

        const std::size_t dim = space.dimension();
        CHECK(rank(stack_rows(solved)) == dim);
        CHECK(rank(stack_rows(named)) == dim);
        std::vector<Vec> both = solved;
        both.insert(both.end(), named.begin(), named.end());
        // Equal ranks of each span and of the union force span equality.
        CHECK(rank(stack_rows(both)) == dim);
    }
}

TEST_CASE("verify_pair reports the first broken basis pair") {
    const LieAlgebra r3 = catalog(AlgebraTag::r3);
    // f = id, g = 0 doubles the bracket: first failure at ([e1, e2]).
    const auto doubled = verify_pair(r3, DerivationPair{QMatrix::identity(3), QMatrix(3, 3)});
    REQUIRE(doubled.has_value());
    CHECK(*doubled == std::pair<std::size_t, std::size_t>{0, 1});

    // g(e1) = e2 with f = 0 fails already on the repeated pair (e1, e1):
    // 0 = f([e1,e1]) but -[e1, g(e1)] = -e2. Checking i = j matters.
    const LieAlgebra r2c = catalog(AlgebraTag::r2c);
    QMatrix g(3, 3);
    g(1, 0) = 1;
    const auto diagonal = verify_pair(r2c, DerivationPair{QMatrix(3, 3), g});
    REQUIRE(diagonal.has_value());
    CHECK(*diagonal == std::pair<std::size_t, std::size_t>{0, 0});

    CHECK_FALSE(verify_pair(r3, DerivationPair{QMatrix(3, 3), QMatrix(3, 3)}).has_value());
}

TEST_CASE("pair_from_params: fixed shapes") {
    const DerivationPair diag = pair_from_params(
        AlgebraTag::r3, std::nullopt,
        {{"beta1", Rat(2)}, {"beta2", Rat(0)}, {"beta3", Rat(0)}, {"beta4", Rat(3)},
         {"beta5", Rat(0)}});
    CHECK(diag.f == QMatrix{{Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(3), Rat(0)},
                            {Rat(0), Rat(0), Rat(3)}});
    CHECK(diag.g == Rat(2) * QMatrix::identity(3));

    std::map<std::string, Rat> nil;
    for (int k = 1; k <= 7; ++k) {
        nil["beta" + std::to_string(k)] = 0;
    }
    nil["beta6"] = 1;
    const DerivationPair shear = pair_from_params(AlgebraTag::r3lambda, Rat(1), nil);
    CHECK(shear.f == QMatrix{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)},
                             {Rat(0), Rat(1), Rat(0)}});
    CHECK(shear.g.is_zero());

    std::map<std::string, Rat> zero;
    for (const auto& name : pair_param_names(AlgebraTag::r2c, std::nullopt)) {
        zero[name] = 0;
    }
    const DerivationPair trivial = pair_from_params(AlgebraTag::r2c, std::nullopt, zero);
    CHECK(trivial.f.is_zero());
    CHECK(trivial.g.is_zero());

    std::map<std::string, Rat> lower = zero;
    lower["gamma2"] = 1;
    const DerivationPair corner = pair_from_params(AlgebraTag::r2c, std::nullopt, lower);
    CHECK(corner.f.is_zero());
    CHECK(corner.g == QMatrix{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)},
                              {Rat(0), Rat(1), Rat(0)}});
}

TEST_CASE("pair_from_params: exact name-set matching") {
    std::map<std::string, Rat> four{{"beta1", Rat(1)}, {"beta2", Rat(0)}, {"beta3", Rat(0)},
                                    {"beta4", Rat(0)}};
    CHECK_THROWS_AS(pair_from_params(AlgebraTag::r3, std::nullopt, four), BadParameter);
    std::map<std::string, Rat> six = four;
    six["beta5"] = 0;
    six["beta6"] = 0;
    CHECK_THROWS_AS(pair_from_params(AlgebraTag::r3, std::nullopt, six), BadParameter);
    std::map<std::string, Rat> five = four;
    five["beta5"] = 0;
    // The lambda = 1 space needs beta1..beta7, not the 5-name set.
    CHECK_THROWS_AS(pair_from_params(AlgebraTag::r3lambda, Rat(1), five), BadParameter);
    CHECK_NOTHROW(pair_from_params(AlgebraTag::r3lambda, Rat(2), five));
}

TEST_CASE("pair_param_names: fixed rosters") {
    CHECK(pair_param_names(AlgebraTag::r3, std::nullopt) ==
          std::vector<std::string>{"beta1", "beta2", "beta3", "beta4", "beta5"});
    CHECK(pair_param_names(AlgebraTag::r3lambda, Rat(1)) ==
          std::vector<std::string>{"beta1", "beta2", "beta3", "beta4", "beta5", "beta6", "beta7"});
    CHECK(pair_param_names(AlgebraTag::r2c, std::nullopt) ==
          std::vector<std::string>{"beta1", "beta2", "beta3", "beta4", "beta5", "gamma1", "gamma2",
                                   "gamma3"});
}

TEST_CASE("validity is preserved by automorphism-and-shift transport") {
    RandomSource rng(53);
    for (const auto& [tag, lambda] : kConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        const PairSpace space = solve_pairs(algebra);
        const AutomorphismFamily family = automorphisms(tag, lambda);
        for (int trial = 0; trial < 20; ++trial) {
            // Random element of the solved space.
            DerivationPair pair{QMatrix(3, 3), QMatrix(3, 3)};
            for (const DerivationPair& basis : space.basis) {
                const Rat c = rng.rat();
                pair.f = pair.f + c * basis.f;
                pair.g = pair.g + c * basis.g;
            }
            QMatrix psi = QMatrix::identity(3);
            while (true) {
                std::map<std::string, Rat> params;
                for (const auto& name : family.free_params) {
                    params[name] = rng.rat();
                }
                for (const auto& name : family.nonzero_params) {
                    params[name] = rng.nonzero_rat();
                }
                try {
                    psi = family.instantiate(params);
                    break;
                } catch (const BadParameter&) {
                    continue; // singular lambda=1 block draw
                }
            }
            const Vec a{rng.rat(), rng.rat(), rng.rat()};
            const QMatrix psi_inv = inverse(psi);
            const DerivationPair moved{psi * (pair.f - algebra.ad(a)) * psi_inv,
                                       psi * pair.g * psi_inv};
            CHECK_FALSE(verify_pair(algebra, moved).has_value());
        }
    }
}
