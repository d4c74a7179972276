#include "affclass/derivations.hpp"

#include "affclass/errors.hpp"

namespace affclass {

std::optional<std::pair<std::size_t, std::size_t>> verify_pair(const LieAlgebra& algebra,
                                                               const DerivationPair& pair) {
    const std::size_t n = algebra.dim();
    if (pair.f.rows() != n || pair.f.cols() != n || pair.g.rows() != n || pair.g.cols() != n) {
        throw DimensionMismatch("verify_pair: map size does not match the algebra");
    }
    Vec basis_i(n, Rat(0)), basis_j(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            basis_i[i] = 1;
            basis_j[j] = 1;
            const Vec lhs = pair.f * algebra.bracket(basis_i, basis_j);
            const Vec rhs = vec_sub(vec_add(algebra.bracket(pair.f * basis_i, basis_j),
                                            algebra.bracket(basis_i, pair.f * basis_j)),
                                    algebra.bracket(basis_i, pair.g * basis_j));
            basis_i[i] = 0;
            basis_j[j] = 0;
            if (lhs != rhs) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

PairSpace solve_pairs(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    const std::size_t nsq = n * n;
    // One linear constraint per ordered basis pair (i, j) and output
    // coordinate k; unknowns are f (row-major) then g (row-major). The
    // diagonal pairs i == j are not vacuous: they constrain g through
    // [e_i, g(e_i)] = 0, so all n^2 ordered pairs must be included.
    QMatrix system(n * n * n, 2 * nsq);
    std::size_t row = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k, ++row) {
                for (std::size_t m = 0; m < n; ++m) {
                    // f([e_i, e_j]) contributes c(i,j,m) * f(k, m).
                    system(row, k * n + m) += algebra.c(i, j, m);
                    // -[f(e_i), e_j] contributes -c(m,j,k) * f(m, i).
                    system(row, m * n + i) -= algebra.c(m, j, k);
                    // -[e_i, f(e_j)] contributes -c(i,m,k) * f(m, j).
                    system(row, m * n + j) -= algebra.c(i, m, k);
                    // +[e_i, g(e_j)] contributes +c(i,m,k) * g(m, j).
                    system(row, nsq + m * n + j) += algebra.c(i, m, k);
                }
            }
        }
    }
    PairSpace space{algebra, {}};
    for (const QMatrix& v : nullspace(system)) {
        DerivationPair pair{QMatrix(n, n), QMatrix(n, n)};
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                pair.f(r, c) = v(r * n + c, 0);
                pair.g(r, c) = v(nsq + r * n + c, 0);
            }
        }
        space.basis.push_back(std::move(pair));
    }
    return space;
}

std::vector<std::string> pair_param_names(AlgebraTag tag, const std::optional<Rat>& lambda) {
    switch (tag) {
    case AlgebraTag::r3:
        return {"beta1", "beta2", "beta3", "beta4", "beta5"};
    case AlgebraTag::r3lambda:
        if (!lambda || *lambda == 0) {
            throw BadParameter("pair_param_names: r3lambda requires lambda != 0");
        }
        if (*lambda == 1) {
            return {"beta1", "beta2", "beta3", "beta4", "beta5", "beta6", "beta7"};
        }
        return {"beta1", "beta2", "beta3", "beta4", "beta5"};
    case AlgebraTag::r2c:
        return {"beta1", "beta2", "beta3", "beta4", "beta5", "gamma1", "gamma2", "gamma3"};
    }
    throw InternalError("pair_param_names: unknown tag");
}

DerivationPair pair_from_params(AlgebraTag tag, const std::optional<Rat>& lambda,
                                const std::map<std::string, Rat>& params) {
    const std::vector<std::string> names = pair_param_names(tag, lambda);
    if (params.size() != names.size()) {
        throw BadParameter("pair_from_params: wrong number of parameters");
    }
    auto get = [&params](const std::string& name) -> const Rat& {
        auto it = params.find(name);
        if (it == params.end()) {
            throw BadParameter("pair_from_params: missing parameter " + name);
        }
        return it->second;
    };
    for (const std::string& name : names) {
        (void)get(name);
    }

    DerivationPair pair{QMatrix(3, 3), QMatrix(3, 3)};
    // Common first column: f(e1) = b1 e1 + b2 e2 + b3 e3.
    pair.f(0, 0) = get("beta1");
    pair.f(1, 0) = get("beta2");
    pair.f(2, 0) = get("beta3");
    switch (tag) {
    case AlgebraTag::r3:
        pair.f(1, 1) = get("beta4");
        pair.f(2, 2) = get("beta4");
        pair.f(1, 2) = get("beta5");
        break;
    case AlgebraTag::r3lambda:
        if (*lambda == 1) {
            pair.f(1, 1) = get("beta4");
            pair.f(2, 1) = get("beta6");
            pair.f(1, 2) = get("beta7");
            pair.f(2, 2) = get("beta5");
        } else {
            pair.f(1, 1) = get("beta4");
            pair.f(2, 2) = get("beta5");
        }
        break;
    case AlgebraTag::r2c:
        pair.f(1, 1) = get("beta4");
        pair.f(2, 2) = get("beta5");
        break;
    }
    if (tag == AlgebraTag::r2c) {
        pair.g(0, 0) = get("beta1");
        pair.g(1, 1) = get("beta1");
        pair.g(2, 0) = get("gamma1");
        pair.g(2, 1) = get("gamma2");
        pair.g(2, 2) = get("gamma3");
    } else {
        const Rat& b1 = get("beta1");
        pair.g(0, 0) = b1;
        pair.g(1, 1) = b1;
        pair.g(2, 2) = b1;
    }
    return pair;
}

} // namespace affclass
