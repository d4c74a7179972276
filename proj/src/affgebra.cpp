#include "affclass/affgebra.hpp"

#include "affclass/errors.hpp"

namespace affclass {

Vec heap(const Vec& a, const Vec& b, const Vec& c) {
    return vec_add(vec_sub(a, b), c);
}

Vec action(const Rat& alpha, const Vec& a, const Vec& b) {
    return vec_add(vec_scale(Rat(1) - alpha, a), vec_scale(alpha, b));
}

Affgebra::Affgebra(LieAlgebra algebra, DerivationPair pair, Vec s)
    : m_algebra(std::move(algebra)), m_pair(std::move(pair)), m_s(std::move(s)) {
    if (m_s.size() != m_algebra.dim()) {
        throw DimensionMismatch("Affgebra: constant vector length mismatch");
    }
    m_verified = !verify_pair(m_algebra, m_pair).has_value();
}

Vec aff_bracket(const Affgebra& x, const Vec& a, const Vec& b) {
    return vec_add(vec_add(x.algebra().bracket(a, b), x.g() * a),
                   vec_add(x.f() * vec_sub(b, a), x.s()));
}

namespace {

/// Grid of probe points: the origin and the basis vectors.
std::vector<Vec> axiom_grid(std::size_t n) {
    std::vector<Vec> grid;
    grid.push_back(Vec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        Vec e(n, Rat(0));
        e[i] = 1;
        grid.push_back(std::move(e));
    }
    return grid;
}

} // namespace

std::optional<AxiomViolation> check_axioms(const Affgebra& x) {
    const std::vector<Vec> grid = axiom_grid(x.algebra().dim());
    auto br = [&x](const Vec& a, const Vec& b) { return aff_bracket(x, a, b); };
    for (const Vec& a : grid) {
        for (const Vec& b : grid) {
            const Vec lhs = heap(br(a, b), br(a, a), br(b, a));
            if (lhs != br(b, b)) {
                return AxiomViolation{"affine-antisymmetry", {a, b}};
            }
        }
    }
    for (const Vec& a : grid) {
        for (const Vec& b : grid) {
            for (const Vec& c : grid) {
                // Fold of the 5-ary heap x1 - x2 + x3 - x4 + x5.
                Vec lhs = br(a, br(b, c));
                lhs = vec_sub(lhs, br(a, br(a, a)));
                lhs = vec_add(lhs, br(b, br(c, a)));
                lhs = vec_sub(lhs, br(b, br(b, b)));
                lhs = vec_add(lhs, br(c, br(a, b)));
                if (lhs != br(c, br(c, c))) {
                    return AxiomViolation{"affine-jacobi", {a, b, c}};
                }
            }
        }
    }
    return std::nullopt;
}

LieAlgebra tangent_lie(const Affgebra& x, const Vec& e) {
    const std::size_t n = x.algebra().dim();
    if (e.size() != n) {
        throw DimensionMismatch("tangent_lie: base point length mismatch");
    }
    auto br = [&x](const Vec& a, const Vec& b) { return aff_bracket(x, a, b); };
    const Vec at_e = br(e, e);
    // [u,v]_e on basis tangent vectors, as a matrix of results.
    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = e;
        ei[i] += 1;
        for (std::size_t j = 0; j < n; ++j) {
            Vec ej = e;
            ej[j] += 1;
            Vec value = vec_sub(vec_sub(br(ei, ej), br(ei, e)), vec_sub(br(e, ej), at_e));
            table[i][j] = std::move(value);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (table[i][j] != vec_scale(Rat(-1), table[j][i])) {
                throw BadParameter("tangent_lie: tangent bracket is not antisymmetric");
            }
        }
    }
    LieAlgebra tangent(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            tangent.set_bracket(i, j, table[i][j]);
        }
    }
    return tangent;
}

} // namespace affclass
