#include "affclass/lie_algebra.hpp"

#include "affclass/errors.hpp"

namespace affclass {

std::string tag_name(AlgebraTag tag) {
    switch (tag) {
    case AlgebraTag::r3:
        return "r3";
    case AlgebraTag::r3lambda:
        return "r3lambda";
    case AlgebraTag::r2c:
        return "r2c";
    }
    throw InternalError("tag_name: unknown tag");
}

std::optional<AlgebraTag> tag_from_name(const std::string& name) {
    if (name == "r3") {
        return AlgebraTag::r3;
    }
    if (name == "r3lambda") {
        return AlgebraTag::r3lambda;
    }
    if (name == "r2c") {
        return AlgebraTag::r2c;
    }
    return std::nullopt;
}

LieAlgebra::LieAlgebra(std::size_t dim) : m_dim(dim), m_c(dim * dim * dim, Rat(0)) {}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& result) {
    if (i >= m_dim || j >= m_dim || result.size() != m_dim) {
        throw DimensionMismatch("set_bracket: index or result out of range");
    }
    if (i == j) {
        throw BadParameter("set_bracket: diagonal brackets are fixed at zero");
    }
    for (std::size_t k = 0; k < m_dim; ++k) {
        m_c[(i * m_dim + j) * m_dim + k] = result[k];
        m_c[(j * m_dim + i) * m_dim + k] = -result[k];
    }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != m_dim || y.size() != m_dim) {
        throw DimensionMismatch("bracket: operand length mismatch");
    }
    Vec out(m_dim, Rat(0));
    for (std::size_t i = 0; i < m_dim; ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < m_dim; ++j) {
            if (y[j] == 0) {
                continue;
            }
            const Rat coeff = x[i] * y[j];
            for (std::size_t k = 0; k < m_dim; ++k) {
                out[k] += coeff * c(i, j, k);
            }
        }
    }
    return out;
}

QMatrix LieAlgebra::ad(const Vec& a) const {
    if (a.size() != m_dim) {
        throw DimensionMismatch("ad: operand length mismatch");
    }
    QMatrix m(m_dim, m_dim);
    for (std::size_t j = 0; j < m_dim; ++j) {
        for (std::size_t i = 0; i < m_dim; ++i) {
            if (a[i] == 0) {
                continue;
            }
            for (std::size_t k = 0; k < m_dim; ++k) {
                m(k, j) += a[i] * c(i, j, k);
            }
        }
    }
    return m;
}

std::optional<StructureViolation> validate(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (algebra.c(i, j, k) != -algebra.c(j, i, k)) {
                    return StructureViolation{"antisymmetry", i, j, k};
                }
            }
        }
    }
    Vec basis_i(n, Rat(0)), basis_j(n, Rat(0)), basis_k(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                basis_i[i] = 1;
                basis_j[j] = 1;
                basis_k[k] = 1;
                const Vec jac = vec_add(
                    vec_add(algebra.bracket(algebra.bracket(basis_i, basis_j), basis_k),
                            algebra.bracket(algebra.bracket(basis_j, basis_k), basis_i)),
                    algebra.bracket(algebra.bracket(basis_k, basis_i), basis_j));
                basis_i[i] = 0;
                basis_j[j] = 0;
                basis_k[k] = 0;
                if (!vec_is_zero(jac)) {
                    return StructureViolation{"jacobi", i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

LieAlgebra catalog(AlgebraTag tag, const std::optional<Rat>& lambda) {
    if (tag == AlgebraTag::r3lambda) {
        if (!lambda) {
            throw BadParameter("catalog: r3lambda requires a lambda value");
        }
        if (*lambda == 0) {
            throw BadParameter("catalog: r3lambda requires lambda != 0");
        }
    } else if (lambda) {
        throw BadParameter("catalog: lambda is only meaningful for r3lambda");
    }
    LieAlgebra algebra(3);
    switch (tag) {
    case AlgebraTag::r3:
        algebra.set_bracket(0, 1, {Rat(0), Rat(1), Rat(0)});
        algebra.set_bracket(0, 2, {Rat(0), Rat(1), Rat(1)});
        break;
    case AlgebraTag::r3lambda:
        algebra.set_bracket(0, 1, {Rat(0), Rat(1), Rat(0)});
        algebra.set_bracket(0, 2, {Rat(0), Rat(0), *lambda});
        break;
    case AlgebraTag::r2c:
        algebra.set_bracket(0, 1, {Rat(0), Rat(1), Rat(0)});
        break;
    }
    return algebra;
}

std::optional<std::pair<AlgebraTag, std::optional<Rat>>> detect_catalog(const LieAlgebra& algebra) {
    if (algebra.dim() != 3) {
        return std::nullopt;
    }
    const Vec e1{Rat(1), Rat(0), Rat(0)};
    const Vec e2{Rat(0), Rat(1), Rat(0)};
    const Vec e3{Rat(0), Rat(0), Rat(1)};
    const Vec v12 = algebra.bracket(e1, e2);
    const Vec v13 = algebra.bracket(e1, e3);
    const Vec v23 = algebra.bracket(e2, e3);
    if (v12 != e2 || !vec_is_zero(v23)) {
        return std::nullopt;
    }
    if (v13 == vec_add(e2, e3)) {
        return std::make_pair(AlgebraTag::r3, std::nullopt);
    }
    if (vec_is_zero(v13)) {
        return std::make_pair(AlgebraTag::r2c, std::nullopt);
    }
    if (v13[0] == 0 && v13[1] == 0 && v13[2] != 0) {
        return std::make_pair(AlgebraTag::r3lambda, std::optional<Rat>(v13[2]));
    }
    return std::nullopt;
}

AutomorphismFamily automorphisms(AlgebraTag tag, const std::optional<Rat>& lambda) {
    if (tag == AlgebraTag::r3lambda) {
        if (!lambda || *lambda == 0) {
            throw BadParameter("automorphisms: r3lambda requires lambda != 0");
        }
        if (*lambda == 1) {
            return AutomorphismFamily{tag, lambda,
                                      {"alpha1", "alpha2", "alpha3", "alpha4", "alpha5", "alpha6"},
                                      {}};
        }
        return AutomorphismFamily{tag, lambda, {"alpha1", "alpha2"}, {"alpha3", "alpha4"}};
    }
    if (lambda) {
        throw BadParameter("automorphisms: lambda is only meaningful for r3lambda");
    }
    if (tag == AlgebraTag::r3) {
        return AutomorphismFamily{tag, std::nullopt, {"alpha1", "alpha2", "alpha3"}, {"alpha4"}};
    }
    return AutomorphismFamily{tag, std::nullopt, {"alpha1", "alpha2"}, {"alpha3", "alpha4"}};
}

QMatrix AutomorphismFamily::instantiate(const std::map<std::string, Rat>& params) const {
    const std::size_t expected = free_params.size() + nonzero_params.size();
    if (params.size() != expected) {
        throw BadParameter("instantiate: wrong number of parameters");
    }
    auto get = [&params](const std::string& name) -> const Rat& {
        auto it = params.find(name);
        if (it == params.end()) {
            throw BadParameter("instantiate: missing parameter " + name);
        }
        return it->second;
    };
    for (const std::string& name : free_params) {
        (void)get(name);
    }
    for (const std::string& name : nonzero_params) {
        if (get(name) == 0) {
            throw BadParameter("instantiate: parameter " + name + " must be nonzero");
        }
    }

    QMatrix psi = QMatrix::identity(3);
    psi(1, 0) = get("alpha1");
    psi(2, 0) = get("alpha2");
    if (tag == AlgebraTag::r3) {
        // psi(e2) = a4 e2, psi(e3) = a3 e2 + a4 e3
        psi(1, 1) = get("alpha4");
        psi(2, 2) = get("alpha4");
        psi(1, 2) = get("alpha3");
    } else if (tag == AlgebraTag::r3lambda && lambda && *lambda == 1) {
        // psi(e2) = a3 e2 + a5 e3, psi(e3) = a6 e2 + a4 e3
        psi(1, 1) = get("alpha3");
        psi(2, 1) = get("alpha5");
        psi(1, 2) = get("alpha6");
        psi(2, 2) = get("alpha4");
    } else {
        // psi(e2) = a3 e2, psi(e3) = a4 e3
        psi(1, 1) = get("alpha3");
        psi(2, 2) = get("alpha4");
    }
    if (det(psi) == 0) {
        throw BadParameter("instantiate: parameters give a singular matrix");
    }
    return psi;
}

bool is_automorphism(const LieAlgebra& algebra, const QMatrix& psi) {
    const std::size_t n = algebra.dim();
    if (psi.rows() != n || psi.cols() != n) {
        return false;
    }
    if (det(psi) == 0) {
        return false;
    }
    // Columns of psi are the images of the basis vectors.
    std::vector<Vec> image(n, Vec(n, Rat(0)));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            image[j][i] = psi(i, j);
        }
    }
    Vec basis_i(n, Rat(0)), basis_j(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            basis_i[i] = 1;
            basis_j[j] = 1;
            const Vec lhs = psi * algebra.bracket(basis_i, basis_j);
            const Vec rhs = algebra.bracket(image[i], image[j]);
            basis_i[i] = 0;
            basis_j[j] = 0;
            if (lhs != rhs) {
                return false;
            }
        }
    }
    return true;
}

} // namespace affclass
