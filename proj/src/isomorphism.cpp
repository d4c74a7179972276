#include "affclass/isomorphism.hpp"

#include <cassert>

#include "affclass/errors.hpp"

namespace affclass {

IsoMove identity_move(std::size_t dim) {
    return IsoMove{QMatrix::identity(dim), Vec(dim, Rat(0))};
}

bool is_identity(const IsoMove& move) {
    return move.psi == QMatrix::identity(move.psi.rows()) && vec_is_zero(move.a);
}

Affgebra apply_iso(const Affgebra& x, const IsoMove& move) {
    const LieAlgebra& algebra = x.algebra();
    if (!is_automorphism(algebra, move.psi)) {
        throw NotAutomorphism("apply_iso: psi is not an automorphism");
    }
    if (move.a.size() != algebra.dim()) {
        throw DimensionMismatch("apply_iso: translation length mismatch");
    }
    const QMatrix psi_inv = inverse(move.psi);
    DerivationPair pair{move.psi * (x.f() - algebra.ad(move.a)) * psi_inv,
                        move.psi * x.g() * psi_inv};
    const Vec s = move.psi * vec_sub(vec_add(x.s(), move.a), x.g() * move.a);
    return Affgebra(algebra, std::move(pair), s);
}

IsoMove compose(const IsoMove& second, const IsoMove& first) {
    return IsoMove{second.psi * first.psi,
                   vec_add(first.a, inverse(first.psi) * second.a)};
}

IsoMove compose_chain(const std::vector<IsoMove>& chain, std::size_t dim) {
    IsoMove total = identity_move(dim);
    for (const IsoMove& move : chain) {
        total = compose(move, total);
    }
    return total;
}

IsoMove random_move(const LieAlgebra& algebra, RandomSource& rng) {
    const auto detected = detect_catalog(algebra);
    if (!detected) {
        throw NotCatalogAlgebra("random_move: algebra is not in the catalog");
    }
    const AutomorphismFamily family = automorphisms(detected->first, detected->second);
    std::map<std::string, Rat> params;
    for (;;) {
        params.clear();
        for (const std::string& name : family.free_params) {
            params[name] = rng.rat();
        }
        for (const std::string& name : family.nonzero_params) {
            params[name] = rng.nonzero_rat();
        }
        try {
            QMatrix psi = family.instantiate(params);
            Vec a(algebra.dim());
            for (Rat& entry : a) {
                entry = rng.rat();
            }
            return IsoMove{std::move(psi), std::move(a)};
        } catch (const BadParameter&) {
            // Singular draw (possible only for lambda = 1); redraw.
        }
    }
}

namespace {

/// Exact square root of a nonnegative rational, if it exists in Q.
std::optional<Rat> rational_sqrt(const Rat& value) {
    if (value < 0) {
        return std::nullopt;
    }
    const mpz_class num = value.get_num();
    const mpz_class den = value.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class num_root, den_root;
    mpz_sqrt(num_root.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), den.get_mpz_t());
    Rat root(num_root, den_root);
    root.canonicalize();
    return root;
}

void require_verified(const Affgebra& x, const char* who) {
    if (!x.verified()) {
        throw BadParameter(std::string(who) + ": requires a verified map pair");
    }
}

GaugeResult finish_gauge(const Affgebra& x, const IsoMove& move, bool shape_ok_after) {
    if (!shape_ok_after) {
        throw InternalError("gauge_reduce: reduced form has unexpected shape");
    }
    return GaugeResult{x, move};
}

} // namespace

JordanResult jordan_split(const Affgebra& x) {
    require_verified(x, "jordan_split");
    const auto detected = detect_catalog(x.algebra());
    if (!detected || detected->first != AlgebraTag::r3lambda || *detected->second != 1) {
        throw NotCatalogAlgebra("jordan_split: only defined on r3lambda with lambda = 1");
    }
    const QMatrix& f = x.f();
    // Translate by a = (mu, -b2, -b3) where mu is the smaller rational
    // eigenvalue of the f block on span(e2, e3); this zeroes the first
    // column below the diagonal and shifts the block spectrum to {0, d}.
    const Rat trace = f(1, 1) + f(2, 2);
    const Rat dett = f(1, 1) * f(2, 2) - f(1, 2) * f(2, 1);
    const std::optional<Rat> root = rational_sqrt(trace * trace - 4 * dett);
    if (!root) {
        throw FieldExtensionRequired(
            "jordan_split: block eigenvalues are not rational");
    }
    const Rat mu = (trace - *root) / 2;
    const Rat d = *root; // difference of the eigenvalues, >= 0
    const IsoMove shift{QMatrix::identity(3), Vec{mu, -f(1, 0), -f(2, 0)}};
    Affgebra reduced = apply_iso(x, shift);
    IsoMove total = shift;

    QMatrix block{{reduced.f()(1, 1), reduced.f()(1, 2)},
                  {reduced.f()(2, 1), reduced.f()(2, 2)}};
    JordanBranch branch = JordanBranch::diagonal;
    QMatrix q_inv = QMatrix::identity(2);
    if (d != 0) {
        // Distinct eigenvalues 0 and d: conjugate by the eigenbasis.
        const std::vector<QMatrix> null0 = nullspace(block);
        QMatrix shifted = block;
        shifted(0, 0) -= d;
        shifted(1, 1) -= d;
        const std::vector<QMatrix> nulld = nullspace(shifted);
        if (null0.empty() || nulld.empty()) {
            throw InternalError("jordan_split: missing eigenvector");
        }
        q_inv = QMatrix{{null0[0](0, 0), nulld[0](0, 0)}, {null0[0](1, 0), nulld[0](1, 0)}};
    } else if (!block.is_zero()) {
        // Double eigenvalue 0 with a nonzero block: nilpotent branch.
        branch = JordanBranch::nilpotent;
        Vec v{Rat(1), Rat(0)};
        if (block(0, 0) == 0 && block(1, 0) == 0) {
            v = Vec{Rat(0), Rat(1)};
        }
        const Vec w = block * v;
        q_inv = QMatrix{{v[0], w[0]}, {v[1], w[1]}};
    }
    if (q_inv != QMatrix::identity(2)) {
        const QMatrix q = inverse(q_inv);
        const AutomorphismFamily family = automorphisms(AlgebraTag::r3lambda, Rat(1));
        const IsoMove conjugate{family.instantiate({{"alpha1", Rat(0)},
                                                    {"alpha2", Rat(0)},
                                                    {"alpha3", q(0, 0)},
                                                    {"alpha6", q(0, 1)},
                                                    {"alpha5", q(1, 0)},
                                                    {"alpha4", q(1, 1)}}),
                                Vec(3, Rat(0))};
        reduced = apply_iso(reduced, conjugate);
        total = compose(conjugate, total);
    }

    const QMatrix& rf = reduced.f();
    const bool shape_ok =
        rf(0, 1) == 0 && rf(0, 2) == 0 && rf(1, 0) == 0 && rf(2, 0) == 0 && rf(1, 1) == 0 &&
        rf(1, 2) == 0 &&
        ((branch == JordanBranch::diagonal && rf(2, 1) == 0 && rf(2, 2) == d) ||
         (branch == JordanBranch::nilpotent && rf(2, 1) == 1 && rf(2, 2) == 0));
    if (!shape_ok) {
        throw InternalError("jordan_split: reduced form has unexpected shape");
    }
    return JordanResult{branch, std::move(reduced), std::move(total)};
}

GaugeResult gauge_reduce(const Affgebra& x) {
    require_verified(x, "gauge_reduce");
    const auto detected = detect_catalog(x.algebra());
    if (!detected) {
        throw NotCatalogAlgebra("gauge_reduce: algebra is not in the catalog");
    }
    const QMatrix& f = x.f();
    switch (detected->first) {
    case AlgebraTag::r3: {
        const IsoMove move{QMatrix::identity(3),
                           Vec{f(1, 2), f(2, 0) - f(1, 0), -f(2, 0)}};
        Affgebra reduced = apply_iso(x, move);
        const QMatrix& rf = reduced.f();
        return finish_gauge(reduced, move,
                            rf(1, 0) == 0 && rf(2, 0) == 0 && rf(1, 2) == 0 &&
                                rf(1, 1) == rf(2, 2));
    }
    case AlgebraTag::r3lambda: {
        const Rat& lambda = *detected->second;
        if (lambda == 1) {
            JordanResult jordan = jordan_split(x);
            return GaugeResult{std::move(jordan.reduced), std::move(jordan.move)};
        }
        const IsoMove move{QMatrix::identity(3),
                           Vec{f(1, 1), -f(1, 0), -f(2, 0) / lambda}};
        Affgebra reduced = apply_iso(x, move);
        const QMatrix& rf = reduced.f();
        return finish_gauge(reduced, move,
                            rf(1, 0) == 0 && rf(2, 0) == 0 && rf(1, 1) == 0);
    }
    case AlgebraTag::r2c: {
        const IsoMove move{QMatrix::identity(3), Vec{f(1, 1), -f(1, 0), Rat(0)}};
        Affgebra reduced = apply_iso(x, move);
        const QMatrix& rf = reduced.f();
        return finish_gauge(reduced, move, rf(1, 0) == 0 && rf(1, 1) == 0);
    }
    }
    throw InternalError("gauge_reduce: unknown tag");
}

} // namespace affclass
