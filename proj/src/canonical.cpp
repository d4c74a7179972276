#include "affclass/canonical.hpp"

#include <map>

#include "affclass/errors.hpp"

namespace affclass {

namespace {

using MoveBuilder = std::function<IsoMove(const Rat&)>;
using Extractor = Rat (*)(const Affgebra&);
using Params = std::vector<std::pair<std::string, Rat>>;

// ---- datum accessors (all on gauge-reduced forms) ----

Rat beta1(const Affgebra& x) { return x.f()(0, 0); }
Rat beta3(const Affgebra& x) { return x.f()(2, 0); }
Rat diag2(const Affgebra& x) { return x.f()(1, 1); } // b4 for r3
Rat diag3(const Affgebra& x) { return x.f()(2, 2); } // b4 resp. b5
Rat gamma1(const Affgebra& x) { return x.g()(2, 0); }
Rat gamma2(const Affgebra& x) { return x.g()(2, 1); }
Rat gamma3(const Affgebra& x) { return x.g()(2, 2); }
Rat n1(const Affgebra& x) { return x.s()[0]; }
Rat n2(const Affgebra& x) { return x.s()[1]; }
Rat n3(const Affgebra& x) { return x.s()[2]; }

// ---- gauge-preserving move builders ----
//
// Each builder reads the current reduced datum and picks the translation
// components that keep the f (and g) gauge intact, so a reduction step
// only ever changes the intended entries. The probe solver double-checks
// that by construction-independent evaluation.

/// psi(e1) = e1 + a1 e2 + a2 e3, psi(e2) = a3 e2, psi(e3) = a4 e3.
QMatrix psi_lower(const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
    QMatrix psi = QMatrix::identity(3);
    psi(1, 0) = a1;
    psi(2, 0) = a2;
    psi(1, 1) = a3;
    psi(2, 2) = a4;
    return psi;
}

/// r3 family move around f = diag(b1, t, t).
IsoMove f_move(const Affgebra& x, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
    const Rat b1 = beta1(x);
    const Rat b4 = diag2(x);
    const Rat c3 = a2 * (b4 - b1) / a4;
    const Rat c2 = (a1 * (b4 - b1) - (a3 + a4) * c3) / a4;
    QMatrix psi = psi_lower(a1, a2, a4, a4);
    psi(1, 2) = a3;
    return IsoMove{std::move(psi), Vec{Rat(0), c2, c3}};
}

/// r3lambda move around f = diag(b1, 0, b5) (diagonal branch, any lambda).
IsoMove h_move(const Affgebra& x, const Rat& lambda, const Rat& a1, const Rat& a2, const Rat& a3,
               const Rat& a4) {
    const Rat b1 = beta1(x);
    const Rat b5 = diag3(x);
    const Rat c2 = -a1 * b1 / a3;
    const Rat c3 = a2 * (b5 - b1) / (lambda * a4);
    return IsoMove{psi_lower(a1, a2, a3, a4), Vec{Rat(0), c2, c3}};
}

/// lambda = 1 move around the nilpotent block f(e2) = e3, f(e3) = 0.
/// psi(e2) = a3 e2 + a5 e3 and psi(e3) = a4 e3 (the e2 component of
/// psi(e3) must vanish to preserve the block shape).
IsoMove k_move(const Affgebra& x, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4,
               const Rat& a5) {
    const Rat b1 = beta1(x);
    const Rat b6 = x.f()(2, 1);
    const Rat c2 = -a1 * b1 / a3;
    const Rat c3 = b6 * a1 / a3 - (a2 * b1 + a5 * c2) / a4;
    QMatrix psi = psi_lower(a1, a2, a3, a4);
    psi(2, 1) = a5;
    return IsoMove{std::move(psi), Vec{Rat(0), c2, c3}};
}

/// r2c move around the reduced gauge (f(e2) = 0, f(e1) e2-free). c3 is an
/// explicit translation component: it moves N3 by (1 - gamma3) per unit.
IsoMove l_move(const Affgebra& x, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4,
               const Rat& c3) {
    const Rat c2 = -a1 * beta1(x) / a3;
    return IsoMove{psi_lower(a1, a2, a3, a4), Vec{Rat(0), c2, c3}};
}

// ---- reduction bookkeeping ----

struct Reduction {
    Affgebra x;
    std::vector<IsoMove> chain;

    void step(const IsoMove& move) {
        if (is_identity(move)) {
            return;
        }
        x = apply_iso(x, move);
        chain.push_back(move);
    }
};

/// Solve extract(apply_iso(x, build(t))) == target for t. The dependence
/// must be affine in t (checked with a third probe); a constant
/// dependence must already sit at the target.
Rat solve_move_param(const Affgebra& x, const MoveBuilder& build, Extractor extract,
                     const Rat& target) {
    const Rat d0 = extract(apply_iso(x, build(Rat(0))));
    const Rat d1 = extract(apply_iso(x, build(Rat(1))));
    const Rat d2 = extract(apply_iso(x, build(Rat(2))));
    const Rat slope = d1 - d0;
    if (d2 - d1 != slope) {
        throw InternalError("canonicalize: probed dependence is not affine");
    }
    if (slope == 0) {
        if (d0 != target) {
            throw InternalError("canonicalize: constant dependence misses its target");
        }
        return Rat(0);
    }
    return (target - d0) / slope;
}

/// One normalization step: drive extract(x) to zero along the builder.
void kill(Reduction& r, const MoveBuilder& build, Extractor extract) {
    const Rat t = solve_move_param(r.x, build, extract, Rat(0));
    r.step(build(t));
}

CanonicalResult emit(Reduction r, const std::string& family, const std::optional<Rat>& lambda,
                     Params params, const Affgebra& original) {
    CanonicalForm form{family, lambda, std::move(params)};
    const FamilyInfo& info = family_info(family);
    if (!info.admissible(form)) {
        throw InternalError("canonicalize: emitted " + family + " violates its side condition");
    }
    if (info.build(form) != r.x) {
        throw InternalError("canonicalize: representative disagrees with the " + family +
                            " builder");
    }
    Affgebra replay = original;
    for (const IsoMove& move : r.chain) {
        replay = apply_iso(replay, move);
    }
    if (replay != r.x) {
        throw InternalError("canonicalize: move chain does not replay to the representative");
    }
    return CanonicalResult{std::move(form), std::move(r.chain), std::move(r.x)};
}

// ---- r3 reduction ----

CanonicalResult f_tree(Reduction r, const Affgebra& original) {
    const Rat b1 = beta1(r.x);
    const Rat b4 = diag2(r.x);
    const Rat p = n1(r.x) - (b1 - b4) * (1 - b1);
    if (p != 0) {
        kill(r, [&](const Rat& t) { return f_move(r.x, Rat(0), t, Rat(0), Rat(1)); }, n3);
        kill(r, [&](const Rat& t) { return f_move(r.x, t, Rat(0), Rat(0), Rat(1)); }, n2);
        return emit(std::move(r), "F1", std::nullopt,
                    {{"beta1", b1}, {"beta4", b4}, {"N1", n1(r.x)}}, original);
    }
    if (n3(r.x) != 0) {
        r.step(f_move(r.x, Rat(0), Rat(0), Rat(0), 1 / n3(r.x)));
        kill(r, [&](const Rat& t) { return f_move(r.x, Rat(0), Rat(0), t, Rat(1)); }, n2);
        return emit(std::move(r), "F2", std::nullopt, {{"beta1", b1}, {"beta4", b4}}, original);
    }
    if (n1(r.x) != 0) {
        // p = 0 and N3 = 0 make the alpha2 slope of N2 equal to N1 != 0.
        kill(r, [&](const Rat& t) { return f_move(r.x, Rat(0), t, Rat(0), Rat(1)); }, n2);
        return emit(std::move(r), "F1", std::nullopt,
                    {{"beta1", b1}, {"beta4", b4}, {"N1", n1(r.x)}}, original);
    }
    if (n2(r.x) == 0) {
        return emit(std::move(r), "F1", std::nullopt,
                    {{"beta1", b1}, {"beta4", b4}, {"N1", Rat(0)}}, original);
    }
    r.step(f_move(r.x, Rat(0), Rat(0), Rat(0), 1 / n2(r.x)));
    if (b1 == b4) {
        return emit(std::move(r), "F3", std::nullopt, {{"beta1", b1}}, original);
    }
    if (b1 != 1) {
        throw InternalError("canonicalize: F4 reached with beta1 != 1");
    }
    return emit(std::move(r), "F4", std::nullopt, {{"beta4", b4}}, original);
}

// ---- r3lambda reduction, diagonal branch ----

CanonicalResult h_tree(Reduction r, const Rat& lambda, const Affgebra& original) {
    const Rat b1 = beta1(r.x);
    const Rat b5 = diag3(r.x);
    const Rat a = n1(r.x) - b1 * (1 - b1);
    const Rat b = n1(r.x) - (b1 - b5) * (1 - b1) / lambda;
    auto move = [&](const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
        return h_move(r.x, lambda, a1, a2, a3, a4);
    };

    // lambda = 1 with zero block and N1 = b1(1 - b1): every invertible
    // block conjugation preserves the gauge, so GL2 acts on (N2, N3) and
    // all nonzero tails form a single orbit, normalized to (1, 1).
    if (lambda == 1 && b5 == 0 && a == 0 && !(n2(r.x) == 0 && n3(r.x) == 0)) {
        const Rat v2 = n2(r.x);
        const Rat v3 = n3(r.x);
        QMatrix q(2, 2);
        if (v2 != 0 && v3 != 0) {
            q = QMatrix{{1 / v2, Rat(0)}, {Rat(0), 1 / v3}};
        } else if (v2 != 0) {
            q = QMatrix{{1 / v2, Rat(0)}, {1 / v2, Rat(1)}};
        } else {
            q = QMatrix{{Rat(1), 1 / v3}, {Rat(0), 1 / v3}};
        }
        QMatrix psi = QMatrix::identity(3);
        psi(1, 1) = q(0, 0);
        psi(1, 2) = q(0, 1);
        psi(2, 1) = q(1, 0);
        psi(2, 2) = q(1, 1);
        r.step(IsoMove{std::move(psi), Vec(3, Rat(0))});
        if (n2(r.x) != 1 || n3(r.x) != 1) {
            throw InternalError("canonicalize: tail normalization failed");
        }
        return emit(std::move(r), "H5", lambda, {{"beta1", b1}}, original);
    }

    if (a != 0 && b != 0) {
        kill(r, [&](const Rat& t) { return move(t, Rat(0), Rat(1), Rat(1)); }, n2);
        kill(r, [&](const Rat& t) { return move(Rat(0), t, Rat(1), Rat(1)); }, n3);
        return emit(std::move(r), "H1", lambda,
                    {{"beta1", b1}, {"beta5", b5}, {"N1", n1(r.x)}}, original);
    }
    if (a == 0 && b != 0) {
        kill(r, [&](const Rat& t) { return move(Rat(0), t, Rat(1), Rat(1)); }, n3);
        if (n2(r.x) == 0) {
            return emit(std::move(r), "H1", lambda,
                        {{"beta1", b1}, {"beta5", b5}, {"N1", n1(r.x)}}, original);
        }
        r.step(move(Rat(0), Rat(0), 1 / n2(r.x), Rat(1)));
        return emit(std::move(r), "H2", lambda, {{"beta1", b1}, {"beta5", b5}}, original);
    }
    if (a != 0) { // b == 0
        kill(r, [&](const Rat& t) { return move(t, Rat(0), Rat(1), Rat(1)); }, n2);
        if (n3(r.x) == 0) {
            return emit(std::move(r), "H1", lambda,
                        {{"beta1", b1}, {"beta5", b5}, {"N1", n1(r.x)}}, original);
        }
        r.step(move(Rat(0), Rat(0), Rat(1), 1 / n3(r.x)));
        return emit(std::move(r), "H3", lambda, {{"beta1", b1}, {"beta5", b5}}, original);
    }
    // a == 0 and b == 0: only scalings remain.
    if (n2(r.x) == 0 && n3(r.x) == 0) {
        return emit(std::move(r), "H1", lambda,
                    {{"beta1", b1}, {"beta5", b5}, {"N1", n1(r.x)}}, original);
    }
    if (n2(r.x) != 0 && n3(r.x) == 0) {
        r.step(move(Rat(0), Rat(0), 1 / n2(r.x), Rat(1)));
        return emit(std::move(r), "H2", lambda, {{"beta1", b1}, {"beta5", b5}}, original);
    }
    if (n2(r.x) == 0 && n3(r.x) != 0) {
        r.step(move(Rat(0), Rat(0), Rat(1), 1 / n3(r.x)));
        return emit(std::move(r), "H3", lambda, {{"beta1", b1}, {"beta5", b5}}, original);
    }
    r.step(move(Rat(0), Rat(0), 1 / n2(r.x), 1 / n3(r.x)));
    if (b5 == b1 * (1 - lambda)) {
        return emit(std::move(r), "H5", lambda, {{"beta1", b1}}, original);
    }
    if (b1 != 1) {
        throw InternalError("canonicalize: H4 reached with beta1 != 1");
    }
    return emit(std::move(r), "H4", lambda, {{"beta5", b5}}, original);
}

// ---- lambda = 1 reduction, nilpotent branch ----

CanonicalResult k_tree(Reduction r, const Affgebra& original) {
    const Rat lambda(1);
    const Rat b1 = beta1(r.x);
    const Rat a = n1(r.x) - b1 * (1 - b1);
    auto move = [&](const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& a5) {
        return k_move(r.x, a1, a2, a3, a4, a5);
    };
    if (a != 0) {
        kill(r, [&](const Rat& t) { return move(t, Rat(0), Rat(1), Rat(1), Rat(0)); }, n2);
        kill(r, [&](const Rat& t) { return move(Rat(0), t, Rat(1), Rat(1), Rat(0)); }, n3);
        return emit(std::move(r), "K1", lambda, {{"beta1", b1}, {"N1", n1(r.x)}}, original);
    }
    if (n2(r.x) != 0) {
        // The block entry scales by a4/a3, so scalings must keep a3 = a4.
        const Rat c = 1 / n2(r.x);
        r.step(move(Rat(0), Rat(0), c, c, Rat(0)));
        kill(r, [&](const Rat& t) { return move(Rat(0), Rat(0), Rat(1), Rat(1), t); }, n3);
        return emit(std::move(r), "K2", lambda, {{"beta1", b1}}, original);
    }
    if (b1 != 1) {
        // With N2 = 0 the alpha1 move slides N3 by (1 - b1) per unit.
        kill(r, [&](const Rat& t) { return move(t, Rat(0), Rat(1), Rat(1), Rat(0)); }, n3);
        return emit(std::move(r), "K1", lambda, {{"beta1", b1}, {"N1", n1(r.x)}}, original);
    }
    if (n3(r.x) == 0) {
        return emit(std::move(r), "K1", lambda, {{"beta1", Rat(1)}, {"N1", Rat(0)}}, original);
    }
    const Rat c = 1 / n3(r.x);
    r.step(move(Rat(0), Rat(0), c, c, Rat(0)));
    return emit(std::move(r), "K3", lambda, {}, original);
}

// ---- r2c reduction ----

CanonicalResult l_tree(Reduction r, const Affgebra& original) {
    const Rat b1 = beta1(r.x);
    const Rat b5 = diag3(r.x);
    const Rat g3 = gamma3(r.x);
    const Rat a0 = b1 * (1 - b1);
    auto move = [&](const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4, const Rat& c3) {
        return l_move(r.x, a1, a2, a3, a4, c3);
    };
    // Moves tied to preserve gamma2 = 1 and gamma1 = 0 (branches I, III):
    // a4 = a3 and a1 = a2 (b1 - g3).
    auto tied = [&](const Rat& a2, const Rat& scale, const Rat& c3) {
        return l_move(r.x, a2 * (b1 - g3), a2, scale, scale, c3);
    };
    auto zero = Rat(0);
    auto one = Rat(1);

    if (b1 != b5) {
        // beta3 is killable iff b1 != b5; do it first, it feeds gamma1/N3.
        kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, beta3);
        if (gamma2(r.x) != 0) {
            // ---- branch I: b1 != b5, gamma2 != 0 ----
            r.step(move(zero, zero, one, 1 / gamma2(r.x), zero)); // gamma2 -> 1
            kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, gamma1);
            // From here only c3 and tied scalings keep the normalization.
            if (g3 != 1) {
                kill(r, [&](const Rat& t) { return tied(zero, one, t); }, n3);
                if (n2(r.x) == 0) {
                    return emit(std::move(r), "L1", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(tied(zero, 1 / n2(r.x), zero));
                return emit(std::move(r), "L2", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            if (n3(r.x) != 0) {
                r.step(tied(zero, 1 / n3(r.x), zero)); // N3 -> 1, N2 residual
                return emit(std::move(r), "L3", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"N1", n1(r.x)}, {"N2", n2(r.x)}},
                            original);
            }
            if (n2(r.x) == 0) {
                return emit(std::move(r), "L1", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(tied(zero, 1 / n2(r.x), zero));
            return emit(std::move(r), "L2", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                        original);
        }
        // ---- branch II: b1 != b5, gamma2 == 0 ----
        const bool n1_off = (n1(r.x) != a0);
        if (n1_off && g3 != 1) { // II.A
            kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, n2);
            kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
            if (gamma1(r.x) == 0) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero)); // gamma1 -> 1
            return emit(std::move(r), "L5", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                        original);
        }
        if (n1_off) { // II.B: g3 == 1
            kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, n2);
            if (n3(r.x) == 0) {
                if (gamma1(r.x) == 0) {
                    return emit(std::move(r), "L4", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
                return emit(std::move(r), "L5", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(move(zero, zero, one, 1 / n3(r.x), zero)); // N3 -> 1, gamma1 residual
            return emit(std::move(r), "L6", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma1", gamma1(r.x)}, {"N1", n1(r.x)}},
                        original);
        }
        if (g3 != 1) { // II.C: N1 == a0
            kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
            if (n2(r.x) == 0) {
                if (gamma1(r.x) == 0) {
                    return emit(std::move(r), "L4", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
                return emit(std::move(r), "L5", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(move(zero, zero, 1 / n2(r.x), one, zero)); // N2 -> 1
            if (gamma1(r.x) == 0) {
                return emit(std::move(r), "L7", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
            }
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
            return emit(std::move(r), "L8", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
        }
        // II.D: N1 == a0, g3 == 1
        if (n2(r.x) == 0 && n3(r.x) == 0) {
            if (gamma1(r.x) == 0) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
            return emit(std::move(r), "L5", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                        original);
        }
        if (n2(r.x) == 0) {
            r.step(move(zero, zero, one, 1 / n3(r.x), zero));
            return emit(std::move(r), "L6", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma1", gamma1(r.x)}, {"N1", n1(r.x)}},
                        original);
        }
        if (n3(r.x) == 0) {
            r.step(move(zero, zero, 1 / n2(r.x), one, zero));
            if (gamma1(r.x) == 0) {
                return emit(std::move(r), "L7", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
            }
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
            return emit(std::move(r), "L8", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
        }
        r.step(move(zero, zero, 1 / n2(r.x), 1 / n3(r.x), zero));
        return emit(std::move(r), "L9", std::nullopt,
                    {{"beta1", b1}, {"beta5", b5}, {"gamma1", gamma1(r.x)}}, original);
    }

    if (gamma2(r.x) != 0) {
        // ---- branch III: b1 == b5, gamma2 != 0 ----
        r.step(move(zero, zero, one, 1 / gamma2(r.x), zero)); // gamma2 -> 1
        kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, gamma1);
        if (g3 != 1 && g3 != b1 && n1(r.x) != a0) { // III.A
            kill(r, [&](const Rat& t) { return tied(t, one, zero); }, n2);
            kill(r, [&](const Rat& t) { return tied(zero, one, t); }, n3);
            if (beta3(r.x) == 0) {
                return emit(std::move(r), "L1", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(tied(zero, 1 / beta3(r.x), zero)); // beta3 -> 1
            return emit(std::move(r), "L10", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
        }
        if (g3 != 1) { // III.B: g3 == b1 or N1 == a0
            kill(r, [&](const Rat& t) { return tied(zero, one, t); }, n3);
            if (beta3(r.x) == 0) {
                if (n2(r.x) == 0) {
                    return emit(std::move(r), "L1", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(tied(zero, 1 / n2(r.x), zero));
                return emit(std::move(r), "L2", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(tied(zero, 1 / beta3(r.x), zero)); // beta3 -> 1, N2 residual
            if (g3 == b1) {
                if (b1 == 1) {
                    throw InternalError("canonicalize: L11 reached with beta1 = 1");
                }
                return emit(std::move(r), "L11", std::nullopt,
                            {{"beta1", b1}, {"N1", n1(r.x)}, {"N2", n2(r.x)}}, original);
            }
            if (n1(r.x) != a0) {
                throw InternalError("canonicalize: L12 reached with N1 off its stratum");
            }
            return emit(std::move(r), "L12", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N2", n2(r.x)}}, original);
        }
        if (n1(r.x) != a0) { // III.C: g3 == 1
            kill(r, [&](const Rat& t) { return tied(t, one, zero); }, n3);
            if (beta3(r.x) == 0) {
                if (n2(r.x) == 0) {
                    return emit(std::move(r), "L1", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(tied(zero, 1 / n2(r.x), zero));
                return emit(std::move(r), "L2", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(tied(zero, 1 / beta3(r.x), zero));
            return emit(std::move(r), "L13", std::nullopt,
                        {{"beta1", b1}, {"N1", n1(r.x)}, {"N2", n2(r.x)}}, original);
        }
        // III.D: g3 == 1, N1 == a0 -- only tied scalings act.
        if (n3(r.x) == 0) {
            if (beta3(r.x) == 0) {
                if (n2(r.x) == 0) {
                    return emit(std::move(r), "L1", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(tied(zero, 1 / n2(r.x), zero));
                return emit(std::move(r), "L2", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(tied(zero, 1 / beta3(r.x), zero));
            return emit(std::move(r), "L13", std::nullopt,
                        {{"beta1", b1}, {"N1", n1(r.x)}, {"N2", n2(r.x)}}, original);
        }
        r.step(tied(zero, 1 / n3(r.x), zero)); // N3 -> 1, beta3/N2 residual
        return emit(std::move(r), "L14", std::nullopt,
                    {{"beta1", b1}, {"beta3", beta3(r.x)}, {"N2", n2(r.x)}}, original);
    }

    // ---- branch IV: b1 == b5, gamma2 == 0 ----
    const bool n1_off = (n1(r.x) != a0);
    if (n1_off && g3 != 1) { // IV.A
        kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, n2);
        if (g3 != b1) {
            kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, gamma1);
            const bool scaled = (beta3(r.x) != 0);
            if (scaled) {
                r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
            }
            kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
            if (!scaled) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            return emit(std::move(r), "L15", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
        }
        // g3 == b1 (and g3 != 1, so b1 != 1)
        if (gamma1(r.x) == 0) {
            const bool scaled = (beta3(r.x) != 0);
            if (scaled) {
                r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
            }
            kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
            if (!scaled) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            return emit(std::move(r), "L15", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
        }
        r.step(move(zero, zero, one, 1 / gamma1(r.x), zero)); // gamma1 -> 1, beta3 residual
        kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
        return emit(std::move(r), "L16", std::nullopt,
                    {{"beta1", b1}, {"beta3", beta3(r.x)}, {"N1", n1(r.x)}}, original);
    }
    if (n1_off) { // IV.B: g3 == 1
        kill(r, [&](const Rat& t) { return move(t, zero, one, one, zero); }, n2);
        if (n1(r.x) != 0) {
            // alpha2 slides N3 by N1 per unit (and shifts gamma1).
            kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, n3);
            if (gamma1(r.x) == 0) {
                if (beta3(r.x) == 0) {
                    return emit(std::move(r), "L4", std::nullopt,
                                {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                                original);
                }
                r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
                return emit(std::move(r), "L15", std::nullopt,
                            {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
            }
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero));
            return emit(std::move(r), "L17", std::nullopt,
                        {{"beta1", b1}, {"beta3", beta3(r.x)}, {"N1", n1(r.x)}}, original);
        }
        // N1 == 0 with N1 != a0 forces b1 outside {0, 1}.
        kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, gamma1);
        if (n3(r.x) == 0) {
            if (beta3(r.x) == 0) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
            return emit(std::move(r), "L15", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
        }
        r.step(move(zero, zero, one, 1 / n3(r.x), zero)); // N3 -> 1, beta3 residual
        return emit(std::move(r), "L18", std::nullopt,
                    {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
    }
    if (g3 != 1) { // IV.C: N1 == a0
        const bool tied_gamma = (g3 == b1);
        if (!tied_gamma) {
            kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, gamma1);
        }
        if (tied_gamma && gamma1(r.x) != 0) {
            r.step(move(zero, zero, one, 1 / gamma1(r.x), zero)); // gamma1 -> 1
            kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
            if (n2(r.x) == 0) {
                return emit(std::move(r), "L16", std::nullopt,
                            {{"beta1", b1}, {"beta3", beta3(r.x)}, {"N1", n1(r.x)}}, original);
            }
            r.step(move(zero, zero, 1 / n2(r.x), one, zero));
            return emit(std::move(r), "L20", std::nullopt,
                        {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
        }
        const bool has_b3 = (beta3(r.x) != 0);
        if (has_b3) {
            r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
        }
        const bool has_n2 = (n2(r.x) != 0);
        if (has_n2) {
            r.step(move(zero, zero, 1 / n2(r.x), one, zero));
        }
        kill(r, [&](const Rat& t) { return move(zero, zero, one, one, t); }, n3);
        if (!has_b3 && !has_n2) {
            return emit(std::move(r), "L4", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                        original);
        }
        if (!has_b3) {
            return emit(std::move(r), "L7", std::nullopt,
                        {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
        }
        if (!has_n2) {
            return emit(std::move(r), "L15", std::nullopt,
                        {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
        }
        return emit(std::move(r), "L19", std::nullopt, {{"beta1", b1}, {"gamma3", g3}},
                    original);
    }
    // IV.D: N1 == a0, g3 == 1
    if (b1 != 1) {
        kill(r, [&](const Rat& t) { return move(zero, t, one, one, zero); }, gamma1);
        if (n3(r.x) == 0) {
            const bool has_b3 = (beta3(r.x) != 0);
            if (has_b3) {
                r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
            }
            const bool has_n2 = (n2(r.x) != 0);
            if (has_n2) {
                r.step(move(zero, zero, 1 / n2(r.x), one, zero));
            }
            if (!has_b3 && !has_n2) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            if (!has_b3) {
                return emit(std::move(r), "L7", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
            }
            if (!has_n2) {
                return emit(std::move(r), "L15", std::nullopt,
                            {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
            }
            return emit(std::move(r), "L19", std::nullopt, {{"beta1", b1}, {"gamma3", g3}},
                        original);
        }
        r.step(move(zero, zero, one, 1 / n3(r.x), zero)); // N3 -> 1, beta3 residual
        if (n2(r.x) == 0) {
            return emit(std::move(r), "L21", std::nullopt,
                        {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
        }
        r.step(move(zero, zero, 1 / n2(r.x), one, zero));
        return emit(std::move(r), "L22", std::nullopt,
                    {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
    }
    // b1 == 1 (so N1 == 0)
    if (gamma1(r.x) == 0) {
        if (n3(r.x) == 0) {
            const bool has_b3 = (beta3(r.x) != 0);
            if (has_b3) {
                r.step(move(zero, zero, one, 1 / beta3(r.x), zero));
            }
            const bool has_n2 = (n2(r.x) != 0);
            if (has_n2) {
                r.step(move(zero, zero, 1 / n2(r.x), one, zero));
            }
            if (!has_b3 && !has_n2) {
                return emit(std::move(r), "L4", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}, {"N1", n1(r.x)}},
                            original);
            }
            if (!has_b3) {
                return emit(std::move(r), "L7", std::nullopt,
                            {{"beta1", b1}, {"beta5", b5}, {"gamma3", g3}}, original);
            }
            if (!has_n2) {
                return emit(std::move(r), "L15", std::nullopt,
                            {{"beta1", b1}, {"gamma3", g3}, {"N1", n1(r.x)}}, original);
            }
            return emit(std::move(r), "L19", std::nullopt, {{"beta1", b1}, {"gamma3", g3}},
                        original);
        }
        r.step(move(zero, zero, one, 1 / n3(r.x), zero));
        if (n2(r.x) == 0) {
            return emit(std::move(r), "L21", std::nullopt,
                        {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
        }
        r.step(move(zero, zero, 1 / n2(r.x), one, zero));
        return emit(std::move(r), "L22", std::nullopt,
                    {{"beta1", b1}, {"beta3", beta3(r.x)}}, original);
    }
    r.step(move(zero, zero, one, 1 / gamma1(r.x), zero)); // gamma1 -> 1
    if (n2(r.x) == 0) {
        return emit(std::move(r), "L23", std::nullopt,
                    {{"beta3", beta3(r.x)}, {"N3", n3(r.x)}}, original);
    }
    r.step(move(zero, zero, 1 / n2(r.x), one, zero));
    return emit(std::move(r), "L24", std::nullopt, {{"beta3", beta3(r.x)}, {"N3", n3(r.x)}},
                original);
}

} // namespace

CanonicalResult canonicalize(const Affgebra& x) {
    if (!x.verified()) {
        throw BadParameter("canonicalize: requires a verified map pair");
    }
    const auto detected = detect_catalog(x.algebra());
    if (!detected) {
        throw NotCatalogAlgebra("canonicalize: algebra is not in the catalog");
    }
    switch (detected->first) {
    case AlgebraTag::r3: {
        GaugeResult gauge = gauge_reduce(x);
        Reduction r{std::move(gauge.reduced), {}};
        if (!is_identity(gauge.move)) {
            r.chain.push_back(std::move(gauge.move));
        }
        return f_tree(std::move(r), x);
    }
    case AlgebraTag::r3lambda: {
        const Rat lambda = *detected->second;
        if (lambda == 1) {
            JordanResult jordan = jordan_split(x);
            Reduction r{std::move(jordan.reduced), {}};
            if (!is_identity(jordan.move)) {
                r.chain.push_back(std::move(jordan.move));
            }
            if (jordan.branch == JordanBranch::nilpotent) {
                return k_tree(std::move(r), x);
            }
            return h_tree(std::move(r), lambda, x);
        }
        GaugeResult gauge = gauge_reduce(x);
        Reduction r{std::move(gauge.reduced), {}};
        if (!is_identity(gauge.move)) {
            r.chain.push_back(std::move(gauge.move));
        }
        return h_tree(std::move(r), lambda, x);
    }
    case AlgebraTag::r2c: {
        GaugeResult gauge = gauge_reduce(x);
        Reduction r{std::move(gauge.reduced), {}};
        if (!is_identity(gauge.move)) {
            r.chain.push_back(std::move(gauge.move));
        }
        return l_tree(std::move(r), x);
    }
    }
    throw InternalError("canonicalize: unknown tag");
}

InvariantMap invariants(const Affgebra& x) {
    if (!x.verified()) {
        throw BadParameter("invariants: requires a verified map pair");
    }
    const auto detected = detect_catalog(x.algebra());
    if (!detected) {
        throw NotCatalogAlgebra("invariants: algebra is not in the catalog");
    }
    switch (detected->first) {
    case AlgebraTag::r3: {
        const Affgebra red = gauge_reduce(x).reduced;
        return InvariantMap{
            "F", {{"beta1", beta1(red)}, {"beta4", diag2(red)}, {"N1", n1(red)}}};
    }
    case AlgebraTag::r3lambda: {
        if (*detected->second == 1) {
            const JordanResult jordan = jordan_split(x);
            if (jordan.branch == JordanBranch::nilpotent) {
                return InvariantMap{
                    "K-nilpotent", {{"beta1", beta1(jordan.reduced)}, {"N1", n1(jordan.reduced)}}};
            }
            return InvariantMap{"H-diagonal",
                                {{"beta1", beta1(jordan.reduced)},
                                 {"beta5", diag3(jordan.reduced)},
                                 {"N1", n1(jordan.reduced)}}};
        }
        const Affgebra red = gauge_reduce(x).reduced;
        return InvariantMap{
            "H", {{"beta1", beta1(red)}, {"beta5", diag3(red)}, {"N1", n1(red)}}};
    }
    case AlgebraTag::r2c: {
        const Affgebra red = gauge_reduce(x).reduced;
        return InvariantMap{
            "L", {{"beta1", beta1(red)}, {"beta5", diag3(red)}, {"gamma3", gamma3(red)}}};
    }
    }
    throw InternalError("invariants: unknown tag");
}

OrbitSearchResult orbit_search(const Affgebra& x1, const Affgebra& x2,
                               const std::vector<Rat>& grid, std::uint64_t budget) {
    if (!x1.verified() || !x2.verified()) {
        throw BadParameter("orbit_search: requires verified map pairs");
    }
    if (x1.algebra() != x2.algebra()) {
        throw BadParameter("orbit_search: inputs live over different algebras");
    }
    if (grid.empty()) {
        throw BadParameter("orbit_search: empty parameter grid");
    }
    const auto detected = detect_catalog(x1.algebra());
    if (!detected) {
        throw NotCatalogAlgebra("orbit_search: algebra is not in the catalog");
    }
    const AutomorphismFamily family = automorphisms(detected->first, detected->second);
    std::vector<std::string> names = family.free_params;
    names.insert(names.end(), family.nonzero_params.begin(), family.nonzero_params.end());
    const std::size_t arity = names.size();
    const std::size_t dim = x1.algebra().dim();

    // ad matrices of the basis vectors, for the linear system in a.
    std::vector<QMatrix> ad_basis;
    for (std::size_t m = 0; m < dim; ++m) {
        Vec e(dim, Rat(0));
        e[m] = 1;
        ad_basis.push_back(x1.algebra().ad(e));
    }

    OrbitSearchResult result{false, std::nullopt, 0};
    std::vector<std::size_t> odometer(arity, 0);
    std::map<std::string, Rat> params;
    for (;;) {
        bool skip = false;
        params.clear();
        for (std::size_t i = 0; i < arity && !skip; ++i) {
            params[names[i]] = grid[odometer[i]];
        }
        QMatrix psi;
        if (!skip) {
            try {
                psi = family.instantiate(params);
            } catch (const BadParameter&) {
                skip = true; // singular or zero where nonzero is required
            }
        }
        if (!skip) {
            if (result.examined == budget) {
                return result;
            }
            ++result.examined;
            // Necessary condition not involving a: psi g1 = g2 psi.
            if (psi * x1.g() == x2.g() * psi) {
                // f condition: ad_{psi a} psi = psi f1 - f2 psi, linear in a.
                // s condition: psi (id - g1) a = s2 - psi s1.
                QMatrix system(dim * dim + dim, dim);
                Vec rhs(dim * dim + dim, Rat(0));
                std::vector<QMatrix> ad_psi;
                for (std::size_t m = 0; m < dim; ++m) {
                    ad_psi.push_back(ad_basis[m] * psi);
                }
                const QMatrix f_target = psi * x1.f() - x2.f() * psi;
                for (std::size_t rr = 0; rr < dim; ++rr) {
                    for (std::size_t cc = 0; cc < dim; ++cc) {
                        const std::size_t row = rr * dim + cc;
                        for (std::size_t m = 0; m < dim; ++m) {
                            Rat coeff(0);
                            for (std::size_t k = 0; k < dim; ++k) {
                                coeff += psi(k, m) * ad_psi[k](rr, cc);
                            }
                            system(row, m) = coeff;
                        }
                        rhs[row] = f_target(rr, cc);
                    }
                }
                const QMatrix s_lhs = psi * (QMatrix::identity(dim) - x1.g());
                const Vec s_rhs = vec_sub(x2.s(), psi * x1.s());
                for (std::size_t i = 0; i < dim; ++i) {
                    for (std::size_t m = 0; m < dim; ++m) {
                        system(dim * dim + i, m) = s_lhs(i, m);
                    }
                    rhs[dim * dim + i] = s_rhs[i];
                }
                const std::optional<Vec> a = solve(system, rhs);
                if (a) {
                    IsoMove move{psi, *a};
                    if (apply_iso(x1, move) == x2) {
                        result.found = true;
                        result.move = std::move(move);
                        return result;
                    }
                }
            }
        }
        // Advance the odometer (last parameter fastest).
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++odometer[pos] < grid.size()) {
                break;
            }
            odometer[pos] = 0;
            if (pos == 0) {
                return result;
            }
        }
        if (arity == 0) {
            return result;
        }
    }
}

} // namespace affclass
