#include "affclass/canonical.hpp"

#include <array>

#include "affclass/errors.hpp"

namespace affclass {

namespace {

/// Which algebra-parameter the family expects on its forms.
enum class LambdaKind {
    none,    // F and L families: lambda must be absent
    any,     // H families: any nonzero lambda
    one,     // K families: lambda = 1 exactly
};

Rat get(const CanonicalForm& form, const char* name) {
    for (const auto& [key, value] : form.params) {
        if (key == name) {
            return value;
        }
    }
    throw BadParameter(std::string("family builder: form lacks parameter ") + name);
}

bool lambda_ok(LambdaKind kind, const std::optional<Rat>& lambda) {
    switch (kind) {
    case LambdaKind::none:
        return !lambda.has_value();
    case LambdaKind::any:
        return lambda.has_value() && *lambda != 0;
    case LambdaKind::one:
        return lambda.has_value() && *lambda == 1;
    }
    return false;
}

Rat lambda_of(const CanonicalForm& form) {
    if (!form.lambda) {
        throw BadParameter("family builder: form lacks lambda");
    }
    return *form.lambda;
}

// ---- representative builders ----

Affgebra make_f(const Rat& b1, const Rat& b4, Vec s) {
    const QMatrix f{{b1, Rat(0), Rat(0)}, {Rat(0), b4, Rat(0)}, {Rat(0), Rat(0), b4}};
    return Affgebra(catalog(AlgebraTag::r3), DerivationPair{f, b1 * QMatrix::identity(3)},
                    std::move(s));
}

Affgebra make_h(const Rat& lambda, const Rat& b1, const Rat& b5, Vec s) {
    const QMatrix f{{b1, Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), b5}};
    return Affgebra(catalog(AlgebraTag::r3lambda, lambda),
                    DerivationPair{f, b1 * QMatrix::identity(3)}, std::move(s));
}

Affgebra make_k(const Rat& b1, Vec s) {
    const QMatrix f{{b1, Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
    return Affgebra(catalog(AlgebraTag::r3lambda, Rat(1)),
                    DerivationPair{f, b1 * QMatrix::identity(3)}, std::move(s));
}

/// The nine-parameter class on r2c: (b1, b3, b5, g1, g2, g3, N1, N2, N3).
Affgebra make_l(const std::array<Rat, 9>& d) {
    const QMatrix f{{d[0], Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {d[1], Rat(0), d[2]}};
    const QMatrix g{{d[0], Rat(0), Rat(0)}, {Rat(0), d[0], Rat(0)}, {d[3], d[4], d[5]}};
    return Affgebra(catalog(AlgebraTag::r2c), DerivationPair{f, g}, Vec{d[6], d[7], d[8]});
}

using ExtraCheck = bool (*)(const CanonicalForm&);
using Sampler = CanonicalForm (*)(RandomSource&, const std::optional<Rat>&);
using Builder = Affgebra (*)(const CanonicalForm&);

FamilyInfo entry(const char* name, AlgebraTag tag, LambdaKind kind,
                 std::vector<std::string> param_names, const char* side_condition,
                 const char* data_desc, ExtraCheck extra, Sampler sample, Builder build) {
    FamilyInfo info;
    info.name = name;
    info.tag = tag;
    info.param_names = std::move(param_names);
    info.side_condition = side_condition;
    info.data_desc = data_desc;
    const std::string family = name;
    info.admissible = [family, kind, names = info.param_names, extra](const CanonicalForm& form) {
        if (form.family != family || !lambda_ok(kind, form.lambda)) {
            return false;
        }
        if (form.params.size() != names.size()) {
            return false;
        }
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (form.params[i].first != names[i]) {
                return false;
            }
        }
        return extra == nullptr || extra(form);
    };
    info.sample = sample;
    info.build = build;
    return info;
}

// H-family beta5 draw: for lambda = 1 the gauge orients the diagonal to
// be nonnegative, so draws stay strictly positive to remain canonical.
Rat h_beta5(RandomSource& rng, const Rat& lambda) {
    if (lambda == 1) {
        return rng.positive_rat();
    }
    return rng.rat();
}

Rat require_lambda(const std::optional<Rat>& lambda) {
    if (!lambda) {
        throw BadParameter("family sampler: lambda required");
    }
    return *lambda;
}

std::vector<FamilyInfo> build_registry() {
    std::vector<FamilyInfo> r;

    // ---- F families (r3) ----
    r.push_back(entry(
        "F1", AlgebraTag::r3, LambdaKind::none, {"beta1", "beta4", "N1"}, "",
        "(beta1, beta4, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{
                "F1", std::nullopt,
                {{"beta1", rng.rat()}, {"beta4", rng.rat()}, {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_f(get(form, "beta1"), get(form, "beta4"),
                          Vec{get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "F2", AlgebraTag::r3, LambdaKind::none, {"beta1", "beta4"}, "",
        "(beta1, beta4, (beta1-beta4)(1-beta1), 0, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"F2", std::nullopt,
                                 {{"beta1", rng.rat()}, {"beta4", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            const Rat b4 = get(form, "beta4");
            return make_f(b1, b4, Vec{(b1 - b4) * (1 - b1), Rat(0), Rat(1)});
        }));
    r.push_back(entry(
        "F3", AlgebraTag::r3, LambdaKind::none, {"beta1"}, "", "(beta1, beta1, 0, 1, 0)",
        nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"F3", std::nullopt, {{"beta1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_f(b1, b1, Vec{Rat(0), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "F4", AlgebraTag::r3, LambdaKind::none, {"beta4"}, "beta4 != 1",
        "(1, beta4, 0, 1, 0)",
        [](const CanonicalForm& form) { return get(form, "beta4") != 1; },
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"F4", std::nullopt, {{"beta4", rng.rat_excluding({Rat(1)})}}};
        },
        [](const CanonicalForm& form) {
            return make_f(Rat(1), get(form, "beta4"), Vec{Rat(0), Rat(1), Rat(0)});
        }));

    // ---- H families (r3lambda) ----
    r.push_back(entry(
        "H1", AlgebraTag::r3lambda, LambdaKind::any, {"beta1", "beta5", "N1"}, "",
        "(beta1, beta5, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            const Rat lam = require_lambda(lambda);
            return CanonicalForm{
                "H1", lam,
                {{"beta1", rng.rat()}, {"beta5", h_beta5(rng, lam)}, {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_h(lambda_of(form), get(form, "beta1"), get(form, "beta5"),
                          Vec{get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "H2", AlgebraTag::r3lambda, LambdaKind::any, {"beta1", "beta5"}, "",
        "(beta1, beta5, beta1(1-beta1), 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            const Rat lam = require_lambda(lambda);
            return CanonicalForm{"H2", lam,
                                 {{"beta1", rng.rat()}, {"beta5", h_beta5(rng, lam)}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_h(lambda_of(form), b1, get(form, "beta5"),
                          Vec{b1 * (1 - b1), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "H3", AlgebraTag::r3lambda, LambdaKind::any, {"beta1", "beta5"}, "",
        "(beta1, beta5, (beta1-beta5)(1-beta1)/lambda, 0, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            const Rat lam = require_lambda(lambda);
            return CanonicalForm{"H3", lam,
                                 {{"beta1", rng.rat()}, {"beta5", h_beta5(rng, lam)}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            const Rat b5 = get(form, "beta5");
            const Rat lam = lambda_of(form);
            return make_h(lam, b1, b5, Vec{(b1 - b5) * (1 - b1) / lam, Rat(0), Rat(1)});
        }));
    r.push_back(entry(
        "H4", AlgebraTag::r3lambda, LambdaKind::any, {"beta5"}, "beta5 != 1 - lambda",
        "(1, beta5, 0, 1, 1)",
        [](const CanonicalForm& form) { return get(form, "beta5") != 1 - lambda_of(form); },
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            const Rat lam = require_lambda(lambda);
            const Rat b5 = (lam == 1) ? rng.positive_rat() : rng.rat_excluding({1 - lam});
            return CanonicalForm{"H4", lam, {{"beta5", b5}}};
        },
        [](const CanonicalForm& form) {
            return make_h(lambda_of(form), Rat(1), get(form, "beta5"),
                          Vec{Rat(0), Rat(1), Rat(1)});
        }));
    r.push_back(entry(
        "H5", AlgebraTag::r3lambda, LambdaKind::any, {"beta1"}, "",
        "(beta1, beta1(1-lambda), beta1(1-beta1), 1, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            return CanonicalForm{"H5", require_lambda(lambda), {{"beta1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            const Rat lam = lambda_of(form);
            return make_h(lam, b1, b1 * (1 - lam), Vec{b1 * (1 - b1), Rat(1), Rat(1)});
        }));

    // ---- K families (r3lambda, lambda = 1, nilpotent block) ----
    r.push_back(entry(
        "K1", AlgebraTag::r3lambda, LambdaKind::one, {"beta1", "N1"}, "",
        "(beta1, 1, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            require_lambda(lambda);
            return CanonicalForm{"K1", Rat(1), {{"beta1", rng.rat()}, {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_k(get(form, "beta1"), Vec{get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "K2", AlgebraTag::r3lambda, LambdaKind::one, {"beta1"}, "",
        "(beta1, 1, beta1(1-beta1), 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>& lambda) {
            require_lambda(lambda);
            return CanonicalForm{"K2", Rat(1), {{"beta1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_k(b1, Vec{b1 * (1 - b1), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "K3", AlgebraTag::r3lambda, LambdaKind::one, {}, "", "(1, 1, 0, 0, 1)", nullptr,
        [](RandomSource&, const std::optional<Rat>& lambda) {
            require_lambda(lambda);
            return CanonicalForm{"K3", Rat(1), {}};
        },
        [](const CanonicalForm&) { return make_k(Rat(1), Vec{Rat(0), Rat(0), Rat(1)}); }));

    // ---- L families (r2c); data (b1, b3, b5, g1, g2, g3, N1, N2, N3) ----
    r.push_back(entry(
        "L1", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3", "N1"}, "",
        "(beta1, 0, beta5, 0, 1, gamma3, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L1", std::nullopt,
                                 {{"beta1", rng.rat()},
                                  {"beta5", rng.rat()},
                                  {"gamma3", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"), Rat(0), Rat(1),
                           get(form, "gamma3"), get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L2", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3", "N1"}, "",
        "(beta1, 0, beta5, 0, 1, gamma3, N1, 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L2", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"gamma3", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"), Rat(0), Rat(1),
                           get(form, "gamma3"), get(form, "N1"), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "L3", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "N1", "N2"}, "",
        "(beta1, 0, beta5, 0, 1, 1, N1, N2, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L3", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"N1", rng.rat()},
                                  {"N2", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"), Rat(0), Rat(1),
                           Rat(1), get(form, "N1"), get(form, "N2"), Rat(1)});
        }));
    r.push_back(entry(
        "L4", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3", "N1"}, "",
        "(beta1, 0, beta5, 0, 0, gamma3, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L4", std::nullopt,
                                 {{"beta1", rng.rat()},
                                  {"beta5", rng.rat()},
                                  {"gamma3", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"), Rat(0), Rat(0),
                           get(form, "gamma3"), get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L5", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3", "N1"}, "",
        "(beta1, 0, beta5, 1, 0, gamma3, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L5", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"gamma3", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"), Rat(1), Rat(0),
                           get(form, "gamma3"), get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L6", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma1", "N1"}, "",
        "(beta1, 0, beta5, gamma1, 0, 1, N1, 0, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L6", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"gamma1", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({get(form, "beta1"), Rat(0), get(form, "beta5"),
                           get(form, "gamma1"), Rat(0), Rat(1), get(form, "N1"), Rat(0),
                           Rat(1)});
        }));
    r.push_back(entry(
        "L7", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3"}, "",
        "(beta1, 0, beta5, 0, 0, gamma3, beta1(1-beta1), 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{
                "L7", std::nullopt,
                {{"beta1", rng.rat()}, {"beta5", rng.rat()}, {"gamma3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(0), get(form, "beta5"), Rat(0), Rat(0),
                           get(form, "gamma3"), b1 * (1 - b1), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "L8", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma3"}, "",
        "(beta1, 0, beta5, 1, 0, gamma3, beta1(1-beta1), 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L8", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"gamma3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(0), get(form, "beta5"), Rat(1), Rat(0),
                           get(form, "gamma3"), b1 * (1 - b1), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "L9", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta5", "gamma1"}, "",
        "(beta1, 0, beta5, gamma1, 0, 1, beta1(1-beta1), 1, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L9", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta5", rng.rat_excluding({b1})},
                                  {"gamma1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(0), get(form, "beta5"), get(form, "gamma1"), Rat(0),
                           Rat(1), b1 * (1 - b1), Rat(1), Rat(1)});
        }));
    r.push_back(entry(
        "L10", AlgebraTag::r2c, LambdaKind::none, {"beta1", "gamma3", "N1"}, "",
        "(beta1, 1, beta1, 0, 1, gamma3, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L10", std::nullopt,
                                 {{"beta1", b1},
                                  {"gamma3", rng.rat_excluding({Rat(1), b1})},
                                  {"N1", rng.rat_excluding({b1 * (1 - b1)})}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(1), get(form, "gamma3"),
                           get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L11", AlgebraTag::r2c, LambdaKind::none, {"beta1", "N1", "N2"}, "beta1 != 1",
        "(beta1, 1, beta1, 0, 1, beta1, N1, N2, 0)",
        [](const CanonicalForm& form) { return get(form, "beta1") != 1; },
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L11", std::nullopt,
                                 {{"beta1", rng.rat_excluding({Rat(1)})},
                                  {"N1", rng.rat()},
                                  {"N2", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(1), b1, get(form, "N1"),
                           get(form, "N2"), Rat(0)});
        }));
    r.push_back(entry(
        "L12", AlgebraTag::r2c, LambdaKind::none, {"beta1", "gamma3", "N2"}, "gamma3 != 1",
        "(beta1, 1, beta1, 0, 1, gamma3, beta1(1-beta1), N2, 0)",
        [](const CanonicalForm& form) { return get(form, "gamma3") != 1; },
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L12", std::nullopt,
                                 {{"beta1", b1},
                                  {"gamma3", rng.rat_excluding({Rat(1), b1})},
                                  {"N2", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(1), get(form, "gamma3"),
                           b1 * (1 - b1), get(form, "N2"), Rat(0)});
        }));
    r.push_back(entry(
        "L13", AlgebraTag::r2c, LambdaKind::none, {"beta1", "N1", "N2"}, "",
        "(beta1, 1, beta1, 0, 1, 1, N1, N2, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{
                "L13", std::nullopt,
                {{"beta1", rng.rat()}, {"N1", rng.rat()}, {"N2", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(1), Rat(1), get(form, "N1"),
                           get(form, "N2"), Rat(0)});
        }));
    r.push_back(entry(
        "L14", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3", "N2"}, "",
        "(beta1, beta3, beta1, 0, 1, 1, beta1(1-beta1), N2, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{
                "L14", std::nullopt,
                {{"beta1", rng.rat()}, {"beta3", rng.rat()}, {"N2", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(0), Rat(1), Rat(1),
                           b1 * (1 - b1), get(form, "N2"), Rat(1)});
        }));
    r.push_back(entry(
        "L15", AlgebraTag::r2c, LambdaKind::none, {"beta1", "gamma3", "N1"}, "",
        "(beta1, 1, beta1, 0, 0, gamma3, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{
                "L15", std::nullopt,
                {{"beta1", rng.rat()}, {"gamma3", rng.rat()}, {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(0), get(form, "gamma3"),
                           get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L16", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3", "N1"}, "beta1 != 1",
        "(beta1, beta3, beta1, 1, 0, beta1, N1, 0, 0)",
        [](const CanonicalForm& form) { return get(form, "beta1") != 1; },
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L16", std::nullopt,
                                 {{"beta1", rng.rat_excluding({Rat(1)})},
                                  {"beta3", rng.rat()},
                                  {"N1", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(1), Rat(0), b1, get(form, "N1"),
                           Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L17", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3", "N1"}, "",
        "(beta1, beta3, beta1, 1, 0, 1, N1, 0, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            const Rat b1 = rng.rat();
            return CanonicalForm{"L17", std::nullopt,
                                 {{"beta1", b1},
                                  {"beta3", rng.rat()},
                                  {"N1", rng.rat_excluding({Rat(0), b1 * (1 - b1)})}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(1), Rat(0), Rat(1),
                           get(form, "N1"), Rat(0), Rat(0)});
        }));
    r.push_back(entry(
        "L18", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3"}, "",
        "(beta1, beta3, beta1, 0, 0, 1, 0, 0, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L18", std::nullopt,
                                 {{"beta1", rng.rat_excluding({Rat(0), Rat(1)})},
                                  {"beta3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(0), Rat(0), Rat(1), Rat(0),
                           Rat(0), Rat(1)});
        }));
    r.push_back(entry(
        "L19", AlgebraTag::r2c, LambdaKind::none, {"beta1", "gamma3"}, "",
        "(beta1, 1, beta1, 0, 0, gamma3, beta1(1-beta1), 1, 0)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L19", std::nullopt,
                                 {{"beta1", rng.rat()}, {"gamma3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, Rat(1), b1, Rat(0), Rat(0), get(form, "gamma3"),
                           b1 * (1 - b1), Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "L20", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3"}, "beta1 != 1",
        "(beta1, beta3, beta1, 1, 0, beta1, beta1(1-beta1), 1, 0)",
        [](const CanonicalForm& form) { return get(form, "beta1") != 1; },
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L20", std::nullopt,
                                 {{"beta1", rng.rat_excluding({Rat(1)})},
                                  {"beta3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(1), Rat(0), b1, b1 * (1 - b1),
                           Rat(1), Rat(0)});
        }));
    r.push_back(entry(
        "L21", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3"}, "",
        "(beta1, beta3, beta1, 0, 0, 1, beta1(1-beta1), 0, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L21", std::nullopt,
                                 {{"beta1", rng.rat()}, {"beta3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(0), Rat(0), Rat(1),
                           b1 * (1 - b1), Rat(0), Rat(1)});
        }));
    r.push_back(entry(
        "L22", AlgebraTag::r2c, LambdaKind::none, {"beta1", "beta3"}, "",
        "(beta1, beta3, beta1, 0, 0, 1, beta1(1-beta1), 1, 1)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L22", std::nullopt,
                                 {{"beta1", rng.rat()}, {"beta3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            const Rat b1 = get(form, "beta1");
            return make_l({b1, get(form, "beta3"), b1, Rat(0), Rat(0), Rat(1),
                           b1 * (1 - b1), Rat(1), Rat(1)});
        }));
    r.push_back(entry(
        "L23", AlgebraTag::r2c, LambdaKind::none, {"beta3", "N3"}, "",
        "(1, beta3, 1, 1, 0, 1, 0, 0, N3)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L23", std::nullopt,
                                 {{"beta3", rng.rat()}, {"N3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({Rat(1), get(form, "beta3"), Rat(1), Rat(1), Rat(0), Rat(1),
                           Rat(0), Rat(0), get(form, "N3")});
        }));
    r.push_back(entry(
        "L24", AlgebraTag::r2c, LambdaKind::none, {"beta3", "N3"}, "",
        "(1, beta3, 1, 1, 0, 1, 0, 1, N3)", nullptr,
        [](RandomSource& rng, const std::optional<Rat>&) {
            return CanonicalForm{"L24", std::nullopt,
                                 {{"beta3", rng.rat()}, {"N3", rng.rat()}}};
        },
        [](const CanonicalForm& form) {
            return make_l({Rat(1), get(form, "beta3"), Rat(1), Rat(1), Rat(0), Rat(1),
                           Rat(0), Rat(1), get(form, "N3")});
        }));

    return r;
}

} // namespace

const std::vector<FamilyInfo>& family_registry() {
    static const std::vector<FamilyInfo> registry = build_registry();
    return registry;
}

const FamilyInfo& family_info(const std::string& name) {
    for (const FamilyInfo& info : family_registry()) {
        if (info.name == name) {
            return info;
        }
    }
    throw BadParameter("unknown family: " + name);
}

std::vector<const FamilyInfo*> families_for(AlgebraTag tag, const std::optional<Rat>& lambda) {
    std::vector<const FamilyInfo*> out;
    for (const FamilyInfo& info : family_registry()) {
        if (info.tag != tag) {
            continue;
        }
        if (info.tag == AlgebraTag::r3lambda) {
            const bool is_k = info.name.front() == 'K';
            if (is_k && (!lambda || *lambda != 1)) {
                continue;
            }
        }
        out.push_back(&info);
    }
    return out;
}

} // namespace affclass
