// Acceptance harness: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] is the path to the command-line binary (used by criterion 8).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "affclass/affgebra.hpp"
#include "affclass/canonical.hpp"
#include "affclass/derivations.hpp"
#include "affclass/errors.hpp"
#include "affclass/isomorphism.hpp"
#include "affclass/lie_algebra.hpp"
#include "affclass/matrix.hpp"
#include "affclass/random_source.hpp"
#include "affclass/rational.hpp"

using namespace affclass;

namespace {

int g_failures = 0;

void fail(const std::string& detail) {
    ++g_failures;
    if (g_failures <= 10) {
        std::cout << "  [FAIL] " << detail << "\n";
    }
}

bool finish(int criterion, const std::string& name) {
    const bool ok = g_failures == 0;
    if (g_failures > 10) {
        std::cout << "  [FAIL] ... and " << (g_failures - 10) << " more\n";
    }
    std::cout << "criterion " << criterion << " (" << name << "): " << (ok ? "PASS" : "FAIL")
              << std::endl;
    g_failures = 0;
    return ok;
}

const std::pair<AlgebraTag, std::optional<Rat>> kAllConfigs[] = {
    {AlgebraTag::r3, std::nullopt},
    {AlgebraTag::r3lambda, ratio(1, 2)},
    {AlgebraTag::r3lambda, Rat(2)},
    {AlgebraTag::r3lambda, Rat(-1)},
    {AlgebraTag::r3lambda, Rat(1)},
    {AlgebraTag::r2c, std::nullopt},
};

std::string config_name(AlgebraTag tag, const std::optional<Rat>& lambda) {
    std::string name = tag_name(tag);
    if (lambda) {
        name += "(lambda=" + rat_str(*lambda) + ")";
    }
    return name;
}

std::string form_str(const CanonicalForm& form) {
    std::string text = form.family;
    if (form.lambda) {
        text += "@" + rat_str(*form.lambda);
    }
    text += "{";
    for (std::size_t k = 0; k < form.params.size(); ++k) {
        if (k > 0) text += ", ";
        text += form.params[k].first + "=" + rat_str(form.params[k].second);
    }
    return text + "}";
}

Vec rvec(RandomSource& rng) { return Vec{rng.rat(), rng.rat(), rng.rat()}; }

Affgebra random_affgebra(AlgebraTag tag, const std::optional<Rat>& lambda, RandomSource& rng) {
    std::map<std::string, Rat> params;
    for (const auto& name : pair_param_names(tag, lambda)) {
        params[name] = rng.rat();
    }
    return Affgebra(catalog(tag, lambda), pair_from_params(tag, lambda, params), rvec(rng));
}

Vec flatten_pair(const DerivationPair& pair) {
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

// ---- criterion 1 ----
bool criterion_dimensions() {
    const std::pair<std::pair<AlgebraTag, std::optional<Rat>>, std::size_t> expected[] = {
        {{AlgebraTag::r3, std::nullopt}, 5},       {{AlgebraTag::r3lambda, ratio(1, 2)}, 5},
        {{AlgebraTag::r3lambda, Rat(2)}, 5},       {{AlgebraTag::r3lambda, Rat(-1)}, 5},
        {{AlgebraTag::r3lambda, Rat(1)}, 7},       {{AlgebraTag::r2c, std::nullopt}, 8},
    };
    for (const auto& [config, dim] : expected) {
        const PairSpace space = solve_pairs(catalog(config.first, config.second));
        if (space.dimension() != dim) {
            fail(config_name(config.first, config.second) + ": dimension " +
                 std::to_string(space.dimension()) + ", expected " + std::to_string(dim));
        }
    }
    return finish(1, "solution-space dimensions");
}

// ---- criterion 2 ----
bool criterion_span_equality() {
    for (const auto& [tag, lambda] : kAllConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        const PairSpace space = solve_pairs(algebra);
        const std::vector<std::string> names = pair_param_names(tag, lambda);

        std::vector<Vec> solved;
        for (const DerivationPair& pair : space.basis) {
            if (verify_pair(algebra, pair)) {
                fail(config_name(tag, lambda) + ": solved basis element fails the law");
            }
            solved.push_back(flatten_pair(pair));
        }
        std::vector<Vec> named;
        for (const std::string& hot : names) {
            std::map<std::string, Rat> params;
            for (const auto& name : names) {
                params[name] = (name == hot) ? Rat(1) : Rat(0);
            }
            named.push_back(flatten_pair(pair_from_params(tag, lambda, params)));
        }

        const std::size_t dim = space.dimension();
        std::vector<Vec> both = solved;
        both.insert(both.end(), named.begin(), named.end());
        if (names.size() != dim || rank(stack_rows(solved)) != dim ||
            rank(stack_rows(named)) != dim || rank(stack_rows(both)) != dim) {
            fail(config_name(tag, lambda) + ": solved and named spans differ");
        }
    }
    return finish(2, "solved and named pair spaces coincide");
}

// ---- criterion 3 ----
bool criterion_axioms() {
    RandomSource rng(1001);
    for (const auto& [tag, lambda] : kAllConfigs) {
        for (int trial = 0; trial < 100; ++trial) {
            const Affgebra x = random_affgebra(tag, lambda, rng);
            if (!x.verified()) {
                fail(config_name(tag, lambda) + ": named parameters gave an unverified pair");
                continue;
            }
            if (const auto violation = check_axioms(x)) {
                fail(config_name(tag, lambda) + " trial " + std::to_string(trial) +
                     ": axiom " + violation->axiom + " failed");
            }
        }
    }
    return finish(3, "axiom checks on random instances");
}

// ---- criterion 4 ----
bool criterion_tangent() {
    RandomSource rng(1002);
    for (const auto& [tag, lambda] : kAllConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        Affgebra x = random_affgebra(tag, lambda, rng);
        if (tangent_lie(x, vec_zero(3)) != algebra) {
            fail(config_name(tag, lambda) + ": tangent at the origin differs");
        }
        for (int trial = 0; trial < 100; ++trial) {
            if (trial % 10 == 0) {
                x = random_affgebra(tag, lambda, rng);
            }
            if (tangent_lie(x, rvec(rng)) != algebra) {
                fail(config_name(tag, lambda) + " trial " + std::to_string(trial) +
                     ": tangent at a random point differs");
            }
        }
    }
    return finish(4, "tangent algebra reconstruction");
}

// Classification sweep shared by criteria 5 and 6: the sampled combos are
// F1..F4, H1..H5 for lambda in {1/2, 2}, H1..H5 + K1..K3 for lambda = 1,
// and L1..L24 (46 family/lambda combinations, 3 draws each).
const std::pair<AlgebraTag, std::optional<Rat>> kClassConfigs[] = {
    {AlgebraTag::r3, std::nullopt},
    {AlgebraTag::r3lambda, ratio(1, 2)},
    {AlgebraTag::r3lambda, Rat(2)},
    {AlgebraTag::r3lambda, Rat(1)},
    {AlgebraTag::r2c, std::nullopt},
};

// ---- criterion 5 ----
bool criterion_orbit_soundness(std::vector<CanonicalForm>& forms_out) {
    RandomSource rng(1003);
    int combos = 0;
    for (const auto& [tag, lambda] : kClassConfigs) {
        const LieAlgebra algebra = catalog(tag, lambda);
        for (const FamilyInfo* family : families_for(tag, lambda)) {
            ++combos;
            for (int draw = 0; draw < 3; ++draw) {
                const CanonicalForm form = family->sample(rng, lambda);
                forms_out.push_back(form);
                Affgebra moved = family->build(form);
                for (int hop = 0; hop < 50; ++hop) {
                    moved = apply_iso(moved, random_move(algebra, rng));
                    CanonicalResult r{CanonicalForm{}, {}, moved};
                    try {
                        r = canonicalize(moved);
                    } catch (const Error& e) {
                        fail(form_str(form) + " hop " + std::to_string(hop) + ": " + e.what());
                        break;
                    }
                    if (r.form != form) {
                        fail(form_str(form) + " hop " + std::to_string(hop) + ": landed in " +
                             form_str(r.form));
                        break;
                    }
                }
            }
        }
    }
    if (combos != 46) {
        fail("expected 46 family/lambda combinations, swept " + std::to_string(combos));
    }
    return finish(5, "classification orbit soundness");
}

// ---- criterion 6 ----
bool criterion_separation(const std::vector<CanonicalForm>& sampled) {
    // Distinct canonical forms must be provably non-isomorphic, except for
    // one coupled pair at lambda = 1, beta5 = 0 which the search must
    // connect. Its beta1 = 101/7 lies outside the samplers' value range,
    // so no sampled form can collide with it.
    std::vector<CanonicalForm> forms = sampled;
    const Rat b1 = ratio(101, 7);
    const CanonicalForm coupled_a{"H2", Rat(1), {{"beta1", b1}, {"beta5", Rat(0)}}};
    const CanonicalForm coupled_b{"H3", Rat(1), {{"beta1", b1}, {"beta5", Rat(0)}}};
    forms.push_back(coupled_a);
    forms.push_back(coupled_b);

    std::vector<CanonicalForm> distinct;
    for (const CanonicalForm& form : forms) {
        bool seen = false;
        for (const CanonicalForm& other : distinct) {
            if (form == other) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            distinct.push_back(form);
        }
    }

    std::vector<Affgebra> reps;
    std::vector<InvariantMap> marks;
    reps.reserve(distinct.size());
    for (const CanonicalForm& form : distinct) {
        reps.push_back(family_info(form.family).build(form));
        marks.push_back(invariants(reps.back()));
    }

    const std::vector<Rat> grid{Rat(0), Rat(1), Rat(-1), Rat(2), ratio(1, 2)};
    std::vector<std::pair<std::size_t, std::size_t>> identified;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        for (std::size_t j = i + 1; j < distinct.size(); ++j) {
            if (reps[i].algebra() != reps[j].algebra()) {
                continue; // different underlying algebra separates them
            }
            if (marks[i] != marks[j]) {
                continue; // invariants separate them
            }
            const OrbitSearchResult r = orbit_search(reps[i], reps[j], grid, 200000);
            if (!r.found) {
                continue; // exhaustion separates them
            }
            identified.emplace_back(i, j);
            if (apply_iso(reps[i], *r.move) != reps[j]) {
                fail("found move does not replay: " + form_str(distinct[i]) + " vs " +
                     form_str(distinct[j]));
            }
        }
    }

    if (identified.size() != 1) {
        fail("expected exactly 1 identified pair, found " + std::to_string(identified.size()));
        for (const auto& [i, j] : identified) {
            fail("identified: " + form_str(distinct[i]) + " ~ " + form_str(distinct[j]));
        }
    } else {
        const auto& [i, j] = identified.front();
        const bool is_coupled = (distinct[i] == coupled_a && distinct[j] == coupled_b) ||
                                (distinct[i] == coupled_b && distinct[j] == coupled_a);
        if (!is_coupled) {
            fail("identified pair is " + form_str(distinct[i]) + " ~ " + form_str(distinct[j]) +
                 ", expected the coupled lambda = 1 pair");
        }
    }
    return finish(6, "separation of canonical forms");
}

// ---- criterion 7 ----
bool criterion_gauge_shapes() {
    RandomSource rng(1004);

    for (int trial = 0; trial < 100; ++trial) {
        const Affgebra x = random_affgebra(AlgebraTag::r3, std::nullopt, rng);
        const GaugeResult r = gauge_reduce(x);
        const QMatrix& f = r.reduced.f();
        bool ok = f(1, 1) == f(2, 2);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                if (i != j && f(i, j) != 0) ok = false;
            }
        }
        if (!ok || apply_iso(x, r.move) != r.reduced) {
            fail("r3 trial " + std::to_string(trial) + ": reduced shape or replay wrong");
        }
    }

    for (const Rat& lambda : {ratio(1, 2), Rat(-1)}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Affgebra x = random_affgebra(AlgebraTag::r3lambda, lambda, rng);
            const GaugeResult r = gauge_reduce(x);
            const QMatrix& f = r.reduced.f();
            bool ok = f(1, 1) == 0;
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    if (i != j && f(i, j) != 0) ok = false;
                }
            }
            if (!ok || apply_iso(x, r.move) != r.reduced) {
                fail("r3lambda(" + rat_str(lambda) + ") trial " + std::to_string(trial) +
                     ": reduced shape or replay wrong");
            }
        }
    }

    for (int trial = 0; trial < 100; ++trial) {
        const Affgebra x = random_affgebra(AlgebraTag::r2c, std::nullopt, rng);
        const GaugeResult r = gauge_reduce(x);
        const QMatrix& f = r.reduced.f();
        if (f(1, 0) != 0 || f(1, 1) != 0 || apply_iso(x, r.move) != r.reduced) {
            fail("r2c trial " + std::to_string(trial) + ": reduced shape or replay wrong");
        }
    }
    return finish(7, "gauge reduction shapes");
}

// ---- criterion 8 ----
int run_command(const std::string& command) {
    const int rc = std::system(command.c_str());
    if (rc == -1 || !WIFEXITED(rc)) {
        return -1;
    }
    return WEXITSTATUS(rc);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool criterion_determinism(const char* cli_path) {
    if (cli_path == nullptr) {
        fail("no CLI path given (expected as argv[1])");
        return finish(8, "deterministic orbit-test reports");
    }
    const std::string cli = std::string("\"") + cli_path + "\"";
    const std::string dir = "/tmp";
    const std::string base = dir + "/affclass_accept_" + std::to_string(getpid());

    const std::pair<std::string, std::string> runs[] = {
        {"orbit-test --algebra r3lambda --lambda 1 --seed 12345 --trials 40", "a"},
        {"orbit-test --algebra r2c --seed 6 --trials 30", "b"},
    };
    for (const auto& [args, tagname] : runs) {
        const std::string out1 = base + "_" + tagname + "1.json";
        const std::string out2 = base + "_" + tagname + "2.json";
        const std::string cmd1 = cli + " " + args + " > " + out1 + " 2>/dev/null";
        const std::string cmd2 = cli + " " + args + " > " + out2 + " 2>/dev/null";
        if (run_command(cmd1) != 0 || run_command(cmd2) != 0) {
            fail("orbit-test run failed: " + args);
            continue;
        }
        const std::string first = read_file(out1);
        if (first.empty()) {
            fail("orbit-test produced no output: " + args);
        } else if (first != read_file(out2)) {
            fail("orbit-test reports differ between runs: " + args);
        }
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }

    // Contract checks on the same binary: bad parameters exit with 2.
    const std::string devnull = " >/dev/null 2>&1";
    if (run_command(cli + " solve --algebra r3lambda --lambda 0" + devnull) != 2) {
        fail("solve with lambda = 0 should exit 2");
    }
    if (run_command(cli + " orbit-test --algebra r3 --trials 0" + devnull) != 2) {
        fail("orbit-test with zero trials should exit 2");
    }
    return finish(8, "deterministic orbit-test reports");
}

} // namespace

int main(int argc, char** argv) {
    const char* cli_path = argc > 1 ? argv[1] : nullptr;
    bool all = true;

    all &= criterion_dimensions();
    all &= criterion_span_equality();
    all &= criterion_axioms();
    all &= criterion_tangent();
    std::vector<CanonicalForm> sampled;
    all &= criterion_orbit_soundness(sampled);
    all &= criterion_separation(sampled);
    all &= criterion_gauge_shapes();
    all &= criterion_determinism(cli_path);

    std::cout << (all ? "acceptance: all criteria passed"
                      : "acceptance: at least one criterion failed")
              << std::endl;
    return all ? 0 : 1;
}
