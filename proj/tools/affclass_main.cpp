#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "affclass/affgebra.hpp"
#include "affclass/canonical.hpp"
#include "affclass/derivations.hpp"
#include "affclass/errors.hpp"
#include "affclass/isomorphism.hpp"
#include "affclass/json_io.hpp"
#include "affclass/lie_algebra.hpp"
#include "affclass/random_source.hpp"
#include "affclass/rational.hpp"

namespace {

using namespace affclass;

/// Exit status set by command callbacks (0 ok, 1 verification failure).
int g_status = 0;

AlgebraTag parse_tag(const std::string& name) {
    auto tag = tag_from_name(name);
    if (!tag) {
        throw BadParameter("unknown algebra \"" + name + "\" (expected r3, r3lambda, or r2c)");
    }
    return *tag;
}

/// Resolve --lambda against the algebra: required for r3lambda, ignored
/// (with a warning) elsewhere.
std::optional<Rat> resolve_lambda(AlgebraTag tag, const std::string& lambda_text) {
    if (tag == AlgebraTag::r3lambda) {
        if (lambda_text.empty()) {
            throw BadParameter("--lambda is required for algebra r3lambda");
        }
        return rat_parse(lambda_text);
    }
    if (!lambda_text.empty()) {
        std::cerr << "warning: --lambda is ignored for algebra " << tag_name(tag) << "\n";
    }
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open input file \"" + path + "\"");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

/// Write the payload to --output when given, standard output otherwise.
void emit_text(const std::string& output_path, const std::string& payload) {
    if (output_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(output_path);
    if (!out) {
        throw ParseError("cannot open output file \"" + output_path + "\"");
    }
    out << payload;
}

void emit_json(const std::string& output_path, const Json& payload) {
    emit_text(output_path, payload.dump(2) + "\n");
}

std::vector<Rat> parse_grid(const std::string& text) {
    std::vector<Rat> grid;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        grid.push_back(rat_parse(item));
    }
    if (grid.empty()) {
        throw BadParameter("--grid must list at least one rational value");
    }
    return grid;
}

std::string vec_display(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += rat_str(v[i]);
    }
    return out + "]";
}

void cmd_solve(const std::string& algebra_name, const std::string& lambda_text,
               const std::string& output_path) {
    const AlgebraTag tag = parse_tag(algebra_name);
    const std::optional<Rat> lambda = resolve_lambda(tag, lambda_text);
    const PairSpace space = solve_pairs(catalog(tag, lambda));
    emit_json(output_path, pair_space_to_json(space));
}

void cmd_canonicalize(const std::string& input_path, const std::string& output_path) {
    const Affgebra x = affgebra_from_json(parse_text(read_file(input_path)));
    if (!x.verified()) {
        throw BadParameter("input maps do not satisfy the compatibility law");
    }
    const CanonicalResult result = canonicalize(x);
    Json out;
    out["form"] = form_to_json(result.form);
    out["chain"] = chain_to_json(result.chain);
    emit_json(output_path, out);
}

void cmd_verify(const std::string& input_path, std::uint64_t seed,
                const std::string& output_path) {
    const Affgebra x = affgebra_from_json(parse_text(read_file(input_path)));
    const std::size_t n = x.algebra().dim();
    RandomSource rng(seed);

    std::uint64_t samples = 0;
    Json violations = Json::array();

    ++samples;
    if (auto bad = verify_pair(x.algebra(), x.pair())) {
        violations.push_back("compatibility law fails at basis pair (e" +
                             std::to_string(bad->first + 1) + ", e" +
                             std::to_string(bad->second + 1) + ")");
    }

    ++samples;
    if (auto bad = check_axioms(x)) {
        std::string text = bad->axiom + " fails at witness";
        for (const Vec& point : bad->witness) {
            text += " " + vec_display(point);
        }
        violations.push_back(text);
    }

    std::vector<Vec> points;
    points.push_back(vec_zero(n));
    for (int i = 0; i < 10; ++i) {
        Vec e(n);
        for (std::size_t k = 0; k < n; ++k) {
            e[k] = rng.rat();
        }
        points.push_back(std::move(e));
    }
    for (const Vec& e : points) {
        ++samples;
        try {
            if (tangent_lie(x, e) != x.algebra()) {
                violations.push_back("tangent algebra at e = " + vec_display(e) +
                                     " differs from the underlying brackets");
            }
        } catch (const BadParameter&) {
            violations.push_back("tangent bracket at e = " + vec_display(e) +
                                 " is not antisymmetric");
        }
    }

    Json report;
    report["command"] = "verify";
    report["seed"] = seed;
    report["outcome"] = violations.empty() ? "ok" : "violations";
    report["samples_run"] = samples;
    report["violations_found"] = violations.size();
    report["violations"] = violations;
    emit_json(output_path, report);
    if (!violations.empty()) {
        g_status = 1;
    }
}

void cmd_table(const std::string& algebra_name, const std::string& lambda_text,
               const std::string& output_path) {
    const AlgebraTag tag = parse_tag(algebra_name);
    const std::optional<Rat> lambda = resolve_lambda(tag, lambda_text);
    catalog(tag, lambda); // validates lambda != 0

    std::ostringstream out;
    out << "# Lie affgebra families on " << tag_name(tag);
    if (lambda) {
        out << " (lambda = " << rat_str(*lambda) << ")";
    }
    out << "\n\n";
    out << "| family | data | residual parameters | side condition |\n";
    out << "|---|---|---|---|\n";
    for (const FamilyInfo* info : families_for(tag, lambda)) {
        std::string params;
        for (std::size_t i = 0; i < info->param_names.size(); ++i) {
            if (i > 0) {
                params += ", ";
            }
            params += info->param_names[i];
        }
        if (params.empty()) {
            params = "(none)";
        }
        out << "| " << info->name << " | " << info->data_desc << " | " << params << " | "
            << info->side_condition << " |\n";
    }
    if (tag == AlgebraTag::r3lambda && lambda && *lambda == 1) {
        out << "\nnote: for lambda = 1 the forms H2 with (beta1, 0, beta1(1-beta1), 1, 0) "
               "and H3 with (beta1, 0, beta1(1-beta1), 0, 1) are isomorphic.\n";
    }
    emit_text(output_path, out.str());
}

void cmd_orbit_test(const std::string& algebra_name, const std::string& lambda_text,
                    std::uint64_t seed, std::uint64_t trials, const std::string& output_path) {
    if (trials < 1) {
        throw BadParameter("--trials must be at least 1");
    }
    const AlgebraTag tag = parse_tag(algebra_name);
    const std::optional<Rat> lambda = resolve_lambda(tag, lambda_text);
    catalog(tag, lambda); // validates lambda != 0
    const std::vector<const FamilyInfo*> families = families_for(tag, lambda);

    RandomSource rng(seed);
    Json per_family = Json::object();
    for (const FamilyInfo* info : families) {
        per_family[info->name] = 0;
    }
    Json violations = Json::array();

    for (std::uint64_t t = 0; t < trials; ++t) {
        const FamilyInfo* info = families[t % families.size()];
        const CanonicalForm form = info->sample(rng, lambda);
        const Affgebra representative = info->build(form);
        const IsoMove move = random_move(representative.algebra(), rng);
        const CanonicalResult result = canonicalize(apply_iso(representative, move));
        if (result.form == form) {
            per_family[info->name] = per_family[info->name].get<std::uint64_t>() + 1;
        } else {
            Json entry;
            entry["trial"] = t;
            entry["expected"] = form_to_json(form);
            entry["got"] = form_to_json(result.form);
            violations.push_back(std::move(entry));
        }
    }

    Json report;
    report["command"] = "orbit-test";
    report["algebra"] = tag_name(tag);
    report["lambda"] = lambda ? Json(rat_str(*lambda)) : Json(nullptr);
    report["seed"] = seed;
    report["trials"] = trials;
    report["outcome"] = violations.empty() ? "ok" : "violations";
    report["samples_run"] = trials;
    report["violations_found"] = violations.size();
    report["per_family_passes"] = per_family;
    report["violations"] = violations;
    emit_json(output_path, report);
    if (!violations.empty()) {
        g_status = 1;
    }
}

void cmd_iso_check(const std::vector<std::string>& input_paths, const std::string& grid_text,
                   std::uint64_t budget, const std::string& output_path) {
    if (budget < 1) {
        throw BadParameter("--trials must be at least 1");
    }
    const Affgebra x1 = affgebra_from_json(parse_text(read_file(input_paths[0])));
    const Affgebra x2 = affgebra_from_json(parse_text(read_file(input_paths[1])));
    const std::vector<Rat> grid = parse_grid(grid_text);
    const OrbitSearchResult result = orbit_search(x1, x2, grid, budget);

    Json report;
    report["command"] = "iso-check";
    report["found"] = result.found;
    report["examined"] = result.examined;
    if (result.move) {
        Json move;
        move["psi"] = matrix_to_json(result.move->psi);
        move["a"] = vec_to_json(result.move->a);
        report["move"] = std::move(move);
    } else {
        report["move"] = nullptr;
    }
    emit_json(output_path, report);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of Lie affgebras on the catalog algebras"};
    app.require_subcommand(1);

    std::string algebra_name;
    std::string lambda_text;
    std::string input_path;
    std::vector<std::string> input_paths;
    std::string output_path;
    std::string grid_text = "0,1,-1,2,1/2";
    std::uint64_t seed = 0;
    std::uint64_t trials = 100;
    std::uint64_t budget = 1000000;

    CLI::App* solve = app.add_subcommand("solve", "Print a basis of all compatible map pairs");
    solve->add_option("--algebra", algebra_name, "Catalog algebra: r3, r3lambda, r2c")
        ->required();
    solve->add_option("--lambda", lambda_text, "Parameter for r3lambda, as p/q");
    solve->add_option("--output", output_path, "Write the document here instead of stdout");
    solve->callback([&] { cmd_solve(algebra_name, lambda_text, output_path); });

    CLI::App* canon = app.add_subcommand("canonicalize",
                                         "Reduce an affgebra document to its canonical form");
    canon->add_option("--input", input_path, "Affgebra JSON file")->required();
    canon->add_option("--output", output_path, "Write the document here instead of stdout");
    canon->callback([&] { cmd_canonicalize(input_path, output_path); });

    CLI::App* verify = app.add_subcommand("verify", "Check the compatibility law and axioms");
    verify->add_option("--input", input_path, "Affgebra JSON file")->required();
    verify->add_option("--seed", seed, "Random seed echoed in the report");
    verify->add_option("--output", output_path, "Write the report here instead of stdout");
    verify->callback([&] { cmd_verify(input_path, seed, output_path); });

    CLI::App* table = app.add_subcommand("table", "Print the family table for one algebra");
    table->add_option("--algebra", algebra_name, "Catalog algebra: r3, r3lambda, r2c")
        ->required();
    table->add_option("--lambda", lambda_text, "Parameter for r3lambda, as p/q");
    table->add_option("--output", output_path, "Write the table here instead of stdout");
    table->callback([&] { cmd_table(algebra_name, lambda_text, output_path); });

    CLI::App* orbit = app.add_subcommand("orbit-test",
                                         "Random-move round-trip test of the classification");
    orbit->add_option("--algebra", algebra_name, "Catalog algebra: r3, r3lambda, r2c")
        ->required();
    orbit->add_option("--lambda", lambda_text, "Parameter for r3lambda, as p/q");
    orbit->add_option("--seed", seed, "Random seed (reports are deterministic per seed)");
    orbit->add_option("--trials", trials, "Number of random round trips (default 100)");
    orbit->add_option("--output", output_path, "Write the report here instead of stdout");
    orbit->callback([&] { cmd_orbit_test(algebra_name, lambda_text, seed, trials, output_path); });

    CLI::App* iso = app.add_subcommand("iso-check",
                                       "Search for an isomorphism between two documents");
    iso->add_option("--input", input_paths, "Two affgebra JSON files")->expected(2);
    iso->add_option("--grid", grid_text, "Comma-separated trial values (default 0,1,-1,2,1/2)");
    iso->add_option("--trials", budget, "Search budget in candidate moves (default 1000000)");
    iso->add_option("--output", output_path, "Write the report here instead of stdout");
    iso->callback([&] { cmd_iso_check(input_paths, grid_text, budget, output_path); });

    const auto start = std::chrono::steady_clock::now();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const affclass::FieldExtensionRequired& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const affclass::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const affclass::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const affclass::NotCatalogAlgebra& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const affclass::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed-ms: " << elapsed.count() << "\n";
    return g_status;
}
