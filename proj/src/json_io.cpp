#include "affclass/json_io.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "affclass/errors.hpp"

namespace affclass {

namespace {

/// Fetch a required key, with the owning object named in the error.
const Json& field(const Json& j, const char* key, const char* where) {
    if (!j.is_object()) {
        throw ParseError(std::string(where) + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(where) + ": missing key \"" + key + "\"");
    }
    return *it;
}

std::size_t size_field(const Json& j, const char* key, const char* where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() == 0) {
        throw ParseError(std::string(where) + ": \"" + key + "\" must be a positive integer");
    }
    return static_cast<std::size_t>(v.get<std::uint64_t>());
}

} // namespace

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json rat_to_json(const Rat& value) { return rat_str(value); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) {
        throw ParseError("expected a rational as a \"p/q\" string");
    }
    return rat_parse(j.get<std::string>());
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rat& entry : v) {
        out.push_back(rat_to_json(entry));
    }
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected a vector as a JSON array");
    }
    Vec out;
    out.reserve(j.size());
    for (const Json& entry : j) {
        out.push_back(rat_from_json(entry));
    }
    return out;
}

Json matrix_to_json(const QMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(rat_to_json(m(i, j)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

QMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("expected a matrix as a nonempty array of rows");
    }
    const std::size_t rows = j.size();
    const Json& first = j.at(0);
    if (!first.is_array() || first.empty()) {
        throw ParseError("expected each matrix row to be a nonempty array");
    }
    const std::size_t cols = first.size();
    QMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != cols) {
            throw ParseError("matrix rows must all have the same length");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            out(i, c) = rat_from_json(row.at(c));
        }
    }
    return out;
}

Json lie_to_json(const LieAlgebra& algebra) {
    const std::size_t n = algebra.dim();
    Json brackets = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vec result(n);
            bool nonzero = false;
            for (std::size_t k = 0; k < n; ++k) {
                result[k] = algebra.c(i, j, k);
                nonzero = nonzero || result[k] != 0;
            }
            if (!nonzero) {
                continue;
            }
            Json entry;
            entry["i"] = i + 1;
            entry["j"] = j + 1;
            entry["result"] = vec_to_json(result);
            brackets.push_back(std::move(entry));
        }
    }
    Json out;
    out["dim"] = n;
    out["brackets"] = std::move(brackets);
    return out;
}

LieAlgebra lie_from_json(const Json& j) {
    const std::size_t n = size_field(j, "dim", "algebra");
    const Json& brackets = field(j, "brackets", "algebra");
    if (!brackets.is_array()) {
        throw ParseError("algebra: \"brackets\" must be an array");
    }
    LieAlgebra out(n);
    for (const Json& entry : brackets) {
        const std::size_t i = size_field(entry, "i", "bracket entry");
        const std::size_t jj = size_field(entry, "j", "bracket entry");
        if (i >= jj || jj > n) {
            throw ParseError("bracket entry: indices must satisfy 1 <= i < j <= dim");
        }
        Vec result = vec_from_json(field(entry, "result", "bracket entry"));
        if (result.size() != n) {
            throw ParseError("bracket entry: \"result\" length must equal dim");
        }
        out.set_bracket(i - 1, jj - 1, result);
    }
    return out;
}

Json pair_space_to_json(const PairSpace& space) {
    Json basis = Json::array();
    for (const DerivationPair& pair : space.basis) {
        Json entry;
        entry["f"] = matrix_to_json(pair.f);
        entry["g"] = matrix_to_json(pair.g);
        basis.push_back(std::move(entry));
    }
    Json out;
    out["algebra"] = lie_to_json(space.algebra);
    out["dimension"] = space.dimension();
    out["basis"] = std::move(basis);
    return out;
}

Json affgebra_to_json(const Affgebra& x) {
    Json out;
    out["algebra"] = lie_to_json(x.algebra());
    out["f"] = matrix_to_json(x.f());
    out["g"] = matrix_to_json(x.g());
    out["s"] = vec_to_json(x.s());
    return out;
}

Affgebra affgebra_from_json(const Json& j) {
    LieAlgebra algebra = lie_from_json(field(j, "algebra", "affgebra"));
    QMatrix f = matrix_from_json(field(j, "f", "affgebra"));
    QMatrix g = matrix_from_json(field(j, "g", "affgebra"));
    Vec s = vec_from_json(field(j, "s", "affgebra"));
    const std::size_t n = algebra.dim();
    if (f.rows() != n || f.cols() != n || g.rows() != n || g.cols() != n || s.size() != n) {
        throw ParseError("affgebra: \"f\", \"g\", and \"s\" must match the algebra dimension");
    }
    return Affgebra(std::move(algebra), DerivationPair{std::move(f), std::move(g)}, std::move(s));
}

Json form_to_json(const CanonicalForm& form) {
    Json params = Json::object();
    for (const auto& [name, value] : form.params) {
        params[name] = rat_to_json(value);
    }
    Json out;
    out["family"] = form.family;
    out["lambda"] = form.lambda ? Json(rat_to_json(*form.lambda)) : Json(nullptr);
    out["params"] = std::move(params);
    return out;
}

CanonicalForm form_from_json(const Json& j) {
    const Json& family = field(j, "family", "canonical form");
    if (!family.is_string()) {
        throw ParseError("canonical form: \"family\" must be a string");
    }
    const Json& lambda = field(j, "lambda", "canonical form");
    const Json& params = field(j, "params", "canonical form");
    if (!params.is_object()) {
        throw ParseError("canonical form: \"params\" must be an object");
    }
    CanonicalForm out;
    out.family = family.get<std::string>();
    if (!lambda.is_null()) {
        out.lambda = rat_from_json(lambda);
    }
    for (auto it = params.begin(); it != params.end(); ++it) {
        out.params.emplace_back(it.key(), rat_from_json(it.value()));
    }
    return out;
}

Json chain_to_json(const std::vector<IsoMove>& chain) {
    Json out = Json::array();
    for (const IsoMove& move : chain) {
        Json entry;
        entry["psi"] = matrix_to_json(move.psi);
        entry["a"] = vec_to_json(move.a);
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<IsoMove> chain_from_json(const Json& j) {
    if (!j.is_array()) {
        throw ParseError("expected an isomorphism chain as a JSON array");
    }
    std::vector<IsoMove> out;
    out.reserve(j.size());
    for (const Json& entry : j) {
        QMatrix psi = matrix_from_json(field(entry, "psi", "chain entry"));
        Vec a = vec_from_json(field(entry, "a", "chain entry"));
        if (psi.rows() != psi.cols() || a.size() != psi.rows()) {
            throw ParseError("chain entry: \"psi\" must be square with \"a\" of matching length");
        }
        out.push_back(IsoMove{std::move(psi), std::move(a)});
    }
    return out;
}

} // namespace affclass
