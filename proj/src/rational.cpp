#include "affclass/rational.hpp"

#include <cctype>

namespace affclass {

Rat ratio(long num, long den) {
    if (den == 0) {
        throw BadParameter("ratio: zero denominator");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

/// Accepts an optional leading '-' followed by one or more decimal digits.
bool is_integer_token(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start >= s.size()) {
        return false;
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

} // namespace

Rat rat_parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    const std::string num_part = text.substr(0, slash);
    if (!is_integer_token(num_part)) {
        throw ParseError("rat_parse: malformed rational '" + text + "'");
    }
    mpz_class num(num_part, 10);
    mpz_class den(1);
    if (slash != std::string::npos) {
        const std::string den_part = text.substr(slash + 1);
        if (!is_integer_token(den_part)) {
            throw ParseError("rat_parse: malformed rational '" + text + "'");
        }
        den = mpz_class(den_part, 10);
        if (den == 0) {
            throw ParseError("rat_parse: zero denominator in '" + text + "'");
        }
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& value) {
    if (value.get_den() == 1) {
        return value.get_num().get_str();
    }
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vec_add: length mismatch");
    }
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vec_sub: length mismatch");
    }
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] - b[i];
    }
    return out;
}

Vec vec_scale(const Rat& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = c * a[i];
    }
    return out;
}

Vec vec_zero(std::size_t n) {
    return Vec(n, Rat(0));
}

bool vec_is_zero(const Vec& a) {
    for (const Rat& x : a) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> vec_str(const Vec& a) {
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const Rat& x : a) {
        out.push_back(rat_str(x));
    }
    return out;
}

} // namespace affclass
