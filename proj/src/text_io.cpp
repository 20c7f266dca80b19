#include "qrook/text_io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace qrook {

namespace {

std::string int_str(const Int& v) { return v.str(); }

// Renders one term (|coeff|, exp); the sign is handled by the caller.
std::string term_str(const Int& coeff_abs, int exp) {
    std::ostringstream os;
    const bool show_coeff = coeff_abs != 1 || exp == 0;
    if (show_coeff) os << int_str(coeff_abs);
    if (exp != 0) {
        if (show_coeff) os << "*";
        os << "q";
        if (exp != 1) os << "^" << exp;
    }
    return os.str();
}

} // namespace

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [exp, coeff] = *it;
        const bool negative = coeff < 0;
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        os << term_str(negative ? Int(-coeff) : coeff, exp);
    }
    return os.str();
}

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos == text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        std::string tail(text.substr(pos, 12));
        throw std::invalid_argument("parse error: expected " + what + " at \"" +
                                    (tail.empty() ? "<end>" : tail) + "\"");
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("digits");
        return std::string(text.substr(start, pos - start));
    }
    int integer() {
        bool neg = consume('-');
        if (!neg) consume('+');
        std::string d = digits();
        long long v = std::stoll(d);
        return static_cast<int>(neg ? -v : v);
    }
};

// term := [int] ['*'] ['q' ['^' int]]  with at least one of the pieces
LaurentPoly parse_term(Cursor& cur, bool negative) {
    Int coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
        coeff = Int(cur.digits());
        have_coeff = true;
        cur.consume('*');
    }
    int exp = 0;
    if (cur.consume('q')) {
        exp = 1;
        if (cur.consume('^')) exp = cur.integer();
    } else if (!have_coeff) {
        cur.fail("a coefficient or q");
    }
    if (negative) coeff = -coeff;
    return LaurentPoly::monomial(coeff, exp);
}

} // namespace

LaurentPoly parse_laurent(std::string_view text) {
    Cursor cur{text};
    if (cur.done()) cur.fail("a polynomial");
    LaurentPoly out;
    bool negative = cur.consume('-');
    if (!negative) cur.consume('+');
    out += parse_term(cur, negative);
    while (!cur.done()) {
        if (cur.consume('+')) negative = false;
        else if (cur.consume('-')) negative = true;
        else cur.fail("'+' or '-'");
        out += parse_term(cur, negative);
    }
    return out;
}

std::string to_string(const RationalFn& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

RationalFn parse_rational_fn(std::string_view text) {
    Cursor probe{text};
    probe.skip_ws();
    if (probe.pos < text.size() && text[probe.pos] == '(') {
        auto split = text.find(")/(");
        auto open = text.find('(');
        auto close = text.rfind(')');
        if (split == std::string_view::npos || close == std::string_view::npos || close <= split)
            throw std::invalid_argument("parse error: expected \"(num)/(den)\"");
        LaurentPoly num = parse_laurent(text.substr(open + 1, split - open - 1));
        LaurentPoly den = parse_laurent(text.substr(split + 3, close - split - 3));
        return RationalFn(num, den);
    }
    return RationalFn(parse_laurent(text));
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    for (int i = 0; i < p.length(); ++i) {
        if (i) os << ",";
        os << p.parts()[i];
    }
    return os.str();
}

Partition parse_partition(std::string_view text) {
    Cursor cur{text};
    if (cur.consume('-')) {
        if (!cur.done()) cur.fail("end of input after \"-\"");
        return Partition{};
    }
    std::vector<int> parts;
    parts.push_back(cur.integer());
    while (!cur.done()) {
        if (!cur.consume(',')) cur.fail("','");
        parts.push_back(cur.integer());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
}

nlohmann::json laurent_to_json(const LaurentPoly& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [exp, coeff] : p.terms()) {
        const std::string key = std::to_string(exp);
        if (coeff >= std::numeric_limits<long long>::min() &&
            coeff <= std::numeric_limits<long long>::max())
            j[key] = static_cast<long long>(coeff);
        else
            j[key] = int_str(coeff);
    }
    return j;
}

LaurentPoly laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("parse error: polynomial JSON must be an object");
    LaurentPoly out;
    for (const auto& [key, value] : j.items()) {
        int exp = 0;
        try {
            exp = std::stoi(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse error: bad exponent key \"" + key + "\"");
        }
        Int coeff;
        if (value.is_number_integer()) coeff = Int(value.get<long long>());
        else if (value.is_string()) coeff = Int(value.get<std::string>());
        else throw std::invalid_argument("parse error: bad coefficient for exponent " + key);
        out += LaurentPoly::monomial(coeff, exp);
    }
    return out;
}

nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json(p.parts());
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("parse error: partition JSON must be an array");
    std::vector<int> parts;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw std::invalid_argument("parse error: partition parts must be integers");
        parts.push_back(v.get<int>());
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
}

} // namespace qrook
