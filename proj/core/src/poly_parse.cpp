#include <cctype>
#include <sstream>
#include <stdexcept>

#include "nicerat/poly.hpp"

namespace nicerat {

namespace {

bool is_var_char(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

struct TermScanner {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() { return text[pos]; }

    Rat number() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        size_t digits_end = pos;
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            skip_ws();
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            return rat_from_string(text.substr(start, pos - start));
        }
        pos = digits_end;
        return rat_from_string(text.substr(start, digits_end - start));
    }
};

Poly parse_human(std::string_view text, std::string_view var) {
    TermScanner in{text};
    std::vector<Rat> coeffs;
    auto bump = [&](int power, const Rat& c) {
        if (power >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(power) + 1, Rat(0));
        coeffs[static_cast<size_t>(power)] += c;
    };
    bool first = true;
    while (!in.done()) {
        int term_sign = 1;
        in.skip_ws();
        if (in.peek() == '+' || in.peek() == '-') {
            if (in.peek() == '-') term_sign = -1;
            ++in.pos;
            in.skip_ws();
        } else if (!first) {
            throw std::invalid_argument("Poly::parse: expected '+' or '-' in '" + std::string(text) + "'");
        }
        first = false;
        if (in.done()) throw std::invalid_argument("Poly::parse: dangling sign in '" + std::string(text) + "'");

        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
            coeff = in.number();
            have_coeff = true;
        }
        int power = 0;
        in.skip_ws();
        if (!in.done() && is_var_char(in.peek())) {
            size_t vstart = in.pos;
            while (in.pos < in.text.size() && is_var_char(in.text[in.pos])) ++in.pos;
            std::string_view name = in.text.substr(vstart, in.pos - vstart);
            if (!var.empty() && name != var && name != "x" && name != "z")
                throw std::invalid_argument("Poly::parse: unexpected symbol '" + std::string(name) + "'");
            power = 1;
            in.skip_ws();
            if (!in.done() && in.peek() == '^') {
                ++in.pos;
                in.skip_ws();
                Rat e = in.number();
                if (!is_integer(e) || e < 1)
                    throw std::invalid_argument("Poly::parse: bad exponent in '" + std::string(text) + "'");
                power = static_cast<int>(to_int(e).get_si());
            }
        } else if (!have_coeff) {
            throw std::invalid_argument("Poly::parse: expected term in '" + std::string(text) + "'");
        }
        bump(power, term_sign < 0 ? Rat(-coeff) : coeff);
    }
    if (coeffs.empty()) throw std::invalid_argument("Poly::parse: empty input");
    return Poly::from_coeffs(std::move(coeffs));
}

Poly parse_list(std::string_view text) {
    std::vector<Rat> coeffs;
    size_t pos = text.find('[') + 1;
    size_t end = text.rfind(']');
    if (end == std::string_view::npos || end < pos)
        throw std::invalid_argument("Poly::parse: unbalanced brackets in '" + std::string(text) + "'");
    std::string body(text.substr(pos, end - pos));
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // strip quotes: entries may be written "1/2"
        std::string cleaned;
        for (char c : item)
            if (c != '"' && c != '\'') cleaned.push_back(c);
        if (cleaned.find_first_not_of(" \t") == std::string::npos) {
            if (coeffs.empty() && ss.eof()) break;  // "[]" -> zero polynomial
            throw std::invalid_argument("Poly::parse: empty coefficient in '" + std::string(text) + "'");
        }
        coeffs.push_back(rat_from_string(cleaned));
    }
    return Poly::from_coeffs(std::move(coeffs));
}

}  // namespace

Poly Poly::parse(std::string_view text, std::string_view var) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) throw std::invalid_argument("Poly::parse: empty input");
    if (text[first] == '[') return parse_list(text);
    return parse_human(text, var);
}

std::string Poly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rat c = coeff(k);
        if (c == 0) continue;
        bool leading_term = out.empty();
        if (sgn(c) < 0) {
            out += "-";
            c = -c;
        } else if (!leading_term) {
            out += "+";
        }
        bool unit = (c == 1);
        if (!unit || k == 0) out += rat_to_string(c);
        if (k >= 1) {
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace nicerat
