#pragma once

// The plain-text polynomial interchange format: one polynomial per line,
// variables t0..t{n-1}, terms like "2*t1*t2", "-t0", "3/2*t0", "1".
// '*' between factors is optional, exponents use '^'.

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "qring/errors.hpp"
#include "qring/polynomial.hpp"

namespace qring {

namespace detail {

class LineParser {
public:
    LineParser(const std::string& line, int nvars, int line_no)
        : s_(line), nvars_(nvars), line_(line_no) {}

    Polynomial parse() {
        Polynomial p(nvars_);
        skip_ws();
        if (eof()) throw err("empty polynomial");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++i_;
            skip_ws();
        }
        while (true) {
            auto [c, m] = parse_term();
            p.add_term(m, sign == 1 ? c : Rat(-c));
            skip_ws();
            if (eof()) break;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++i_;
                skip_ws();
            } else {
                throw err("expected '+' or '-' between terms");
            }
        }
        return p;
    }

private:
    std::pair<Rat, Monomial> parse_term() {
        Rat coef(1);
        bool has_coef = false;
        Monomial m = Monomial::one(nvars_);
        bool has_factor = false;

        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_integer();
            if (!eof() && peek() == '/') {
                ++i_;
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw err("expected denominator after '/'");
                Int den = parse_integer();
                if (den == 0) throw err("zero denominator");
                coef = Rat(num, den);
            } else {
                coef = Rat(num);
            }
            has_coef = true;
        }

        while (true) {
            skip_ws();
            bool saw_star = false;
            if (!eof() && peek() == '*') {
                saw_star = true;
                ++i_;
                skip_ws();
            }
            if (eof() || peek() != 't') {
                if (saw_star) throw err("expected variable after '*'");
                break;
            }
            ++i_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                throw err("expected variable index after 't'");
            Int idx = parse_integer();
            if (idx < 0 || idx >= nvars_)
                throw err("variable index out of range (have " + std::to_string(nvars_) +
                          " variables)");
            std::uint32_t e = 1;
            if (!eof() && peek() == '^') {
                ++i_;
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw err("expected exponent after '^'");
                Int ee = parse_integer();
                if (ee > 1'000'000) throw err("exponent too large");
                e = static_cast<std::uint32_t>(ee);
            }
            m.exps[static_cast<std::size_t>(idx.convert_to<int>())] += e;
            has_factor = true;
        }

        if (!has_coef && !has_factor) throw err("expected a term");
        return {coef, m};
    }

    Int parse_integer() {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[i_++];
        return Int(digits);
    }

    bool eof() const { return i_ >= s_.size(); }
    char peek() const { return s_[i_]; }
    void skip_ws() {
        while (!eof() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\r')) ++i_;
    }
    parse_error err(const std::string& msg) const {
        return parse_error(msg, line_, static_cast<int>(i_) + 1);
    }

    const std::string& s_;
    int nvars_;
    int line_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses one polynomial; `line_no` seeds error positions.
inline Polynomial parse_polynomial(const std::string& text, int nvars, int line_no = 1) {
    return detail::LineParser(text, nvars, line_no).parse();
}

struct ParsedSystem {
    std::vector<Polynomial> polynomials;
    int nvars = 0;
};

/// Parses a whole system, one polynomial per line (blank lines skipped).
/// The variable count is the highest mentioned index plus one unless given.
inline ParsedSystem parse_system(const std::string& text, std::optional<int> nvars = std::nullopt) {
    std::vector<std::pair<int, std::string>> lines;
    {
        std::string cur;
        int line_no = 1;
        for (std::size_t i = 0; i <= text.size(); ++i) {
            if (i == text.size() || text[i] == '\n') {
                bool blank = true;
                for (char ch : cur)
                    if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
                if (!blank) lines.emplace_back(line_no, cur);
                cur.clear();
                ++line_no;
            } else {
                cur += text[i];
            }
        }
    }

    int n = nvars.value_or(0);
    if (!nvars) {
        for (const auto& [ln, s] : lines)
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] == 't' && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                    std::size_t j = i + 1;
                    long idx = 0;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) &&
                           idx < 1'000'000)
                        idx = idx * 10 + (s[j++] - '0');
                    n = std::max(n, static_cast<int>(idx) + 1);
                }
    }

    ParsedSystem result;
    result.nvars = n;
    for (const auto& [ln, s] : lines) result.polynomials.push_back(parse_polynomial(s, n, ln));
    return result;
}

/// One polynomial per line, terms descending under `ord`, trailing newline.
inline std::string format_system(const std::vector<Polynomial>& polys, const MonomialOrder& ord) {
    std::string out;
    for (const auto& p : polys) {
        out += p.str(ord);
        out += '\n';
    }
    return out;
}

}  // namespace qring
