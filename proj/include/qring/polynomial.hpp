#pragma once

// Exact multivariate polynomials with rational coefficients over variables
// t_0..t_{n-1}. Terms live in a map keyed by monomial; zero coefficients are
// never stored, so equality is structural.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qring/monomial.hpp"
#include "qring/numeric.hpp"

namespace qring {

class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(check_nvars(nvars)) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, Rat c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(Monomial::one(nvars), std::move(c));
        return p;
    }

    static Polynomial variable(int nvars, int v) {
        Polynomial p(nvars);
        p.terms_.emplace(Monomial::variable(nvars, v), Rat(1));
        return p;
    }

    static Polynomial term(int nvars, Rat c, Monomial m) {
        Polynomial p(nvars);
        if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rat constant_value() const {
        auto it = terms_.find(Monomial::one(nvars_));
        return it == terms_.end() ? Rat(0) : it->second;
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const {
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_same(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Rat& c) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
        return r;
    }

    /// this * (c * m) as a single term product.
    Polynomial times_term(const Rat& c, const Monomial& m) const {
        Polynomial r(nvars_);
        if (c == 0) return r;
        for (const auto& [mm, coef] : terms_) r.terms_.emplace(mm * m, coef * c);
        return r;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(nvars_, 1);
        Polynomial base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    std::pair<Monomial, Rat> leading_term(const MonomialOrder& ord) const {
        if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (ord.greater(it->first, best->first)) best = it;
        return *best;
    }

    Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }
    Rat leading_coefficient(const MonomialOrder& ord) const { return leading_term(ord).second; }

    Polynomial monic(const MonomialOrder& ord) const {
        if (is_zero()) return *this;
        Rat lc = leading_coefficient(ord);
        return scaled(Rat(1) / lc);
    }

    /// Exact value at an integer point.
    Rat evaluate(std::span<const Int> point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("evaluation point has wrong dimension");
        Rat total = 0;
        for (const auto& [m, c] : terms_) {
            Int prod = 1;
            for (int v = 0; v < nvars_; ++v) {
                std::uint32_t e = m.exps[static_cast<std::size_t>(v)];
                if (e) prod *= int_pow(point[static_cast<std::size_t>(v)], e);
            }
            total += c * Rat(prod);
        }
        return total;
    }

    /// Substitute a polynomial for variable v. The variable count is
    /// unchanged; v simply no longer occurs in the result.
    Polynomial substitute(int v, const Polynomial& value) const {
        check_var(v);
        value.check_same(*this);
        Polynomial r(nvars_);
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exps[static_cast<std::size_t>(v)];
            Monomial rest = m;
            rest.exps[static_cast<std::size_t>(v)] = 0;
            Polynomial piece = Polynomial::term(nvars_, c, rest);
            if (e) piece = piece * value.pow(e);
            r += piece;
        }
        return r;
    }

    Polynomial substitute(int v, const Rat& value) const {
        return substitute(v, Polynomial::constant(nvars_, value));
    }

    /// The single variable occurring in this polynomial, if there is exactly
    /// one (constants have none).
    std::optional<int> single_variable() const {
        std::optional<int> found;
        for (const auto& [m, c] : terms_)
            for (int v = 0; v < nvars_; ++v)
                if (m.exps[static_cast<std::size_t>(v)] > 0) {
                    if (found && *found != v) return std::nullopt;
                    found = v;
                }
        return found;
    }

    bool contains_variable(int v) const {
        check_var(v);
        for (const auto& [m, c] : terms_)
            if (m.exps[static_cast<std::size_t>(v)] > 0) return true;
        return false;
    }

    /// Dense coefficient list of a univariate polynomial in v, constant term
    /// first. Requires that no other variable occurs.
    std::vector<Rat> univariate_coefficients(int v) const {
        check_var(v);
        std::vector<Rat> coeffs;
        for (const auto& [m, c] : terms_) {
            for (int w = 0; w < nvars_; ++w)
                if (w != v && m.exps[static_cast<std::size_t>(w)] > 0)
                    throw std::logic_error("polynomial is not univariate in the requested variable");
            std::uint32_t e = m.exps[static_cast<std::size_t>(v)];
            if (coeffs.size() <= e) coeffs.resize(e + 1, Rat(0));
            coeffs[e] = c;
        }
        if (coeffs.empty()) coeffs.push_back(Rat(0));
        return coeffs;
    }

    /// Scaled copy with integer coefficients (multiplied by the lcm of the
    /// denominators).
    Polynomial cleared_denominators() const {
        Int l = 1;
        for (const auto& [m, c] : terms_) l = boost::multiprecision::lcm(l, rat_den(c));
        return scaled(Rat(l));
    }

    bool operator==(const Polynomial&) const = default;

    /// Canonical rendering: terms in descending order under `ord`, exponents
    /// written with '^', products with '*', e.g. "5*t4^2 - 5*t4".
    std::string str(const MonomialOrder& ord) const {
        if (terms_.empty()) return "0";
        std::vector<const std::pair<const Monomial, Rat>*> sorted;
        sorted.reserve(terms_.size());
        for (const auto& t : terms_) sorted.push_back(&t);
        std::sort(sorted.begin(), sorted.end(),
                  [&ord](const auto* a, const auto* b) { return ord.greater(a->first, b->first); });
        std::string out;
        for (const auto* t : sorted) {
            const auto& [m, c] = *t;
            const bool negative = c < 0;
            Rat a = negative ? Rat(-c) : c;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string mono;
            for (int v = 0; v < nvars_; ++v) {
                std::uint32_t e = m.exps[static_cast<std::size_t>(v)];
                if (!e) continue;
                if (!mono.empty()) mono += "*";
                mono += "t" + std::to_string(v);
                if (e > 1) mono += "^" + std::to_string(e);
            }
            if (mono.empty()) {
                out += qring::to_string(a);
            } else {
                if (a != 1) out += qring::to_string(a) + "*";
                out += mono;
            }
        }
        return out;
    }

    /// str() with the default grevlex ranking; convenient for diagnostics.
    std::string str() const { return str(MonomialOrder::grevlex(nvars_)); }

private:
    static int check_nvars(int nvars) {
        if (nvars < 0) throw std::invalid_argument("variable count must be non-negative");
        return nvars;
    }
    void check_same(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("polynomials live in different variable sets");
    }
    void check_var(int v) const {
        if (v < 0 || v >= nvars_) throw std::invalid_argument("variable index out of range");
    }

    int nvars_;
    std::map<Monomial, Rat> terms_;
};

}  // namespace qring
