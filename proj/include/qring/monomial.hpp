#pragma once

// Power products and monomial orders for the polynomial engine.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qring {

/// A power product t_0^{e_0} ... t_{n-1}^{e_{n-1}}, stored as its exponent
/// vector. Comparison via <=> is the fixed storage order used by term maps;
/// ranking for algebraic purposes goes through MonomialOrder.
struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(int nvars) : exps(static_cast<std::size_t>(nvars), 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    static Monomial one(int nvars) { return Monomial(nvars); }

    static Monomial variable(int nvars, int v, std::uint32_t e = 1) {
        Monomial m(nvars);
        m.exps.at(static_cast<std::size_t>(v)) = e;
        return m;
    }

    int nvars() const { return static_cast<int>(exps.size()); }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }

    bool is_one() const {
        return std::all_of(exps.begin(), exps.end(), [](std::uint32_t e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t v = 0; v < exps.size(); ++v) r.exps[v] += o.exps[v];
        return r;
    }

    /// true iff this divides m.
    bool divides(const Monomial& m) const {
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > m.exps[v]) return false;
        return true;
    }

    /// this / d; requires d.divides(*this).
    Monomial divided_by(const Monomial& d) const {
        Monomial r = *this;
        for (std::size_t v = 0; v < exps.size(); ++v) r.exps[v] -= d.exps[v];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r = a;
        for (std::size_t v = 0; v < r.exps.size(); ++v) r.exps[v] = std::max(a.exps[v], b.exps[v]);
        return r;
    }

    bool coprime_with(const Monomial& o) const {
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0 && o.exps[v] > 0) return false;
        return true;
    }

    auto operator<=>(const Monomial&) const = default;
};

enum class OrderKind { lex, grlex, grevlex };

inline std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
    }
    return "?";
}

inline OrderKind order_kind_from_name(const std::string& name) {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "grevlex") return OrderKind::grevlex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

/// Total order on monomials, compatible with multiplication and with 1 as
/// the least element. `precedence` lists variable indices from most to
/// least significant; the default is t_0 > t_1 > ... > t_{n-1}.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, int nvars) : kind_(kind), prec_(static_cast<std::size_t>(nvars)) {
        std::iota(prec_.begin(), prec_.end(), 0);
    }

    MonomialOrder(OrderKind kind, std::vector<int> precedence)
        : kind_(kind), prec_(std::move(precedence)) {
        std::vector<int> sorted = prec_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t v = 0; v < sorted.size(); ++v)
            if (sorted[v] != static_cast<int>(v))
                throw std::invalid_argument("precedence must be a permutation of 0..n-1");
    }

    static MonomialOrder lex(int nvars) { return {OrderKind::lex, nvars}; }
    static MonomialOrder grlex(int nvars) { return {OrderKind::grlex, nvars}; }
    static MonomialOrder grevlex(int nvars) { return {OrderKind::grevlex, nvars}; }

    OrderKind kind() const { return kind_; }
    int nvars() const { return static_cast<int>(prec_.size()); }
    const std::vector<int>& precedence() const { return prec_; }
    std::string name() const { return order_kind_name(kind_); }

    /// -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (kind_ != OrderKind::lex) {
            std::uint64_t da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
        }
        if (kind_ == OrderKind::grevlex) {
            // among equal degrees the monomial with the smaller exponent in
            // the least significant differing variable is the bigger one
            for (auto it = prec_.rbegin(); it != prec_.rend(); ++it) {
                std::uint32_t ea = a.exps[static_cast<std::size_t>(*it)];
                std::uint32_t eb = b.exps[static_cast<std::size_t>(*it)];
                if (ea != eb) return ea < eb ? 1 : -1;
            }
            return 0;
        }
        for (int v : prec_) {
            std::uint32_t ea = a.exps[static_cast<std::size_t>(v)];
            std::uint32_t eb = b.exps[static_cast<std::size_t>(v)];
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    OrderKind kind_;
    std::vector<int> prec_;
};

}  // namespace qring
