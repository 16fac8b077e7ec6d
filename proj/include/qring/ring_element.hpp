#pragma once

// Elements of the integral quandle ring Z[Q]: formal integer combinations of
// the quandle elements, added componentwise and multiplied by the bilinear
// extension of the quandle operation. The ring is non-associative and
// non-unital in general; nothing here assumes otherwise.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qring/numeric.hpp"
#include "qring/quandle.hpp"

namespace qring {

/// coeffs[i] is the (exact integer) coefficient of the basis element x_i.
class RingElement {
public:
    explicit RingElement(int quandle_order)
        : n_(check_order(quandle_order)), coeffs_(static_cast<std::size_t>(quandle_order)) {}

    RingElement(int quandle_order, std::vector<Int> coeffs)
        : n_(check_order(quandle_order)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != n_)
            throw std::invalid_argument("coefficient vector length must equal the quandle order");
    }

    static RingElement zero(int n) { return RingElement(n); }

    static RingElement basis(int n, int i) {
        RingElement e(n);
        e.coeffs_.at(static_cast<std::size_t>(i)) = 1;
        return e;
    }

    int quandle_order() const { return n_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    void set_coeff(int i, Int v) { coeffs_[static_cast<std::size_t>(i)] = std::move(v); }

    /// Coefficient sum (the augmentation map Z[Q] -> Z).
    Int augmentation() const {
        Int s = 0;
        for (const Int& c : coeffs_) s += c;
        return s;
    }

    bool is_zero() const {
        for (const Int& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool operator==(const RingElement&) const = default;

    /// Rendering such as "2*x0 - x2 + x4"; "0" for the zero element.
    std::string str() const {
        std::string out;
        for (int i = 0; i < n_; ++i) {
            const Int& c = coeffs_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            Int a = c < 0 ? Int(-c) : c;
            if (out.empty())
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (a != 1) out += a.str() + "*";
            out += "x" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

private:
    static int check_order(int n) {
        if (n <= 0) throw std::invalid_argument("quandle order must be positive");
        return n;
    }
    int n_;
    std::vector<Int> coeffs_;
};

inline RingElement add(const RingElement& a, const RingElement& b) {
    if (a.quandle_order() != b.quandle_order())
        throw std::invalid_argument("ring elements live over different quandle orders");
    RingElement r(a.quandle_order());
    for (int i = 0; i < a.quandle_order(); ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

inline RingElement operator+(const RingElement& a, const RingElement& b) { return add(a, b); }

inline RingElement negate(const RingElement& a) {
    RingElement r(a.quandle_order());
    for (int i = 0; i < a.quandle_order(); ++i) r.set_coeff(i, -a.coeff(i));
    return r;
}

inline RingElement operator-(const RingElement& a, const RingElement& b) {
    return add(a, negate(b));
}

/// Bilinear product: the x_k coefficient of a*b is the sum of
/// a_i * b_j over all pairs with x_i * x_j = x_k.
inline RingElement multiply(const Quandle& q, const RingElement& a, const RingElement& b) {
    const int n = q.order();
    if (a.quandle_order() != n || b.quandle_order() != n)
        throw std::invalid_argument("quandle and ring element orders must match");
    RingElement r(n);
    for (int i = 0; i < n; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.coeff(j) == 0) continue;
            int k = q.op(i, j);
            r.set_coeff(k, r.coeff(k) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

inline bool is_idempotent(const Quandle& q, const RingElement& a) {
    return multiply(q, a, a) == a;
}

/// Support size l(a) = number of nonzero coefficients.
inline int length(const RingElement& a) {
    int count = 0;
    for (const Int& c : a.coeffs())
        if (c != 0) ++count;
    return count;
}

/// The n basis elements x_i; each is idempotent since x_i * x_i = x_i.
inline std::vector<RingElement> trivial_idempotents(int n) {
    std::vector<RingElement> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(RingElement::basis(n, i));
    return out;
}

}  // namespace qring
