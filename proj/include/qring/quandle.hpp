#pragma once

// Finite quandles given by their operation table, dihedral quandles in
// particular, and the structural checks on their adjacency matrices.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "qring/errors.hpp"

namespace qring {

/// A finite magma on indices 0..n-1 with operation table op(i, j) = x_i * x_j.
/// Construction only enforces shape and entry range; whether the table
/// satisfies the quandle axioms is checked separately by validate_axioms so
/// that defective tables can be inspected and reported on.
class Quandle {
public:
    explicit Quandle(std::vector<std::vector<int>> table) {
        n_ = static_cast<int>(table.size());
        if (n_ == 0) throw std::invalid_argument("quandle order must be positive");
        cells_.reserve(static_cast<std::size_t>(n_) * n_);
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("operation table must be square");
            for (int v : row) {
                if (v < 0 || v >= n_)
                    throw std::invalid_argument("table entry out of range 0..n-1");
                cells_.push_back(v);
            }
        }
    }

    /// Dihedral quandle Q_n on Z_n: x_i * x_j = 2j - i (mod n).
    static Quandle dihedral(int n) {
        if (n <= 0) throw std::invalid_argument("dihedral quandle requires n >= 1");
        Quandle q;
        q.n_ = n;
        q.cells_.resize(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                q.cells_[static_cast<std::size_t>(i) * n + j] = mod(2 * j - i, n);
        return q;
    }

    int order() const { return n_; }

    /// Index of x_i * x_j.
    int op(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    bool is_dihedral_table() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (op(i, j) != mod(2 * j - i, n_)) return false;
        return true;
    }

    bool operator==(const Quandle& other) const = default;

    static int mod(int a, int n) {
        int r = a % n;
        return r < 0 ? r + n : r;
    }

private:
    Quandle() = default;
    int n_ = 0;
    std::vector<int> cells_;  // row-major n x n
};

/// One violated axiom instance, with the witnessing indices.
struct AxiomViolation {
    enum class Kind {
        not_idempotent,           // op(i, i) != i
        column_not_bijective,     // column j is not a permutation
        column_not_automorphism,  // S_{x_j} does not preserve the operation
    };
    Kind kind;
    int i = -1;
    int j = -1;
    int k = -1;

    std::string describe() const {
        switch (kind) {
            case Kind::not_idempotent:
                return "idempotency fails at i=" + std::to_string(i);
            case Kind::column_not_bijective:
                return "column map S_{x_" + std::to_string(j) + "} is not a bijection";
            case Kind::column_not_automorphism:
                return "column map S_{x_" + std::to_string(j) +
                       "} is not an automorphism at (i=" + std::to_string(i) +
                       ", k=" + std::to_string(k) + ")";
        }
        return "unknown violation";
    }
};

/// Checks the three quandle axiom families. Empty report means q is a quandle.
inline std::vector<AxiomViolation> validate_axioms(const Quandle& q) {
    std::vector<AxiomViolation> report;
    const int n = q.order();

    for (int i = 0; i < n; ++i)
        if (q.op(i, i) != i)
            report.push_back({AxiomViolation::Kind::not_idempotent, i, -1, -1});

    std::vector<bool> hit(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::fill(hit.begin(), hit.end(), false);
        bool bijective = true;
        for (int i = 0; i < n; ++i) {
            int v = q.op(i, j);
            if (hit[static_cast<std::size_t>(v)]) bijective = false;
            hit[static_cast<std::size_t>(v)] = true;
        }
        if (!bijective)
            report.push_back({AxiomViolation::Kind::column_not_bijective, -1, j, -1});
    }

    // S_{x_j}(x_i * x_k) == S_{x_j}(x_i) * S_{x_j}(x_k), one witness per column
    for (int j = 0; j < n; ++j) {
        bool violated = false;
        for (int i = 0; i < n && !violated; ++i)
            for (int k = 0; k < n && !violated; ++k)
                if (q.op(q.op(i, k), j) != q.op(q.op(i, j), q.op(k, j))) {
                    report.push_back({AxiomViolation::Kind::column_not_automorphism, i, j, k});
                    violated = true;
                }
    }

    return report;
}

/// True iff the group generated by the inner maps S_{x_j} has a single orbit.
/// Orbit closure under the generators alone suffices: each generator is a
/// permutation of a finite set, so its inverse is one of its own powers.
inline bool is_connected(const Quandle& q) {
    const int n = q.order();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            int v = q.op(i, j);
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = true;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

/// Read-only view of a quandle's operation table in matrix form. The matrix
/// entry at (i, j) is x_i * x_j; it is the same data as the table, never a
/// copy. Must not outlive the viewed quandle.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(const Quandle& q) : q_(&q) {}
    int order() const { return q_->order(); }
    int entry(int i, int j) const { return q_->op(i, j); }

private:
    const Quandle* q_;
};

inline AdjacencyMatrix adjacency_matrix(const Quandle& q) { return AdjacencyMatrix(q); }

/// The row/column generators of a dihedral adjacency matrix.
/// Odd n: the first row is rho, rho[j] = 2j mod n, and the first column is
/// sigma, sigma[i] = -i mod n. Even n: the first row walks the even-residue
/// cycle rho1 = (0, 2, ..., n-2) twice, odd rows walk the odd-residue cycle
/// rho2 = (1, 3, ..., n-1); sigma is as in the odd case.
struct RowColumnStructure {
    std::vector<int> rho;
    std::vector<int> rho1;
    std::vector<int> rho2;
    std::vector<int> sigma;
};

inline RowColumnStructure row_column_structure(int n) {
    if (n <= 0) throw std::invalid_argument("order must be positive");
    RowColumnStructure s;
    s.sigma.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) s.sigma[static_cast<std::size_t>(i)] = Quandle::mod(-i, n);
    if (n % 2 == 1) {
        s.rho.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) s.rho[static_cast<std::size_t>(j)] = Quandle::mod(2 * j, n);
    } else {
        for (int v = 0; v < n; v += 2) s.rho1.push_back(v);
        for (int v = 1; v < n; v += 2) s.rho2.push_back(v);
    }
    return s;
}

/// Checks the congruence entry(i, j) == entry(0, j) - i (mod n): every row is
/// the first row shifted, every column steps through sigma. This is the
/// testable form of "the whole matrix is determined by its first row and
/// column"; it holds for dihedral tables and fails for generic ones.
inline bool verify_shift_structure(const Quandle& q) {
    const int n = q.order();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (q.op(i, j) != Quandle::mod(q.op(0, j) - i, n)) return false;
    return true;
}

/// Checks the first row/column against row_column_structure. For odd order
/// the first row must equal rho and the first column sigma. For even order
/// the first row must be rho1 traversed twice, row 1 must step through the
/// odd-residue cycle rho2, and the first column must equal sigma.
inline bool verify_row_column_structure(const Quandle& q) {
    const int n = q.order();
    const RowColumnStructure s = row_column_structure(n);
    for (int i = 0; i < n; ++i)
        if (q.op(i, 0) != s.sigma[static_cast<std::size_t>(i)]) return false;
    if (n % 2 == 1) {
        for (int j = 0; j < n; ++j)
            if (q.op(0, j) != s.rho[static_cast<std::size_t>(j)]) return false;
        return true;
    }
    const int half = n / 2;
    for (int j = 0; j < n; ++j)
        if (q.op(0, j) != s.rho1[static_cast<std::size_t>(j % half)]) return false;
    if (n >= 2) {
        // row 1 stays inside the odd residues and advances by one rho2 step
        // per column
        for (int j = 0; j < n; ++j) {
            int v = q.op(1, j);
            if (v % 2 != 1) return false;
            if (j > 0 && v != Quandle::mod(q.op(1, j - 1) + 2, n)) return false;
        }
    }
    return true;
}

enum class AutomorphismMethod {
    enumerate,        // filter all n! permutations (guarded)
    dihedral_affine,  // x -> a*x + b with gcd(a, n) = 1; dihedral tables only
};

/// All permutations p of 0..n-1 with p(x_i * x_j) = p(x_i) * p(x_j), in
/// lexicographic order of image sequences. The generic path enumerates all
/// n! permutations and is guarded; the affine path is a dihedral-specific
/// shortcut that the tests cross-check against full enumeration.
inline std::vector<std::vector<int>> quandle_automorphisms(
    const Quandle& q,
    AutomorphismMethod method = AutomorphismMethod::enumerate,
    int enumeration_guard = 8) {
    const int n = q.order();
    std::vector<std::vector<int>> result;

    if (method == AutomorphismMethod::dihedral_affine) {
        if (!q.is_dihedral_table())
            throw std::invalid_argument("affine automorphism path requires a dihedral table");
        for (int a = 1; a <= n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            for (int b = 0; b < n; ++b) {
                std::vector<int> p(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = Quandle::mod(a * i + b, n);
                result.push_back(std::move(p));
            }
        }
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    if (n > enumeration_guard)
        throw guard_error("automorphism enumeration guarded at n <= " +
                          std::to_string(enumeration_guard) +
                          "; opt into the dihedral affine path for larger dihedral quandles");

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n; ++j)
                if (p[static_cast<std::size_t>(q.op(i, j))] !=
                    q.op(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)])) {
                    ok = false;
                    break;
                }
        if (ok) result.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return result;  // next_permutation emits in lexicographic order
}

}  // namespace qring
