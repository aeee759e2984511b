// SPDX-License-Identifier: Apache-2.0

#include "stringcone/matrix.hpp"

namespace stringcone {

IntMat int_identity(std::size_t n) {
    IntMat m(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t rows = a.size(), inner = b.size(), cols = b[0].size();
    if (a[0].size() != inner) throw DomainError("matrix product shape mismatch");
    IntMat out(rows, std::vector<BigInt>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

std::vector<BigInt> int_apply(const IntMat& a, const std::vector<BigInt>& v) {
    std::vector<BigInt> out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw DomainError("matrix-vector shape mismatch");
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    }
    return out;
}

// Fraction-free (Bareiss) elimination: every intermediate entry stays an
// exact integer and the final pivot is the determinant.
BigInt int_det(IntMat m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

bool is_unimodular(const IntMat& a) {
    const BigInt d = int_det(a);
    return d == 1 || d == -1;
}

// Gauss-Jordan over the rationals, then verified to be integral; valid
// exactly when |det| = 1.
IntMat unimodular_inverse(const IntMat& a) {
    if (!is_unimodular(a)) throw DomainError("matrix is not unimodular");
    const std::size_t n = a.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
        m[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw DomainError("singular matrix");
        std::swap(m[col], m[pivot]);
        const Rat lead = m[col][col];
        for (std::size_t j = 0; j < 2 * n; ++j) m[col][j] /= lead;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= factor * m[col][j];
        }
    }
    IntMat inv(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = m[i][n + j];
            if (denominator(v) != 1) throw DomainError("inverse is not integral");
            inv[i][j] = numerator(v);
        }
    return inv;
}

std::size_t int_rank(IntMat a) {
    if (a.empty()) return 0;
    std::vector<std::vector<Rat>> m(a.size(), std::vector<Rat>(a[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) m[i][j] = Rat(a[i][j]);
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m[i][col] == 0) continue;
            const Rat factor = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace stringcone
