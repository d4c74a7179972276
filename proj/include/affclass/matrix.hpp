#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "affclass/rational.hpp"

namespace affclass {

/// Dense matrix over the rationals, stored row-major. All arithmetic is
/// exact; size mismatches throw DimensionMismatch.
class QMatrix {
public:
    /// Empty 0x0 matrix.
    QMatrix();

    /// rows x cols matrix filled with zeros.
    QMatrix(std::size_t rows, std::size_t cols);

    /// Build from nested braces; all rows must have equal length.
    QMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

    /// n x n identity.
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rat& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    bool operator==(const QMatrix& other) const;
    bool operator!=(const QMatrix& other) const { return !(*this == other); }

    QMatrix operator+(const QMatrix& other) const;
    QMatrix operator-(const QMatrix& other) const;
    QMatrix operator-() const;
    QMatrix operator*(const QMatrix& other) const;

    /// Matrix applied to a column vector.
    Vec operator*(const Vec& v) const;

    QMatrix transpose() const;

    /// True when every entry is zero.
    bool is_zero() const;

private:
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<Rat> m_data;
};

QMatrix operator*(const Rat& c, const QMatrix& m);

/// Reduced row echelon form together with the pivot column indices
/// (increasing order; one entry per nonzero row).
struct RrefResult {
    QMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Gauss–Jordan elimination with exact arithmetic. Pivots are chosen as
/// the first nonzero entry in each column, so the result is deterministic.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Basis of the kernel as column vectors, one per free column. The basis
/// vector for free column j has a 1 in position j and zeros in the other
/// free positions; vectors are ordered by increasing free column index.
std::vector<QMatrix> nullspace(const QMatrix& m);

/// Inverse of a square matrix; throws SingularMatrix when none exists.
QMatrix inverse(const QMatrix& m);

/// Determinant of a square matrix (exact fraction-free result via rref
/// bookkeeping on a working copy).
Rat det(const QMatrix& m);

/// Solve A x = b exactly. Returns std::nullopt when the system is
/// inconsistent; otherwise the particular solution with every free
/// variable set to zero.
std::optional<Vec> solve(const QMatrix& a, const Vec& b);

/// Column vector (n x 1 matrix) from a Vec.
QMatrix column(const Vec& v);

} // namespace affclass
