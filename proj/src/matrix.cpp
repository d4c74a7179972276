#include "affclass/matrix.hpp"

#include <algorithm>

#include "affclass/errors.hpp"

namespace affclass {

QMatrix::QMatrix() : m_rows(0), m_cols(0) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_data(rows * cols, Rat(0)) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rat>> rows)
    : m_rows(rows.size()), m_cols(rows.size() ? rows.begin()->size() : 0) {
    m_data.reserve(m_rows * m_cols);
    for (const auto& row : rows) {
        if (row.size() != m_cols) {
            throw DimensionMismatch("QMatrix: ragged initializer rows");
        }
        m_data.insert(m_data.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

bool QMatrix::operator==(const QMatrix& other) const {
    return m_rows == other.m_rows && m_cols == other.m_cols && m_data == other.m_data;
}

QMatrix QMatrix::operator+(const QMatrix& other) const {
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw DimensionMismatch("QMatrix: sum of unequal shapes");
    }
    QMatrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_data.size(); ++k) {
        out.m_data[k] = m_data[k] + other.m_data[k];
    }
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
    if (m_rows != other.m_rows || m_cols != other.m_cols) {
        throw DimensionMismatch("QMatrix: difference of unequal shapes");
    }
    QMatrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_data.size(); ++k) {
        out.m_data[k] = m_data[k] - other.m_data[k];
    }
    return out;
}

QMatrix QMatrix::operator-() const {
    QMatrix out(m_rows, m_cols);
    for (std::size_t k = 0; k < m_data.size(); ++k) {
        out.m_data[k] = -m_data[k];
    }
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
    if (m_cols != other.m_rows) {
        throw DimensionMismatch("QMatrix: product of incompatible shapes");
    }
    QMatrix out(m_rows, other.m_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t k = 0; k < m_cols; ++k) {
            const Rat& lhs = (*this)(i, k);
            if (lhs == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.m_cols; ++j) {
                out(i, j) += lhs * other(k, j);
            }
        }
    }
    return out;
}

Vec QMatrix::operator*(const Vec& v) const {
    if (m_cols != v.size()) {
        throw DimensionMismatch("QMatrix: matrix-vector product of incompatible sizes");
    }
    Vec out(m_rows, Rat(0));
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            out[i] += (*this)(i, j) * v[j];
        }
    }
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(m_cols, m_rows);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (std::size_t j = 0; j < m_cols; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(m_data.begin(), m_data.end(), [](const Rat& x) { return x == 0; });
}

QMatrix operator*(const Rat& c, const QMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out(i, j) = c * m(i, j);
        }
    }
    return out;
}

RrefResult rref(const QMatrix& m) {
    RrefResult result{m, {}};
    QMatrix& a = result.matrix;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        // First nonzero entry at or below pivot_row becomes the pivot.
        std::size_t found = a.rows();
        for (std::size_t r = pivot_row; r < a.rows(); ++r) {
            if (a(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == a.rows()) {
            continue;
        }
        if (found != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                std::swap(a(found, j), a(pivot_row, j));
            }
        }
        const Rat inv = Rat(1) / a(pivot_row, col);
        for (std::size_t j = col; j < a.cols(); ++j) {
            a(pivot_row, j) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row || a(r, col) == 0) {
                continue;
            }
            const Rat factor = a(r, col);
            for (std::size_t j = col; j < a.cols(); ++j) {
                a(r, j) -= factor * a(pivot_row, j);
            }
        }
        result.pivots.push_back(col);
        ++pivot_row;
    }
    return result;
}

std::size_t rank(const QMatrix& m) {
    return rref(m).pivots.size();
}

std::vector<QMatrix> nullspace(const QMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    std::vector<QMatrix> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        QMatrix v(m.cols(), 1);
        v(free_col, 0) = 1;
        for (std::size_t row = 0; row < r.pivots.size(); ++row) {
            v(r.pivots[row], 0) = -r.matrix(row, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

QMatrix inverse(const QMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("inverse: matrix is not square");
    }
    const std::size_t n = m.rows();
    QMatrix work(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            work(i, j) = m(i, j);
        }
        work(i, n + i) = 1;
    }
    const RrefResult r = rref(work);
    // Invertible iff the left block reduced to the identity, i.e. the
    // pivots are exactly columns 0..n-1.
    if (r.pivots.size() != n || (n > 0 && r.pivots.back() != n - 1)) {
        throw SingularMatrix("inverse: singular matrix");
    }
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = r.matrix(i, n + j);
        }
    }
    return out;
}

Rat det(const QMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("det: matrix is not square");
    }
    QMatrix a = m;
    const std::size_t n = a.rows();
    Rat result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = n;
        for (std::size_t r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == n) {
            return Rat(0);
        }
        if (found != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(found, j), a(col, j));
            }
            result = -result;
        }
        result *= a(col, col);
        const Rat inv = Rat(1) / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col) == 0) {
                continue;
            }
            const Rat factor = a(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                a(r, j) -= factor * a(col, j);
            }
        }
    }
    return result;
}

std::optional<Vec> solve(const QMatrix& a, const Vec& b) {
    if (a.rows() != b.size()) {
        throw DimensionMismatch("solve: right-hand side length mismatch");
    }
    QMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            aug(i, j) = a(i, j);
        }
        aug(i, a.cols()) = b[i];
    }
    const RrefResult r = rref(aug);
    // Inconsistent iff a pivot landed in the augmented column.
    if (!r.pivots.empty() && r.pivots.back() == a.cols()) {
        return std::nullopt;
    }
    Vec x(a.cols(), Rat(0));
    for (std::size_t row = 0; row < r.pivots.size(); ++row) {
        x[r.pivots[row]] = r.matrix(row, a.cols());
    }
    return x;
}

QMatrix column(const Vec& v) {
    QMatrix out(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
        out(i, 0) = v[i];
    }
    return out;
}

} // namespace affclass
