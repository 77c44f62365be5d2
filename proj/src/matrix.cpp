#include "toricmld/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace toricmld {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Integer(0)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix shape must be positive");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Integer& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

RatMatrix::RatMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix shape must be positive");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
    if (cols.empty()) throw std::invalid_argument("no columns given");
    int rows = static_cast<int>(cols[0].size());
    RatMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

RatVec RatMatrix::col(int j) const {
    RatVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

RatVec RatMatrix::apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("vector length mismatch");
    RatVec out(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0) out[i] += at(i, j) * v[j];
    return out;
}

RatMatrix RatMatrix::mul(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = Rational(m.at(i, j));
    return out;
}

IntMatrix to_integer_scaled(const RatMatrix& m, Integer& den) {
    den = 1;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Integer d = m.at(i, j).get_den();
            Integer g;
            mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = g;
        }
    IntMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Rational x = m.at(i, j) * Rational(den);
            out.at(i, j) = x.get_num();
        }
    return out;
}

Rational det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    int n = m.rows();
    RatMatrix a = m;
    Rational d(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != c) {
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        Rational inv = 1 / a.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (a.at(r, c) == 0) continue;
            Rational f = a.at(r, c) * inv;
            for (int j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
        }
    }
    return d;
}

Integer det(const IntMatrix& m) {
    Rational d = det(to_rational(m));
    if (!is_integral(d)) throw std::logic_error("integer determinant came out fractional");
    return d.get_num();
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("matrix is singular");
        if (pivot != c)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        Rational f = 1 / a.at(c, c);
        for (int j = 0; j < n; ++j) {
            a.at(c, j) *= f;
            inv.at(c, j) *= f;
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || a.at(r, c) == 0) continue;
            Rational g = a.at(r, c);
            for (int j = 0; j < n; ++j) {
                a.at(r, j) -= g * a.at(c, j);
                inv.at(r, j) -= g * inv.at(c, j);
            }
        }
    }
    return inv;
}

RatVec solve_columns(const RatMatrix& basis, const RatVec& v) {
    if (static_cast<int>(v.size()) != basis.rows())
        throw std::invalid_argument("vector length mismatch");
    int rows = basis.rows(), cols = basis.cols();
    RatMatrix a(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a.at(i, j) = basis.at(i, j);
        a.at(i, cols) = v[i];
    }
    int rank = 0;
    std::vector<int> pivot_row(cols, -1);
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j <= cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        Rational f = 1 / a.at(rank, c);
        for (int j = c; j <= cols; ++j) a.at(rank, j) *= f;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, c) == 0) continue;
            Rational g = a.at(r, c);
            for (int j = c; j <= cols; ++j) a.at(r, j) -= g * a.at(rank, j);
        }
        pivot_row[c] = rank;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (a.at(r, cols) != 0) throw std::domain_error("inconsistent linear system");
    RatVec x(cols, Rational(0));
    for (int c = 0; c < cols; ++c) {
        if (pivot_row[c] < 0) throw std::domain_error("basis does not have full column rank");
        x[c] = a.at(pivot_row[c], cols);
    }
    return x;
}

std::vector<RatVec> null_space(const RatMatrix& m) {
    int rows = m.rows(), cols = m.cols();
    RatMatrix a = m;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(rank, j));
        Rational f = 1 / a.at(rank, c);
        for (int j = 0; j < cols; ++j) a.at(rank, j) *= f;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a.at(r, c) == 0) continue;
            Rational g = a.at(r, c);
            for (int j = 0; j < cols; ++j) a.at(r, j) -= g * a.at(rank, j);
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec x(cols, Rational(0));
        x[c] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -a.at(r, c);
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace toricmld
