#pragma once

#include "toricmld/rational.hpp"

namespace toricmld {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Integer& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    IntMatrix mul(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Integer> a_;
};

class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);
    static RatMatrix from_columns(const std::vector<RatVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    RatVec col(int j) const;
    RatVec apply(const RatVec& v) const;
    RatMatrix mul(const RatMatrix& rhs) const;
    bool operator==(const RatMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

RatMatrix to_rational(const IntMatrix& m);

/// Clears denominators: m == result / den with den > 0 minimal.
IntMatrix to_integer_scaled(const RatMatrix& m, Integer& den);

Rational det(const RatMatrix& m);
Integer det(const IntMatrix& m);

/// Exact Gauss-Jordan inverse; throws std::domain_error on a singular input.
RatMatrix inverse(const RatMatrix& m);

/// Solves basis * x = v where basis is rows x cols with full column rank.
/// Throws std::domain_error if the system is inconsistent.
RatVec solve_columns(const RatMatrix& basis, const RatVec& v);

/// Basis of the rational null space { x : m * x = 0 }, as columns.
std::vector<RatVec> null_space(const RatMatrix& m);

}  // namespace toricmld
