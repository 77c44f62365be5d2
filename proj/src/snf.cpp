#include "toricmld/snf.hpp"

#include <cstdlib>

namespace toricmld {

namespace {

void swap_rows(IntMatrix& a, IntMatrix& u, int r1, int r2) {
    for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
    for (int j = 0; j < u.cols(); ++j) std::swap(u.at(r1, j), u.at(r2, j));
}

void swap_cols(IntMatrix& a, IntMatrix& v, int c1, int c2) {
    for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
    for (int i = 0; i < v.rows(); ++i) std::swap(v.at(i, c1), v.at(i, c2));
}

// row r1 -= q * row r2
void add_row(IntMatrix& a, IntMatrix& u, int r1, int r2, const Integer& q) {
    if (q == 0) return;
    for (int j = 0; j < a.cols(); ++j) a.at(r1, j) -= q * a.at(r2, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r1, j) -= q * u.at(r2, j);
}

void add_col(IntMatrix& a, IntMatrix& v, int c1, int c2, const Integer& q) {
    if (q == 0) return;
    for (int i = 0; i < a.rows(); ++i) a.at(i, c1) -= q * a.at(i, c2);
    for (int i = 0; i < v.rows(); ++i) v.at(i, c1) -= q * v.at(i, c2);
}

void negate_row(IntMatrix& a, IntMatrix& u, int r) {
    for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
    for (int j = 0; j < u.cols(); ++j) u.at(r, j) = -u.at(r, j);
}

bool find_pivot(const IntMatrix& a, int t, int& pi, int& pj) {
    bool found = false;
    Integer best;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            if (a.at(i, j) == 0) continue;
            Integer mag = abs(a.at(i, j));
            if (!found || mag < best) {
                found = true;
                best = mag;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const int steps = std::min(m.rows(), m.cols());

    for (int t = 0; t < steps; ++t) {
        int pi = 0, pj = 0;
        if (!find_pivot(a, t, pi, pj)) break;
        swap_rows(a, u, t, pi);
        swap_cols(a, v, t, pj);

        for (;;) {
            // clear the pivot column
            bool dirty = false;
            for (int i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, t).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_row(a, u, i, t, q);
                if (a.at(i, t) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(a, t, pi, pj);
                swap_rows(a, u, t, pi);
                swap_cols(a, v, t, pj);
                continue;
            }
            // clear the pivot row
            for (int j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(t, j).get_mpz_t(), a.at(t, t).get_mpz_t());
                add_col(a, v, j, t, q);
                if (a.at(t, j) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(a, t, pi, pj);
                swap_rows(a, u, t, pi);
                swap_cols(a, v, t, pj);
                continue;
            }
            // enforce divisibility of the remaining block by the pivot
            int bi = -1;
            for (int i = t + 1; i < a.rows() && bi < 0; ++i)
                for (int j = t + 1; j < a.cols(); ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        bi = i;
                        break;
                    }
            if (bi < 0) break;
            add_row(a, u, t, bi, Integer(-1));  // row t += row bi
        }
        if (a.at(t, t) < 0) negate_row(a, u, t);
    }
    return SmithNormalForm{a, u, v};
}

}  // namespace toricmld
