#pragma once

#include "toricmld/matrix.hpp"

namespace toricmld {

/// u * m * v == s, with s diagonal, nonnegative, and s(0,0) | s(1,1) | ...
/// u and v are unimodular (determinant +-1).
struct SmithNormalForm {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};

SmithNormalForm smith_normal_form(const IntMatrix& m);

}  // namespace toricmld
