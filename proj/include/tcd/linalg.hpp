#pragma once

#include <vector>

#include "tcd/scalar.hpp"

namespace tcd {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;  // row-major list of rows

// Reduces `m` to reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);

int rank(const Mat& m);

// Basis of { x : m * x = 0 } (rows of `m` are linear functionals).
Mat kernel(const Mat& m);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);

// Scales a rational vector to a primitive integer vector whose first nonzero
// entry is positive. This is the canonical representative used for projective
// points and hyperplane covectors.
Vec normalize_primitive(const Vec& v);

}  // namespace tcd
