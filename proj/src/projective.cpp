#include "tcd/projective.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tcd {

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][c];
    for (auto& x : m[r]) x /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Scalar f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

int rank(const Mat& m) {
  Mat c = m;
  return static_cast<int>(rref(c).size());
}

Mat kernel(const Mat& m) {
  if (m.empty()) return {};
  Mat r = m;
  std::vector<int> piv = rref(r);
  const int cols = static_cast<int>(m[0].size());
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, Scalar(0));
    v[c] = 1;
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Vec normalize_primitive(const Vec& v) {
  if (is_zero(v)) throw Error("ZeroVector", "cannot normalize the zero vector");
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  Int g = 0;
  std::vector<Int> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = num(v[i]) * (l / den(v[i]));
    g = boost::multiprecision::gcd(g, ints[i]);
  }
  int sign = 0;
  for (const auto& x : ints) {
    if (x != 0) { sign = (x > 0) ? 1 : -1; break; }
  }
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Scalar(ints[i] * sign, g);
  return r;
}

ProjPoint::ProjPoint(Vec v) : h(normalize_primitive(std::move(v))) {}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < h.size(); ++i)
    os << (i ? ":" : "") << scalar_to_string(h[i]);
  os << ")";
  return os.str();
}

Hyperplane::Hyperplane(Vec c) : cov(normalize_primitive(std::move(c))) {}

std::string Hyperplane::str() const {
  ProjPoint p;
  p.h = cov;
  return p.str();
}

Subspace::Subspace(Mat rows) : basis(std::move(rows)) {
  rref(basis);
}

bool Subspace::contains(const Vec& v) const {
  Mat m = basis;
  m.push_back(v);
  return rank(m) == static_cast<int>(basis.size());
}

int span_dim(const std::vector<ProjPoint>& pts) {
  Mat m;
  for (const auto& p : pts) m.push_back(p.h);
  return rank(m) - 1;
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  return span_dim({a, b, c}) <= 1;
}

Vec affinize(const ProjPoint& p, const Hyperplane& chart) {
  Scalar s = dot(chart.cov, p.h);
  if (s == 0)
    throw Error("PointAtInfinity", "point lies on the chart hyperplane", p.str());
  Vec r(p.h.size());
  for (size_t i = 0; i < p.h.size(); ++i) r[i] = p.h[i] / s;
  return r;
}

Scalar parallel_ratio(const Vec& a, const Vec& b) {
  int j = -1;
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] != 0) { j = static_cast<int>(i); break; }
  if (j < 0)
    throw Error("DegenerateDenominator", "denominator vector vanishes");
  Scalar t = a[j] / b[j];
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != t * b[i])
      throw Error("NotParallel", "vectors are not proportional");
  return t;
}

Scalar olr(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
           const Hyperplane& chart) {
  if (!collinear(p1, p2, p3))
    throw Error("NotCollinear", "olr requires collinear points",
                p1.str() + "," + p2.str() + "," + p3.str());
  Vec a1 = affinize(p1, chart), a2 = affinize(p2, chart), a3 = affinize(p3, chart);
  Vec nume = sub(a1, a3), deno = sub(a2, a3);
  if (is_zero(deno))
    throw Error("DegenerateDenominator", "olr denominator p2 - p3 vanishes",
                p2.str() + "=" + p3.str());
  return parallel_ratio(nume, deno);
}

Scalar multi_ratio(const std::vector<ProjPoint>& cyc) {
  if (cyc.size() < 4 || cyc.size() % 2 != 0)
    throw Error("BadArity", "multi_ratio expects a cyclic tuple of even size >= 4");
  const int m = static_cast<int>(cyc.size()) / 2;
  const int d = cyc[0].dim();
  // Incidence precondition: p_i, p_{i,i+1}, p_{i+1} collinear.
  for (int i = 0; i < m; ++i) {
    const ProjPoint& a = cyc[2 * i];
    const ProjPoint& ab = cyc[2 * i + 1];
    const ProjPoint& b = cyc[(2 * i + 2) % (2 * m)];
    if (!collinear(a, ab, b))
      throw Error("IncidenceViolated", "multi_ratio triple is not collinear",
                  a.str() + "," + ab.str() + "," + b.str());
  }
  Hyperplane chart = chart_avoiding(cyc, d);
  Scalar prod = 1;
  for (int i = 0; i < m; ++i) {
    Vec a = affinize(cyc[2 * i], chart);
    Vec ab = affinize(cyc[2 * i + 1], chart);
    Vec b = affinize(cyc[(2 * i + 2) % (2 * m)], chart);
    Vec nume = sub(a, ab), deno = sub(ab, b);
    if (is_zero(deno))
      throw Error("DegenerateDenominator", "multi_ratio factor denominator vanishes",
                  cyc[2 * i + 1].str());
    prod *= parallel_ratio(nume, deno);
  }
  return prod;
}

Scalar star_ratio(const ProjPoint& z,
                  const std::vector<std::pair<ProjPoint, ProjPoint>>& pairs) {
  std::vector<ProjPoint> all{z};
  for (const auto& [p, q] : pairs) {
    if (!collinear(p, q, z))
      throw Error("IncidenceViolated", "star_ratio pair is not collinear with center",
                  p.str() + "," + q.str() + "," + z.str());
    all.push_back(p);
    all.push_back(q);
  }
  Hyperplane chart = chart_avoiding(all, z.dim());
  Vec az = affinize(z, chart);
  Scalar prod = 1;
  for (const auto& [p, q] : pairs) {
    Vec nume = sub(affinize(p, chart), az);
    Vec deno = sub(az, affinize(q, chart));
    if (is_zero(deno))
      throw Error("DegenerateDenominator", "star_ratio denominator vanishes", q.str());
    prod *= parallel_ratio(nume, deno);
  }
  return prod;
}

Mat projection_matrix(const Subspace& center, int ambient) {
  // Quotient by rowspace(center). With the center basis in RREF with pivot
  // columns P, the reduction v -> v - sum_i v[P_i] * basis_i kills the pivot
  // coordinates, so the non-pivot coordinates of the reduced vector give
  // linear coordinates on the quotient:
  //   row_c = e_c - sum_i basis_i[c] * e_{P_i}   (c non-pivot).
  std::vector<int> pivots;
  for (const auto& row : center.basis) {
    for (int j = 0; j < ambient; ++j)
      if (row[j] != 0) { pivots.push_back(j); break; }
  }
  std::vector<bool> is_piv(ambient, false);
  for (int p : pivots) is_piv[p] = true;
  Mat q;
  for (int c = 0; c < ambient; ++c) {
    if (is_piv[c]) continue;
    Vec row(ambient, Scalar(0));
    row[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) row[pivots[i]] -= center.basis[i][c];
    q.push_back(std::move(row));
  }
  return q;
}

ProjPoint central_projection(const ProjPoint& p, const Subspace& center) {
  if (center.contains(p.h))
    throw Error("PointInCenter", "point lies in the projection center", p.str());
  Mat q = projection_matrix(center, static_cast<int>(p.h.size()));
  Vec img;
  for (const auto& row : q) img.push_back(dot(row, p.h));
  return ProjPoint(img);
}

ProjPoint apply_matrix(const Mat& m, const ProjPoint& p) {
  Vec img;
  for (const auto& row : m) img.push_back(dot(row, p.h));
  return ProjPoint(img);
}

ProjPoint line_meet_hyperplane(const ProjPoint& a, const ProjPoint& b,
                               const Hyperplane& H) {
  Scalar sa = dot(H.cov, a.h), sb = dot(H.cov, b.h);
  if (sa == 0 && sb == 0)
    throw Error("LineInHyperplane", "line lies inside the hyperplane",
                a.str() + "," + b.str());
  // sb * a - sa * b pairs to zero with H.
  Vec v = sub(scale(sb, a.h), scale(sa, b.h));
  if (is_zero(v))
    throw Error("CoincidentPoints", "line is not determined by coincident points",
                a.str());
  return ProjPoint(v);
}

ProjPoint line_meet_line(const ProjPoint& a, const ProjPoint& b,
                         const ProjPoint& c, const ProjPoint& d) {
  // Solve alpha*a + beta*b = gamma*c + delta*d.
  const int n = static_cast<int>(a.h.size());
  Mat m(n, Vec(4));
  for (int i = 0; i < n; ++i) {
    m[i][0] = a.h[i];
    m[i][1] = b.h[i];
    m[i][2] = -c.h[i];
    m[i][3] = -d.h[i];
  }
  Mat ker = kernel(m);
  if (ker.size() != 1)
    throw Error("SkewLines", "lines do not meet in a unique point",
                a.str() + b.str() + c.str() + d.str());
  Vec v = add(scale(ker[0][0], a.h), scale(ker[0][1], b.h));
  if (is_zero(v))
    throw Error("SkewLines", "lines do not meet in a unique point",
                a.str() + b.str() + c.str() + d.str());
  return ProjPoint(v);
}

ProjPoint random_point(int d, Rng& rng) {
  for (;;) {
    Vec v(d + 1);
    for (auto& x : v) x = Scalar(rng.intIn(-20, 20));
    if (!is_zero(v)) return ProjPoint(std::move(v));
  }
}

Hyperplane random_hyperplane(int d, const std::vector<ProjPoint>& avoid, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec v(d + 1);
    for (auto& x : v) x = Scalar(rng.intIn(-20, 20));
    if (is_zero(v)) continue;
    Hyperplane h(std::move(v));
    bool ok = true;
    for (const auto& p : avoid)
      if (dot(h.cov, p.h) == 0) { ok = false; break; }
    if (ok) return h;
  }
  throw Error("ExhaustedRetries", "could not sample a hyperplane avoiding the points");
}

Hyperplane chart_avoiding(const std::vector<ProjPoint>& avoid, int d) {
  // Try coordinate covectors and small deterministic combinations first.
  auto misses = [&](const Hyperplane& h) {
    for (const auto& p : avoid)
      if (dot(h.cov, p.h) == 0) return false;
    return true;
  };
  for (int i = d; i >= 0; --i) {
    Vec v(d + 1, Scalar(0));
    v[i] = 1;
    Hyperplane h(std::move(v));
    if (misses(h)) return h;
  }
  Rng rng(0x5eedc4a7u);
  return random_hyperplane(d, avoid, rng);
}

Mat random_projectivity(int d, Rng& rng) {
  for (;;) {
    Mat m(d + 1, Vec(d + 1));
    for (auto& row : m)
      for (auto& x : row) x = Scalar(rng.intIn(-9, 9));
    if (rank(m) == d + 1) return m;
  }
}

}  // namespace tcd
