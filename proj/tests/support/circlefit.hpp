// Least-squares oracle deciding whether projected arc samples lie on a
// common line or circle.  A principal-axis line fit is tried first; when its
// residual is above threshold the points are fitted in their best plane
// (Jacobi eigenvectors of the covariance) with a linear least-squares
// circle, and the reported RMS combines in-plane and off-plane distance.
#ifndef MSG_TESTS_CIRCLEFIT_HPP
#define MSG_TESTS_CIRCLEFIT_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace circlefit {

struct ArcFit {
  bool line = false;
  double rms = 0.0;
};

namespace detail {

using Vec3 = std::array<double, 3>;

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Jacobi eigenvalue iteration for a symmetric 3x3 matrix; returns
// eigenvalues descending with matching eigenvector columns.
inline void eigen3(double m[3][3], double eval[3], Vec3 evec[3]) {
  double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = std::abs(m[0][1]) + std::abs(m[0][2]) + std::abs(m[1][2]);
    if (off < 1e-300) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (std::abs(m[p][q]) < 1e-300) continue;
        double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 3; ++k) {
          double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < 3; ++k) {
          double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < 3; ++k) {
          double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
  }
  int order[3] = {0, 1, 2};
  for (int i = 0; i < 2; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (m[order[j]][order[j]] > m[order[i]][order[i]])
        std::swap(order[i], order[j]);
  for (int i = 0; i < 3; ++i) {
    eval[i] = m[order[i]][order[i]];
    evec[i] = {v[0][order[i]], v[1][order[i]], v[2][order[i]]};
  }
}

// Solves the 3x3 system a*x = b by Gaussian elimination with pivoting.
inline bool solve3(double a[3][3], double b[3], double x[3]) {
  int rows[3] = {0, 1, 2};
  for (int col = 0; col < 3; ++col) {
    int best = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::abs(a[rows[r]][col]) > std::abs(a[rows[best]][col])) best = r;
    std::swap(rows[col], rows[best]);
    if (std::abs(a[rows[col]][col]) < 1e-300) return false;
    for (int r = col + 1; r < 3; ++r) {
      double f = a[rows[r]][col] / a[rows[col]][col];
      for (int c = col; c < 3; ++c) a[rows[r]][c] -= f * a[rows[col]][c];
      b[rows[r]] -= f * b[rows[col]];
    }
  }
  for (int col = 2; col >= 0; --col) {
    double s = b[rows[col]];
    for (int c = col + 1; c < 3; ++c) s -= a[rows[col]][c] * x[c];
    x[col] = s / a[rows[col]][col];
  }
  return true;
}

}  // namespace detail

inline ArcFit fit_arc(const std::vector<std::array<double, 3>>& pts) {
  using detail::Vec3;
  size_t n = pts.size();
  if (n < 3) return {true, 0.0};

  Vec3 c{};
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i) c[i] += p[i] / (double)n;

  double cov[3][3] = {};
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        cov[i][j] += (p[i] - c[i]) * (p[j] - c[j]);
  double eval[3];
  Vec3 evec[3];
  detail::eigen3(cov, eval, evec);

  double line_sq = 0.0;
  for (const auto& p : pts) {
    Vec3 d{p[0] - c[0], p[1] - c[1], p[2] - c[2]};
    double along = detail::dot(d, evec[0]);
    line_sq += detail::dot(d, d) - along * along;
  }
  double line_rms = std::sqrt(std::max(0.0, line_sq / (double)n));
  if (line_rms < 1e-9) return {true, line_rms};

  // In-plane coordinates, then the linear circle fit
  // a^2 + b^2 + A*a + B*b + C = 0.
  std::vector<double> as(n), bs(n), zs(n);
  for (size_t k = 0; k < n; ++k) {
    Vec3 d{pts[k][0] - c[0], pts[k][1] - c[1], pts[k][2] - c[2]};
    as[k] = detail::dot(d, evec[0]);
    bs[k] = detail::dot(d, evec[1]);
    zs[k] = detail::dot(d, evec[2]);
  }
  double m[3][3] = {}, rhs[3] = {};
  for (size_t k = 0; k < n; ++k) {
    double row[3] = {as[k], bs[k], 1.0};
    double y = -(as[k] * as[k] + bs[k] * bs[k]);
    for (int i = 0; i < 3; ++i) {
      rhs[i] += row[i] * y;
      for (int j = 0; j < 3; ++j) m[i][j] += row[i] * row[j];
    }
  }
  double sol[3];
  if (!detail::solve3(m, rhs, sol)) return {false, 1e9};
  double ca = -sol[0] / 2.0, cb = -sol[1] / 2.0;
  double r2 = ca * ca + cb * cb - sol[2];
  if (r2 <= 0.0) return {false, 1e9};
  double r = std::sqrt(r2);

  double sq = 0.0;
  for (size_t k = 0; k < n; ++k) {
    double rho = std::hypot(as[k] - ca, bs[k] - cb);
    sq += (rho - r) * (rho - r) + zs[k] * zs[k];
  }
  return {false, std::sqrt(sq / (double)n)};
}

}  // namespace circlefit

#endif
