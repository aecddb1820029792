// The limiting soft-edge distribution F2 by two independent routes.
//
// ODE route: the second Painleve equation q'' = s q + 2 q^3 with the unique
// solution decaying like Ai on the right, integrated leftwards by a piecewise
// Taylor method of fixed order. The state is augmented with
//   I1(s) = integral of q^2        over (s, inf)  [= (ln F2)'(s)]
//   I2(s) = integral of (t-s) q^2  over (s, inf)  [= -ln F2(s)]
// so the distribution, its log-derivative sigma = I1 and the exact
// sigma' = -q^2, sigma'' = -2 q q' come out of the same dense output.
// Seeding at s0 uses the closed forms of the Ai tail integrals
//   I1 = Ai'^2 - s Ai^2,   I2 = (2/3) s^2 Ai^2 - (2/3) s Ai'^2 - (1/3) Ai Ai'.
//
// Fredholm route: Nystrom discretization of the Airy-kernel determinant on
// (s, s+T) with Gauss-Legendre nodes; T is chosen so the discarded tail of
// the kernel trace is far below the target accuracy.

#pragma once

#include "gaplab/airy.hpp"
#include "gaplab/io.hpp"
#include "gaplab/quadrature.hpp"

namespace gaplab {

class TracyWidomOde {
 public:
  struct Values {
    Real q, q_prime;
    Real sigma, sigma_p, sigma_pp;  // (ln F2)' and its two derivatives
    Real log_f2, f2;
  };

  // Integrates from s_start down to s_min. Defaults give ~1e-30 accuracy.
  TracyWidomOde(double s_min, int digits, double s_start = 12.0, int order = 32,
                double step = 0.25)
      : digits_(digits), order_(order) {
    if (s_min >= s_start - 1) throw std::invalid_argument("TracyWidomOde: s_min too large");
    const int wd = digits + 12;
    Real s0(s_start, wd);
    auto ai = airy_ai_pair(s0, wd);
    Real q = ai.ai;
    Real qp = ai.ai_prime;
    Real i1 = ai.ai_prime * ai.ai_prime - s0 * ai.ai * ai.ai;
    Real i2 = (2 * s0 * s0 * ai.ai * ai.ai - 2 * s0 * ai.ai_prime * ai.ai_prime -
               ai.ai * ai.ai_prime) /
              3;
    Real h(step, wd);
    s_hi_ = s_start;
    while (s0.to_double() > s_min) {
      Segment seg = make_segment(s0, q, qp, i1, i2, h);
      Real t = -h;
      q = eval_series(seg.q, t);
      qp = eval_series_derivative(seg.q, t);
      i1 = eval_series(seg.i1, t);
      i2 = eval_series(seg.i2, t);
      s0 = s0 - h;
      segments_.push_back(std::move(seg));
    }
    s_lo_ = s0.to_double();
  }

  Values eval(const Real& s) const {
    double sd = s.to_double();
    if (sd < s_lo_ || sd > s_hi_)
      throw std::out_of_range("TracyWidomOde: s outside the integrated range");
    // Segments are ordered by decreasing s; segment i covers [s0 - h, s0].
    size_t idx = std::min(segments_.size() - 1,
                          static_cast<size_t>((s_hi_ - sd) / step_of(segments_[0])));
    while (idx + 1 < segments_.size() && sd < segments_[idx].s0.to_double() - step_of(segments_[idx]))
      ++idx;
    while (idx > 0 && sd > segments_[idx].s0.to_double()) --idx;
    const Segment& seg = segments_[idx];
    Real t = s.rounded_to(digits_ + 12) - seg.s0;
    Values v;
    v.q = eval_series(seg.q, t);
    v.q_prime = eval_series_derivative(seg.q, t);
    v.sigma = eval_series(seg.i1, t);
    v.sigma_p = -(v.q * v.q);
    v.sigma_pp = -2 * v.q * v.q_prime;
    v.log_f2 = -eval_series(seg.i2, t);
    v.f2 = exp(v.log_f2);
    return v;
  }

  double s_min() const { return s_lo_; }
  double s_max() const { return s_hi_; }

 private:
  struct Segment {
    Real s0;
    Real h;
    std::vector<Real> q, i1, i2;  // Taylor coefficients in t = s - s0
  };

  static double step_of(const Segment& seg) { return seg.h.to_double(); }

  Segment make_segment(const Real& s0, const Real& q0, const Real& q1, const Real& i1_0,
                       const Real& i2_0, const Real& h) const {
    const int wd = digits_ + 12;
    const int K = order_;
    Segment seg;
    seg.s0 = s0;
    seg.h = h;
    auto& q = seg.q;
    q.assign(K + 1, Real(0L, wd));
    std::vector<Real> qq(K + 1, Real(0L, wd)), qqq(K + 1, Real(0L, wd));
    q[0] = q0.rounded_to(wd);
    q[1] = q1.rounded_to(wd);
    auto update_products = [&](int k) {
      // qq[k] and qqq[k] from q[0..k]
      Real s2(0L, wd), s3(0L, wd);
      for (int i = 0; i <= k; ++i) s2 += q[i] * q[k - i];
      qq[k] = s2;
      for (int i = 0; i <= k; ++i) s3 += qq[i] * q[k - i];
      qqq[k] = s3;
    };
    for (int k = 0; k + 2 <= K; ++k) {
      update_products(k);
      Real rhs = s0 * q[k] + (k >= 1 ? q[k - 1] : Real(0L, wd)) + 2 * qqq[k];
      q[k + 2] = rhs / ((k + 1) * (k + 2));
    }
    update_products(K - 1);
    update_products(K);

    // I1' = -q^2, I2' = -I1, integrated termwise.
    auto& i1 = seg.i1;
    i1.assign(K + 2, Real(0L, wd));
    i1[0] = i1_0.rounded_to(wd);
    for (int k = 0; k <= K; ++k) i1[k + 1] = -(qq[k]) / (k + 1);
    auto& i2 = seg.i2;
    i2.assign(K + 3, Real(0L, wd));
    i2[0] = i2_0.rounded_to(wd);
    for (int k = 0; k + 1 < static_cast<int>(i1.size()); ++k) i2[k + 1] = -i1[k] / (k + 1);
    i2[i1.size()] = -i1[i1.size() - 1] / static_cast<long>(i1.size());
    return seg;
  }

  static Real eval_series(const std::vector<Real>& c, const Real& t) {
    Real acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * t + c[i];
    return acc;
  }

  static Real eval_series_derivative(const std::vector<Real>& c, const Real& t) {
    Real acc = static_cast<long>(c.size() - 1) * c.back();
    for (size_t i = c.size() - 1; i-- > 1;) acc = acc * t + static_cast<long>(i) * c[i];
    return acc;
  }

  int digits_;
  int order_;
  double s_lo_, s_hi_;
  std::vector<Segment> segments_;
};

// det(I - K_Airy) on L^2(s, inf) by Nystrom quadrature on (s, s+T).
inline Real tw_fredholm(const Real& s, int digits, int m = 96) {
  const int wd = digits + 10;
  double sd = s.to_double();
  double T = std::max(16.0, 12.0 - sd);
  const auto& rule = gauss_legendre(m, wd);
  Real half(T / 2, wd);
  Real mid = s.rounded_to(wd) + half;

  std::vector<Real> x(m, Real(0L, wd)), sw(m, Real(0L, wd));
  std::vector<AiryValues> av(m);
  for (int i = 0; i < m; ++i) {
    x[i] = mid + half * rule.nodes[i];
    sw[i] = sqrt(rule.weights[i] * half);
    av[i] = airy_ai_pair(x[i], wd);
  }

  // A[i][j] = I - sqrt(w_i) K(x_i, x_j) sqrt(w_j)
  std::vector<std::vector<Real>> A(m, std::vector<Real>(m, Real(0L, wd)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j <= i; ++j) {
      Real kij = (i == j) ? av[i].ai_prime * av[i].ai_prime - x[i] * av[i].ai * av[i].ai
                          : (av[i].ai * av[j].ai_prime - av[i].ai_prime * av[j].ai) / (x[i] - x[j]);
      Real v = sw[i] * kij * sw[j];
      A[i][j] = -v;
      A[j][i] = -v;
    }
    A[i][i] = A[i][i] + 1;
  }

  // LU without pivoting; I - K is well conditioned (eigenvalues in (0, 1]).
  Real det(1L, wd);
  for (int k = 0; k < m; ++k) {
    det *= A[k][k];
    for (int i = k + 1; i < m; ++i) {
      Real f = A[i][k] / A[k][k];
      for (int j = k + 1; j < m; ++j) A[i][j] -= f * A[k][j];
    }
  }
  return det.rounded_to(digits);
}

struct TWDistribution {
  std::vector<Real> s_grid;
  std::vector<Real> F2;
  int digits = 0;
};

inline TWDistribution solve_tw(double s_min, double s_max, int points, int digits = 30,
                               int nystrom_nodes = 96) {
  if (!(s_min < s_max) || points < 2) throw std::invalid_argument("solve_tw: bad grid");
  TWDistribution d;
  d.digits = digits;
  const int wd = digits + 6;
  for (int i = 0; i < points; ++i) {
    Real s = Real(s_min, wd) + (Real(s_max, wd) - Real(s_min, wd)) * i / (points - 1);
    d.s_grid.push_back(s);
    d.F2.push_back(tw_fredholm(s, digits, nystrom_nodes));
  }
  return d;
}

inline CsvTable tw_to_csv(const TWDistribution& d) {
  CsvTable t;
  t.header = {"s", "F2"};
  for (size_t i = 0; i < d.s_grid.size(); ++i)
    t.rows.push_back({format_real(d.s_grid[i], d.digits), format_real(d.F2[i], d.digits)});
  return t;
}

}  // namespace gaplab
