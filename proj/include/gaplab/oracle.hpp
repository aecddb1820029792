// Independent ground truth: matrix-model Monte Carlo and direct quadrature of
// the joint eigenvalue density.
//
// Sampling conventions matching the weight e^{-x^2}: Hermitian H with
// diagonal entries N(0, 1/2) and off-diagonal real/imaginary parts N(0, 1/4).
// Since Tr H^2 = sum_i h_ii^2 + 2 sum_{i<j} |h_ij|^2, those variances make the
// matrix density proportional to exp(-Tr H^2), hence the eigenvalue law
// Delta^2 prod e^{-lambda^2}. For the Laguerre weight x^alpha e^{-x} with
// integer alpha = m - n, W = G G* with G an n x m matrix of standard complex
// Gaussians (real and imaginary parts N(0, 1/2)).
//
// The generator is fully specified (splitmix64 + Box-Muller), so a seed pins
// the estimate bit-for-bit on any platform. Trials are partitioned in fixed
// blocks with per-block derived seeds; the merge is a count aggregation, so
// the worker layout cannot change the result.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <cmath>

#include "gaplab/gap.hpp"

namespace gaplab {

struct MCConfig {
  long trials = 0;
  std::uint64_t seed = 1;
  int n = 1;
};

struct MCEstimate {
  Real p_hat;
  Real ci95_halfwidth;
  long trials = 0;
  long hits = 0;
};

namespace mc {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  double uniform01() {  // in (0, 1]
    return (splitmix64(state_) >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform01(), u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
  }

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace mc

// Ascending eigenvalues of one sampled matrix.
inline std::vector<double> sample_eigenvalues(const WeightSpec& w, int n, mc::Rng& rng) {
  if (n < 1) throw std::invalid_argument("sample_eigenvalues: n must be >= 1");
  if (w.is_gaussian()) {
    Eigen::MatrixXcd h(n, n);
    const double d_sd = std::sqrt(0.5), o_sd = 0.5;
    for (int i = 0; i < n; ++i) {
      h(i, i) = std::complex<double>(d_sd * rng.normal(), 0.0);
      for (int j = i + 1; j < n; ++j) {
        std::complex<double> z(o_sd * rng.normal(), o_sd * rng.normal());
        h(i, j) = z;
        h(j, i) = std::conj(z);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
    std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(ev.begin(), ev.end());
    return ev;
  }

  double alpha_d = w.alpha.to_double();
  long m_minus_n = std::lround(alpha_d);
  if (std::abs(alpha_d - m_minus_n) > 1e-12 || m_minus_n < 0)
    throw std::invalid_argument(
        "sample_eigenvalues: Laguerre sampling needs integer alpha = m - n >= 0");
  int m = n + static_cast<int>(m_minus_n);
  Eigen::MatrixXcd g(n, m);
  const double sd = std::sqrt(0.5);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = std::complex<double>(sd * rng.normal(), sd * rng.normal());
  Eigen::MatrixXcd wmat = g * g.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(wmat, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + n);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline MCEstimate mc_gap_probability(const WeightSpec& w, const Window& win, const MCConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("mc_gap_probability: trials must be >= 1");
  win.validate(w);
  double lo = win.lo.finite ? win.lo.x.to_double() : -std::numeric_limits<double>::infinity();
  double hi = win.hi.finite ? win.hi.x.to_double() : std::numeric_limits<double>::infinity();
  if (w.is_laguerre() && !win.lo.finite) lo = 0.0;  // support edge: no constraint

  const long block_size = 4096;
  const long blocks = (cfg.trials + block_size - 1) / block_size;
  std::vector<long> hits(blocks, 0);
  detail::parallel_for(static_cast<int>(blocks), [&](int b) {
    // Block seeds are mixed outputs, not raw advanced states, so the
    // per-block streams start at decorrelated points.
    std::uint64_t s = cfg.seed;
    std::uint64_t block_seed = 0;
    for (int k = 0; k <= b; ++k) block_seed = mc::splitmix64(s);
    mc::Rng rng(block_seed);
    long lo_t = b * block_size;
    long hi_t = std::min<long>(cfg.trials, lo_t + block_size);
    long h = 0;
    for (long t = lo_t; t < hi_t; ++t) {
      auto ev = sample_eigenvalues(w, cfg.n, rng);
      if (ev.front() > lo && ev.back() < hi) ++h;
    }
    hits[b] = h;
  });
  long total = 0;
  for (long h : hits) total += h;

  MCEstimate e;
  e.trials = cfg.trials;
  e.hits = total;
  e.p_hat = Real(total, 30) / cfg.trials;
  e.ci95_halfwidth = 1.96 * sqrt(e.p_hat * (1 - e.p_hat) / cfg.trials);
  return e;
}

// Tensor Gauss-Legendre quadrature of Delta^2 prod w over (a,b)^n, divided by
// n! prod h_j(I). Only n <= 3 (cost grows as nodes^n); the node count doubles
// once and both results must agree.
inline Real direct_quadrature_prob(const WeightSpec& w, int n, const Window& win, int nodes,
                                   int digits) {
  if (n < 1 || n > 3) throw std::invalid_argument("direct_quadrature_prob: n must be 1..3");
  if (!win.lo.finite || !win.hi.finite)
    throw std::invalid_argument("direct_quadrature_prob: finite window required");
  win.validate(w);
  const int wd = digits + 10;

  auto run = [&](int m) {
    const auto& rule = gauss_legendre(m, wd);
    Real mid = ((win.lo.x + win.hi.x) / 2).rounded_to(wd);
    Real half = ((win.hi.x - win.lo.x) / 2).rounded_to(wd);
    std::vector<Real> x(m, Real(0L, wd)), wt(m, Real(0L, wd));
    for (int i = 0; i < m; ++i) {
      x[i] = mid + half * rule.nodes[i];
      wt[i] = rule.weights[i] * half * weight_at(w, x[i], wd);
    }
    Real total(0L, wd);
    if (n == 1) {
      for (int i = 0; i < m; ++i) total += wt[i];
    } else if (n == 2) {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          Real d = x[i] - x[j];
          total += wt[i] * wt[j] * d * d;
        }
      }
    } else {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          Real dij = x[i] - x[j];
          Real wij = wt[i] * wt[j] * dij * dij;
          for (int k = 0; k < m; ++k) {
            Real dik = x[i] - x[k], djk = x[j] - x[k];
            total += wij * wt[k] * dik * dik * djk * djk;
          }
        }
      }
    }
    Real denom(1L, wd);
    for (long k = 2; k <= n; ++k) denom = denom * k;
    for (int j = 0; j < n; ++j) denom *= whole_interval_norm(w, j, wd);
    return total / denom;
  };

  Real coarse = run(nodes);
  Real fine = run(2 * nodes);
  if (abs(fine - coarse) > pow10(-digits / 2, 20) * max(Real(1L, 20), abs(fine)))
    throw std::runtime_error("direct_quadrature_prob: quadrature did not converge");
  return fine.rounded_to(digits);
}

}  // namespace gaplab
