#include "hyperspec/oracles.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

#include "hyperspec/error.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

namespace {

constexpr int kSamplingLimit = 12;
constexpr int kPolishCandidates = 6;
constexpr int kPolishIters = 20000;
constexpr double kFdStep = 1e-6;

double quotient(const Hypergraph& g, const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += ipow(v, g.uniformity());
  return q_form(g, x) / s;
}

// Plain gradient descent on the quotient with central-difference gradients.
double fd_polish(const Hypergraph& g, std::vector<double> x) {
  const int k = g.uniformity();
  const std::size_t n = x.size();
  x = normalized(x, k);
  double f = quotient(g, x);
  double t = 1e-2;
  std::vector<double> grad(n), y(n);
  for (int it = 0; it < kPolishIters; ++it) {
    double gsq = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<double> xp(x), xm(x);
      xp[v] += kFdStep;
      xm[v] -= kFdStep;
      grad[v] = (quotient(g, xp) - quotient(g, xm)) / (2 * kFdStep);
      gsq += grad[v] * grad[v];
    }
    if (gsq < 1e-22) break;
    t *= 2.0;
    bool moved = false;
    while (t > 1e-16) {
      for (std::size_t v = 0; v < n; ++v) y[v] = x[v] - t * grad[v];
      const double fy = quotient(g, y);
      if (fy < f - 1e-4 * t * gsq) {
        x = normalized(y, k);
        f = quotient(g, x);
        moved = true;
        break;
      }
      t *= 0.5;
    }
    if (!moved) break;
  }
  return f;
}

}  // namespace

double matrix_oracle_k2(const Hypergraph& g) {
  if (g.uniformity() != 2) {
    throw Error(Errc::WrongUniformity, "matrix oracle needs k = 2, got " + std::to_string(g.uniformity()));
  }
  const int n = g.num_vertices();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    q(e[0], e[0]) += 1.0;
    q(e[1], e[1]) += 1.0;
    q(e[0], e[1]) += 1.0;
    q(e[1], e[0]) += 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q, Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

double sampling_oracle(const Hypergraph& g, int budget, std::uint64_t rng_seed) {
  const int n = g.num_vertices();
  if (n > kSamplingLimit) {
    throw Error(Errc::TooLarge, "sampling oracle limited to " + std::to_string(kSamplingLimit) + " vertices");
  }
  if (g.uniformity() % 2 != 0) throw Error(Errc::OddUniformity, "sampling oracle needs even k");
  if (budget < 1) throw Error(Errc::InvalidArgument, "budget must be >= 1");

  std::mt19937_64 rng(derive_seed(rng_seed, "sampling-oracle"));
  std::uniform_real_distribution<double> magnitude(0.05, 1.0);

  // Best samples as (value, vector), kept sorted.
  std::vector<std::pair<double, std::vector<double>>> best;
  std::vector<double> x(static_cast<std::size_t>(n));
  const std::uint32_t patterns = std::uint32_t{1} << (n - 1);
  for (std::uint32_t s = 0; s < patterns; ++s) {
    for (int b = 0; b < budget; ++b) {
      for (int v = 0; v < n; ++v) {
        const bool negative = v > 0 && ((s >> (v - 1)) & 1U);
        x[v] = negative ? -magnitude(rng) : magnitude(rng);
      }
      const double f = quotient(g, x);
      if (static_cast<int>(best.size()) < kPolishCandidates || f < best.back().first) {
        best.emplace_back(f, x);
        std::sort(best.begin(), best.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
        if (static_cast<int>(best.size()) > kPolishCandidates) best.pop_back();
      }
    }
  }

  double result = best.front().first;
  for (const auto& [value, vec] : best) result = std::min(result, fd_polish(g, vec));
  return result;
}

}  // namespace hyperspec
