#include "hyperspec/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

void require_dimension(const Hypergraph& g, std::span<const double> x) {
  if (static_cast<int>(x.size()) != g.num_vertices()) {
    throw Error(Errc::DimensionMismatch, "vector of length " + std::to_string(x.size()) +
                                             " for " + std::to_string(g.num_vertices()) + " vertices");
  }
}

}  // namespace

double k_norm(std::span<const double> x, int k) {
  double s = 0.0;
  for (double v : x) s += ipow(std::abs(v), k);
  return std::pow(s, 1.0 / k);
}

std::vector<double> normalized(std::span<const double> x, int k) {
  const double nrm = k_norm(x, k);
  if (!(nrm > 0.0) || !std::isfinite(nrm)) throw Error(Errc::ZeroVector, "cannot normalize");
  std::vector<double> out(x.begin(), x.end());
  for (double& v : out) v /= nrm;
  return out;
}

double product_over(std::span<const Vertex> vertices, std::span<const double> x) {
  double p = 1.0;
  for (Vertex v : vertices) p *= x[static_cast<std::size_t>(v)];
  return p;
}

double q_form(const Hypergraph& g, std::span<const double> x) {
  require_dimension(g, x);
  const int k = g.uniformity();
  double total = 0.0;
  for (const Edge& e : g.edges()) {
    double powers = 0.0;
    double prod = 1.0;
    for (Vertex v : e) {
      powers += ipow(x[v], k);
      prod *= x[v];
    }
    total += powers + k * prod;
  }
  return total;
}

std::vector<double> q_apply(const Hypergraph& g, std::span<const double> x) {
  require_dimension(g, x);
  const int k = g.uniformity();
  std::vector<double> out(x.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[v] = g.degree(v) * ipow(x[v], k - 1);

  std::vector<double> prefix(static_cast<std::size_t>(k) + 1);
  for (const Edge& e : g.edges()) {
    prefix[0] = 1.0;
    for (int i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * x[e[i]];
    double suffix = 1.0;
    for (int i = k - 1; i >= 0; --i) {
      out[e[i]] += prefix[i] * suffix;
      suffix *= x[e[i]];
    }
  }
  return out;
}

std::vector<double> q_apply_jacobian(const Hypergraph& g, std::span<const double> x) {
  require_dimension(g, x);
  const int k = g.uniformity();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<double> jac(n * n, 0.0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    jac[v * n + v] = (k - 1) * g.degree(v) * ipow(x[v], k - 2);
  }
  for (const Edge& e : g.edges()) {
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        double p = 1.0;
        for (int l = 0; l < k; ++l)
          if (l != i && l != j) p *= x[e[l]];
        jac[e[i] * n + e[j]] += p;
        jac[e[j] * n + e[i]] += p;
      }
    }
  }
  return jac;
}

double residual(const Hypergraph& g, double lam, std::span<const double> x) {
  require_dimension(g, x);
  const auto unit = normalized(x, g.uniformity());
  const auto qx = q_apply(g, unit);
  double worst = 0.0;
  for (std::size_t v = 0; v < unit.size(); ++v) {
    worst = std::max(worst, std::abs(qx[v] - lam * ipow(unit[v], g.uniformity() - 1)));
  }
  return worst;
}

BranchBoundary branch_boundary(const Coalescence& p, std::span<const double> x) {
  require_dimension(p.composed, x);
  const int k = p.composed.uniformity();
  const double xu_k = ipow(x[p.cut], k);

  BranchBoundary out;
  out.beta = p.branch.degree(p.branch_root) * xu_k;
  for (int id : p.branch.incident(p.branch_root)) {
    double prod = 1.0;
    for (Vertex v : p.branch.edge(id)) prod *= x[p.branch_map[v]];
    out.beta += prod;
  }
  out.alpha = p.base.degree(p.cut) * xu_k;
  for (int id : p.base.incident(p.cut)) out.alpha += product_over(p.base.edge(id), x);
  return out;
}

}  // namespace hyperspec
