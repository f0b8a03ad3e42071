#pragma once

#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// Evaluation of the signless Laplacian form Q(G) = D(G) + A(G) without ever
// materializing the order-k tensor. A vector x is a function on vertices;
// x^e is the product of x over e and x_e^k the sum of k-th powers over e.

// ‖x‖_k = (Σ |x_v|^k)^{1/k}.
double k_norm(std::span<const double> x, int k);

// Scales x to unit k-norm. Throws ZeroVector.
std::vector<double> normalized(std::span<const double> x, int k);

// Q(G)x^k = Σ_e (x_e^k + k·x^e).
double q_form(const Hypergraph& g, std::span<const double> x);

// (Q(G)x^{k-1})_v = d(v)x_v^{k-1} + Σ_{e∋v} x^{e∖{v}}.
//
// Each x^{e∖{v}} comes from prefix/suffix products along the edge, so zero
// entries need no special casing.
std::vector<double> q_apply(const Hypergraph& g, std::span<const double> x);

// Jacobian of q_apply, dense row-major ν×ν:
//   H_vv = (k-1)d(v)x_v^{k-2},  H_vw = Σ_{e∋v,w} x^{e∖{v,w}}.
std::vector<double> q_apply_jacobian(const Hypergraph& g, std::span<const double> x);

// max_v |(Q x^{k-1})_v - lam·x_v^{k-1}| with x scaled to unit k-norm first.
// Throws ZeroVector, DimensionMismatch.
double residual(const Hypergraph& g, double lam, std::span<const double> x);

// Contribution at the cut vertex u of G = G0(u) ⋄ H(u), split by side.
struct BranchBoundary {
  double beta = 0.0;   // d_H(u)x_u^k + Σ_{e∈E_H(u)} x^e
  double alpha = 0.0;  // d_G0(u)x_u^k + Σ_{e∈E_G0(u)} x^e
};

BranchBoundary branch_boundary(const Coalescence& p, std::span<const double> x);

// x^U for an arbitrary vertex list.
double product_over(std::span<const Vertex> vertices, std::span<const double> x);

inline double ipow(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace hyperspec
