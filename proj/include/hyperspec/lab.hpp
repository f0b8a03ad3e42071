#pragma once

#include <json.hpp>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/check.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/parity.hpp"
#include "hyperspec/solver.hpp"

namespace hyperspec {

// Thresholds shared by every experiment. Eigenvector entries are compared
// after scaling to unit k-norm.
struct LabOptions {
  SolverConfig solver;
  double zero_tol = 1e-6;      // |x_v| <= zero_tol counts as zero
  double strict_slack = 1e-9;  // margin for strict inequalities
  double sign_tol = 1e-9;      // x^e <= sign_tol on branch edges
  double profile_tol = 1e-6;   // path profile vs recurrence
  double equal_tol = 1e-8;     // equalities and ties between eigenvalues
  double stationary_tol = 1e-8;
  int retry_factor = 4;        // restart multiplier when a check fails
};

struct LabReport {
  std::string name;
  std::string instance_hgf;
  std::vector<Check> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  bool passed() const { return all_passed(checks); }
};

// ---------------------------------------------------------------------------
// First-eigenvector structure for G = G0(u) ⋄ H(u) with H odd-bipartite.

// Branch edge products x^e <= 0; the vanishing conditions at u when x_u = 0;
// β_H(x) <= 0, strictly when x_u != 0. Throws BranchNotOddBipartite.
LabReport verify_branch_sign_structure(const Coalescence& p, std::span<const double> x, double lam,
                                       const LabOptions& opts = {});

// Re-signs the branch along an odd-bipartition {U, W} of H (u ∈ U, the
// bipartition is complemented if needed): entries on U take the sign of x_u,
// entries on W the opposite sign, magnitudes kept, the rest of x untouched.
// Q x^k never increases and is unchanged at a first eigenvector.
// `b` is indexed by branch vertices. Throws InvalidBipartition.
std::vector<double> canonical_branch_signs(const Coalescence& p, std::span<const double> x,
                                           const Bipartition& b);

// Same, with an odd-bipartition computed for the branch.
std::vector<double> canonical_branch_signs(const Coalescence& p, std::span<const double> x);

// For a power hypertree branch T rooted at r: nonzero entries propagate away
// from r, and when x_r != 0 |x| strictly increases from r outward over
// vertices of degree >= 2. Pendent vertices sharing an edge have equal |x|.
// Throws NotPowerHypertree.
LabReport verify_monotone_growth(const Coalescence& p, std::span<const double> x, double lam,
                                 const LabOptions& opts = {});

// Labels along G = G0(r) ⋄ P_m^k(r): vertex[j] is the composed vertex with
// label j (j = 0..2m, vertex[2m] = r); edge[i-1] is the composed edge id of
// e_i, which contains labels 2i, 2i-1, 2i-2.
struct RootedPathLabels {
  int m = 0;
  std::vector<Vertex> vertex;
  std::vector<int> edge;
};

// Throws NotPowerHypertree when the branch is not a hyperpath attached at a
// pendent vertex, InvalidArgument for k < 4.
RootedPathLabels rooted_path_labels(const Coalescence& p);

// f_0 = 1, f_1 = (1-λ)^{k/2}, f_{i+1} = (2-λ)(1-λ)^{k/2-1} f_i - f_{i-1}.
std::vector<double> path_recurrence(double lam, int k, int m);

struct PathProfile {
  double lam = 0.0;
  std::vector<double> entries;    // |x_{2i}|, i = 0..m
  std::vector<double> f_values;   // f_i(lam), i = 0..m
  std::vector<double> predicted;  // f_i^{2/k} |x_0|
  std::vector<Check> checks;
};

// Throws ZeroRootEntry when |x_r| <= zero_tol.
PathProfile path_profile(const Coalescence& p, std::span<const double> x, double lam,
                         const LabOptions& opts = {});

// ---------------------------------------------------------------------------
// Perturbation experiments. Each solves the hypergraphs involved.

// Relocates the branch from its cut vertex v2 to v1 and compares least
// eigenvalues. When |x_{v1}| < |x_{v2}| the hypothesis is reported unmet and
// the inequality is not asserted.
LabReport relocation_experiment(const Coalescence& p, Vertex v1, const LabOptions& opts = {});

// λ(G_{s,t}) for s + t = total, s >= t >= 0.
LabReport gst_scan(const Hypergraph& g0, Vertex u, int total, const LabOptions& opts = {});

struct ClassMember {
  Hypergraph graph;
  int base_vertices = 0;  // G0 occupies vertices [0, base_vertices)
  int base_edges = 0;     // and the first base_edges edges
  std::string description;
  EigenResult eigen;
};

struct EnumerationLimits {
  int max_m = 3;
  int max_base_vertices = 8;
};

// All members of T_m(G0) up to isomorphism: G0 with k-uniform hypertrees of
// m edges in total attached at its vertices. Grown one pendent edge at a
// time with isomorphism dedup at every level. Members are solved when
// `solve` is set. Throws BudgetExceeded, InvalidArgument.
std::vector<ClassMember> enumerate_class(const Hypergraph& g0, int m, const LabOptions& opts = {},
                                         bool solve = true, const EnumerationLimits& limits = {});

// True iff the attached edges form one hyperpath hanging from a single G0
// vertex through one of its pendent vertices.
bool is_single_path_attachment(const Hypergraph& g, int base_vertices, int base_edges);

struct MinimizerResult {
  ClassMember best;
  std::vector<ClassMember> members;
  LabReport report;
};

MinimizerResult find_minimizer(const Hypergraph& g0, int m, const LabOptions& opts = {});

// ---------------------------------------------------------------------------
// Upper bounds and the limit behaviour.

// kε(G0)/ν(G), d_G0(u)/ν(H), d_G0(u)/((k-1)m+1) for hypertree branches, and
// δ(G), each with the explicit test vector realizing it where one exists.
// Also compares λ(G) with λ(G0). Throws BranchNotOddBipartite (including
// for a branch without edges).
LabReport bounds_report(const Coalescence& p, const LabOptions& opts = {});

enum class BranchFamily { Path, Star };

// λ(G0(u) ⋄ B_m(u)) for m = 0..m_max, B a hyperpath (attached at a pendent
// vertex) or hyperstar (attached at its center).
LabReport limit_scan(const Hypergraph& g0, Vertex u, int m_max, BranchFamily family = BranchFamily::Path,
                     const LabOptions& opts = {});

// Solves G, re-signs the branch canonically, and runs every applicable
// first-eigenvector check. A failing check triggers one re-solve with
// retry_factor times the restarts before the report is final.
LabReport verify_eigenvector_suite(const Coalescence& p, const LabOptions& opts = {});

}  // namespace hyperspec
