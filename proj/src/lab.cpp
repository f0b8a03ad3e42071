#include "hyperspec/lab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "hyperspec/canonical.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hgf.hpp"
#include "hyperspec/rng.hpp"
#include "hyperspec/tensor.hpp"

namespace hyperspec {

namespace {

void require_odd_bipartite_branch(const Coalescence& p) {
  if (p.branch.num_edges() == 0) {
    throw Error(Errc::BranchNotOddBipartite, "branch has no edges");
  }
  if (p.branch.uniformity() % 2 != 0 || !is_odd_bipartite(p.branch)) {
    throw Error(Errc::BranchNotOddBipartite, "branch admits no odd-bipartition");
  }
}

void require_non_odd_bipartite(const Hypergraph& g, const char* what) {
  if (!is_connected(g) || g.num_edges() == 0) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be connected with at least one edge");
  }
  if (is_odd_bipartite(g)) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be non-odd-bipartite");
  }
}

std::string indexed(const std::string& name, int i) { return name + "[" + std::to_string(i) + "]"; }

void append(std::vector<Check>& dst, const std::vector<Check>& src, const std::string& prefix = "") {
  for (Check c : src) {
    c.name = prefix + c.name;
    dst.push_back(std::move(c));
  }
}

// Parent/child structure of the branch seen from its root, in composed ids.
struct RootedBranch {
  struct Step {
    int edge;     // composed edge id
    Vertex parent;
    std::vector<Vertex> children;
  };
  std::vector<Step> steps;  // BFS order
};

RootedBranch root_branch(const Coalescence& p) {
  const auto& g = p.composed;
  const int first_branch_edge = p.base.num_edges();
  RootedBranch out;
  std::vector<bool> used(static_cast<std::size_t>(g.num_edges()), false);
  std::deque<Vertex> queue{p.cut};
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (int id : g.incident(v)) {
      if (id < first_branch_edge || used[id]) continue;
      used[id] = true;
      RootedBranch::Step step{id, v, {}};
      for (Vertex w : g.edge(id)) {
        if (w == v) continue;
        step.children.push_back(w);
        queue.push_back(w);
      }
      out.steps.push_back(std::move(step));
    }
  }
  return out;
}

EigenResult solve(const Hypergraph& g, const SolverConfig& cfg) { return solve_least_eigen(g, cfg); }

nlohmann::ordered_json eigen_summary(const EigenResult& r) {
  nlohmann::ordered_json j;
  j["lambda"] = r.lambda;
  j["residual"] = r.residual;
  j["converged"] = r.converged;
  return j;
}

double abs_at(std::span<const double> x, Vertex v) { return std::abs(x[static_cast<std::size_t>(v)]); }

}  // namespace

// ---------------------------------------------------------------------------

LabReport verify_branch_sign_structure(const Coalescence& p, std::span<const double> x, double lam,
                                       const LabOptions& opts) {
  require_odd_bipartite_branch(p);
  const int k = p.composed.uniformity();
  const auto unit = normalized(x, k);
  LabReport rep;
  rep.name = "branch-sign-structure";
  rep.instance_hgf = to_hgf(p.composed);
  rep.data["lambda"] = lam;

  const auto branch_edges = p.branch_edges_in_composed();
  double worst_product = -INFINITY;
  for (std::size_t i = 0; i < branch_edges.size(); ++i) {
    const double prod = product_over(branch_edges[i], unit);
    worst_product = std::max(worst_product, prod);
    rep.checks.push_back(check_le(indexed("branch_edge_product_nonpositive", static_cast<int>(i)), prod, 0.0,
                                  opts.sign_tol));
  }
  rep.data["max_branch_edge_product"] = worst_product;

  const double xu = unit[p.cut];
  rep.data["x_cut"] = xu;
  if (std::abs(xu) <= opts.zero_tol) {
    double base_sum = 0.0;
    for (int id : p.base.incident(p.cut)) {
      const Edge& e = p.base.edge(id);
      double prod = 1.0;
      for (Vertex v : e)
        if (v != p.cut) prod *= unit[v];
      base_sum += prod;
    }
    rep.checks.push_back(check_near("base_sum_vanishes_at_zero_cut", base_sum, 0.0, opts.stationary_tol));
    double worst = 0.0;
    for (const Edge& e : branch_edges) {
      if (!std::binary_search(e.begin(), e.end(), p.cut)) continue;
      double prod = 1.0;
      for (Vertex v : e)
        if (v != p.cut) prod *= unit[v];
      worst = std::max(worst, std::abs(prod));
    }
    rep.checks.push_back(check_near("branch_terms_vanish_at_zero_cut", worst, 0.0, opts.stationary_tol));
  } else {
    rep.checks.push_back(skipped("base_sum_vanishes_at_zero_cut", "x_u is nonzero"));
  }

  const auto boundary = branch_boundary(p, unit);
  rep.data["beta"] = boundary.beta;
  rep.data["alpha"] = boundary.alpha;
  rep.checks.push_back(check_le("beta_nonpositive", boundary.beta, 0.0, opts.sign_tol));
  if (std::abs(xu) > opts.zero_tol) {
    rep.checks.push_back(check_lt("beta_negative", boundary.beta, 0.0, opts.strict_slack));
  } else {
    rep.checks.push_back(skipped("beta_negative", "x_u is zero"));
  }
  return rep;
}

std::vector<double> canonical_branch_signs(const Coalescence& p, std::span<const double> x, const Bipartition& b) {
  if (b.size() != p.branch.num_vertices() || !verify_odd_bipartition(p.branch, b)) {
    throw Error(Errc::InvalidBipartition, "not an odd-bipartition of the branch");
  }
  if (static_cast<int>(x.size()) != p.composed.num_vertices()) {
    throw Error(Errc::DimensionMismatch, "vector length");
  }
  const Bipartition parts = b.contains(p.branch_root) ? b : b.complement();
  const double sign = x[p.cut] < 0 ? -1.0 : 1.0;
  std::vector<double> out(x.begin(), x.end());
  for (Vertex v = 0; v < p.branch.num_vertices(); ++v) {
    if (v == p.branch_root) continue;
    const Vertex c = p.branch_map[v];
    out[c] = (parts.contains(v) ? sign : -sign) * std::abs(x[c]);
  }
  return out;
}

std::vector<double> canonical_branch_signs(const Coalescence& p, std::span<const double> x) {
  auto b = find_odd_bipartition(p.branch, p.branch_root);
  if (!b) throw Error(Errc::BranchNotOddBipartite, "branch admits no odd-bipartition");
  return canonical_branch_signs(p, x, *b);
}

LabReport verify_monotone_growth(const Coalescence& p, std::span<const double> x, double lam,
                                 const LabOptions& opts) {
  if (!is_power_hypertree(p.branch)) throw Error(Errc::NotPowerHypertree, "branch is not a power hypertree");
  const auto& g = p.composed;
  const int k = g.uniformity();
  const auto unit = normalized(x, k);
  const auto tree = root_branch(p);

  LabReport rep;
  rep.name = "monotone-growth";
  rep.instance_hgf = to_hgf(g);
  rep.data["lambda"] = lam;
  rep.data["x_root"] = unit[p.cut];

  // Nonzero entries propagate from parent to every vertex of child edges.
  double min_child = INFINITY;
  for (const auto& step : tree.steps) {
    if (abs_at(unit, step.parent) <= opts.zero_tol) continue;
    for (Vertex c : step.children) min_child = std::min(min_child, abs_at(unit, c));
  }
  if (std::isfinite(min_child)) {
    rep.checks.push_back(check_ge("nonzero_propagates", min_child, opts.zero_tol, 0.0));
  } else {
    rep.checks.push_back(skipped("nonzero_propagates", "no nonzero branch vertex"));
  }

  if (abs_at(unit, p.cut) > opts.zero_tol) {
    int idx = 0;
    for (const auto& step : tree.steps) {
      for (Vertex c : step.children) {
        if (g.degree(c) < 2) continue;
        rep.checks.push_back(check_lt(indexed("strictly_increasing", idx++), abs_at(unit, step.parent),
                                      abs_at(unit, c), opts.strict_slack));
      }
    }
    if (idx == 0) rep.checks.push_back(skipped("strictly_increasing", "no inner branch vertex"));
  } else {
    rep.checks.push_back(skipped("strictly_increasing", "x_root is zero; vacuous"));
  }

  // Vertices with identical incident edge sets have equal x^k.
  double worst = 0.0;
  for (const auto& step : tree.steps) {
    std::vector<Vertex> pendent;
    for (Vertex c : step.children)
      if (g.degree(c) == 1) pendent.push_back(c);
    for (std::size_t i = 1; i < pendent.size(); ++i) {
      worst = std::max(worst, std::abs(ipow(unit[pendent[i]], k) - ipow(unit[pendent[0]], k)));
    }
  }
  rep.checks.push_back(check_le("pendent_twins_equal", worst, 0.0, opts.equal_tol));
  return rep;
}

RootedPathLabels rooted_path_labels(const Coalescence& p) {
  const int k = p.composed.uniformity();
  if (k < 4) throw Error(Errc::InvalidArgument, "path labels need k >= 4");
  if (!is_hyperpath_rooted_at_pendent(p.branch, p.branch_root)) {
    throw Error(Errc::NotPowerHypertree, "branch is not a hyperpath attached at a pendent vertex");
  }
  const int m = p.branch.num_edges();
  const int first_branch_edge = p.base.num_edges();
  const auto& g = p.composed;

  // Branch degree in composed numbering (the cut counts branch edges only).
  auto branch_degree = [&](Vertex v) {
    int d = 0;
    for (int id : g.incident(v)) d += id >= first_branch_edge ? 1 : 0;
    return d;
  };

  RootedPathLabels out;
  out.m = m;
  out.vertex.assign(static_cast<std::size_t>(2 * m + 1), -1);
  out.edge.assign(static_cast<std::size_t>(m), -1);
  Vertex cur = p.cut;
  int prev_edge = -1;
  out.vertex[2 * m] = cur;
  for (int i = m; i >= 1; --i) {
    int eid = -1;
    for (int id : g.incident(cur)) {
      if (id >= first_branch_edge && id != prev_edge) {
        eid = id;
        break;
      }
    }
    const Edge& e = g.edge(eid);
    Vertex next = -1;
    for (Vertex v : e) {
      if (v == cur) continue;
      if (i > 1 ? branch_degree(v) == 2 : next < 0) next = v;
    }
    Vertex odd = -1;
    for (Vertex v : e) {
      if (v != cur && v != next) {
        odd = v;
        break;
      }
    }
    out.edge[i - 1] = eid;
    out.vertex[2 * i - 1] = odd;
    out.vertex[2 * i - 2] = next;
    prev_edge = eid;
    cur = next;
  }
  return out;
}

std::vector<double> path_recurrence(double lam, int k, int m) {
  std::vector<double> f(static_cast<std::size_t>(std::max(m, 0)) + 1);
  f[0] = 1.0;
  if (m >= 1) f[1] = std::pow(1.0 - lam, k / 2.0);
  const double factor = (2.0 - lam) * std::pow(1.0 - lam, k / 2.0 - 1.0);
  for (int i = 1; i < m; ++i) f[i + 1] = factor * f[i] - f[i - 1];
  return f;
}

PathProfile path_profile(const Coalescence& p, std::span<const double> x, double lam, const LabOptions& opts) {
  const int k = p.composed.uniformity();
  const auto labels = rooted_path_labels(p);
  const auto unit = normalized(x, k);
  if (abs_at(unit, p.cut) <= opts.zero_tol) {
    throw Error(Errc::ZeroRootEntry, "|x_r| = " + std::to_string(abs_at(unit, p.cut)));
  }
  const int m = labels.m;

  PathProfile prof;
  prof.lam = lam;
  prof.f_values = path_recurrence(lam, k, m);
  const double x0 = abs_at(unit, labels.vertex[0]);
  double worst = 0.0;
  for (int i = 0; i <= m; ++i) {
    const double entry = abs_at(unit, labels.vertex[2 * i]);
    const double pred = std::pow(std::max(prof.f_values[i], 0.0), 2.0 / k) * x0;
    prof.entries.push_back(entry);
    prof.predicted.push_back(pred);
    worst = std::max(worst, std::abs(pred - entry));
  }
  prof.checks.push_back(check_le("profile_matches_recurrence", worst, 0.0, opts.profile_tol));

  double min_f = INFINITY, max_f = -INFINITY, max_step = -INFINITY;
  for (int i = 1; i <= m; ++i) {
    min_f = std::min(min_f, prof.f_values[i]);
    max_f = std::max(max_f, prof.f_values[i]);
    max_step = std::max(max_step, prof.f_values[i] - prof.f_values[i - 1]);
  }
  prof.checks.push_back(check_lt("f_positive", 0.0, min_f, 0.0));
  prof.checks.push_back(check_lt("f_below_one", max_f, 1.0, 0.0));
  prof.checks.push_back(check_lt("f_strictly_decreasing", max_step, 0.0, 0.0));

  // Unlabeled degree-1 vertices of e_i match the labeled one, 2i-1.
  double twin_gap = 0.0;
  for (int i = 1; i <= m; ++i) {
    const Vertex ref = labels.vertex[2 * i - 1];
    for (Vertex v : p.composed.edge(labels.edge[i - 1])) {
      if (p.composed.degree(v) != 1) continue;
      twin_gap = std::max(twin_gap, std::abs(ipow(unit[v], k) - ipow(unit[ref], k)));
    }
  }
  prof.checks.push_back(check_le("unlabeled_pendents_match", twin_gap, 0.0, opts.equal_tol));
  return prof;
}

// ---------------------------------------------------------------------------

LabReport relocation_experiment(const Coalescence& p, Vertex v1, const LabOptions& opts) {
  require_odd_bipartite_branch(p);
  const Coalescence moved = relocate_branch(p, v1);
  require_non_odd_bipartite(p.composed, "G");
  require_non_odd_bipartite(moved.composed, "relocated G");

  const auto before = solve(p.composed, opts.solver);
  const auto after = solve(moved.composed, opts.solver);
  const double a1 = abs_at(before.x, v1);
  const double a2 = abs_at(before.x, p.cut);
  const bool hypothesis = a1 >= a2 - opts.strict_slack;
  const bool isomorphic = are_isomorphic(p.composed, moved.composed);

  LabReport rep;
  rep.name = "relocate";
  rep.instance_hgf = to_hgf(p.composed);
  rep.data["from"] = p.cut;
  rep.data["to"] = v1;
  rep.data["before"] = eigen_summary(before);
  rep.data["after"] = eigen_summary(after);
  rep.data["abs_x_to"] = a1;
  rep.data["abs_x_from"] = a2;
  rep.data["hypothesis_met"] = hypothesis;
  rep.data["isomorphic"] = isomorphic;
  rep.data["relocated_hgf"] = to_hgf(moved.composed);

  rep.checks.push_back(check_le("solver_converged", before.converged && after.converged ? 0.0 : 1.0, 0.0, 0.0));
  if (hypothesis) {
    rep.checks.push_back(check_le("relocated_not_larger", after.lambda, before.lambda, opts.equal_tol));
    if (a1 > opts.zero_tol) {
      rep.checks.push_back(check_lt("strict_decrease", after.lambda, before.lambda, opts.strict_slack));
    } else {
      rep.checks.push_back(skipped("strict_decrease", "x_{v1} = x_{v2} = 0"));
    }
  } else {
    rep.checks.push_back(skipped("relocated_not_larger", "HypothesisNotMet: |x_v1| < |x_v2|"));
  }
  if (isomorphic) {
    rep.checks.push_back(check_near("isomorphic_equal", after.lambda, before.lambda, opts.equal_tol));
  }
  return rep;
}

LabReport gst_scan(const Hypergraph& g0, Vertex u, int total, const LabOptions& opts) {
  require_non_odd_bipartite(g0, "G0");
  if (!g0.contains(u)) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (total < 0) throw Error(Errc::InvalidArgument, "total must be >= 0");

  struct Row {
    int s, t;
    EigenResult eig;
  };
  std::vector<Row> rows;
  for (int t = 0; 2 * t <= total; ++t) {
    const int s = total - t;
    rows.push_back({s, t, solve(build_gst(g0, u, s, t), opts.solver)});
  }

  LabReport rep;
  rep.name = "gst-scan";
  rep.instance_hgf = to_hgf(g0);
  rep.data["vertex"] = u;
  rep.data["total"] = total;
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["s"] = r.s;
    row["t"] = r.t;
    row["lambda"] = r.eig.lambda;
    row["abs_x_u"] = std::abs(r.eig.x[u]);
    row["converged"] = r.eig.converged;
    table.push_back(std::move(row));
  }
  rep.data["table"] = std::move(table);

  const double chain_end = rows.front().eig.lambda;  // (total, 0)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    rep.checks.push_back(check_le("converged(" + std::to_string(r.s) + "," + std::to_string(r.t) + ")",
                                  r.eig.converged ? 0.0 : 1.0, 0.0, 0.0));
    if (r.t == 0) continue;
    const std::string tag = "(" + std::to_string(r.s) + "," + std::to_string(r.t) + ")";
    const auto& shifted = rows[i - 1];  // (s+1, t-1)
    if (std::abs(r.eig.x[u]) > opts.zero_tol) {
      rep.checks.push_back(check_lt("shift_decreases" + tag, shifted.eig.lambda, r.eig.lambda, opts.strict_slack));
      rep.checks.push_back(check_lt("path_minimal" + tag, chain_end, r.eig.lambda, opts.strict_slack));
    } else {
      rep.checks.push_back(skipped("shift_decreases" + tag, "x_u is zero"));
      rep.checks.push_back(check_le("path_minimal" + tag, chain_end, r.eig.lambda, opts.equal_tol));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

LabReport bounds_report(const Coalescence& p, const LabOptions& opts) {
  require_odd_bipartite_branch(p);
  require_non_odd_bipartite(p.composed, "G");
  const auto& g = p.composed;
  const int k = g.uniformity();
  const int n = g.num_vertices();
  const double deg_u = p.base.degree(p.cut);

  LabReport rep;
  rep.name = "bounds";
  rep.instance_hgf = to_hgf(g);

  const auto eig = solve(g, opts.solver);
  rep.data["lambda"] = eig.lambda;
  rep.data["converged"] = eig.converged;

  // Test vector for kε(G0)/ν(G): ±1 from an odd-transversal set T of G0
  // with u ∈ T and an odd-bipartition {U, W} of H with u ∈ U.
  auto transversal = odd_transversal_subhypergraph(p.base);
  Bipartition t = transversal.partition;
  if (!t.contains(p.cut)) t = t.complement();
  const auto h_parts = *find_odd_bipartition(p.branch, p.branch_root);
  std::vector<double> x1(static_cast<std::size_t>(n), -1.0);
  for (Vertex v = 0; v < p.base.num_vertices(); ++v)
    if (t.contains(v)) x1[v] = 1.0;
  for (Vertex v = 0; v < p.branch.num_vertices(); ++v)
    if (h_parts.contains(v)) x1[p.branch_map[v]] = 1.0;
  const double witness1 = q_form(g, x1) / n;

  std::vector<double> x2(static_cast<std::size_t>(n), 0.0);
  for (Vertex v = 0; v < p.branch.num_vertices(); ++v) x2[p.branch_map[v]] = h_parts.contains(v) ? 1.0 : -1.0;
  const double witness2 = q_form(g, x2) / p.branch.num_vertices();

  const double up1 = static_cast<double>(k) * p.base.num_edges() / n;
  const double up2 = deg_u / p.branch.num_vertices();
  const int delta = g.min_degree();
  rep.data["up1"] = up1;
  rep.data["up1_witness"] = witness1;
  rep.data["up2"] = up2;
  rep.data["up2_witness"] = witness2;
  rep.data["min_degree"] = delta;

  rep.checks.push_back(check_le("converged", eig.converged ? 0.0 : 1.0, 0.0, 0.0));
  rep.checks.push_back(check_le("up1_witness_within_bound", witness1, up1, 1e-12));
  rep.checks.push_back(check_le("lambda<=up1", eig.lambda, up1, opts.strict_slack));
  rep.checks.push_back(check_near("up2_witness_attains_bound", witness2, up2, 1e-12));
  rep.checks.push_back(check_le("lambda<=up2", eig.lambda, up2, opts.strict_slack));
  if (is_hypertree(p.branch)) {
    const double up3 = deg_u / ((k - 1.0) * p.branch.num_edges() + 1.0);
    rep.data["up3"] = up3;
    rep.checks.push_back(check_le("lambda<=up3", eig.lambda, up3, opts.strict_slack));
  } else {
    rep.checks.push_back(skipped("lambda<=up3", "branch is not a hypertree"));
  }
  rep.checks.push_back(check_lt("lambda<min_degree", eig.lambda, delta, 0.0));
  rep.data["up2_below_min_degree"] = up2 < delta;

  // λ(G0) >= λ(G), strictly when a first eigenvector of G0 is nonzero at u.
  if (is_connected(p.base) && p.base.num_edges() > 0 && !is_odd_bipartite(p.base)) {
    const auto base_eig = solve(p.base, opts.solver);
    rep.data["lambda_base"] = base_eig.lambda;
    rep.data["abs_y_u"] = std::abs(base_eig.x[p.cut]);
    rep.checks.push_back(check_ge("base_not_smaller", base_eig.lambda, eig.lambda, opts.equal_tol));
    if (std::abs(base_eig.x[p.cut]) > opts.zero_tol) {
      rep.checks.push_back(check_lt("base_strictly_larger", eig.lambda, base_eig.lambda, opts.strict_slack));
    } else {
      rep.checks.push_back(skipped("base_strictly_larger", "y_u is zero"));
    }
  }
  return rep;
}

LabReport limit_scan(const Hypergraph& g0, Vertex u, int m_max, BranchFamily family, const LabOptions& opts) {
  require_non_odd_bipartite(g0, "G0");
  if (!g0.contains(u)) throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(u));
  if (m_max < 0) throw Error(Errc::InvalidArgument, "m_max must be >= 0");
  const int k = g0.uniformity();
  const double deg_u = g0.degree(u);

  LabReport rep;
  rep.name = family == BranchFamily::Path ? "limit-scan" : "limit-scan-star";
  rep.instance_hgf = to_hgf(g0);
  rep.data["vertex"] = u;
  rep.data["family"] = family == BranchFamily::Path ? "hyperpath" : "hyperstar";

  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  double prev = INFINITY;
  for (int m = 0; m <= m_max; ++m) {
    Hypergraph g = g0;
    if (m > 0) {
      g = family == BranchFamily::Path ? coalesce(g0, u, hyperpath(m, k), 0).composed
                                       : coalesce(g0, u, hyperstar(m, k), 0).composed;
    }
    const auto eig = solve(g, opts.solver);
    const double bound = m > 0 ? deg_u / ((k - 1.0) * m + 1.0) : static_cast<double>(g0.min_degree());
    nlohmann::ordered_json row;
    row["m"] = m;
    row["lambda"] = eig.lambda;
    row["bound"] = bound;
    row["margin"] = bound - eig.lambda;
    row["converged"] = eig.converged;
    table.push_back(std::move(row));

    const std::string tag = "(m=" + std::to_string(m) + ")";
    rep.checks.push_back(check_le("converged" + tag, eig.converged ? 0.0 : 1.0, 0.0, 0.0));
    if (m > 0) {
      rep.checks.push_back(check_le("non_increasing" + tag, eig.lambda, prev, opts.strict_slack));
      rep.checks.push_back(check_le("below_bound" + tag, eig.lambda, bound, opts.strict_slack));
    }
    prev = eig.lambda;
  }
  rep.data["final_lambda"] = prev;
  rep.data["table"] = std::move(table);
  return rep;
}

LabReport verify_eigenvector_suite(const Coalescence& p, const LabOptions& opts) {
  require_odd_bipartite_branch(p);

  auto run = [&](const SolverConfig& cfg) {
    const auto eig = solve(p.composed, cfg);
    const auto x = canonical_branch_signs(p, eig.x);
    LabReport rep;
    rep.name = "verify-eigvec";
    rep.instance_hgf = to_hgf(p.composed);
    rep.data["eigen"] = eigen_summary(eig);
    rep.data["x"] = x;
    rep.data["q_form_before_resign"] = q_form(p.composed, eig.x);
    rep.data["q_form_after_resign"] = q_form(p.composed, x);
    append(rep.checks, eig.checks, "eigen:");
    rep.checks.push_back(check_le("eigen:converged", eig.converged ? 0.0 : 1.0, 0.0, 0.0));
    rep.checks.push_back(
        check_near("resign_preserves_q", q_form(p.composed, x), q_form(p.composed, eig.x), 1e-12));

    const auto signs = verify_branch_sign_structure(p, x, eig.lambda, opts);
    append(rep.checks, signs.checks, "signs:");
    rep.data["beta"] = signs.data["beta"];
    rep.data["x_cut"] = signs.data["x_cut"];

    if (is_power_hypertree(p.branch)) {
      append(rep.checks, verify_monotone_growth(p, x, eig.lambda, opts).checks, "growth:");
    }
    if (p.composed.uniformity() >= 4 && is_hyperpath_rooted_at_pendent(p.branch, p.branch_root)) {
      if (std::abs(normalized(x, p.composed.uniformity())[p.cut]) > opts.zero_tol) {
        const auto prof = path_profile(p, x, eig.lambda, opts);
        append(rep.checks, prof.checks, "profile:");
        rep.data["profile"] = {{"entries", prof.entries}, {"predicted", prof.predicted}, {"f", prof.f_values}};
      } else {
        rep.checks.push_back(skipped("profile", "x_r is zero"));
      }
    }
    return rep;
  };

  LabReport rep = run(opts.solver);
  rep.data["retried"] = false;
  if (!rep.passed()) {
    SolverConfig more = opts.solver;
    more.restarts *= opts.retry_factor;
    more.rng_seed = derive_seed(opts.solver.rng_seed, "retry");
    rep = run(more);
    rep.data["retried"] = true;
  }
  return rep;
}

}  // namespace hyperspec
