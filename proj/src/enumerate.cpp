#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "hyperspec/canonical.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hgf.hpp"
#include "hyperspec/lab.hpp"

namespace hyperspec {

namespace {

// Base vertex each attached edge hangs from, following parents back to G0.
std::vector<Vertex> attachment_roots(const Hypergraph& g, int base_vertices, int base_edges) {
  std::vector<Vertex> owner(static_cast<std::size_t>(g.num_vertices()), -1);
  for (Vertex v = 0; v < base_vertices; ++v) owner[v] = v;
  std::vector<Vertex> roots;
  // Grown edges always list their old vertex first in creation order, so a
  // fixed-point sweep settles ownership.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int id = base_edges; id < g.num_edges(); ++id) {
      Vertex o = -1;
      for (Vertex v : g.edge(id))
        if (owner[v] >= 0) o = owner[v];
      if (o < 0) continue;
      for (Vertex v : g.edge(id)) {
        if (owner[v] < 0) {
          owner[v] = o;
          changed = true;
        }
      }
    }
  }
  for (int id = base_edges; id < g.num_edges(); ++id) roots.push_back(owner[g.edge(id).front()]);
  return roots;
}

std::string describe(const Hypergraph& g, int base_vertices, int base_edges) {
  if (g.num_edges() == base_edges) return "G0";
  const auto roots = attachment_roots(g, base_vertices, base_edges);
  std::map<Vertex, int> count;
  for (Vertex r : roots) ++count[r];
  std::string s;
  for (auto [v, c] : count) {
    // Sub-hypergraph of the edges hanging at v, to name its shape.
    std::vector<Edge> edges;
    std::map<Vertex, Vertex> ids{{v, 0}};
    for (int id = base_edges; id < g.num_edges(); ++id) {
      if (roots[id - base_edges] != v) continue;
      Edge e;
      for (Vertex w : g.edge(id)) {
        auto [it, fresh] = ids.emplace(w, static_cast<Vertex>(ids.size()));
        e.push_back(it->second);
      }
      edges.push_back(std::move(e));
    }
    const Hypergraph t(g.uniformity(), static_cast<int>(ids.size()), std::move(edges));
    std::string shape = "tree";
    if (is_hyperpath_rooted_at_pendent(t, 0)) {
      shape = "path";
    } else if (t.degree(0) == t.num_edges()) {
      shape = "star";
    } else if (t.max_degree() <= 2 && is_power_hypertree(t)) {
      shape = "path*";  // hyperpath hanging from an inner vertex
    }
    if (!s.empty()) s += " + ";
    s += shape + "(" + std::to_string(c) + ")@" + std::to_string(v);
  }
  return s;
}

}  // namespace

bool is_single_path_attachment(const Hypergraph& g, int base_vertices, int base_edges) {
  if (g.num_edges() <= base_edges) return false;
  std::set<Vertex> touched;
  std::map<Vertex, Vertex> ids;
  std::vector<Edge> edges;
  for (int id = base_edges; id < g.num_edges(); ++id) {
    for (Vertex v : g.edge(id))
      if (v < base_vertices) touched.insert(v);
  }
  if (touched.size() != 1) return false;
  const Vertex u = *touched.begin();
  ids.emplace(u, 0);
  for (int id = base_edges; id < g.num_edges(); ++id) {
    Edge e;
    for (Vertex v : g.edge(id)) {
      auto [it, fresh] = ids.emplace(v, static_cast<Vertex>(ids.size()));
      e.push_back(it->second);
    }
    edges.push_back(std::move(e));
  }
  const Hypergraph t(g.uniformity(), static_cast<int>(ids.size()), std::move(edges));
  return is_connected(t) && is_hyperpath_rooted_at_pendent(t, 0);
}

std::vector<ClassMember> enumerate_class(const Hypergraph& g0, int m, const LabOptions& opts, bool solve,
                                         const EnumerationLimits& limits) {
  if (m < 0) throw Error(Errc::InvalidArgument, "m must be >= 0");
  if (m > limits.max_m) {
    throw Error(Errc::BudgetExceeded, "m = " + std::to_string(m) + " exceeds " + std::to_string(limits.max_m));
  }
  if (g0.num_vertices() > limits.max_base_vertices) {
    throw Error(Errc::BudgetExceeded, "base has " + std::to_string(g0.num_vertices()) + " vertices, limit " +
                                          std::to_string(limits.max_base_vertices));
  }
  if (!is_connected(g0) || g0.num_edges() == 0 || is_odd_bipartite(g0)) {
    throw Error(Errc::InvalidArgument, "G0 must be connected and non-odd-bipartite");
  }

  const int k = g0.uniformity();
  std::vector<Hypergraph> level{g0};
  for (int step = 0; step < m; ++step) {
    std::map<CanonicalForm, Hypergraph> next;
    for (const Hypergraph& g : level) {
      const int n = g.num_vertices();
      for (Vertex v = 0; v < n; ++v) {
        std::vector<Edge> edges = g.edges();
        Edge e{v};
        for (int i = 0; i < k - 1; ++i) e.push_back(n + i);
        edges.push_back(std::move(e));
        Hypergraph grown(k, n + k - 1, std::move(edges));
        next.try_emplace(canonical_form(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [form, g] : next) level.push_back(std::move(g));
  }

  std::vector<ClassMember> out;
  out.reserve(level.size());
  for (Hypergraph& g : level) {
    ClassMember member{std::move(g), g0.num_vertices(), g0.num_edges(), {}, {}};
    member.description = describe(member.graph, member.base_vertices, member.base_edges);
    if (solve) member.eigen = solve_least_eigen(member.graph, opts.solver);
    out.push_back(std::move(member));
  }
  return out;
}

MinimizerResult find_minimizer(const Hypergraph& g0, int m, const LabOptions& opts) {
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be >= 1");
  std::vector<ClassMember> members = enumerate_class(g0, m, opts, true);

  std::size_t best = 0;
  for (std::size_t i = 1; i < members.size(); ++i) {
    if (members[i].eigen.lambda < members[best].eigen.lambda) best = i;
  }
  const double lam_min = members[best].eigen.lambda;
  // Prefer a single-path member among ties so the reported vertex is meaningful.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto& c = members[i];
    if (c.eigen.lambda <= lam_min + opts.equal_tol &&
        is_single_path_attachment(c.graph, c.base_vertices, c.base_edges)) {
      best = i;
      break;
    }
  }
  const ClassMember& chosen = members[best];

  LabReport rep;
  rep.name = "minimize-class";
  rep.instance_hgf = to_hgf(g0);
  rep.data["m"] = m;
  rep.data["class_size"] = members.size();
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  int idx = 0;
  for (const auto& c : members) {
    nlohmann::ordered_json row;
    row["description"] = c.description;
    row["lambda"] = c.eigen.lambda;
    row["converged"] = c.eigen.converged;
    row["single_path"] = is_single_path_attachment(c.graph, c.base_vertices, c.base_edges);
    table.push_back(std::move(row));

    const std::string tag = "[" + std::to_string(idx++) + "]";
    rep.checks.push_back(check_le("converged" + tag, c.eigen.converged ? 0.0 : 1.0, 0.0, 0.0));
    if (c.eigen.lambda <= lam_min + opts.equal_tol) {
      const bool path = is_single_path_attachment(c.graph, c.base_vertices, c.base_edges);
      Check chk = check_le("minimizer_is_single_path" + tag, path ? 0.0 : 1.0, 0.0, 0.0);
      chk.note = c.description;
      rep.checks.push_back(std::move(chk));
    }
  }
  rep.data["members"] = std::move(table);
  rep.data["lambda_min"] = lam_min;
  rep.data["best"] = chosen.description;
  rep.data["best_hgf"] = to_hgf(chosen.graph);
  const auto roots = attachment_roots(chosen.graph, chosen.base_vertices, chosen.base_edges);
  if (!roots.empty()) rep.data["attachment_vertex"] = roots.front();
  return MinimizerResult{chosen, std::move(members), std::move(rep)};
}

}  // namespace hyperspec
