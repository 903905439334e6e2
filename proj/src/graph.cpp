#include "crystalkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "crystalkit/d4.hpp"
#include "crystalkit/g2.hpp"

namespace crystalkit {

namespace {

void require_finite_kind(const CrystalParams& params) {
  if (params.kind == Kind::BInfinity)
    throw std::invalid_argument("the limit crystal cannot be enumerated");
  if (params.level < 0) throw std::invalid_argument("level must be >= 0");
}

// Plain union-find over node ids.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<Element> apply_f(const CrystalParams& params, int i, const Element& b) {
  switch (params.kind) {
    case Kind::HatD4: return hat_f(i, b, params.level);
    case Kind::G2: return g2_f(i, b, params.level);
    default: throw std::invalid_argument("apply_f: unsupported kind");
  }
}

std::optional<Element> apply_e(const CrystalParams& params, int i, const Element& b) {
  switch (params.kind) {
    case Kind::HatD4: return hat_e(i, b, params.level);
    case Kind::G2: return g2_e(i, b, params.level);
    default: throw std::invalid_argument("apply_e: unsupported kind");
  }
}

int eps_of(const CrystalParams& params, int i, const Element& b) {
  switch (params.kind) {
    case Kind::HatD4: return hat_eps(i, b, params.level);
    case Kind::G2: return g2_eps(i, b, params.level);
    default: throw std::invalid_argument("eps_of: unsupported kind");
  }
}

int phi_of(const CrystalParams& params, int i, const Element& b) {
  switch (params.kind) {
    case Kind::HatD4: return hat_phi(i, b, params.level);
    case Kind::G2: return g2_phi(i, b, params.level);
    default: throw std::invalid_argument("phi_of: unsupported kind");
  }
}

bool is_member(const CrystalParams& params, const Element& b) {
  switch (params.kind) {
    case Kind::HatD4: return in_hat_crystal(b, params.level);
    case Kind::G2: return in_v(b, params.level);
    default: throw std::invalid_argument("is_member: unsupported kind");
  }
}

int CrystalGraph::node_index(const Element& b) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), b);
  if (it == nodes.end() || *it != b) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::vector<Element> enumerate_elements(const CrystalParams& params) {
  require_finite_kind(params);
  const int bound = params.kind == Kind::G2 ? 3 * params.level : params.level;

  std::vector<Element> out;
  // Nested loops over scaled coordinates bounded by the running partial sum;
  // the loop nesting order matches the canonical lexicographic order.
  for (int x1 = 0; x1 <= bound; ++x1)
    for (int x2 = 0; x1 + x2 <= bound; ++x2)
      for (int x3 = 0; x3 <= 2 * (bound - x1 - x2); ++x3)
        for (int xb3 = (x3 % 2 == 0) ? 0 : 1;
             x1 + x2 + (x3 + xb3) / 2 <= bound; xb3 += 2) {
          const int head = x1 + x2 + (x3 + xb3) / 2;
          for (int xb2 = 0; head + xb2 <= bound; ++xb2)
            for (int xb1 = 0; head + xb2 + xb1 <= bound; ++xb1) {
              const Element b{{x1, x2, x3, xb3, xb2, xb1}};
              if (is_member(params, b)) out.push_back(b);
            }
        }
  return out;
}

CrystalGraph build_graph(const CrystalParams& params) {
  CrystalGraph g;
  g.params = params;
  g.nodes = enumerate_elements(params);
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
    for (int i = 0; i < 3; ++i) {
      if (auto next = apply_f(params, i, g.nodes[u])) {
        const int v = g.node_index(*next);
        if (v < 0) throw std::logic_error("build_graph: operator left the node set");
        g.edges.push_back(Edge{u, v, i});
      }
    }
  }
  return g;
}

std::vector<Element> j_highest(const CrystalGraph& g, const std::vector<int>& kept) {
  std::vector<Element> out;
  for (const Element& b : g.nodes) {
    bool highest = true;
    for (int j : kept) {
      if (apply_e(g.params, j, b)) {
        highest = false;
        break;
      }
    }
    if (highest) out.push_back(b);
  }
  return out;
}

int DecompositionReport::total_size() const {
  int total = 0;
  for (const auto& c : components) total += c.size;
  return total;
}

DecompositionReport decompose(const CrystalGraph& g, const std::vector<int>& kept) {
  for (int j : kept) {
    if (j < 0 || j > 2) throw std::invalid_argument("decompose: label out of range");
  }

  DecompositionReport report;
  report.params = g.params;
  report.kept = kept;
  std::sort(report.kept.begin(), report.kept.end());
  report.kept.erase(std::unique(report.kept.begin(), report.kept.end()), report.kept.end());
  for (int j = 0; j < 3; ++j) {
    if (!std::count(report.kept.begin(), report.kept.end(), j)) report.forgotten.push_back(j);
  }

  const int n = static_cast<int>(g.nodes.size());
  UnionFind uf(n);
  for (const Edge& e : g.edges) {
    if (std::count(report.kept.begin(), report.kept.end(), e.label)) uf.unite(e.from, e.to);
  }

  std::vector<int> size_of_root(n, 0);
  std::vector<int> highest_of_root(n, -1);
  std::vector<int> highest_count(n, 0);
  for (int v = 0; v < n; ++v) {
    const int root = uf.find(v);
    ++size_of_root[root];
    bool highest = true;
    for (int j : report.kept) {
      if (apply_e(g.params, j, g.nodes[v])) {
        highest = false;
        break;
      }
    }
    if (highest) {
      ++highest_count[root];
      if (highest_of_root[root] < 0) highest_of_root[root] = v;
    }
  }

  for (int v = 0; v < n; ++v) {
    if (uf.find(v) != v) continue;
    if (highest_count[v] != 1) {
      throw std::logic_error("decompose: component with " +
                             std::to_string(highest_count[v]) +
                             " highest nodes (operator bug)");
    }
    const Element& h = g.nodes[highest_of_root[v]];
    Weight w;
    for (int j : report.kept) {
      const int phi = phi_of(g.params, j, h);
      if (j == 0) w.k0 = phi;
      if (j == 1) w.k1 = phi;
      if (j == 2) w.k2 = phi;
    }
    report.components.push_back(DecompositionComponent{h, w, size_of_root[v]});
  }

  std::sort(report.components.begin(), report.components.end(),
            [](const DecompositionComponent& a, const DecompositionComponent& b) {
              return a.highest < b.highest;
            });
  return report;
}

int tensor_eps(const CrystalParams& pa, const CrystalParams& pb, int i,
               const Element& left, const Element& right) {
  const int gap = eps_of(pb, i, right) - phi_of(pa, i, left);
  return eps_of(pa, i, left) + std::max(gap, 0);
}

int tensor_phi(const CrystalParams& pa, const CrystalParams& pb, int i,
               const Element& left, const Element& right) {
  const int gap = phi_of(pa, i, left) - eps_of(pb, i, right);
  return phi_of(pb, i, right) + std::max(gap, 0);
}

std::optional<TensorElement> tensor_apply_f(const CrystalParams& pa,
                                            const CrystalParams& pb, int i,
                                            const TensorElement& t) {
  if (phi_of(pa, i, t.first) > eps_of(pb, i, t.second)) {
    const auto next = apply_f(pa, i, t.first);
    if (!next) return std::nullopt;
    return TensorElement{*next, t.second};
  }
  const auto next = apply_f(pb, i, t.second);
  if (!next) return std::nullopt;
  return TensorElement{t.first, *next};
}

std::optional<TensorElement> tensor_apply_e(const CrystalParams& pa,
                                            const CrystalParams& pb, int i,
                                            const TensorElement& t) {
  if (phi_of(pa, i, t.first) >= eps_of(pb, i, t.second)) {
    const auto next = apply_e(pa, i, t.first);
    if (!next) return std::nullopt;
    return TensorElement{*next, t.second};
  }
  const auto next = apply_e(pb, i, t.second);
  if (!next) return std::nullopt;
  return TensorElement{t.first, *next};
}

TensorGraph tensor(const CrystalGraph& a, const CrystalGraph& b) {
  if (a.params.kind != b.params.kind)
    throw std::invalid_argument("tensor: factors must share the algebra kind");

  TensorGraph t;
  t.left_params = a.params;
  t.right_params = b.params;
  const int nb = static_cast<int>(b.nodes.size());
  t.nodes.reserve(a.nodes.size() * b.nodes.size());
  for (const Element& u : a.nodes)
    for (const Element& v : b.nodes) t.nodes.emplace_back(u, v);

  for (int ia = 0; ia < static_cast<int>(a.nodes.size()); ++ia) {
    for (int ib = 0; ib < nb; ++ib) {
      for (int i = 0; i < 3; ++i) {
        const auto next = tensor_apply_f(a.params, b.params, i, t.nodes[ia * nb + ib]);
        if (!next) continue;
        const int la = a.node_index(next->first);
        const int rb = b.node_index(next->second);
        if (la < 0 || rb < 0) throw std::logic_error("tensor: step left the node set");
        t.edges.push_back(Edge{ia * nb + ib, la * nb + rb, i});
      }
    }
  }
  return t;
}

int component_count(int node_count, const std::vector<Edge>& edges,
                    const std::vector<int>& labels) {
  UnionFind uf(node_count);
  for (const Edge& e : edges) {
    if (std::count(labels.begin(), labels.end(), e.label)) uf.unite(e.from, e.to);
  }
  int roots = 0;
  for (int v = 0; v < node_count; ++v) {
    if (uf.find(v) == v) ++roots;
  }
  return roots;
}

std::string export_dot(const CrystalGraph& g) {
  static const char* kColor[3] = {"red", "blue", "green"};
  std::string out;
  out += "digraph crystal {\n";
  out += "  rankdir=TB;\n";
  out += "  node [shape=box];\n";
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    out += "  n" + std::to_string(v) + " [label=\"" + to_text(g.nodes[v]) + "\"];\n";
  }
  for (const Edge& e : g.edges) {
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=" + std::to_string(e.label) + ", color=" + kColor[e.label] + "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["params"] = {{"kind", kind_name(g.params.kind)}, {"level", g.params.level}};
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const Element& b : g.nodes) {
    nodes.push_back({{"x", b.x}, {"scale", 3}});
  }
  auto& edges = j["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges) {
    edges.push_back({e.from, e.to, e.label});
  }
  return j.dump(2) + "\n";
}

CrystalGraph parse_graph_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  CrystalGraph g;
  g.params.kind = kind_from_name(j.at("params").at("kind").get<std::string>());
  g.params.level = j.at("params").at("level").get<int>();
  for (const auto& node : j.at("nodes")) {
    if (node.at("scale").get<int>() != 3)
      throw std::invalid_argument("parse_graph_json: unsupported scale");
    Element b;
    b.x = node.at("x").get<std::array<int, 6>>();
    g.nodes.push_back(b);
  }
  for (const auto& edge : j.at("edges")) {
    g.edges.push_back(Edge{edge.at(0).get<int>(), edge.at(1).get<int>(), edge.at(2).get<int>()});
  }
  return g;
}

}  // namespace crystalkit
