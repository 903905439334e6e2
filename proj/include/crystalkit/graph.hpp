#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crystalkit/element.hpp"

namespace crystalkit {

// Dispatch on the crystal kind; level is taken from params.
std::optional<Element> apply_f(const CrystalParams& params, int i, const Element& b);
std::optional<Element> apply_e(const CrystalParams& params, int i, const Element& b);
int eps_of(const CrystalParams& params, int i, const Element& b);
int phi_of(const CrystalParams& params, int i, const Element& b);
bool is_member(const CrystalParams& params, const Element& b);

struct Edge {
  int from = 0;
  int to = 0;
  int label = 0;

  auto operator<=>(const Edge&) const = default;
};

// Node set plus one edge per defined f_i application. Nodes are in canonical
// order; edges are sorted by (from, label).
struct CrystalGraph {
  CrystalParams params;
  std::vector<Element> nodes;
  std::vector<Edge> edges;

  int node_index(const Element& b) const;  // -1 if absent
  bool operator==(const CrystalGraph&) const = default;
};

// All members of the crystal, in canonical order, by direct coordinate
// enumeration; no operator is consulted.
std::vector<Element> enumerate_elements(const CrystalParams& params);

CrystalGraph build_graph(const CrystalParams& params);

// Nodes killed by e_j for every j in J.
std::vector<Element> j_highest(const CrystalGraph& g, const std::vector<int>& kept);

struct DecompositionComponent {
  Element highest;
  Weight weight;  // phi_j of the highest element at j in J, zero elsewhere
  int size = 0;
};

// Connected components of the J-labeled subgraph, each with its unique
// J-highest element. A component with zero or several J-highest nodes means
// the operators are buggy and throws std::logic_error.
struct DecompositionReport {
  CrystalParams params;
  std::vector<int> kept;       // J
  std::vector<int> forgotten;  // complement of J
  std::vector<DecompositionComponent> components;  // by highest, canonical order

  int total_size() const;
};

DecompositionReport decompose(const CrystalGraph& g, const std::vector<int>& kept);

// Tensor product of two crystals of the same kind. Node (a, b) has id
// a_index * |B| + b_index; f_i acts on the left factor when
// phi_i(left) > eps_i(right), else on the right, e_i dually with >=.
struct TensorGraph {
  CrystalParams left_params;
  CrystalParams right_params;
  std::vector<std::pair<Element, Element>> nodes;
  std::vector<Edge> edges;
};

TensorGraph tensor(const CrystalGraph& a, const CrystalGraph& b);

using TensorElement = std::pair<Element, Element>;

std::optional<TensorElement> tensor_apply_f(const CrystalParams& pa,
                                            const CrystalParams& pb, int i,
                                            const TensorElement& t);
std::optional<TensorElement> tensor_apply_e(const CrystalParams& pa,
                                            const CrystalParams& pb, int i,
                                            const TensorElement& t);

int tensor_eps(const CrystalParams& pa, const CrystalParams& pb, int i,
               const Element& left, const Element& right);
int tensor_phi(const CrystalParams& pa, const CrystalParams& pb, int i,
               const Element& left, const Element& right);

// Number of connected components of the subgraph with the given edge labels,
// edge direction ignored.
int component_count(int node_count, const std::vector<Edge>& edges,
                    const std::vector<int>& labels);

// DOT digraph, node labels in fraction text form, arrows colored by label
// (0 red, 1 blue, 2 green). Byte-deterministic.
std::string export_dot(const CrystalGraph& g);

// JSON with a params header plus nodes/edges arrays; parse_graph_json is its
// exact inverse.
std::string export_json(const CrystalGraph& g);
CrystalGraph parse_graph_json(const std::string& text);

}  // namespace crystalkit
