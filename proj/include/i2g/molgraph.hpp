#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace i2g {

enum class BondType : std::uint8_t { Single = 0, Double = 1, Triple = 2, Aromatic = 3 };

inline int bond_order_code(BondType t) { return static_cast<int>(t); }

struct AtomNode {
  // Element symbol ("C", "Br", ...), superatom string ("CF3", "t-Bu", ...)
  // or pseudoatom ("R1", "R2", ...).
  std::string label;
  int charge = 0;
  // Normalized image-space position in [0,1]^2, x right, y down.
  std::optional<Eigen::Vector2d> coord;
};

struct BondEdge {
  int u = 0;
  int v = 0;
  BondType type = BondType::Single;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected labeled multigraph minus the "multi": at most one edge per node
// pair, no self loops. Node order is the insertion order; all graph-level
// semantics (equality, canonical form) are defined up to node permutation.
class MolGraph {
 public:
  MolGraph() = default;

  int add_atom(AtomNode a) {
    nodes_.push_back(std::move(a));
    adjacency_dirty_ = true;
    return static_cast<int>(nodes_.size()) - 1;
  }

  int add_atom(const std::string& label, int charge = 0) {
    return add_atom(AtomNode{label, charge, std::nullopt});
  }

  void add_bond(int u, int v, BondType t = BondType::Single) {
    if (u == v) throw GraphError("self loops are not allowed");
    if (u < 0 || v < 0 || u >= num_atoms() || v >= num_atoms())
      throw GraphError("bond endpoint out of range");
    if (has_bond(u, v)) throw GraphError("duplicate bond");
    edges_.push_back(BondEdge{u, v, t});
    adjacency_dirty_ = true;
  }

  int num_atoms() const { return static_cast<int>(nodes_.size()); }
  int num_bonds() const { return static_cast<int>(edges_.size()); }

  const AtomNode& atom(int i) const { return nodes_.at(i); }
  AtomNode& atom(int i) { adjacency_dirty_ = true; return nodes_.at(i); }
  const std::vector<AtomNode>& atoms() const { return nodes_; }
  const std::vector<BondEdge>& bonds() const { return edges_; }

  bool has_bond(int u, int v) const {
    for (const auto& e : edges_)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
    return false;
  }

  std::optional<BondType> bond_between(int u, int v) const {
    for (const auto& e : edges_)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.type;
    return std::nullopt;
  }

  // Neighbor list (target node, bond type), in edge insertion order.
  const std::vector<std::vector<std::pair<int, BondType>>>& adjacency() const {
    if (adjacency_dirty_) {
      adjacency_.assign(nodes_.size(), {});
      for (const auto& e : edges_) {
        adjacency_[e.u].push_back({e.v, e.type});
        adjacency_[e.v].push_back({e.u, e.type});
      }
      adjacency_dirty_ = false;
    }
    return adjacency_;
  }

  int degree(int i) const { return static_cast<int>(adjacency().at(i).size()); }

  bool connected() const;

  // Labels of every connected component's nodes, by BFS from node 0, 1, ...
  std::vector<std::vector<int>> components() const;

  // Reorders nodes: node i of the result is node order[i] of *this.
  // Edges are remapped accordingly.
  MolGraph permuted(const std::vector<int>& order) const;

 private:
  std::vector<AtomNode> nodes_;
  std::vector<BondEdge> edges_;
  mutable std::vector<std::vector<std::pair<int, BondType>>> adjacency_;
  mutable bool adjacency_dirty_ = true;
};

// Priority order driving canonical serialization: iterative neighborhood
// refinement seeded with (label, charge, degree); remaining ties broken by
// individualization, choosing the candidate that minimizes the serialized
// string. Deterministic and invariant under input node permutation.
std::vector<int> canonical_priorities(const MolGraph& g);

// Canonical node ranking: rank[i] is the position of node i in the canonical
// serialization (so the rank-0 node is written first). A permutation of
// 0..n-1, invariant under input node permutation.
std::vector<int> canonical_ranks(const MolGraph& g);

bool graphs_equal(const MolGraph& a, const MolGraph& b);

// Relabels degree-1 carbons with tokens from `lexicon`, each independently
// with probability `prob`. Topology, charges and all other labels unchanged.
MolGraph substitute_superatoms(const MolGraph& g, std::uint64_t rng_seed, double prob,
                               const std::vector<std::string>& lexicon);

}  // namespace i2g
