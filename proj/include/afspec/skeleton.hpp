#pragma once

#include "afspec/diagram.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace afspec {

using NodeSet = boost::dynamic_bitset<>;

/// Finite reachability graph on which the ideal lattice and the spectrum are
/// computed.
///
/// For a finite diagram the nodes are its vertices. For a periodic diagram
/// the nodes are column instances: since every column continues forever and
/// links persist once both ends exist, every ideal is a union of whole
/// columns, and reachability between columns equals reachability between
/// their deep vertices.
///
/// A node is `persistent` when it never runs out of children (a column, or a
/// childless vertex of a finite diagram, read as continuing past the last
/// level). Saturation never forces a persistent node into an ideal.
///
/// `outer` nodes are periodic columns starting below the horizon that are
/// kept only so that descendant sets are complete; every ideal contains them.
struct Skeleton {
  struct Node {
    std::string name;
    int onset = 1;  ///< level of the node's first vertex
    bool persistent = false;
    bool outer = false;
    std::optional<ColumnInstance> column;  ///< periodic hosts only
  };

  bool periodic = false;
  bool repeating = false;  ///< periodic host with at least one repeating column
  int horizon = 0;
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> children;  ///< without self loops
  std::vector<NodeSet> down;                       ///< reflexive descendants
  std::vector<NodeSet> up;                         ///< reflexive ancestors
  std::vector<std::size_t> bottom_up;              ///< children before parents
  NodeSet inner;                                   ///< complement of the outer nodes
  std::vector<std::string> family_names;           ///< periodic: column names in declaration order

  std::size_t size() const { return nodes.size(); }
  NodeSet empty_set() const { return NodeSet(nodes.size()); }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Throws ModelError for an unknown node name.
  std::size_t index(const std::string& name) const;
  NodeSet from_names(const std::vector<std::string>& names) const;
  std::vector<std::string> names(const NodeSet& s) const;

  /// "Settled" nodes: inner, and every descendant together with all of that
  /// descendant's ancestors is inner. Truncation cannot change the local
  /// structure around them.
  NodeSet settled() const;
};

using SkeletonPtr = std::shared_ptr<const Skeleton>;

/// Default horizon: the diagram's own (see default_horizon).
SkeletonPtr build_skeleton(const BratteliDiagram& d, std::optional<int> horizon = std::nullopt,
                           std::size_t max_nodes = 20000);

}  // namespace afspec
