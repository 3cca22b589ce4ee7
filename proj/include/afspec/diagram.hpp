#pragma once

#include "afspec/multiplicity.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace afspec {

struct VertexId {
  std::string name;
  int level = 0;

  /// Canonical order: by (level, name).
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) {
    if (auto c = a.level <=> b.level; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
  }
  friend bool operator==(const VertexId&, const VertexId&) = default;

  /// "name@level"
  std::string str() const { return name + "@" + std::to_string(level); }
};

struct Vertex {
  VertexId id;
  BigInt dim;
  bool terminal = false;
};

struct EdgeSpec {
  VertexId source;
  VertexId target;
  std::uint64_t mult = 1;
};

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::uint64_t mult = 1;
};

/// A Bratteli diagram with finitely many levels. Vertices are stored in
/// (level, name) order and addressed by index in that order.
///
/// A vertex without out-edges (bottom level, or flagged terminal) is read
/// as continuing past the last level: it is never forced into an ideal by
/// saturation.
class FiniteDiagram {
 public:
  FiniteDiagram() = default;
  FiniteDiagram(int levels, std::vector<Vertex> vertices, const std::vector<EdgeSpec>& edges);

  int levels() const { return levels_; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find(const VertexId& id) const;
  /// Throws ModelError for an unknown vertex.
  std::size_t index(const VertexId& id) const;

  /// Out-edges / in-edges of a vertex as indices into edges().
  std::span<const std::size_t> out_edges(std::size_t v) const { return out_[v]; }
  std::span<const std::size_t> in_edges(std::size_t v) const { return in_[v]; }

  /// Vertex index range [first, second) of a level.
  std::pair<std::size_t, std::size_t> level_range(int level) const;

  /// Σ mult(v,w)·dim(v) over the in-edges of w.
  BigInt embedded_dim(std::size_t w) const;

  friend bool operator==(const FiniteDiagram& a, const FiniteDiagram& b);

 private:
  int levels_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

/// One column family of an eventually-periodic diagram. A repeating column
/// has an instance n = 1, 2, ... whose first vertex sits at
/// start + period·(n-1); a `once` column has the single instance n = 1.
/// Every instance continues forever with a vertical edge of multiplicity
/// `self_mult`.
struct Column {
  std::string name;
  int start = 1;
  std::optional<BigInt> dim;  ///< first-vertex dim; defaults to the embedded dim
  std::uint64_t self_mult = 1;
  BigInt extra = 0;  ///< dim(x@l+1) = embedded dim + extra
  bool repeat = true;

  friend bool operator==(const Column&, const Column&) = default;
};

/// Edges source_{n+shift}@l -> target_n@l+1 for every n and l where both
/// vertices exist.
struct Link {
  std::string source;
  int shift = 0;
  std::string target;
  std::uint64_t mult = 1;

  friend bool operator==(const Link&, const Link&) = default;
};

struct ColumnInstance {
  std::size_t column = 0;
  int index = 1;

  friend auto operator<=>(const ColumnInstance&, const ColumnInstance&) = default;
};

/// Eventually-periodic Bratteli diagram: levels 1..preamble form the
/// preamble, after which shifting by `period` levels maps every column
/// instance n to instance n+1.
class PeriodicDiagram {
 public:
  PeriodicDiagram() = default;
  PeriodicDiagram(int preamble, int period, std::vector<Column> columns, std::vector<Link> links);

  int preamble() const { return preamble_; }
  int period() const { return period_; }
  std::span<const Column> columns() const { return columns_; }
  std::span<const Link> links() const { return links_; }
  std::optional<std::size_t> find_column(const std::string& name) const;

  bool exists(const ColumnInstance& c) const;
  int top(const ColumnInstance& c) const;
  std::string instance_name(const ColumnInstance& c) const;
  /// Parses "a_3" (repeating) or "a" (once).
  std::optional<ColumnInstance> parse_instance(const std::string& name) const;

  struct Arc {
    ColumnInstance other;
    std::uint64_t mult;
  };
  std::vector<Arc> parents(const ColumnInstance& c) const;
  std::vector<Arc> children(const ColumnInstance& c) const;

  /// All instances whose first vertex lies at or above `horizon`.
  std::vector<ColumnInstance> instances_up_to(int horizon) const;

  friend bool operator==(const PeriodicDiagram&, const PeriodicDiagram&) = default;

 private:
  int preamble_ = 0;
  int period_ = 1;
  std::vector<Column> columns_;
  std::vector<Link> links_;
};

using BratteliDiagram = std::variant<FiniteDiagram, PeriodicDiagram>;

inline bool is_periodic(const BratteliDiagram& d) {
  return std::holds_alternative<PeriodicDiagram>(d);
}

/// Finite: its level count. Periodic: preamble + 2·period.
int default_horizon(const BratteliDiagram& d);

/// Finite diagram identical to `d` on levels 1..horizon.
FiniteDiagram unroll(const BratteliDiagram& d, int horizon);

/// Vertices reachable from `v` (including `v`) within levels <= horizon,
/// in canonical order.
std::vector<VertexId> descendants(const BratteliDiagram& d, const VertexId& v, int horizon);

/// Σ over directed paths v -> w of the product of edge multiplicities.
Multiplicity descendant_multiplicity(const BratteliDiagram& d, const VertexId& v,
                                     const VertexId& w);

}  // namespace afspec
