#pragma once

#include "afspec/diagram.hpp"
#include "afspec/skeleton.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace afspec {

/// A closed two-sided ideal, represented by its ideal subdiagram on a host
/// skeleton. On periodic hosts the outer nodes (columns starting below the
/// horizon) are always members.
class IdealDiagram {
 public:
  /// Unchecked; use make_ideal to validate.
  IdealDiagram(SkeletonPtr host, NodeSet members);

  const Skeleton& host() const { return *host_; }
  const SkeletonPtr& host_ptr() const { return host_; }
  const NodeSet& members() const { return members_; }
  /// Inner nodes outside the ideal: the quotient's diagram.
  NodeSet complement() const;
  std::vector<std::string> vertices() const;
  std::vector<std::string> quotient_vertices() const;
  std::size_t size() const;
  bool is_full() const { return complement().none(); }
  /// First level carrying a member vertex (horizon + 1 when none).
  int onset() const;

  friend bool operator==(const IdealDiagram& a, const IdealDiagram& b) {
    return a.host_ == b.host_ && a.members_ == b.members_;
  }

 private:
  SkeletonPtr host_;
  NodeSet members_;
};

struct IdealCheck {
  bool ok = true;
  std::string violation;  ///< first violated condition, empty when ok
  explicit operator bool() const { return ok; }
};

/// Descendant-closed and saturated (and, on periodic hosts, containing the
/// outer nodes).
IdealCheck is_ideal_subdiagram(const Skeleton& host, const NodeSet& s);
IdealCheck is_ideal_subdiagram(const Skeleton& host, const std::vector<std::string>& vertices);

/// Throws ModelError with the violated condition.
IdealDiagram make_ideal(SkeletonPtr host, NodeSet members);
IdealDiagram make_ideal(SkeletonPtr host, const std::vector<std::string>& vertices);

IdealDiagram zero_ideal(SkeletonPtr host);
IdealDiagram full_ideal(SkeletonPtr host);

/// Smallest ideal diagram containing `seed`.
IdealDiagram ideal_closure(SkeletonPtr host, const NodeSet& seed);

inline constexpr std::size_t kDefaultIdealCap = 100000;

/// Every ideal diagram of the host, sorted by (vertex count, lexicographic
/// node order). Throws SizeLimitError above `cap` ideals.
std::vector<IdealDiagram> enumerate_ideals(SkeletonPtr host, std::size_t cap = kDefaultIdealCap);

/// True iff `inner` ⊆ `outer`.
bool contains(const IdealDiagram& outer, const IdealDiagram& inner);
IdealDiagram intersect(const IdealDiagram& a, const IdealDiagram& b);

/// Diagram of the quotient algebra. `d` must be the diagram the ideal's host
/// was built from. Periodic hosts yield a diagram of `once` columns (or the
/// empty diagram for the full ideal).
BratteliDiagram quotient_diagram(const BratteliDiagram& d, const IdealDiagram& e);

/// Intersection of a nonempty class of ideals on one host.
IdealDiagram glimm_ideal_of_class(const std::vector<IdealDiagram>& members);

/// Index of the unique Glimm ideal contained in `e`, if any. Throws
/// ModelError if more than one Glimm ideal is contained in `e`.
std::optional<std::size_t> semi_glimm_witness(const IdealDiagram& e,
                                              const std::vector<IdealDiagram>& glimm_ideals);
inline bool is_semi_glimm(const IdealDiagram& e, const std::vector<IdealDiagram>& glimm_ideals) {
  return semi_glimm_witness(e, glimm_ideals).has_value();
}

}  // namespace afspec
