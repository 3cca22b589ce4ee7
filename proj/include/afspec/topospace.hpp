#pragma once

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace afspec {

struct PrimSpace;

using PointSet = boost::dynamic_bitset<>;
using Rational = boost::multiprecision::cpp_rational;

/// Finite topological space given by the minimal open neighbourhood of each
/// point (every finite space is Alexandrov). y lies in the closure of {x}
/// iff x ∈ minopen(y); open sets are exactly the up-closed sets.
class FiniteTopSpace {
 public:
  FiniteTopSpace() = default;
  /// Throws ModelError unless x ∈ minopen(x) and minopen is transitive.
  FiniteTopSpace(std::vector<std::string> names, std::vector<PointSet> minopen);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  const PointSet& minopen(std::size_t x) const { return minopen_[x]; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet full_set() const { return PointSet(size()).flip(); }
  PointSet set_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(const PointSet& s) const;
  /// "{a,b,c}" in point order.
  std::string format(const PointSet& s) const;

  PointSet closure(const PointSet& s) const;
  PointSet closure_of(std::size_t x) const;
  PointSet interior(const PointSet& s) const;
  bool is_open(const PointSet& s) const;
  bool is_closed(const PointSet& s) const;
  /// No two distinct points have the same closure.
  bool is_t0() const;

  /// Classes of the equivalence generated by specialization, each sorted,
  /// ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
  std::vector<std::size_t> component_index() const;

  friend bool operator==(const FiniteTopSpace&, const FiniteTopSpace&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<PointSet> minopen_;
};

/// Hull-kernel topology on the points of a primitive spectrum.
FiniteTopSpace from_prim_space(const PrimSpace& space);

enum class Exec { Serial, Parallel };

struct TopVerdict {
  bool value = false;
  std::optional<PointSet> witness;  ///< a failing open set, if any
};

/// Every non-empty open set carries a non-zero continuous function vanishing
/// off it. On a finite space this means every minimal open set contains a
/// whole component (whose indicator is continuous).
TopVerdict is_quasi_completely_regular(const FiniteTopSpace& x, Exec exec = Exec::Parallel);

/// Every non-empty open set contains a closed set with non-empty interior.
/// It suffices to test the minimal open sets U = minopen(x): one needs some y
/// with closure(minopen(y)) ⊆ U.
TopVerdict every_open_has_closed_with_interior(const FiniteTopSpace& x, Exec exec = Exec::Parallel);

struct Regularization {
  FiniteTopSpace quotient;    ///< one point per component, quotient topology
  std::vector<std::size_t> phi;  ///< point -> quotient point
};

Regularization complete_regularization(const FiniteTopSpace& x);

/// Quotient topology on the classes of `phi` (class k gets name `names[k]`).
FiniteTopSpace quotient_space(const FiniteTopSpace& x, const std::vector<std::size_t>& phi,
                              std::vector<std::string> names);

/// φ maps opens to opens. Images commute with unions, so it suffices to test
/// the images of minimal open sets.
TopVerdict is_map_open(const FiniteTopSpace& x, const FiniteTopSpace& y, const std::vector<std::size_t>& phi,
                       Exec exec = Exec::Parallel);

/// f is constant along every specialization pair; on a finite space this is
/// the same as continuity for real-valued f.
bool is_continuous_const_on_components(const FiniteTopSpace& x, const std::vector<Rational>& f);

/// Exhaustive references over the whole open-set family. They throw
/// SizeLimitError past `limit` open sets.
namespace exhaustive {

inline constexpr std::size_t kOpenSetLimit = std::size_t{1} << 20;

std::vector<PointSet> open_sets(const FiniteTopSpace& x, std::size_t limit = kOpenSetLimit);
TopVerdict quasi_completely_regular(const FiniteTopSpace& x, std::size_t limit = kOpenSetLimit);
TopVerdict closed_with_interior(const FiniteTopSpace& x, std::size_t limit = kOpenSetLimit);
TopVerdict map_open(const FiniteTopSpace& x, const FiniteTopSpace& y, const std::vector<std::size_t>& phi,
                    std::size_t limit = kOpenSetLimit);

}  // namespace exhaustive

}  // namespace afspec
