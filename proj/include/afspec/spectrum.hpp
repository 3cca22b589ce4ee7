#pragma once

#include "afspec/diagram.hpp"
#include "afspec/ideal_lattice.hpp"
#include "afspec/skeleton.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace afspec {

/// Every two quotient vertices share a descendant inside the quotient.
/// Throws ModelError for the full ideal.
bool is_primitive(const IdealDiagram& e);

/// Every finite set of quotient vertices shares a descendant in the host.
/// The full ideal is primal.
bool is_primal(const IdealDiagram& e);

/// Primitive ideals, generated directly: their quotients are exactly the
/// ancestor sets of persistent nodes.
std::vector<IdealDiagram> primitive_ideals(SkeletonPtr host);
/// Same set, by filtering the full ideal enumeration.
std::vector<IdealDiagram> primitive_ideals_by_enumeration(SkeletonPtr host,
                                                          std::size_t cap = kDefaultIdealCap);

/// Minimal primal ideals, generated directly from maximal ancestor sets.
std::vector<IdealDiagram> minimal_primals(SkeletonPtr host);
/// Same set, by filtering the full ideal enumeration.
std::vector<IdealDiagram> minimal_primals_by_enumeration(SkeletonPtr host,
                                                         std::size_t cap = kDefaultIdealCap);

/// A periodic family of ideals: the quotient columns relative to the
/// smallest instance index, e.g. {e,g,h,a'} for {e_n, g_n, h_n, a_{n+1}}.
struct IdealFamily {
  std::string label;     ///< P, Q, R, ... in canonical order
  std::string quotient;  ///< "{a,c,d,e}"
  std::vector<std::pair<int, std::size_t>> key;  ///< (instance offset, column)
};

struct SpectrumPoint {
  std::string name;  ///< "Q_2" (periodic) or the generating vertex (finite)
  IdealDiagram ideal;
  std::optional<std::size_t> family;  ///< index into families (periodic)
  int instance = 1;
};

/// Primitive spectrum with the hull-kernel specialization order:
/// Q lies in the closure of {P} iff Q ⊇ P.
///
/// On periodic hosts only points whose quotient columns are settled are
/// kept, so boundary artefacts of the horizon never appear.
struct PrimSpace {
  SkeletonPtr host;
  std::vector<SpectrumPoint> points;
  std::vector<IdealFamily> families;
  /// Periodic: instance indices at which every family has a point.
  std::vector<int> complete_instances;

  bool periodic() const { return host->periodic; }
  std::optional<std::size_t> find(const std::string& name) const;
};

PrimSpace prim_space(SkeletonPtr host);

/// Same as prim_space, keeping only the given ideals (which must be primitive).
PrimSpace prim_space(SkeletonPtr host, const std::vector<IdealDiagram>& ideals);

/// Labels an arbitrary list of ideals with the periodic family scheme used
/// for points (labels are assigned in key order, starting at `first_label`).
std::vector<IdealFamily> label_families(const Skeleton& host, const std::vector<IdealDiagram>& ideals,
                                        std::vector<std::optional<std::size_t>>& family_of,
                                        std::vector<int>& instance_of, char first_label = 'P');

/// {Q : Q ⊇ P}, as point indices, the point itself first and the rest in
/// point order. Throws ModelError for an unknown point.
std::vector<std::size_t> closure_of(const PrimSpace& space, std::size_t point);
std::vector<std::size_t> closure_of(const PrimSpace& space, const std::string& point);

struct GlimmPartition {
  std::vector<std::vector<std::size_t>> classes;  ///< point indices
  std::vector<IdealDiagram> class_ideals;
  /// Points the partition was computed on: complete periods plus the
  /// closures of their points (all points on finite hosts).
  std::vector<std::size_t> window;
  /// One class, and on periodic hosts it spans at least two complete periods.
  bool single_stable = false;
};

/// Connected components of the undirected specialization graph.
GlimmPartition glimm_classes(const PrimSpace& space);

struct UnitalVerdict {
  bool unital = false;
  std::string witness;
};

/// Finite: always unital. Periodic: decided on one period past the
/// transient, since non-unital steps recur with the period.
UnitalVerdict is_unital(const BratteliDiagram& d);

/// Unitality of the quotient. Throws ModelError for the full ideal.
UnitalVerdict is_modular(const BratteliDiagram& d, const IdealDiagram& e);

enum class Tri { True, False, Unknown };
std::string to_string(Tri t);

struct PostliminalVerdict {
  Tri value = Tri::Unknown;
  std::string witness;
};

/// Every connected sequence eventually moves along multiplicity-one edges.
PostliminalVerdict is_postliminal(const BratteliDiagram& d);

enum class CenterKind { NonzeroUnital, ZeroCenter, Inconclusive };
std::string to_string(CenterKind k);

struct CenterVerdict {
  CenterKind kind = CenterKind::Inconclusive;
  UnitalVerdict unital;
  std::size_t glimm_class_count = 0;
  bool period_stable = false;
  std::vector<int> checked_horizons;
  GlimmPartition partition;  ///< at the first checked horizon
  std::vector<std::string> class_names;  ///< names of the points per class, joined
};

/// NonzeroUnital when unital; ZeroCenter when non-unital and every
/// continuous function on the spectrum is constant at two consecutive
/// horizons; Inconclusive otherwise.
CenterVerdict center_verdict(const BratteliDiagram& d, std::optional<int> horizon = std::nullopt);

}  // namespace afspec
