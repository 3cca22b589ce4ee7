#pragma once

#include "afspec/skeleton.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

/// Data-parallel inner loops. Every parallel kernel has a serial twin with
/// the same contract; tests compare them and bench_kernels times them.
namespace afspec::kernels {

/// Every two nodes of `quotient` share a descendant inside `quotient`.
bool pairwise_directed(const Skeleton& host, const NodeSet& quotient);

/// All nodes of `quotient` share one descendant somewhere in the host.
bool common_descendant(const Skeleton& host, const NodeSet& quotient);

struct IdealVerdict {
  bool primitive = false;
  bool primal = false;
  friend bool operator==(const IdealVerdict&, const IdealVerdict&) = default;
};

/// Verdicts for ideals given by their member sets. The full ideal is
/// primal and not primitive.
std::vector<IdealVerdict> classify_serial(const Skeleton& host, std::span<const NodeSet> ideals);
std::vector<IdealVerdict> classify_parallel(const Skeleton& host, std::span<const NodeSet> ideals);

/// Smallest index in [0, n) where `pred` is false, or nullopt.
std::optional<std::size_t> first_failure_serial(std::size_t n, const std::function<bool(std::size_t)>& pred);
std::optional<std::size_t> first_failure_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace afspec::kernels
