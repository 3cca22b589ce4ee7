#include "afspec/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <limits>

namespace afspec::kernels {

bool pairwise_directed(const Skeleton& host, const NodeSet& quotient) {
  for (auto x = quotient.find_first(); x != NodeSet::npos; x = quotient.find_next(x)) {
    const NodeSet reach = host.down[x] & quotient;
    for (auto y = quotient.find_next(x); y != NodeSet::npos; y = quotient.find_next(y))
      if (!reach.intersects(host.down[y])) return false;
  }
  return true;
}

bool common_descendant(const Skeleton& host, const NodeSet& quotient) {
  NodeSet common = host.empty_set().flip();
  for (auto x = quotient.find_first(); x != NodeSet::npos; x = quotient.find_next(x)) {
    common &= host.down[x];
    if (common.none()) return false;
  }
  return true;
}

namespace {

IdealVerdict classify_one(const Skeleton& host, const NodeSet& members) {
  const NodeSet quotient = host.inner - members;
  if (quotient.none()) return {false, true};
  return {pairwise_directed(host, quotient), common_descendant(host, quotient)};
}

}  // namespace

std::vector<IdealVerdict> classify_serial(const Skeleton& host, std::span<const NodeSet> ideals) {
  std::vector<IdealVerdict> out(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) out[i] = classify_one(host, ideals[i]);
  return out;
}

std::vector<IdealVerdict> classify_parallel(const Skeleton& host, std::span<const NodeSet> ideals) {
  std::vector<IdealVerdict> out(ideals.size());
  const auto n = static_cast<std::int64_t>(ideals.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = classify_one(host, ideals[static_cast<std::size_t>(i)]);
  return out;
}

std::optional<std::size_t> first_failure_serial(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (!pred(i)) return i;
  return std::nullopt;
}

std::optional<std::size_t> first_failure_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k < best && !pred(k)) best = k;
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

}  // namespace afspec::kernels
