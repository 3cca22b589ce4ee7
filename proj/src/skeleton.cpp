#include "afspec/skeleton.hpp"

#include "afspec/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace afspec {

std::optional<std::size_t> Skeleton::find(const std::string& name) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return i;
  return std::nullopt;
}

std::size_t Skeleton::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw ModelError("unknown vertex " + name);
}

NodeSet Skeleton::from_names(const std::vector<std::string>& names) const {
  NodeSet s = empty_set();
  for (const auto& n : names) s.set(index(n));
  return s;
}

std::vector<std::string> Skeleton::names(const NodeSet& s) const {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != NodeSet::npos; i = s.find_next(i)) out.push_back(nodes[i].name);
  return out;
}

NodeSet Skeleton::settled() const {
  NodeSet out = empty_set();
  for (std::size_t v = 0; v < size(); ++v) {
    if (!inner.test(v)) continue;
    bool ok = true;
    for (auto d = down[v].find_first(); ok && d != NodeSet::npos; d = down[v].find_next(d))
      ok = up[d].is_subset_of(inner);
    if (ok) out.set(v);
  }
  return out;
}

namespace {

void finish(Skeleton& s) {
  const std::size_t n = s.nodes.size();
  // Kahn's algorithm on the reversed graph: sinks first.
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t v = 0; v < n; ++v) {
    pending[v] = s.children[v].size();
    for (std::size_t c : s.children[v]) parents[c].push_back(v);
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (pending[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    const std::size_t v = ready.front();
    ready.pop_front();
    s.bottom_up.push_back(v);
    for (std::size_t p : parents[v])
      if (--pending[p] == 0) ready.push_back(p);
  }
  if (s.bottom_up.size() != n) throw ModelError("diagram graph has a cycle");

  s.down.assign(n, NodeSet(n));
  for (std::size_t v : s.bottom_up) {
    s.down[v].set(v);
    for (std::size_t c : s.children[v]) s.down[v] |= s.down[c];
  }
  s.up.assign(n, NodeSet(n));
  for (auto it = s.bottom_up.rbegin(); it != s.bottom_up.rend(); ++it) {
    const std::size_t v = *it;
    s.up[v].set(v);
    for (std::size_t p : parents[v]) s.up[v] |= s.up[p];
  }
  s.inner = NodeSet(n);
  for (std::size_t v = 0; v < n; ++v)
    if (!s.nodes[v].outer) s.inner.set(v);
}

SkeletonPtr from_finite(const FiniteDiagram& f) {
  auto s = std::make_shared<Skeleton>();
  s->horizon = f.levels();
  s->nodes.resize(f.size());
  s->children.resize(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) {
    s->nodes[v].name = f.vertex(v).id.str();
    s->nodes[v].onset = f.vertex(v).id.level;
    for (std::size_t e : f.out_edges(v)) s->children[v].push_back(f.edges()[e].target);
    s->nodes[v].persistent = s->children[v].empty();
  }
  finish(*s);
  return s;
}

SkeletonPtr from_periodic(const PeriodicDiagram& d, int horizon, std::size_t max_nodes) {
  std::set<ColumnInstance> inner;
  std::deque<ColumnInstance> queue;
  for (const auto& c : d.instances_up_to(horizon))
    if (inner.insert(c).second) queue.push_back(c);
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (const auto& arc : d.parents(c)) {
      if (inner.insert(arc.other).second) {
        if (inner.size() > max_nodes) throw SizeLimitError("skeleton exceeds " + std::to_string(max_nodes) + " columns");
        queue.push_back(arc.other);
      }
    }
  }
  std::set<ColumnInstance> all = inner;
  for (const auto& c : inner) queue.push_back(c);
  while (!queue.empty()) {
    const auto c = queue.front();
    queue.pop_front();
    for (const auto& arc : d.children(c)) {
      if (all.insert(arc.other).second) {
        if (all.size() > max_nodes) throw SizeLimitError("skeleton exceeds " + std::to_string(max_nodes) + " columns");
        queue.push_back(arc.other);
      }
    }
  }

  std::vector<ColumnInstance> order(all.begin(), all.end());
  std::sort(order.begin(), order.end(), [&](const ColumnInstance& a, const ColumnInstance& b) {
    const int ta = d.top(a), tb = d.top(b);
    if (ta != tb) return ta < tb;
    return d.instance_name(a) < d.instance_name(b);
  });
  std::map<ColumnInstance, std::size_t> slot;
  for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;

  auto s = std::make_shared<Skeleton>();
  s->periodic = true;
  for (const Column& c : d.columns()) s->repeating = s->repeating || c.repeat;
  s->horizon = horizon;
  for (const Column& c : d.columns()) s->family_names.push_back(c.name);
  s->nodes.resize(order.size());
  s->children.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto& node = s->nodes[i];
    node.name = d.instance_name(order[i]);
    node.onset = d.top(order[i]);
    node.persistent = true;
    node.outer = inner.count(order[i]) == 0;
    node.column = order[i];
    for (const auto& arc : d.children(order[i])) {
      auto it = slot.find(arc.other);
      if (it != slot.end()) s->children[i].push_back(it->second);
    }
    std::sort(s->children[i].begin(), s->children[i].end());
  }
  finish(*s);
  return s;
}

}  // namespace

SkeletonPtr build_skeleton(const BratteliDiagram& d, std::optional<int> horizon, std::size_t max_nodes) {
  const int h = horizon.value_or(default_horizon(d));
  if (const auto* f = std::get_if<FiniteDiagram>(&d)) {
    if (h == f->levels()) return from_finite(*f);
    return from_finite(unroll(d, h));
  }
  if (h < 1) throw ModelError("horizon must be at least 1");
  return from_periodic(std::get<PeriodicDiagram>(d), h, max_nodes);
}

}  // namespace afspec
