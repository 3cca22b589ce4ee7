#include "afspec/ideal_lattice.hpp"

#include "afspec/error.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace afspec {

IdealDiagram::IdealDiagram(SkeletonPtr host, NodeSet members)
    : host_(std::move(host)), members_(std::move(members)) {}

NodeSet IdealDiagram::complement() const { return host_->inner - members_; }

std::vector<std::string> IdealDiagram::vertices() const { return host_->names(members_ & host_->inner); }

std::vector<std::string> IdealDiagram::quotient_vertices() const { return host_->names(complement()); }

std::size_t IdealDiagram::size() const { return (members_ & host_->inner).count(); }

int IdealDiagram::onset() const {
  int best = host_->horizon + 1;
  const NodeSet m = members_ & host_->inner;
  for (auto i = m.find_first(); i != NodeSet::npos; i = m.find_next(i))
    best = std::min(best, host_->nodes[i].onset);
  return best;
}

IdealCheck is_ideal_subdiagram(const Skeleton& host, const NodeSet& s) {
  if (s.size() != host.size()) return {false, "vertex set belongs to a different host"};
  for (std::size_t v = 0; v < host.size(); ++v) {
    const auto& node = host.nodes[v];
    if (s.test(v)) {
      for (std::size_t c : host.children[v])
        if (!s.test(c))
          return {false, "not descendant-closed: " + host.nodes[c].name + " is a descendant of " +
                             node.name + " but not a member"};
      continue;
    }
    if (node.outer) return {false, "periodic ideals contain every column below the horizon; " + node.name + " is missing"};
    if (node.persistent) continue;
    const bool all_in = std::all_of(host.children[v].begin(), host.children[v].end(),
                                    [&](std::size_t c) { return s.test(c); });
    if (all_in) return {false, "not saturated: every descendant of " + node.name + " is a member but it is not"};
  }
  return {};
}

IdealCheck is_ideal_subdiagram(const Skeleton& host, const std::vector<std::string>& vertices) {
  NodeSet s = host.empty_set();
  for (const auto& name : vertices) {
    auto i = host.find(name);
    if (!i) return {false, "vertex " + name + " is not in the diagram"};
    s.set(*i);
  }
  if (host.periodic) s |= host.empty_set().flip() - host.inner;
  return is_ideal_subdiagram(host, s);
}

IdealDiagram make_ideal(SkeletonPtr host, NodeSet members) {
  if (auto check = is_ideal_subdiagram(*host, members); !check)
    throw ModelError("not an ideal diagram: " + check.violation);
  return IdealDiagram(std::move(host), std::move(members));
}

IdealDiagram make_ideal(SkeletonPtr host, const std::vector<std::string>& vertices) {
  NodeSet s = host->from_names(vertices);
  s |= host->empty_set().flip() - host->inner;
  return make_ideal(std::move(host), std::move(s));
}

IdealDiagram zero_ideal(SkeletonPtr host) {
  NodeSet s = host->empty_set().flip() - host->inner;
  return IdealDiagram(std::move(host), std::move(s));
}

IdealDiagram full_ideal(SkeletonPtr host) {
  NodeSet s = host->empty_set().flip();
  return IdealDiagram(std::move(host), std::move(s));
}

IdealDiagram ideal_closure(SkeletonPtr host, const NodeSet& seed) {
  const Skeleton& h = *host;
  if (seed.size() != h.size()) throw ModelError("seed belongs to a different host");
  NodeSet s = seed | (h.empty_set().flip() - h.inner);
  for (auto i = seed.find_first(); i != NodeSet::npos; i = seed.find_next(i)) s |= h.down[i];
  // Children precede parents, so one sweep reaches the saturation fixed point.
  for (std::size_t v : h.bottom_up) {
    if (s.test(v) || h.nodes[v].persistent) continue;
    if (std::all_of(h.children[v].begin(), h.children[v].end(), [&](std::size_t c) { return s.test(c); }))
      s.set(v);
  }
  return IdealDiagram(std::move(host), std::move(s));
}

namespace {

bool canonical_less(const IdealDiagram& a, const IdealDiagram& b) {
  const std::size_t na = a.size(), nb = b.size();
  if (na != nb) return na < nb;
  const NodeSet& x = a.members();
  const NodeSet& y = b.members();
  auto i = x.find_first();
  auto j = y.find_first();
  while (i != NodeSet::npos && j != NodeSet::npos) {
    if (i != j) return i < j;
    i = x.find_next(i);
    j = y.find_next(j);
  }
  return i == NodeSet::npos && j != NodeSet::npos;
}

}  // namespace

std::vector<IdealDiagram> enumerate_ideals(SkeletonPtr host, std::size_t cap) {
  const Skeleton& h = *host;
  const std::size_t n = h.size();
  std::vector<NodeSet> found;
  NodeSet current(n);

  // Decide nodes children-first. A node with a non-member child is out; an
  // outer or non-persistent node whose children are all in is forced in;
  // otherwise both choices give ideals.
  auto walk = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      if (found.size() >= cap)
        throw SizeLimitError("ideal enumeration exceeds the cap of " + std::to_string(cap) + " ideals");
      found.push_back(current);
      return;
    }
    const std::size_t v = h.bottom_up[pos];
    const bool all_in = std::all_of(h.children[v].begin(), h.children[v].end(),
                                    [&](std::size_t c) { return current.test(c); });
    if (!all_in) {
      self(self, pos + 1);
      return;
    }
    const auto& node = h.nodes[v];
    if (node.outer || !node.persistent) {
      current.set(v);
      self(self, pos + 1);
      current.reset(v);
      return;
    }
    self(self, pos + 1);
    current.set(v);
    self(self, pos + 1);
    current.reset(v);
  };
  walk(walk, 0);

  std::vector<IdealDiagram> out;
  out.reserve(found.size());
  for (auto& s : found) out.emplace_back(host, std::move(s));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

namespace {

void require_same_host(const IdealDiagram& a, const IdealDiagram& b) {
  if (a.host_ptr() != b.host_ptr()) throw ModelError("ideals live on different hosts");
}

}  // namespace

bool contains(const IdealDiagram& outer, const IdealDiagram& inner) {
  require_same_host(outer, inner);
  return inner.members().is_subset_of(outer.members());
}

IdealDiagram intersect(const IdealDiagram& a, const IdealDiagram& b) {
  require_same_host(a, b);
  return IdealDiagram(a.host_ptr(), a.members() & b.members());
}

BratteliDiagram quotient_diagram(const BratteliDiagram& d, const IdealDiagram& e) {
  const Skeleton& h = e.host();
  if (auto check = is_ideal_subdiagram(h, e.members()); !check)
    throw ModelError("not an ideal diagram: " + check.violation);
  const NodeSet rest = e.complement();

  if (const auto* f0 = std::get_if<FiniteDiagram>(&d)) {
    const FiniteDiagram f = h.horizon == f0->levels() ? *f0 : unroll(d, h.horizon);
    if (f.size() != h.size()) throw ModelError("ideal was built on a different diagram");
    std::vector<Vertex> vertices;
    for (auto i = rest.find_first(); i != NodeSet::npos; i = rest.find_next(i)) vertices.push_back(f.vertex(i));
    std::vector<EdgeSpec> edges;
    for (const Edge& edge : f.edges())
      if (rest.test(edge.source) && rest.test(edge.target))
        edges.push_back({f.vertex(edge.source).id, f.vertex(edge.target).id, edge.mult});
    return FiniteDiagram(f.levels(), std::move(vertices), edges);
  }

  const auto& p = std::get<PeriodicDiagram>(d);
  if (!h.periodic) throw ModelError("ideal was built on a different diagram");
  if (rest.none()) return FiniteDiagram(0, {}, {});
  int last_top = 1;
  for (auto i = rest.find_first(); i != NodeSet::npos; i = rest.find_next(i))
    last_top = std::max(last_top, h.nodes[i].onset);
  const FiniteDiagram dims = unroll(d, last_top);

  std::vector<Column> columns;
  std::vector<Link> links;
  for (auto i = rest.find_first(); i != NodeSet::npos; i = rest.find_next(i)) {
    const auto& node = h.nodes[i];
    const Column& src = p.columns()[node.column->column];
    Column c;
    c.name = node.name;
    c.start = node.onset;
    c.dim = dims.vertex(dims.index({node.name, node.onset})).dim;
    c.self_mult = src.self_mult;
    c.extra = src.extra;
    c.repeat = false;
    columns.push_back(std::move(c));
    for (const auto& arc : p.children(*node.column)) {
      const std::string target = p.instance_name(arc.other);
      auto j = h.find(target);
      if (j && rest.test(*j)) links.push_back({node.name, 0, target, arc.mult});
    }
  }
  return PeriodicDiagram(last_top - 1, 1, std::move(columns), std::move(links));
}

IdealDiagram glimm_ideal_of_class(const std::vector<IdealDiagram>& members) {
  if (members.empty()) throw ModelError("a Glimm class needs at least one member");
  IdealDiagram out = members.front();
  for (std::size_t i = 1; i < members.size(); ++i) out = intersect(out, members[i]);
  return out;
}

std::optional<std::size_t> semi_glimm_witness(const IdealDiagram& e,
                                              const std::vector<IdealDiagram>& glimm_ideals) {
  std::optional<std::size_t> witness;
  for (std::size_t i = 0; i < glimm_ideals.size(); ++i) {
    if (!contains(e, glimm_ideals[i])) continue;
    if (e.is_full()) return i;
    if (witness)
      throw ModelError("ideal contains two Glimm ideals (" + std::to_string(*witness) + " and " +
                       std::to_string(i) + ")");
    witness = i;
  }
  return witness;
}

}  // namespace afspec
