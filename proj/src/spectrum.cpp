#include "afspec/spectrum.hpp"

#include "afspec/error.hpp"
#include "afspec/kernels.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace afspec {

bool is_primitive(const IdealDiagram& e) {
  const NodeSet quotient = e.complement();
  if (quotient.none()) throw ModelError("the full ideal is not primitive (its quotient is zero)");
  return kernels::pairwise_directed(e.host(), quotient);
}

bool is_primal(const IdealDiagram& e) {
  return kernels::common_descendant(e.host(), e.complement());
}

namespace {

std::vector<IdealDiagram> minimal_by_inclusion(std::vector<IdealDiagram> ideals) {
  std::vector<IdealDiagram> out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < ideals.size() && minimal; ++j) {
      if (i == j) continue;
      const NodeSet& a = ideals[j].members();
      const NodeSet& b = ideals[i].members();
      if (a.is_proper_subset_of(b) || (a == b && j < i)) minimal = false;
    }
    if (minimal) out.push_back(ideals[i]);
  }
  return out;
}

IdealDiagram ideal_with_quotient(const SkeletonPtr& host, const NodeSet& quotient) {
  return IdealDiagram(host, host->empty_set().flip() - quotient);
}

void sort_canonical(std::vector<IdealDiagram>& v) {
  std::sort(v.begin(), v.end(), [](const IdealDiagram& a, const IdealDiagram& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return b.members() < a.members() ? false : a.members() < b.members();
  });
}

}  // namespace

std::vector<IdealDiagram> primitive_ideals(SkeletonPtr host) {
  std::vector<IdealDiagram> out;
  for (std::size_t z = 0; z < host->size(); ++z) {
    if (!host->inner.test(z) || !host->nodes[z].persistent) continue;
    out.push_back(ideal_with_quotient(host, host->up[z] & host->inner));
  }
  return out;
}

std::vector<IdealDiagram> primitive_ideals_by_enumeration(SkeletonPtr host, std::size_t cap) {
  auto all = enumerate_ideals(host, cap);
  std::vector<NodeSet> sets;
  for (const auto& e : all) sets.push_back(e.members());
  const auto verdicts = kernels::classify_parallel(*host, sets);
  std::vector<IdealDiagram> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (verdicts[i].primitive) out.push_back(all[i]);
  return out;
}

std::vector<IdealDiagram> minimal_primals(SkeletonPtr host) {
  std::vector<IdealDiagram> candidates;
  for (std::size_t z = 0; z < host->size(); ++z) {
    if (!host->nodes[z].persistent) continue;
    const NodeSet quotient = host->up[z] & host->inner;
    if (quotient.none()) continue;
    candidates.push_back(ideal_with_quotient(host, quotient));
  }
  if (candidates.empty()) return {full_ideal(host)};
  auto out = minimal_by_inclusion(std::move(candidates));
  sort_canonical(out);
  return out;
}

std::vector<IdealDiagram> minimal_primals_by_enumeration(SkeletonPtr host, std::size_t cap) {
  auto all = enumerate_ideals(host, cap);
  std::vector<NodeSet> sets;
  for (const auto& e : all) sets.push_back(e.members());
  const auto verdicts = kernels::classify_parallel(*host, sets);
  std::vector<IdealDiagram> primal;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (verdicts[i].primal) primal.push_back(all[i]);
  auto out = minimal_by_inclusion(std::move(primal));
  sort_canonical(out);
  return out;
}

// ---------------------------------------------------------------------------
// Families and the primitive spectrum

namespace {

std::string family_label(std::size_t i, char first) {
  const std::size_t span = static_cast<std::size_t>('Z' - first) + 1;
  if (i < span) return std::string(1, static_cast<char>(first + i));
  return std::string(1, first) + std::to_string(i);
}

}  // namespace

std::vector<IdealFamily> label_families(const Skeleton& host, const std::vector<IdealDiagram>& ideals,
                                        std::vector<std::optional<std::size_t>>& family_of,
                                        std::vector<int>& instance_of, char first_label) {
  family_of.assign(ideals.size(), std::nullopt);
  instance_of.assign(ideals.size(), 1);
  if (!host.periodic) return {};

  using Key = std::vector<std::pair<int, std::size_t>>;
  std::vector<Key> keys(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const NodeSet q = ideals[i].complement();
    int anchor = 0;
    bool first = true;
    for (auto v = q.find_first(); v != NodeSet::npos; v = q.find_next(v)) {
      const int n = host.nodes[v].column->index;
      anchor = first ? n : std::min(anchor, n);
      first = false;
    }
    for (auto v = q.find_first(); v != NodeSet::npos; v = q.find_next(v))
      keys[i].push_back({host.nodes[v].column->index - anchor, host.nodes[v].column->column});
    std::sort(keys[i].begin(), keys[i].end());
    instance_of[i] = anchor;
  }
  // Lexicographic on (offset, column declaration order) lists; a prefix sorts first.
  std::vector<Key> unique = keys;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<IdealFamily> families;
  for (std::size_t f = 0; f < unique.size(); ++f) {
    IdealFamily fam;
    fam.label = family_label(f, first_label);
    fam.key = unique[f];
    fam.quotient = "{";
    for (std::size_t k = 0; k < fam.key.size(); ++k) {
      if (k) fam.quotient += ",";
      fam.quotient += host.family_names[fam.key[k].second] + std::string(static_cast<std::size_t>(fam.key[k].first), '\'');
    }
    fam.quotient += "}";
    families.push_back(std::move(fam));
  }
  for (std::size_t i = 0; i < ideals.size(); ++i)
    family_of[i] = static_cast<std::size_t>(std::lower_bound(unique.begin(), unique.end(), keys[i]) - unique.begin());
  return families;
}

std::optional<std::size_t> PrimSpace::find(const std::string& name) const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].name == name) return i;
  return std::nullopt;
}

PrimSpace prim_space(SkeletonPtr host) {
  auto ideals = primitive_ideals(host);
  if (host->periodic) {
    const NodeSet settled = host->settled();
    std::erase_if(ideals, [&](const IdealDiagram& e) { return !e.complement().is_subset_of(settled); });
  }
  return prim_space(std::move(host), ideals);
}

PrimSpace prim_space(SkeletonPtr host, const std::vector<IdealDiagram>& ideals) {
  PrimSpace space;
  space.host = host;
  std::vector<std::optional<std::size_t>> family_of;
  std::vector<int> instance_of;
  space.families = label_families(*host, ideals, family_of, instance_of);

  std::vector<std::pair<std::pair<std::size_t, std::size_t>, SpectrumPoint>> staged;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const NodeSet q = ideals[i].complement();
    // The generating node: the quotient's unique maximal descendant.
    std::size_t top = 0;
    for (auto v = q.find_first(); v != NodeSet::npos; v = q.find_next(v))
      if (q.is_subset_of(host->up[v])) top = v;
    SpectrumPoint p{host->nodes[top].name, ideals[i], family_of[i], instance_of[i]};
    std::pair<std::size_t, std::size_t> order{top, 0};
    if (family_of[i]) {
      p.name = space.families[*family_of[i]].label + "_" + std::to_string(instance_of[i]);
      order = {static_cast<std::size_t>(instance_of[i]), *family_of[i]};
    }
    staged.push_back({order, std::move(p)});
  }
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& s : staged) space.points.push_back(std::move(s.second));

  if (host->periodic && !space.families.empty()) {
    std::map<int, std::set<std::size_t>> seen;
    for (const auto& p : space.points) seen[p.instance].insert(*p.family);
    for (const auto& [n, fams] : seen)
      if (fams.size() == space.families.size()) space.complete_instances.push_back(n);
  }
  return space;
}

std::vector<std::size_t> closure_of(const PrimSpace& space, std::size_t point) {
  if (point >= space.points.size()) throw ModelError("unknown point #" + std::to_string(point));
  const NodeSet& p = space.points[point].ideal.members();
  std::vector<std::size_t> out{point};
  for (std::size_t q = 0; q < space.points.size(); ++q)
    if (q != point && p.is_subset_of(space.points[q].ideal.members())) out.push_back(q);
  return out;
}

std::vector<std::size_t> closure_of(const PrimSpace& space, const std::string& point) {
  auto i = space.find(point);
  if (!i) throw ModelError("unknown point " + point);
  return closure_of(space, *i);
}

GlimmPartition glimm_classes(const PrimSpace& space) {
  GlimmPartition out;
  const std::size_t n = space.points.size();
  std::vector<bool> in_window(n, !space.periodic());
  if (space.periodic()) {
    const std::set<int> complete(space.complete_instances.begin(), space.complete_instances.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (!complete.count(space.points[i].instance)) continue;
      for (std::size_t q : closure_of(space, i)) in_window[q] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (in_window[i]) out.window.push_back(i);

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i : out.window)
    for (std::size_t q : closure_of(space, i))
      if (in_window[q]) parent[root(i)] = root(q);

  std::map<std::size_t, std::size_t> class_of_root;
  for (std::size_t i : out.window) {
    const std::size_t r = root(i);
    auto [it, fresh] = class_of_root.try_emplace(r, out.classes.size());
    if (fresh) out.classes.emplace_back();
    out.classes[it->second].push_back(i);
  }
  for (const auto& cls : out.classes) {
    std::vector<IdealDiagram> members;
    for (std::size_t i : cls) members.push_back(space.points[i].ideal);
    out.class_ideals.push_back(glimm_ideal_of_class(members));
  }
  out.single_stable = out.classes.size() == 1 &&
                      (!space.host->repeating || space.complete_instances.size() >= 2);
  return out;
}

// ---------------------------------------------------------------------------
// Unitality, modularity, postliminality, center

UnitalVerdict is_unital(const BratteliDiagram& d) {
  if (!is_periodic(d)) return {true, "finite-dimensional"};
  const auto& p = std::get<PeriodicDiagram>(d);
  int max_shift = 0;
  for (const Link& l : p.links()) max_shift = std::max(max_shift, std::abs(l.shift));
  const int horizon = p.preamble() + (3 + max_shift) * p.period() + 1;
  const FiniteDiagram u = unroll(d, horizon);

  int last_deficit = 0;
  std::string recurring;
  for (std::size_t w = 0; w < u.size(); ++w) {
    const Vertex& v = u.vertex(w);
    if (v.id.level < 2) continue;
    const BigInt embedded = u.embedded_dim(w);
    if (v.dim == embedded) continue;
    last_deficit = std::max(last_deficit, v.id.level);
    if (v.id.level > horizon - p.period() && recurring.empty())
      recurring = "step into " + v.id.str() + " is not unital (dim " + v.dim.str() + " > embedded " +
                  embedded.str() + ") and recurs every period";
  }
  if (!recurring.empty()) return {false, recurring};
  return {true, "every step from level " + std::to_string(std::max(last_deficit, 1)) + " on is unital"};
}

UnitalVerdict is_modular(const BratteliDiagram& d, const IdealDiagram& e) {
  if (e.is_full()) throw ModelError("the full ideal has a zero quotient");
  return is_unital(quotient_diagram(d, e));
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: break;
  }
  return "unknown";
}

PostliminalVerdict is_postliminal(const BratteliDiagram& d) {
  if (!is_periodic(d)) return {Tri::True, "finite-dimensional"};
  const auto& p = std::get<PeriodicDiagram>(d);
  // Links form an acyclic column graph, so every connected sequence ends up
  // inside one column and then follows its vertical edges.
  for (const Column& c : p.columns()) {
    if (c.self_mult == 1) continue;
    const std::string name = p.instance_name({static_cast<std::size_t>(&c - p.columns().data()), 1});
    return {Tri::False, "connected sequence " + name + "@" + std::to_string(c.start) + " -> " + name + "@" +
                            std::to_string(c.start + 1) + " -> ... has multiplicity " +
                            std::to_string(c.self_mult) + " at every step"};
  }
  return {Tri::True, "every connected sequence settles in a column whose vertical edges have multiplicity 1"};
}

std::string to_string(CenterKind k) {
  switch (k) {
    case CenterKind::NonzeroUnital: return "NonzeroUnital";
    case CenterKind::ZeroCenter: return "ZeroCenter";
    case CenterKind::Inconclusive: break;
  }
  return "Inconclusive";
}

CenterVerdict center_verdict(const BratteliDiagram& d, std::optional<int> horizon) {
  CenterVerdict out;
  out.unital = is_unital(d);
  int h = horizon.value_or(default_horizon(d));
  std::vector<int> horizons{h};
  if (const auto* p = std::get_if<PeriodicDiagram>(&d)) {
    // Stability is judged on two complete periods; move past a truncation
    // that is too shallow to hold them (bounded by a few extra periods).
    if (std::any_of(p->columns().begin(), p->columns().end(), [](const Column& c) { return c.repeat; }))
      for (int extra = 0; extra < 4; ++extra, h += p->period())
        if (prim_space(build_skeleton(d, h)).complete_instances.size() >= 2) break;
    horizons = {h, h + p->period()};
  }

  bool stable = true;
  for (std::size_t k = 0; k < horizons.size(); ++k) {
    const PrimSpace space = prim_space(build_skeleton(d, horizons[k]));
    GlimmPartition part = glimm_classes(space);
    stable = stable && part.single_stable;
    if (k == 0) {
      out.glimm_class_count = part.classes.size();
      for (const auto& cls : part.classes) {
        std::string names;
        for (std::size_t i : cls) names += (names.empty() ? "" : ",") + space.points[i].name;
        out.class_names.push_back(names);
      }
      out.partition = std::move(part);
    }
  }
  out.checked_horizons = horizons;
  out.period_stable = stable;

  if (out.unital.unital)
    out.kind = CenterKind::NonzeroUnital;
  else if (stable)
    out.kind = CenterKind::ZeroCenter;
  else
    out.kind = CenterKind::Inconclusive;
  return out;
}

}  // namespace afspec
