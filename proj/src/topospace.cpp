#include "afspec/topospace.hpp"

#include "afspec/error.hpp"
#include "afspec/kernels.hpp"
#include "afspec/spectrum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace afspec {

FiniteTopSpace::FiniteTopSpace(std::vector<std::string> names, std::vector<PointSet> minopen)
    : names_(std::move(names)), minopen_(std::move(minopen)) {
  const std::size_t n = names_.size();
  if (minopen_.size() != n) throw ModelError("every point needs exactly one minimal open set");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw ModelError("duplicate point " + names_[i]);
  for (std::size_t x = 0; x < n; ++x) {
    if (minopen_[x].size() != n) throw ModelError("minopen(" + names_[x] + ") has the wrong universe");
    if (!minopen_[x].test(x)) throw ModelError("minopen(" + names_[x] + ") does not contain " + names_[x]);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = minopen_[x].find_first(); y != PointSet::npos; y = minopen_[x].find_next(y))
      if (!minopen_[y].is_subset_of(minopen_[x]))
        throw ModelError("minopen(" + names_[x] + ") contains " + names_[y] + " but not all of minopen(" +
                         names_[y] + ")");
}

std::optional<std::size_t> FiniteTopSpace::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t FiniteTopSpace::index(const std::string& name) const {
  if (auto i = find(name)) return *i;
  throw ModelError("unknown point " + name);
}

PointSet FiniteTopSpace::set_of(const std::vector<std::string>& names) const {
  PointSet s = empty_set();
  for (const auto& n : names) s.set(index(n));
  return s;
}

std::vector<std::string> FiniteTopSpace::names_of(const PointSet& s) const {
  std::vector<std::string> out;
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) out.push_back(names_[i]);
  return out;
}

std::string FiniteTopSpace::format(const PointSet& s) const {
  std::string out = "{";
  for (auto i = s.find_first(); i != PointSet::npos; i = s.find_next(i)) {
    if (out.size() > 1) out += ",";
    out += names_[i];
  }
  return out + "}";
}

PointSet FiniteTopSpace::closure(const PointSet& s) const {
  PointSet out = empty_set();
  for (std::size_t y = 0; y < size(); ++y)
    if (minopen_[y].intersects(s)) out.set(y);
  return out;
}

PointSet FiniteTopSpace::closure_of(std::size_t x) const {
  PointSet s = empty_set();
  s.set(x);
  return closure(s);
}

PointSet FiniteTopSpace::interior(const PointSet& s) const {
  PointSet out = empty_set();
  for (auto x = s.find_first(); x != PointSet::npos; x = s.find_next(x))
    if (minopen_[x].is_subset_of(s)) out.set(x);
  return out;
}

bool FiniteTopSpace::is_open(const PointSet& s) const { return interior(s) == s; }

bool FiniteTopSpace::is_closed(const PointSet& s) const { return closure(s) == s; }

bool FiniteTopSpace::is_t0() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = x + 1; y < size(); ++y)
      if (minopen_[x] == minopen_[y]) return false;
  return true;
}

std::vector<std::size_t> FiniteTopSpace::component_index() const {
  const std::size_t n = size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (auto y = minopen_[x].find_first(); y != PointSet::npos; y = minopen_[x].find_next(y)) {
      const std::size_t a = root(x), b = root(y);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  // Roots are the smallest members, so numbering roots in order numbers
  // components by smallest member.
  std::vector<std::size_t> out(n);
  std::map<std::size_t, std::size_t> number;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = number.try_emplace(root(x), number.size());
    out[x] = it->second;
  }
  return out;
}

std::vector<std::vector<std::size_t>> FiniteTopSpace::components() const {
  const auto idx = component_index();
  std::size_t count = 0;
  for (std::size_t c : idx) count = std::max(count, c + 1);
  std::vector<std::vector<std::size_t>> out(count);
  for (std::size_t x = 0; x < idx.size(); ++x) out[idx[x]].push_back(x);
  return out;
}

FiniteTopSpace from_prim_space(const PrimSpace& space) {
  const std::size_t n = space.points.size();
  std::vector<std::string> names;
  std::vector<PointSet> minopen(n, PointSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(space.points[i].name);
    // Opens are the complements of hulls: the smallest one around P holds
    // every Q ⊆ P.
    for (std::size_t j = 0; j < n; ++j)
      if (space.points[j].ideal.members().is_subset_of(space.points[i].ideal.members())) minopen[i].set(j);
  }
  return FiniteTopSpace(std::move(names), std::move(minopen));
}

namespace {

std::optional<std::size_t> first_failure(Exec exec, std::size_t n, const std::function<bool(std::size_t)>& pred) {
  return exec == Exec::Serial ? kernels::first_failure_serial(n, pred) : kernels::first_failure_parallel(n, pred);
}

TopVerdict from_failure(const FiniteTopSpace& x, std::optional<std::size_t> bad) {
  if (!bad) return {true, std::nullopt};
  return {false, x.minopen(*bad)};
}

}  // namespace

TopVerdict is_quasi_completely_regular(const FiniteTopSpace& x, Exec exec) {
  const auto comps = x.components();
  std::vector<PointSet> comp_sets;
  for (const auto& c : comps) {
    PointSet s = x.empty_set();
    for (std::size_t p : c) s.set(p);
    comp_sets.push_back(std::move(s));
  }
  return from_failure(x, first_failure(exec, x.size(), [&](std::size_t p) {
                        return std::any_of(comp_sets.begin(), comp_sets.end(),
                                           [&](const PointSet& c) { return c.is_subset_of(x.minopen(p)); });
                      }));
}

TopVerdict every_open_has_closed_with_interior(const FiniteTopSpace& x, Exec exec) {
  std::vector<PointSet> hull(x.size());
  for (std::size_t y = 0; y < x.size(); ++y) hull[y] = x.closure(x.minopen(y));
  return from_failure(x, first_failure(exec, x.size(), [&](std::size_t p) {
                        const PointSet& u = x.minopen(p);
                        for (auto y = u.find_first(); y != PointSet::npos; y = u.find_next(y))
                          if (hull[y].is_subset_of(u)) return true;
                        return false;
                      }));
}

FiniteTopSpace quotient_space(const FiniteTopSpace& x, const std::vector<std::size_t>& phi,
                              std::vector<std::string> names) {
  if (phi.size() != x.size()) throw ModelError("map is not defined on every point");
  const std::size_t m = names.size();
  for (std::size_t k : phi)
    if (k >= m) throw ModelError("map leaves the quotient");
  // Smallest V ∋ k whose preimage is open: alternate preimage, open hull, image.
  std::vector<PointSet> minopen(m, PointSet(m));
  for (std::size_t k = 0; k < m; ++k) {
    PointSet v(m);
    v.set(k);
    for (;;) {
      PointSet next = v;
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (!v.test(phi[p])) continue;
        const PointSet& u = x.minopen(p);
        for (auto q = u.find_first(); q != PointSet::npos; q = u.find_next(q)) next.set(phi[q]);
      }
      if (next == v) break;
      v = std::move(next);
    }
    minopen[k] = std::move(v);
  }
  return FiniteTopSpace(std::move(names), std::move(minopen));
}

Regularization complete_regularization(const FiniteTopSpace& x) {
  Regularization out;
  out.phi = x.component_index();
  std::vector<std::string> names;
  for (const auto& c : x.components()) {
    PointSet s = x.empty_set();
    for (std::size_t p : c) s.set(p);
    names.push_back(x.format(s));
  }
  out.quotient = quotient_space(x, out.phi, std::move(names));
  return out;
}

TopVerdict is_map_open(const FiniteTopSpace& x, const FiniteTopSpace& y, const std::vector<std::size_t>& phi,
                       Exec exec) {
  if (phi.size() != x.size()) throw ModelError("map is not defined on every point");
  return from_failure(x, first_failure(exec, x.size(), [&](std::size_t p) {
                        PointSet image = y.empty_set();
                        const PointSet& u = x.minopen(p);
                        for (auto q = u.find_first(); q != PointSet::npos; q = u.find_next(q)) image.set(phi[q]);
                        return y.is_open(image);
                      }));
}

bool is_continuous_const_on_components(const FiniteTopSpace& x, const std::vector<Rational>& f) {
  if (f.size() != x.size()) throw ModelError("function is not defined on every point");
  for (std::size_t p = 0; p < x.size(); ++p) {
    const PointSet& u = x.minopen(p);
    for (auto q = u.find_first(); q != PointSet::npos; q = u.find_next(q))
      if (f[p] != f[q]) return false;
  }
  return true;
}

namespace exhaustive {

std::vector<PointSet> open_sets(const FiniteTopSpace& x, std::size_t limit) {
  const std::size_t n = x.size();
  std::vector<PointSet> hull(n);
  for (std::size_t p = 0; p < n; ++p) hull[p] = x.closure_of(p);
  // Membership constraints are the (transitive) implications p ∈ U ⇒
  // minopen(p) ⊆ U, so any consistent partial choice extends: no dead ends.
  std::vector<PointSet> out;
  PointSet in(n), out_set(n);
  auto walk = [&](auto&& self, std::size_t p) -> void {
    if (p == n) {
      if (out.size() >= limit)
        throw SizeLimitError("more than " + std::to_string(limit) + " open sets");
      out.push_back(in);
      return;
    }
    if (!hull[p].intersects(in)) {
      out_set.set(p);
      self(self, p + 1);
      out_set.reset(p);
    }
    if (!x.minopen(p).intersects(out_set)) {
      in.set(p);
      self(self, p + 1);
      in.reset(p);
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), [](const PointSet& a, const PointSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });
  return out;
}

TopVerdict quasi_completely_regular(const FiniteTopSpace& x, std::size_t limit) {
  const auto comps = x.components();
  for (const PointSet& u : open_sets(x, limit)) {
    if (u.none()) continue;
    const bool ok = std::any_of(comps.begin(), comps.end(), [&](const std::vector<std::size_t>& c) {
      return std::all_of(c.begin(), c.end(), [&](std::size_t p) { return u.test(p); });
    });
    if (!ok) return {false, u};
  }
  return {true, std::nullopt};
}

TopVerdict closed_with_interior(const FiniteTopSpace& x, std::size_t limit) {
  const auto opens = open_sets(x, limit);
  std::vector<PointSet> closeds;
  for (const PointSet& u : opens) {
    PointSet f = ~u;
    if (x.interior(f).any()) closeds.push_back(std::move(f));
  }
  for (const PointSet& u : opens) {
    if (u.none()) continue;
    const bool ok = std::any_of(closeds.begin(), closeds.end(), [&](const PointSet& f) { return f.is_subset_of(u); });
    if (!ok) return {false, u};
  }
  return {true, std::nullopt};
}

TopVerdict map_open(const FiniteTopSpace& x, const FiniteTopSpace& y, const std::vector<std::size_t>& phi,
                    std::size_t limit) {
  for (const PointSet& u : open_sets(x, limit)) {
    PointSet image = y.empty_set();
    for (auto p = u.find_first(); p != PointSet::npos; p = u.find_next(p)) image.set(phi[p]);
    if (!y.is_open(image)) return {false, u};
  }
  return {true, std::nullopt};
}

}  // namespace exhaustive

}  // namespace afspec
