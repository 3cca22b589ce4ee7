#include "oracle.hpp"

#include "afspec/error.hpp"

#include <map>
#include <random>

namespace oracle {

using afspec::FiniteDiagram;
using afspec::FiniteTopSpace;
using afspec::PointSet;

namespace {

std::vector<std::string> vertex_names(const FiniteDiagram& d) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < d.size(); ++v) out.push_back(d.vertex(v).id.str());
  return out;
}

bool is_ideal_mask(const FiniteDiagram& d, std::uint32_t mask) {
  const std::size_t n = d.size();
  std::vector<int> children(n, 0), inside(n, 0);
  for (const auto& e : d.edges()) {
    const bool s = mask >> e.source & 1u, t = mask >> e.target & 1u;
    if (s && !t) return false;
    ++children[e.source];
    if (t) ++inside[e.source];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!(mask >> v & 1u) && children[v] > 0 && inside[v] == children[v]) return false;
  return true;
}

std::vector<std::uint32_t> ideal_masks(const FiniteDiagram& d) {
  if (d.size() > 12) throw afspec::SizeLimitError("brute_ideals handles at most 12 vertices");
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1u << d.size()); ++m)
    if (is_ideal_mask(d, m)) out.push_back(m);
  return out;
}

std::uint32_t to_mask(const FiniteDiagram& d, const NameSet& e) {
  const auto names = vertex_names(d);
  std::uint32_t m = 0;
  for (std::size_t v = 0; v < names.size(); ++v)
    if (e.count(names[v])) m |= 1u << v;
  return m;
}

bool subset(std::uint32_t a, std::uint32_t b) { return (a & ~b) == 0; }

bool open_mask(const FiniteTopSpace& x, std::uint32_t s) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (!(s >> p & 1u)) continue;
    const PointSet& u = x.minopen(p);
    for (auto q = u.find_first(); q != PointSet::npos; q = u.find_next(q))
      if (!(s >> q & 1u)) return false;
  }
  return true;
}

std::vector<std::uint32_t> open_masks(const FiniteTopSpace& x) {
  if (x.size() > 12) throw afspec::SizeLimitError("oracle handles at most 12 points");
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << x.size()); ++s)
    if (open_mask(x, s)) out.push_back(s);
  return out;
}

}  // namespace

std::vector<NameSet> brute_ideals(const FiniteDiagram& d) {
  const auto names = vertex_names(d);
  std::vector<NameSet> out;
  for (std::uint32_t m : ideal_masks(d)) {
    NameSet s;
    for (std::size_t v = 0; v < names.size(); ++v)
      if (m >> v & 1u) s.insert(names[v]);
    out.push_back(std::move(s));
  }
  return out;
}

bool brute_primal(const FiniteDiagram& d, const NameSet& e) {
  const auto ideals = ideal_masks(d);
  const std::uint32_t me = to_mask(d, e);
  for (std::size_t i = 0; i < ideals.size(); ++i)
    for (std::size_t j = i; j < ideals.size(); ++j) {
      const std::uint32_t ij = ideals[i] & ideals[j];
      if (ij == 0 && !subset(ideals[i], me) && !subset(ideals[j], me)) return false;
      for (std::size_t k = j; k < ideals.size(); ++k)
        if ((ij & ideals[k]) == 0 && !subset(ideals[i], me) && !subset(ideals[j], me) && !subset(ideals[k], me))
          return false;
    }
  return true;
}

bool brute_prime(const FiniteDiagram& d, const NameSet& e) {
  const auto ideals = ideal_masks(d);
  const std::uint32_t me = to_mask(d, e);
  const std::uint32_t all = d.size() == 32 ? ~0u : (1u << d.size()) - 1;
  if (me == all) return false;
  for (std::uint32_t a : ideals)
    for (std::uint32_t b : ideals)
      if (subset(a & b, me) && !subset(a, me) && !subset(b, me)) return false;
  return true;
}

std::vector<std::vector<int>> brute_continuous_functions(const FiniteTopSpace& x, const std::vector<int>& values) {
  if (x.size() > 12 || values.size() > 3) throw afspec::SizeLimitError("oracle handles 12 points and 3 values");
  const std::size_t n = x.size();
  std::vector<std::vector<int>> out;
  std::vector<std::size_t> digit(n, 0);
  for (;;) {
    bool ok = true;
    for (std::size_t v = 0; v < values.size() && ok; ++v) {
      std::uint32_t level = 0;
      for (std::size_t p = 0; p < n; ++p)
        if (digit[p] == v) level |= 1u << p;
      ok = open_mask(x, level);
    }
    if (ok) {
      std::vector<int> f(n);
      for (std::size_t p = 0; p < n; ++p) f[p] = values[digit[p]];
      out.push_back(std::move(f));
    }
    std::size_t p = 0;
    while (p < n && ++digit[p] == values.size()) digit[p++] = 0;
    if (p == n) break;
  }
  return out;
}

std::vector<std::size_t> constancy_classes(const FiniteTopSpace& x) {
  const auto fs = brute_continuous_functions(x, {0, 1});
  std::map<std::vector<int>, std::size_t> number;
  std::vector<std::size_t> out(x.size());
  for (std::size_t p = 0; p < x.size(); ++p) {
    std::vector<int> profile;
    for (const auto& f : fs) profile.push_back(f[p]);
    auto [it, fresh] = number.try_emplace(profile, number.size());
    out[p] = it->second;
  }
  return out;
}

bool brute_qcr(const FiniteTopSpace& x) {
  const auto fs = brute_continuous_functions(x, {0, 1});
  for (std::uint32_t u : open_masks(x)) {
    if (u == 0) continue;
    bool found = false;
    for (const auto& f : fs) {
      bool nonzero = false, vanishes = true;
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (f[p] != 0) nonzero = true;
        if (f[p] != 0 && !(u >> p & 1u)) vanishes = false;
      }
      if (nonzero && vanishes) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool brute_closed_interior(const FiniteTopSpace& x) {
  const auto opens = open_masks(x);
  const std::uint32_t all = (1u << x.size()) - 1;
  for (std::uint32_t u : opens) {
    if (u == 0) continue;
    bool found = false;
    for (std::uint32_t g : opens) {
      const std::uint32_t f = all & ~g;  // closed
      if (!subset(f, u)) continue;
      for (std::uint32_t v : opens)
        if (v != 0 && subset(v, f)) found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool brute_phi_open(const FiniteTopSpace& x) {
  const auto cls = constancy_classes(x);
  for (std::uint32_t u : open_masks(x)) {
    std::uint32_t saturated = 0;
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t q = 0; q < x.size(); ++q)
        if ((u >> q & 1u) && cls[p] == cls[q]) saturated |= 1u << p;
    // φ(U) is open in the quotient iff its preimage is open.
    if (!open_mask(x, saturated)) return false;
  }
  return true;
}

FiniteDiagram random_diagram(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int levels = pick(1, 4);
  std::vector<std::vector<std::string>> names(levels + 1);
  for (int l = 1; l <= levels; ++l) {
    const int width = pick(1, 3);
    for (int i = 0; i < width; ++i) names[l].push_back(std::string(1, static_cast<char>('a' + i)));
  }
  std::vector<afspec::EdgeSpec> edges;
  std::map<std::string, afspec::BigInt> embedded;
  std::map<std::string, bool> terminal;
  for (int l = 1; l < levels; ++l)
    for (const auto& s : names[l]) {
      const std::string sid = s + "@" + std::to_string(l);
      if (pick(0, 9) == 0) {
        terminal[sid] = true;
        continue;
      }
      bool any = false;
      for (const auto& t : names[l + 1])
        if (pick(0, 1)) {
          edges.push_back({{s, l}, {t, l + 1}, static_cast<std::uint64_t>(pick(1, 2))});
          any = true;
        }
      if (!any) edges.push_back({{s, l}, {names[l + 1][pick(0, static_cast<int>(names[l + 1].size()) - 1)], l + 1}, 1});
    }
  // Dims top-down: each vertex holds its embedded image plus a little room.
  std::map<std::string, afspec::BigInt> dim;
  std::vector<afspec::Vertex> vertices;
  for (int l = 1; l <= levels; ++l)
    for (const auto& s : names[l]) {
      const std::string sid = s + "@" + std::to_string(l);
      afspec::BigInt emb = 0;
      for (const auto& e : edges)
        if (e.target.str() == sid) emb += dim[e.source.str()] * e.mult;
      dim[sid] = (emb == 0 ? afspec::BigInt(1) : emb) + pick(0, 1);
      vertices.push_back({{s, l}, dim[sid], terminal[sid]});
    }
  return FiniteDiagram(levels, std::move(vertices), edges);
}

FiniteTopSpace random_space(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = std::uniform_int_distribution<int>(1, 8)(rng);
  const double density = std::uniform_real_distribution<double>(0.05, 0.5)(rng);
  std::vector<std::string> names;
  std::vector<PointSet> minopen(n, PointSet(n));
  for (int i = 0; i < n; ++i) {
    names.push_back("x" + std::to_string(i));
    minopen[i].set(i);
    // Only lower-numbered points may lie in minopen(i): no cycles, so T0.
    for (int j = 0; j < i; ++j)
      if (std::bernoulli_distribution(density)(rng)) minopen[i].set(j);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (minopen[i].test(j)) minopen[i] |= minopen[j];
  return FiniteTopSpace(std::move(names), std::move(minopen));
}

}  // namespace oracle
