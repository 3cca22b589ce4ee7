#include "afspec/diagram.hpp"

#include "afspec/error.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>

namespace afspec {

namespace {

FiniteDiagram unroll_periodic(const PeriodicDiagram& d, int horizon);

}  // namespace

// ---------------------------------------------------------------------------
// FiniteDiagram

FiniteDiagram::FiniteDiagram(int levels, std::vector<Vertex> vertices,
                             const std::vector<EdgeSpec>& edges)
    : levels_(levels), vertices_(std::move(vertices)) {
  if (levels_ < 0) throw ModelError("level count must be non-negative");
  std::sort(vertices_.begin(), vertices_.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vertex& v = vertices_[i];
    if (v.id.level < 1 || v.id.level > levels_)
      throw ModelError("vertex " + v.id.str() + " lies outside levels 1.." + std::to_string(levels_));
    if (v.dim < 1) throw ModelError("vertex " + v.id.str() + " needs a positive dim");
    if (i > 0 && vertices_[i - 1].id == v.id) throw ModelError("duplicate vertex " + v.id.str());
  }

  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> merged;
  for (const EdgeSpec& e : edges) {
    auto s = find(e.source);
    auto t = find(e.target);
    if (!s) throw ModelError("edge references unknown vertex " + e.source.str());
    if (!t) throw ModelError("edge references unknown vertex " + e.target.str());
    if (e.target.level != e.source.level + 1)
      throw ModelError("edge " + e.source.str() + " -> " + e.target.str() +
                       " does not connect consecutive levels");
    if (e.mult == 0) throw ModelError("edge " + e.source.str() + " -> " + e.target.str() + " has zero multiplicity");
    merged[{*s, *t}] += e.mult;
  }
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (const auto& [key, mult] : merged) {
    out_[key.first].push_back(edges_.size());
    in_[key.second].push_back(edges_.size());
    edges_.push_back(Edge{key.first, key.second, mult});
  }

  for (std::size_t w = 0; w < vertices_.size(); ++w) {
    const Vertex& v = vertices_[w];
    if (v.dim < embedded_dim(w))
      throw ModelError("dim inconsistency at " + v.id.str() + ": dim " + v.dim.str() +
                       " is below the embedded dim " + embedded_dim(w).str());
    if (v.id.level < levels_ && out_[w].empty() && !v.terminal)
      throw ModelError("vertex " + v.id.str() + " has no out-edge and is not flagged terminal");
  }
}

std::optional<std::size_t> FiniteDiagram::find(const VertexId& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                             [](const Vertex& v, const VertexId& key) { return v.id < key; });
  if (it == vertices_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t FiniteDiagram::index(const VertexId& id) const {
  if (auto i = find(id)) return *i;
  throw ModelError("unknown vertex " + id.str());
}

std::pair<std::size_t, std::size_t> FiniteDiagram::level_range(int level) const {
  auto lo = std::partition_point(vertices_.begin(), vertices_.end(),
                                 [level](const Vertex& v) { return v.id.level < level; });
  auto hi = std::partition_point(lo, vertices_.end(),
                                 [level](const Vertex& v) { return v.id.level <= level; });
  return {static_cast<std::size_t>(lo - vertices_.begin()),
          static_cast<std::size_t>(hi - vertices_.begin())};
}

BigInt FiniteDiagram::embedded_dim(std::size_t w) const {
  BigInt sum = 0;
  for (std::size_t e : in_[w]) sum += BigInt(edges_[e].mult) * vertices_[edges_[e].source].dim;
  return sum;
}

bool operator==(const FiniteDiagram& a, const FiniteDiagram& b) {
  if (a.levels_ != b.levels_ || a.vertices_.size() != b.vertices_.size() ||
      a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const Vertex& x = a.vertices_[i];
    const Vertex& y = b.vertices_[i];
    if (x.id != y.id || x.dim != y.dim || x.terminal != y.terminal) return false;
  }
  for (std::size_t i = 0; i < a.edges_.size(); ++i) {
    const Edge& x = a.edges_[i];
    const Edge& y = b.edges_[i];
    if (x.source != y.source || x.target != y.target || x.mult != y.mult) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// PeriodicDiagram

PeriodicDiagram::PeriodicDiagram(int preamble, int period, std::vector<Column> columns,
                                 std::vector<Link> links)
    : preamble_(preamble), period_(period), columns_(std::move(columns)), links_(std::move(links)) {
  if (preamble_ < 0) throw ModelError("preamble must be non-negative");
  if (period_ < 1) throw ModelError("period must be positive");
  if (columns_.empty()) throw ModelError("periodic diagram has no columns");

  for (std::size_t i = 0; i < columns_.size(); ++i) {
    const Column& c = columns_[i];
    for (std::size_t j = 0; j < i; ++j)
      if (columns_[j].name == c.name) throw ModelError("duplicate column " + c.name);
    if (c.self_mult == 0) throw ModelError("column " + c.name + " has zero vertical multiplicity");
    if (c.extra < 0) throw ModelError("column " + c.name + " has negative extra");
    if (c.dim && *c.dim < 1) throw ModelError("column " + c.name + " needs a positive dim");
    const int last_start = c.repeat ? preamble_ + period_ : preamble_ + 1;
    if (c.start < 1 || c.start > last_start)
      throw ModelError("column " + c.name + " starts at level " + std::to_string(c.start) +
                       "; " + (c.repeat ? "repeating" : "once") + " columns must start in 1.." +
                       std::to_string(last_start));
  }

  const std::size_t n = columns_.size();
  std::vector<std::vector<std::size_t>> family_children(n);
  for (const Link& l : links_) {
    auto s = find_column(l.source);
    auto t = find_column(l.target);
    if (!s) throw ModelError("link references unknown column " + l.source);
    if (!t) throw ModelError("link references unknown column " + l.target);
    if (*s == *t) throw ModelError("link " + l.source + " -> " + l.target +
                                   " joins a column to itself; use the column's mult= instead");
    if (l.mult == 0) throw ModelError("link " + l.source + " -> " + l.target + " has zero multiplicity");
    family_children[*s].push_back(*t);
  }

  // The column graph must be acyclic: every infinite path then settles in one column.
  std::vector<int> state(n, 0);
  auto visit = [&](auto&& self, std::size_t c) -> void {
    state[c] = 1;
    for (std::size_t t : family_children[c]) {
      if (state[t] == 1) throw ModelError("links form a cycle through column " + columns_[t].name);
      if (state[t] == 0) self(self, t);
    }
    state[c] = 2;
  };
  for (std::size_t c = 0; c < n; ++c)
    if (state[c] == 0) visit(visit, c);

  // Dim consistency over the preamble and two full periods.
  (void)unroll_periodic(*this, preamble_ + 2 * period_ + 1);
}

std::optional<std::size_t> PeriodicDiagram::find_column(const std::string& name) const {
  for (std::size_t i = 0; i < columns_.size(); ++i)
    if (columns_[i].name == name) return i;
  return std::nullopt;
}

bool PeriodicDiagram::exists(const ColumnInstance& c) const {
  if (c.column >= columns_.size() || c.index < 1) return false;
  return columns_[c.column].repeat || c.index == 1;
}

int PeriodicDiagram::top(const ColumnInstance& c) const {
  return columns_.at(c.column).start + period_ * (c.index - 1);
}

std::string PeriodicDiagram::instance_name(const ColumnInstance& c) const {
  const Column& col = columns_.at(c.column);
  if (!col.repeat) return col.name;
  return col.name + "_" + std::to_string(c.index);
}

std::optional<ColumnInstance> PeriodicDiagram::parse_instance(const std::string& name) const {
  if (auto c = find_column(name); c && !columns_[*c].repeat) return ColumnInstance{*c, 1};
  const auto cut = name.rfind('_');
  if (cut == std::string::npos || cut + 1 >= name.size()) return std::nullopt;
  int index = 0;
  const char* first = name.data() + cut + 1;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 1) return std::nullopt;
  auto c = find_column(name.substr(0, cut));
  if (!c || !columns_[*c].repeat) return std::nullopt;
  return ColumnInstance{*c, index};
}

std::vector<PeriodicDiagram::Arc> PeriodicDiagram::parents(const ColumnInstance& c) const {
  std::vector<Arc> out;
  const std::string& name = columns_.at(c.column).name;
  for (const Link& l : links_) {
    if (l.target != name) continue;
    ColumnInstance src{*find_column(l.source), c.index + l.shift};
    if (exists(src)) out.push_back({src, l.mult});
  }
  return out;
}

std::vector<PeriodicDiagram::Arc> PeriodicDiagram::children(const ColumnInstance& c) const {
  std::vector<Arc> out;
  const std::string& name = columns_.at(c.column).name;
  for (const Link& l : links_) {
    if (l.source != name) continue;
    ColumnInstance dst{*find_column(l.target), c.index - l.shift};
    if (exists(dst)) out.push_back({dst, l.mult});
  }
  return out;
}

std::vector<ColumnInstance> PeriodicDiagram::instances_up_to(int horizon) const {
  std::vector<ColumnInstance> out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    for (int n = 1; exists({c, n}) && top({c, n}) <= horizon; ++n) out.push_back({c, n});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free operations

namespace {

FiniteDiagram unroll_periodic(const PeriodicDiagram& d, int horizon) {
  const auto instances = d.instances_up_to(horizon);
  std::map<ColumnInstance, std::size_t> slot;
  for (std::size_t i = 0; i < instances.size(); ++i) slot[instances[i]] = i;

  // dims[i][l - top] for instance i
  std::vector<std::vector<BigInt>> dims(instances.size());
  std::vector<EdgeSpec> edges;
  for (int level = 1; level <= horizon; ++level) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const ColumnInstance& c = instances[i];
      const int top = d.top(c);
      if (level < top) continue;
      const Column& col = d.columns()[c.column];
      const std::string name = d.instance_name(c);
      BigInt embedded = 0;
      if (level > top) {
        embedded += BigInt(col.self_mult) * dims[i][level - 1 - top];
        edges.push_back({{name, level - 1}, {name, level}, col.self_mult});
      }
      for (const auto& arc : d.parents(c)) {
        auto it = slot.find(arc.other);
        if (it == slot.end()) continue;
        const int ptop = d.top(arc.other);
        if (ptop > level - 1) continue;
        embedded += BigInt(arc.mult) * dims[it->second][level - 1 - ptop];
        edges.push_back({{d.instance_name(arc.other), level - 1}, {name, level}, arc.mult});
      }
      BigInt dim;
      if (level == top) {
        if (col.dim) {
          if (*col.dim < embedded)
            throw ModelError("dim inconsistency at " + name + "@" + std::to_string(level) +
                             ": dim " + col.dim->str() + " is below the embedded dim " + embedded.str());
          dim = *col.dim;
        } else {
          if (embedded == 0)
            throw ModelError("column " + col.name + " starts without parents and needs dim=");
          dim = embedded;
        }
      } else {
        dim = embedded + col.extra;
      }
      dims[i].push_back(std::move(dim));
    }
  }

  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const int top = d.top(instances[i]);
    const std::string name = d.instance_name(instances[i]);
    for (std::size_t k = 0; k < dims[i].size(); ++k)
      vertices.push_back(Vertex{{name, top + static_cast<int>(k)}, dims[i][k], false});
  }
  return FiniteDiagram(horizon, std::move(vertices), edges);
}

}  // namespace

int default_horizon(const BratteliDiagram& d) {
  if (const auto* f = std::get_if<FiniteDiagram>(&d)) return f->levels();
  const auto& p = std::get<PeriodicDiagram>(d);
  return p.preamble() + 2 * p.period();
}

FiniteDiagram unroll(const BratteliDiagram& d, int horizon) {
  if (horizon < 1) throw ModelError("horizon must be at least 1");
  if (const auto* f = std::get_if<FiniteDiagram>(&d)) {
    if (horizon > f->levels())
      throw ModelError("horizon " + std::to_string(horizon) + " exceeds the diagram's " +
                       std::to_string(f->levels()) + " levels");
    if (horizon == f->levels()) return *f;
    std::vector<Vertex> vertices;
    for (const Vertex& v : f->vertices())
      if (v.id.level <= horizon) vertices.push_back(v);
    std::vector<EdgeSpec> edges;
    for (const Edge& e : f->edges()) {
      const Vertex& t = f->vertex(e.target);
      if (t.id.level <= horizon) edges.push_back({f->vertex(e.source).id, t.id, e.mult});
    }
    return FiniteDiagram(horizon, std::move(vertices), edges);
  }
  return unroll_periodic(std::get<PeriodicDiagram>(d), horizon);
}

std::vector<VertexId> descendants(const BratteliDiagram& d, const VertexId& v, int horizon) {
  if (v.level > horizon)
    throw ModelError("vertex " + v.str() + " lies below horizon " + std::to_string(horizon));
  const FiniteDiagram u = unroll(d, horizon);
  const std::size_t start = u.index(v);
  std::vector<bool> seen(u.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t e : u.out_edges(x)) {
      const std::size_t y = u.edges()[e].target;
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (seen[i]) out.push_back(u.vertex(i).id);
  return out;
}

Multiplicity descendant_multiplicity(const BratteliDiagram& d, const VertexId& v,
                                     const VertexId& w) {
  if (w.level < v.level)
    throw ModelError("descendant_multiplicity needs level(" + w.str() + ") >= level(" + v.str() + ")");
  const FiniteDiagram u = unroll(d, w.level);
  const std::size_t from = u.index(v);
  const std::size_t to = u.index(w);
  std::vector<BigInt> paths(u.size(), 0);
  paths[from] = 1;
  // Vertices are in level order, so one forward sweep suffices.
  for (std::size_t x = from; x < u.size(); ++x) {
    if (paths[x] == 0) continue;
    for (std::size_t e : u.out_edges(x)) {
      const Edge& edge = u.edges()[e];
      paths[edge.target] += paths[x] * edge.mult;
    }
  }
  return Multiplicity(paths[to]);
}

}  // namespace afspec
