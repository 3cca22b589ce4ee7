#include "afspec/cli.hpp"

#include "afspec/bdg_format.hpp"
#include "afspec/error.hpp"
#include "afspec/ftp_format.hpp"
#include "afspec/spectrum.hpp"
#include "afspec/topospace.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <regex>

namespace afspec::cli {

namespace {

using Json = AnalysisReport::Json;

bool is_ftp(const std::string& path) { return path.size() >= 4 && path.substr(path.size() - 4) == ".ftp"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string braces(const std::vector<std::string>& parts) { return "{" + join(parts) + "}"; }

int resolve_horizon(const BratteliDiagram& d, const std::optional<std::string>& text) {
  if (!text) return default_horizon(d);
  static const std::regex number(R"(\s*(\d+)\s*)");
  static const std::regex symbolic(R"(\s*preamble\s*\+\s*(?:(\d+)\s*(?:\*|·)?\s*)?period\s*)");
  std::smatch m;
  if (std::regex_match(*text, m, number)) return std::stoi(m[1]);
  if (std::regex_match(*text, m, symbolic)) {
    const auto* p = std::get_if<PeriodicDiagram>(&d);
    if (!p) throw ModelError("a symbolic horizon needs a periodic diagram");
    const int k = m[1].matched ? std::stoi(m[1]) : 1;
    return p->preamble() + k * p->period();
  }
  throw ModelError("cannot read horizon '" + *text + "'");
}

/// Periodic points are shown relative to a base instance: Q_{n+1} -> Q'.
std::string relative_name(const PrimSpace& s, std::size_t i, int base) {
  const SpectrumPoint& p = s.points[i];
  if (!p.family) return p.name;
  const int shift = p.instance - base;
  if (shift < 0) return p.name;
  return s.families[*p.family].label + std::string(static_cast<std::size_t>(shift), '\'');
}

std::string quotient_text(const SpectrumPoint& p) { return braces(p.ideal.quotient_vertices()); }

struct DiagramContext {
  BratteliDiagram diagram;
  int horizon = 0;
  SkeletonPtr host;
  PrimSpace space;
};

DiagramContext load_context(const Options& o) {
  DiagramContext c{load_diagram(o.file), 0, nullptr, {}};
  c.horizon = resolve_horizon(c.diagram, o.horizon);
  c.host = build_skeleton(c.diagram, c.horizon);
  c.space = prim_space(c.host);
  return c;
}

void describe_inputs(AnalysisReport& r, const Options& o, const DiagramContext& c) {
  r.inputs["file"] = o.file;
  r.inputs["horizon"] = c.horizon;
  r.line("# " + r.command + " " + o.file + " (horizon " + std::to_string(c.horizon) + ")");
}

// --- diagram commands --------------------------------------------------------

void cmd_validate_diagram(AnalysisReport& r, const DiagramContext& c) {
  if (const auto* f = std::get_if<FiniteDiagram>(&c.diagram)) {
    r.line("finite diagram: " + std::to_string(f->levels()) + " levels, " + std::to_string(f->size()) +
           " vertices, " + std::to_string(f->edges().size()) + " edges");
  } else {
    const auto& p = std::get<PeriodicDiagram>(c.diagram);
    r.line("periodic diagram: preamble " + std::to_string(p.preamble()) + ", period " + std::to_string(p.period()) +
           ", " + std::to_string(p.columns().size()) + " columns, " + std::to_string(p.links().size()) + " links");
  }
  r.verdict("valid", true);
}

void cmd_ideals(AnalysisReport& r, const DiagramContext& c, std::size_t cap) {
  const auto ideals = enumerate_ideals(c.host, cap);
  r.verdict("ideal_count", ideals.size());
  Json rows = Json::array();
  for (const auto& e : ideals) {
    rows.push_back(e.vertices());
    r.line(braces(e.vertices()));
  }
  r.tables["ideals"] = rows;
}

void cmd_primitives(AnalysisReport& r, const DiagramContext& c) {
  const PrimSpace& s = c.space;
  if (s.periodic()) {
    r.verdict("primitive_families", s.families.size());
    Json rows = Json::array();
    for (const auto& f : s.families) {
      r.line(f.label + "_n  " + f.quotient);
      rows.push_back({{"family", f.label}, {"quotient", f.quotient}});
    }
    r.tables["primitive_families"] = rows;
    std::vector<std::string> complete;
    for (int n : s.complete_instances) complete.push_back(std::to_string(n));
    r.line("complete periods: " + join(complete));
  }
  r.verdict("primitive_count", s.points.size());
  Json points = Json::array();
  for (const auto& p : s.points) {
    r.line(p.name + "  " + quotient_text(p));
    points.push_back({{"point", p.name}, {"quotient", p.ideal.quotient_vertices()}});
  }
  r.tables["primitives"] = points;
}

void cmd_primals(AnalysisReport& r, const DiagramContext& c) {
  auto primals = minimal_primals(c.host);
  if (c.host->periodic) {
    const NodeSet settled = c.host->settled();
    std::erase_if(primals, [&](const IdealDiagram& e) { return !e.complement().is_subset_of(settled); });
  }
  std::vector<std::optional<std::size_t>> fam;
  std::vector<int> inst;
  const auto families = label_families(*c.host, primals, fam, inst);
  Json rows = Json::array();
  if (c.host->periodic) {
    r.verdict("minimal_primal_families", families.size());
    for (const auto& f : families) {
      std::string same;
      for (const auto& pf : c.space.families)
        if (pf.key == f.key) same = "  (primitive " + pf.label + "_n)";
      r.line(f.quotient + same);
      rows.push_back({{"quotient", f.quotient}});
    }
  }
  r.verdict("minimal_primal_count", primals.size());
  for (std::size_t i = 0; i < primals.size(); ++i) {
    const std::string q = braces(primals[i].quotient_vertices());
    r.line("quotient " + q);
    rows.push_back({{"quotient", primals[i].quotient_vertices()}});
  }
  r.tables["minimal_primals"] = rows;
}

void cmd_closures(AnalysisReport& r, const DiagramContext& c, std::optional<int> period) {
  const PrimSpace& s = c.space;
  Json table = Json::object();
  auto emit = [&](std::size_t i, int base) {
    std::vector<std::string> cl;
    for (std::size_t q : closure_of(s, i)) cl.push_back(relative_name(s, q, base));
    const std::string self = relative_name(s, i, base);
    r.line("cl{" + self + "} = " + braces(cl));
    table[self] = cl;
  };
  if (s.periodic()) {
    const int base = period.value_or(1);
    if (std::find(s.complete_instances.begin(), s.complete_instances.end(), base) == s.complete_instances.end())
      throw ModelError("period " + std::to_string(base) + " is not complete at horizon " + std::to_string(c.horizon));
    r.inputs["period"] = base;
    for (std::size_t i = 0; i < s.points.size(); ++i)
      if (s.points[i].instance == base) emit(i, base);
  } else {
    for (std::size_t i = 0; i < s.points.size(); ++i) emit(i, 1);
  }
  r.tables["closures"] = table;
}

void cmd_glimm(AnalysisReport& r, const DiagramContext& c) {
  const GlimmPartition g = glimm_classes(c.space);
  r.verdict("glimm_classes", g.classes.size());
  r.verdict("single_stable_class", g.single_stable);
  Json rows = Json::array();
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    std::vector<std::string> names;
    for (std::size_t i : g.classes[k]) names.push_back(c.space.points[i].name);
    r.line("class " + std::to_string(k + 1) + ": " + braces(names) + "  glimm ideal " +
           braces(g.class_ideals[k].vertices()));
    rows.push_back({{"points", names}, {"glimm_ideal", g.class_ideals[k].vertices()}});
  }
  r.tables["glimm"] = rows;
}

void cmd_center(AnalysisReport& r, const DiagramContext& c) {
  const CenterVerdict v = center_verdict(c.diagram, c.horizon);
  r.verdict("center", to_string(v.kind));
  r.verdict("unital", v.unital.unital);
  r.verdict("glimm_classes", v.glimm_class_count);
  r.verdict("period_stable", v.period_stable);
  std::vector<std::string> hs;
  for (int h : v.checked_horizons) hs.push_back(std::to_string(h));
  r.line("checked horizons: " + join(hs));
  r.tables["center_horizons"] = v.checked_horizons;
  r.witnesses["unital"] = v.unital.witness;
}

void cmd_unital(AnalysisReport& r, const DiagramContext& c) {
  const UnitalVerdict v = is_unital(c.diagram);
  r.verdict("unital", v.unital);
  r.line("witness: " + v.witness);
  r.witnesses["unital"] = v.witness;
}

void cmd_modular(AnalysisReport& r, const DiagramContext& c, const std::optional<std::string>& ideal) {
  const PrimSpace& s = c.space;
  if (ideal) {
    auto i = s.find(*ideal);
    if (!i) throw ModelError("unknown primitive ideal " + *ideal);
    const UnitalVerdict v = is_modular(c.diagram, s.points[*i].ideal);
    r.inputs["ideal"] = *ideal;
    r.verdict("modular", v.unital);
    r.line("witness: " + v.witness);
    r.witnesses["modular"] = v.witness;
    return;
  }
  bool all_primitive = true;
  std::map<std::string, bool> per_family;
  Json rows = Json::array();
  for (const auto& p : s.points) {
    const bool m = is_modular(c.diagram, p.ideal).unital;
    all_primitive = all_primitive && m;
    rows.push_back({{"point", p.name}, {"modular", m}});
    if (p.family) {
      auto [it, fresh] = per_family.try_emplace(s.families[*p.family].label, m);
      if (!fresh) it->second = it->second && m;
    } else {
      r.line(p.name + ": modular " + (m ? "true" : "false"));
    }
  }
  for (const auto& [label, m] : per_family) r.line(label + "_n: modular " + (m ? "true" : "false"));
  r.verdict("all_primitive_modular", all_primitive);
  r.verdict("modular_primitive_families",
            static_cast<std::size_t>(std::count_if(per_family.begin(), per_family.end(),
                                                   [](const auto& kv) { return kv.second; })));

  auto primals = minimal_primals(c.host);
  if (c.host->periodic) {
    const NodeSet settled = c.host->settled();
    std::erase_if(primals, [&](const IdealDiagram& e) { return !e.complement().is_subset_of(settled); });
  }
  bool all_primal = true;
  for (const auto& e : primals) {
    if (e.is_full()) continue;
    all_primal = all_primal && is_modular(c.diagram, e).unital;
  }
  r.verdict("all_minimal_primal_modular", all_primal);
  r.tables["modular"] = rows;
}

void cmd_postliminal(AnalysisReport& r, const DiagramContext& c) {
  const PostliminalVerdict v = is_postliminal(c.diagram);
  r.verdict("postliminal", to_string(v.value));
  r.line("witness: " + v.witness);
  r.witnesses["postliminal"] = v.witness;
}

// --- topology ------------------------------------------------------------------

void cmd_topo(AnalysisReport& r, const FiniteTopSpace& x, const std::string& check) {
  static const std::vector<std::string> kChecks{"components", "qcr", "closed-interior", "phi-open"};
  if (check != "all" && std::find(kChecks.begin(), kChecks.end(), check) == kChecks.end())
    throw ModelError("unknown check '" + check + "'");
  auto want = [&](const std::string& c) { return check == "all" || check == c; };
  auto witness = [&](const std::string& name, const TopVerdict& v) {
    if (!v.witness) return;
    r.line("  witness open set: " + x.format(*v.witness));
    r.witnesses[name] = x.names_of(*v.witness);
  };

  if (want("components")) {
    const auto comps = x.components();
    r.verdict("components", comps.size());
    Json rows = Json::array();
    for (const auto& c : comps) {
      std::vector<std::string> names;
      for (std::size_t p : c) names.push_back(x.name(p));
      r.line("  " + braces(names));
      rows.push_back(names);
    }
    r.tables["components"] = rows;
  }
  if (want("qcr")) {
    const TopVerdict v = is_quasi_completely_regular(x);
    r.verdict("qcr", v.value);
    witness("qcr", v);
  }
  if (want("closed-interior")) {
    const TopVerdict v = every_open_has_closed_with_interior(x);
    r.verdict("closed_interior", v.value);
    witness("closed_interior", v);
  }
  if (want("phi-open")) {
    const Regularization reg = complete_regularization(x);
    const TopVerdict v = is_map_open(x, reg.quotient, reg.phi);
    r.verdict("phi_open", v.value);
    r.line("  regularization has " + std::to_string(reg.quotient.size()) + " points");
    witness("phi_open", v);
  }
}

// --- dispatch --------------------------------------------------------------------

void analyze_space(AnalysisReport& r, const Options& o) {
  const FiniteTopSpace x = load_space(o.file);
  r.inputs["file"] = o.file;
  r.line("# " + r.command + " " + o.file);
  if (r.command == "validate") {
    r.line("finite space: " + std::to_string(x.size()) + " points");
    r.verdict("valid", true);
    r.verdict("t0", x.is_t0());
  } else if (r.command == "topo" || r.command == "report") {
    if (r.command == "report") r.verdict("t0", x.is_t0());
    cmd_topo(r, x, r.command == "report" ? "all" : o.check);
  } else {
    throw ModelError("command '" + r.command + "' needs a diagram (.bdg), not a space");
  }
}

void analyze_diagram(AnalysisReport& r, const Options& o) {
  const DiagramContext c = load_context(o);
  describe_inputs(r, o, c);
  const std::string& cmd = r.command;
  if (cmd == "validate") return cmd_validate_diagram(r, c);
  if (cmd == "ideals") return cmd_ideals(r, c, o.max_ideals);
  if (cmd == "primitives") return cmd_primitives(r, c);
  if (cmd == "primals") return cmd_primals(r, c);
  if (cmd == "closures") return cmd_closures(r, c, o.period);
  if (cmd == "glimm") return cmd_glimm(r, c);
  if (cmd == "center") return cmd_center(r, c);
  if (cmd == "unital") return cmd_unital(r, c);
  if (cmd == "modular") return cmd_modular(r, c, o.ideal);
  if (cmd == "postliminal") return cmd_postliminal(r, c);
  if (cmd == "topo") return cmd_topo(r, from_prim_space(c.space), o.check);
  if (cmd == "report") {
    cmd_validate_diagram(r, c);
    r.line("");
    r.line("## primitive ideals");
    cmd_primitives(r, c);
    r.line("");
    r.line("## closures");
    cmd_closures(r, c, o.period);
    r.line("");
    r.line("## minimal primal ideals");
    cmd_primals(r, c);
    r.line("");
    r.line("## modularity");
    cmd_modular(r, c, std::nullopt);
    r.line("");
    r.line("## glimm classes");
    cmd_glimm(r, c);
    r.line("");
    r.line("## unitality, postliminality, center");
    cmd_unital(r, c);
    cmd_postliminal(r, c);
    cmd_center(r, c);
    return;
  }
  throw ModelError("unknown command '" + cmd + "'");
}

}  // namespace

AnalysisReport analyze(const Options& opts) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.command = opts.command;
  if (is_ftp(opts.file))
    analyze_space(r, opts);
  else
    analyze_diagram(r, opts);
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structure of AF algebras from Bratteli diagrams, and finite models of their spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  Options o;
  std::string format = "text";
  std::vector<std::string> asserts;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input .bdg diagram or .ftp space")->required();
    sub->add_option("--horizon", o.horizon, "truncation level, or preamble+K*period");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--assert", asserts, "verdict=expected; exit 1 on mismatch");
    sub->add_option("--max-ideals", o.max_ideals, "cap on enumerated ideals");
  };
  const std::vector<std::pair<std::string, std::string>> commands{
      {"validate", "parse and validate the input"},
      {"ideals", "enumerate ideal subdiagrams"},
      {"primitives", "primitive ideals and their quotient diagrams"},
      {"primals", "minimal primal ideals"},
      {"closures", "closures of points in the primitive spectrum"},
      {"glimm", "Glimm classes"},
      {"center", "center verdict"},
      {"unital", "unitality"},
      {"modular", "modularity of primitive and minimal primal ideals"},
      {"postliminal", "postliminality"},
      {"topo", "topological checks on a finite space"},
      {"report", "all analyses"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    if (name == "closures" || name == "report") sub->add_option("--period", o.period, "period to display");
    if (name == "modular") sub->add_option("--ideal", o.ideal, "primitive ideal name, e.g. Q_2");
    if (name == "topo")
      sub->add_option("--check", o.check, "components, qcr, closed-interior, phi-open or all")
          ->check(CLI::IsMember({"all", "components", "qcr", "closed-interior", "phi-open"}));
    sub->callback([&o, name = name] { o.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    const AnalysisReport r = analyze(o);
    if (format == "json")
      out << r.to_json().dump(2) << "\n";
    else
      out << r.text();

    int code = kOk;
    for (const auto& a : asserts) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) {
        err << "assert " << a << ": expected name=value\n";
        code = kAssertionFailed;
        continue;
      }
      const std::string key = a.substr(0, eq), want = a.substr(eq + 1);
      std::string got;
      try {
        got = r.verdict_string(key);
      } catch (const ModelError&) {
        err << "assert " << a << ": no verdict named " << key << "\n";
        code = kAssertionFailed;
        continue;
      }
      if (got != want) {
        err << "assert " << a << ": FAILED (got " << got << ")\n";
        code = kAssertionFailed;
      }
    }
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << o.file << ": " << e.what() << "\n";
    return kParseError;
  } catch (const ModelError& e) {
    err << "invalid model: " << e.what() << "\n";
    return kInvalidModel;
  } catch (const SizeLimitError& e) {
    err << "size limit: " << e.what() << "\n";
    return kSizeLimit;
  }
}

}  // namespace afspec::cli
