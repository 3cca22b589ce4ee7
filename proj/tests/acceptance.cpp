// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "afspec/bdg_format.hpp"
#include "afspec/cli.hpp"
#include "afspec/example1_model.hpp"
#include "afspec/ideal_lattice.hpp"
#include "afspec/spectrum.hpp"
#include "afspec/topospace.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace afspec;

namespace {

std::string data(const std::string& name) { return std::string(AFSPEC_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

AnalysisReport analyze(const std::string& command, const std::string& file,
                       std::function<void(cli::Options&)> tweak = nullptr) {
  cli::Options o;
  o.command = command;
  o.file = data(file);
  if (tweak) tweak(o);
  return cli::analyze(o);
}

std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

// 1. Eight primitive families with the listed quotient diagrams.
Outcome primitive_families() {
  Outcome o;
  const auto r = analyze("primitives", "example2.bdg", [](cli::Options& opt) { opt.horizon = "preamble+3*period"; });
  std::vector<std::string> got;
  for (const auto& row : r.tables["primitive_families"]) got.push_back(row["quotient"].get<std::string>());
  const std::vector<std::string> want{"{a}", "{a,b}", "{a,c,d,e}", "{d}", "{e}", "{e,f}", "{e,g,h,a'}", "{h}"};
  o.expect(got == want, "families: " + joined(got));
  return o;
}

// 2. Closure table for one period.
Outcome closure_table() {
  Outcome o;
  const auto r = analyze("closures", "example2.bdg", [](cli::Options& opt) { opt.period = 1; });
  const std::vector<std::pair<std::string, std::vector<std::string>>> want{
      {"P", {"P"}},           {"Q", {"Q", "P"}}, {"R", {"R", "P", "S", "T"}},      {"S", {"S"}},
      {"T", {"T"}},           {"U", {"U", "T"}}, {"V", {"V", "T", "W", "P'"}}, {"W", {"W"}}};
  const auto& table = r.tables["closures"];
  o.expect(table.size() == want.size(), "table has " + std::to_string(table.size()) + " rows");
  for (const auto& [point, cl] : want) {
    const bool ok = table.contains(point) && table[point].get<std::vector<std::string>>() == cl;
    o.expect(ok, "cl{" + point + "} = " + (table.contains(point) ? table[point].dump() : "missing"));
  }
  return o;
}

// 3. Example 2 verdicts.
Outcome example2_verdicts() {
  Outcome o;
  const auto d = load_diagram(data("example2.bdg"));
  const auto host = build_skeleton(d, 9);
  const PrimSpace s = prim_space(host);

  std::set<std::string> modular_families;
  for (const auto& p : s.points) {
    const bool m = is_modular(d, p.ideal).unital;
    o.expect(m, p.name + " is not modular");
    if (m && p.family) modular_families.insert(s.families[*p.family].label);
  }
  o.expect(modular_families.size() == 8, std::to_string(modular_families.size()) + " modular families");

  auto primals = minimal_primals(host);
  const NodeSet settled = host->settled();
  std::erase_if(primals, [&](const IdealDiagram& e) { return !e.complement().is_subset_of(settled); });
  std::vector<std::optional<std::size_t>> fam;
  std::vector<int> inst;
  std::vector<std::string> primal_quotients;
  for (const auto& f : label_families(*host, primals, fam, inst)) primal_quotients.push_back(f.quotient);
  o.expect(primal_quotients == std::vector<std::string>{"{a,b}", "{a,c,d,e}", "{e,f}", "{e,g,h,a'}"},
           "minimal primal families: " + joined(primal_quotients));
  for (const auto& e : primals) o.expect(is_modular(d, e).unital, "a minimal primal ideal is not modular");

  o.expect(!is_unital(d).unital, "unital");
  o.expect(is_postliminal(d).value == Tri::True, "postliminal " + to_string(is_postliminal(d).value));
  const GlimmPartition g = glimm_classes(s);
  o.expect(g.classes.size() == 1 && g.single_stable, std::to_string(g.classes.size()) + " Glimm classes");
  const CenterVerdict c = center_verdict(d);
  o.expect(c.kind == CenterKind::ZeroCenter, "center " + to_string(c.kind));
  return o;
}

// 4. Example 1 model verdicts, stable across grid sizes.
Outcome example1_verdicts() {
  Outcome o;
  std::set<std::string> signatures;
  for (int k = 3; k <= 8; ++k)
    for (int n = 3; n <= 6; ++n) {
      const FiniteTopSpace x = example1_model(k, n);
      const bool ci = every_open_has_closed_with_interior(x).value;
      const bool qcr = is_quasi_completely_regular(x).value;
      const Regularization reg = complete_regularization(x);
      const TopVerdict open = is_map_open(x, reg.quotient, reg.phi);
      bool witness_near_r0 = false;
      if (open.witness)
        for (int m = 0; m <= n; ++m) witness_near_r0 = witness_near_r0 || open.witness->test(x.index(example1_r(0, m)));

      std::ostringstream sig;
      sig << "closed_interior=" << ci << " phi_open=" << open.value << " qcr=" << qcr;
      signatures.insert(sig.str());
      const std::string at = " at k=" + std::to_string(k) + ", N=" + std::to_string(n);
      o.expect(ci, "closed_interior=false" + at);
      o.expect(!open.value && witness_near_r0, "phi_open=true" + at);
      o.expect(qcr, "qcr=false" + at);
    }
  o.expect(signatures.size() == 1, "verdicts vary across sizes");
  // Keep the report short: the first few notes plus the observed signatures.
  if (o.notes.size() > 3) o.notes.resize(3);
  for (const auto& s : signatures) o.notes.push_back("observed " + s);
  return o;
}

// 5. Oracle equivalence on seeded random inputs.
Outcome oracle_equivalence() {
  Outcome o;
  int ideal_mismatch = 0, primal_mismatch = 0, implication = 0, glimm_mismatch = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto d = oracle::random_diagram(0xacce0000 + i);
    const auto host = build_skeleton(d);
    const auto ideals = enumerate_ideals(host);
    std::vector<oracle::NameSet> mine;
    for (const auto& e : ideals) {
      const auto v = e.vertices();
      const oracle::NameSet names(v.begin(), v.end());
      mine.push_back(names);
      const bool primal = is_primal(e);
      if (primal != oracle::brute_primal(d, names)) ++primal_mismatch;
      if (!e.is_full() && is_primitive(e) && !primal) ++implication;
    }
    auto brute = oracle::brute_ideals(d);
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    if (mine != brute) ++ideal_mismatch;
  }
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto x = oracle::random_space(0xacce8000 + i);
    const auto comp = x.component_index();
    const auto cls = oracle::constancy_classes(x);
    for (std::size_t p = 0; p < x.size(); ++p)
      for (std::size_t q = 0; q < x.size(); ++q)
        if ((comp[p] == comp[q]) != (cls[p] == cls[q])) ++glimm_mismatch;
  }
  o.expect(ideal_mismatch == 0, std::to_string(ideal_mismatch) + " ideal lattice mismatches");
  o.expect(primal_mismatch == 0, std::to_string(primal_mismatch) + " primality mismatches");
  o.expect(implication == 0, std::to_string(implication) + " primitive but not primal");
  o.expect(glimm_mismatch == 0, std::to_string(glimm_mismatch) + " component/constancy mismatches");
  return o;
}

// 6. Sanity fixtures.
Outcome fixtures() {
  Outcome o;
  const auto ladder = load_diagram(data("ladder.bdg"));
  o.expect(center_verdict(ladder).kind == CenterKind::NonzeroUnital, "ladder center");
  o.expect(is_postliminal(ladder).value == Tri::True, "ladder postliminal");
  o.expect(is_postliminal(load_diagram(data("uhf2.bdg"))).value == Tri::False, "uhf2 postliminal");
  const auto compacts = load_diagram(data("compacts.bdg"));
  const CenterVerdict c = center_verdict(compacts);
  o.expect(!is_unital(compacts).unital, "compacts unital");
  o.expect(c.glimm_class_count == 1 && c.period_stable, "compacts Glimm classes");
  o.expect(c.kind == CenterKind::ZeroCenter, "compacts center " + to_string(c.kind));
  return o;
}

// 7. Byte-identical reports.
Outcome determinism() {
  Outcome o;
  for (const auto* f : {"example2.bdg", "example1.ftp", "ladder.bdg", "uhf2.bdg", "compacts.bdg"}) {
    std::ostringstream a, b, err;
    const int ca = cli::run({"report", data(f)}, a, err);
    const int cb = cli::run({"report", data(f)}, b, err);
    o.expect(ca == 0 && cb == 0, std::string(f) + " report failed: " + err.str());
    o.expect(a.str() == b.str(), std::string(f) + " reports differ");
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"example 2 primitive families", primitive_families},
      {"example 2 closure table", closure_table},
      {"example 2 verdicts", example2_verdicts},
      {"example 1 model verdicts across grid sizes", example1_verdicts},
      {"oracle equivalence", oracle_equivalence},
      {"sanity fixtures", fixtures},
      {"report determinism", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.pass) {
      ++failed;
      for (const auto& n : o.notes) std::cout << "\n    " << n;
    }
    std::cout << "\n";
  }
  return failed;
}
