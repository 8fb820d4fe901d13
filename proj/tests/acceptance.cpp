// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "grids.hpp"
#include "hermlat/paperlab.hpp"

using namespace hermlat;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
};

unsigned g_jobs = 1;

HermLattice parse(const Field& f, const std::string& text) { return parse_lattice(f, text); }

bool same_classes(const std::vector<HermLattice>& got, const std::vector<HermLattice>& want, std::string& shown) {
  for (const auto& g : got) shown += format_gram(g.gram()) + " ";
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    int hits = 0;
    for (const auto& g : got) hits += is_isometric(g, w);
    if (hits != 1) return false;
  }
  return true;
}

bool all_rows_hold(const CheckResult& r, const std::function<bool(const nlohmann::json&)>& keep = {}) {
  bool any = false;
  for (const auto& row : r.details.at("rows")) {
    if (keep && !keep(row)) continue;
    any = true;
    if (!row.at("holds").get<bool>()) return false;
  }
  return any;
}

Outcome base_chain() {
  std::ostringstream note;
  bool ok = true;
  for (std::int64_t m : {1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 19, 23}) {
    const Field f = Field::make(m);
    auto r1 = truant(HermLattice::diagonal(f, {1}), 2);
    auto r2 = truant(HermLattice::diagonal(f, {1, 1}), 2);
    HermLattice expected = m == 3 ? HermLattice::diagonal(f, {1, 2}) : parse(f, "[[2,1],[1,2]]");
    bool found = false;
    if (r2.truant)
      for (const auto& c : r2.failing_level) found = found || is_isometric(c.lat, expected);
    bool row = r1.truant && r1.truant->s == 1 && r2.truant && r2.truant->s == 2 && found;
    if (!row) note << " m=" << m << " mismatch;";
    ok = ok && row;
  }
  note << " 12 fields, T(<1>)=1 and T(<1,1>)=2 with the named class in the failing level";
  return {ok, note.str()};
}

Outcome ternary_trees() {
  std::ostringstream note;
  bool ok = true;
  for (std::int64_t m : {5, 6, 10, 13}) {
    auto tree = escalation_tree(Field::make(m), 4, 3, true, g_jobs);
    std::size_t leaves = 0, eliminated = 0;
    for (const auto& n : tree.nodes)
      if (n.children.empty()) {
        ++leaves;
        eliminated += n.status == NodeStatus::EliminatedBy;
      }
    bool row = leaves > 0 && leaves == eliminated;
    note << " m=" << m << ": " << eliminated << "/" << leaves << " leaves eliminated;";
    ok = ok && row;
  }
  struct Survivors {
    std::int64_t m;
    std::vector<std::vector<Int>> diagonals;
  };
  for (const auto& s : std::vector<Survivors>{{1, {{1, 1, 1}}}, {3, {{1, 1, 1}, {1, 1, 2}}}, {7, {{1, 1, 1}}}}) {
    const Field f = Field::make(s.m);
    auto tree = escalation_tree(f, 4, 3, true, g_jobs);
    std::vector<HermLattice> got, want;
    for (std::size_t i : tree.select(3, NodeStatus::CertifiedUpToCap)) got.push_back(tree.nodes[i].lat);
    for (const auto& d : s.diagonals) want.push_back(HermLattice::diagonal(f, d));
    std::string shown;
    bool row = same_classes(got, want, shown);
    note << " m=" << s.m << " certified: " << shown << ";";
    ok = ok && row;
  }
  return {ok, note.str()};
}

Outcome nonfree_tables() {
  CheckResult c3 = run_check("C3", g_jobs), c4 = run_check("C4", g_jobs);
  return {c3.status == CheckStatus::Pass && c4.status == CheckStatus::Pass,
          std::string(" C3 ") + check_status_name(c3.status) + ", C4 " + check_status_name(c4.status)};
}

Outcome identities() {
  std::ostringstream note;
  bool ok = true;
  std::size_t deltas = 0;
  for (const char* id : {"C6", "C9", "C11"}) {
    CheckResult r = run_check(id, g_jobs);
    bool fact = r.details.at("factorizations_ok").get<bool>() && !r.details.at("factorizations").empty();
    for (const auto& row : r.details.at("factorizations"))
      if (row.at("identity").get<std::string>().rfind("delta=", 0) == 0) deltas += row.at("holds").get<bool>();
    note << " " << id << " factorizations " << (fact ? "exact" : "MISMATCH") << " (check "
         << check_status_name(r.status) << ");";
    ok = ok && fact;
  }
  note << " " << deltas << "/4 delta instantiations hold";
  return {ok && deltas == 4, note.str()};
}

Outcome quaternaries() {
  CheckResult c7 = run_check("C7", g_jobs);
  std::ostringstream note;
  note << " C7 " << check_status_name(c7.status) << ";";
  bool ok = c7.status == CheckStatus::Pass;
  struct Q {
    std::int64_t m;
    std::string gram;
  };
  for (const auto& q : std::vector<Q>{{1, "[[1,0,0,0],[0,1,0,0],[0,0,2,1],[0,0,1,2]]"},
                                      {2, "[[1,0,0,0],[0,1,0,0],[0,0,2,\"-1+w\"],[0,0,\"-1-w\",2]]"},
                                      {11, "[[1,0,0,0],[0,1,0,0],[0,0,2,\"w\"],[0,0,\"1-w\",2]]"}}) {
    const Field f = Field::make(q.m);
    auto report = certify_2universal(parse(f, q.gram), 4, true, g_jobs);
    bool verified = report.certified_up_to_cap();
    for (const auto& e : report.entries)
      verified = verified && e.witness && verify_witness(f, e.cls.lat.gram(), parse(f, q.gram).gram(), e.witness->rows);
    note << " m=" << q.m << " certified " << report.entries.size() << " classes: " << (verified ? "yes" : "no") << ";";
    ok = ok && verified;
  }
  return {ok, note.str()};
}

Outcome completions() {
  CheckResult c12 = run_check("C12", g_jobs);
  bool ok = all_rows_hold(c12, [](const nlohmann::json& row) { return row.contains("m"); });
  std::ostringstream note;
  for (const auto& row : c12.details.at("rows"))
    if (row.contains("m")) note << " m=" << row.at("m") << ": " << row.at("classes").size() << " classes;";
  return {ok, note.str()};
}

Outcome bounds() {
  CheckResult c15 = run_check("C15", g_jobs), c16 = run_check("C16", g_jobs);
  std::string n5;
  for (const auto& row : c16.details.at("table"))
    if (row.at("m") == 5) n5 = row.at("n").get<std::string>();
  return {c15.status == CheckStatus::Pass && c16.status == CheckStatus::Pass && n5 == "2",
          std::string(" C15 ") + check_status_name(c15.status) + ", C16 " + check_status_name(c16.status) +
              ", n(5)=" + n5};
}

Outcome oracles() {
  std::ostringstream note;
  bool ok = true;
  auto add = [&](const char* name, const grids::GridResult& r) {
    note << "\n    " << name << ": " << grids::describe(r);
    ok = ok && r.ok();
  };
  add("vectors_of_norm", grids::vectors_of_norm_grid());
  add("represents", grids::represents_grid());
  add("s_value", grids::s_value_grid());
  add("enumerate_binary", grids::enumerate_binary_grid());
  return {ok, note.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria runner"};
  app.add_option("--jobs", g_jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "escalation base chain", 10, base_chain},
      {2, "ternary classification", 300, ternary_trees},
      {3, "non-free tables", 60, nonfree_tables},
      {4, "matrix identities", 1, identities},
      {5, "quaternary classification", 600, quaternaries},
      {6, "finiteness completions", 60, completions},
      {7, "rank bounds", 120, bounds},
      {8, "oracle equivalence", 1e9, oracles},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string(" exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs <= c.budget_s;
    bool pass = o.pass && in_time;
    all = all && pass;
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << " s";
    if (c.budget_s < 1e8) std::cout << ", budget " << c.budget_s << " s";
    std::cout << ")" << (in_time ? "" : " over budget") << "\n   " << o.note << std::endl;
  }
  return all ? 0 : 1;
}
