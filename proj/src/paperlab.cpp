#include "hermlat/paperlab.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "hermlat/io.hpp"
#include "parallel.hpp"

namespace hermlat {

namespace {

using Rows = std::vector<std::vector<std::string>>;

// Entry syntax of parse_algint, with a leading '~' for the conjugate.
AlgInt entry(const Field& f, const std::string& s) {
  if (!s.empty() && s[0] == '~') return f.conj(parse_algint(s.substr(1)));
  return parse_algint(s);
}

AlgMatrix mat(const Field& f, const Rows& rows) {
  AlgMatrix out(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out(i, j) = entry(f, rows[i][j]);
  return out;
}

HermLattice lat(const Field& f, const Rows& rows) { return HermLattice::make(f, mat(f, rows)); }

HermLattice diag(const Field& f, std::initializer_list<int> entries) {
  std::vector<Int> v;
  for (int e : entries) v.push_back(e);
  return HermLattice::diagonal(f, v);
}

HermLattice binary(const Field& f, const Int& a, const AlgInt& b, const Int& c) {
  return HermLattice::make(f, AlgMatrix{{a, b}, {f.conj(b), c}});
}

HermLattice sum(const HermLattice& x, const HermLattice& y) { return x.orthogonal_sum(y); }

std::string show(const HermLattice& l) { return format_gram(l.gram()); }

nlohmann::json searched_counts(RepresentationSearch& search, const AlgMatrix& target) {
  std::set<Int> norms;
  for (std::size_t i = 0; i < target.rows(); ++i) norms.insert(target(i, i).a);
  nlohmann::json out = nlohmann::json::object();
  for (const auto& t : norms) out[t.str()] = search.count(t);
  return out;
}

// Collects claim rows; the check passes iff every row holds.
struct Evidence {
  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json first_failure;

  void add(nlohmann::json row, bool holds) {
    row["holds"] = holds;
    if (!holds && ok) {
      ok = false;
      first_failure = row;
    }
    rows.push_back(std::move(row));
  }
  void fail(nlohmann::json row) { add(std::move(row), false); }
};

// Exhaustive non-representation claim: target does not embed in lattice.
void expect_not_represented(Evidence& ev, const HermLattice& target, const HermLattice& lattice,
                            nlohmann::json row = nlohmann::json::object()) {
  RepresentationSearch search(lattice);
  auto w = search.find(target);
  row["m"] = lattice.field().m();
  row["claim"] = "not represented";
  row["target"] = show(target);
  row["lattice"] = show(lattice);
  row["candidates_by_norm"] = searched_counts(search, target.gram());
  if (w) row["witness"] = to_json(*w);
  ev.add(std::move(row), !w);
}

void expect_represented(Evidence& ev, const HermLattice& target, const HermLattice& lattice,
                        nlohmann::json row = nlohmann::json::object()) {
  auto w = represents(target, lattice);
  row["m"] = lattice.field().m();
  row["claim"] = "represented";
  row["target"] = show(target);
  row["lattice"] = show(lattice);
  bool holds = w && verify_witness(lattice.field(), target.gram(), lattice.gram(), w->rows);
  if (w) row["witness"] = to_json(*w);
  ev.add(std::move(row), holds);
}

// left * middle * right == target, entry by entry.
void expect_product(Evidence& ev, const Field& f, const std::string& name, const AlgMatrix& target,
                    const AlgMatrix& left, const AlgMatrix& middle, const AlgMatrix& right) {
  AlgMatrix prod = multiply(f, multiply(f, left, middle), right);
  bool equal = prod == target;
  nlohmann::json row = {{"m", f.m()},
                        {"identity", name},
                        {"target", to_json(target)},
                        {"left", to_json(left)},
                        {"middle", to_json(middle)},
                        {"right", to_json(right)},
                        {"right_is_conjugate_transpose", right == conjugate_transpose(f, left)},
                        {"witness_verified", verify_witness(f, target, middle, left)}};
  if (!equal) row["computed"] = to_json(prod);
  ev.add(std::move(row), equal && row["witness_verified"].get<bool>());
}

CheckResult finish(const std::string& id, Evidence& ev, nlohmann::json details = nlohmann::json::object()) {
  CheckResult r;
  r.check_id = id;
  r.status = ev.ok ? CheckStatus::Pass : CheckStatus::Fail;
  details["rows"] = ev.rows;
  if (!ev.ok) details["first_failure"] = ev.first_failure;
  r.details = std::move(details);
  return r;
}

const std::vector<std::int64_t> kEscalationFields{1, 2, 3, 5, 6, 7, 10, 11, 13, 15, 19, 23};
const std::vector<std::int64_t> kLargeFields{5, 6, 10, 13, 15, 19, 23};

bool level_contains(const TruantReport& report, const HermLattice& expected) {
  for (const auto& c : report.failing_level)
    if (is_isometric(c.lat, expected)) return true;
  return false;
}

CheckResult check_base(unsigned jobs) {
  Evidence ev;
  std::vector<nlohmann::json> rows(kEscalationFields.size());
  std::vector<bool> holds(kEscalationFields.size());
  detail::parallel_for(kEscalationFields.size(), jobs, [&](std::size_t i) {
    const Field f = Field::make(kEscalationFields[i]);
    const Int cap = 2;
    auto t0 = truant(HermLattice::zero(f), cap);
    auto t1 = truant(diag(f, {1}), cap);
    auto t2 = truant(diag(f, {1, 1}), cap);
    HermLattice expected = f.m() == 3 ? diag(f, {1, 2}) : binary(f, 2, 1, 2);
    auto value = [](const TruantReport& r) { return r.truant ? r.truant->s.str() : std::string("none"); };
    nlohmann::json level = nlohmann::json::array();
    for (const auto& c : t2.failing_level) level.push_back(show(c.lat));
    rows[i] = {{"m", f.m()},      {"truant_zero", value(t0)}, {"truant_rank1", value(t1)},
               {"truant_rank2", value(t2)}, {"rank2_failing_level", level}, {"expected_in_level", show(expected)}};
    holds[i] = t0.truant && t0.truant->s == 1 && t1.truant && t1.truant->s == 1 && t2.truant &&
               t2.truant->s == 2 && level_contains(t2, expected);
  });
  for (std::size_t i = 0; i < rows.size(); ++i) ev.add(rows[i], holds[i]);
  return finish("C1", ev, {{"s_cap", "2"}});
}

CheckResult check_large_m_ternary(unsigned jobs) {
  std::vector<Evidence> parts(kLargeFields.size());
  detail::parallel_for(kLargeFields.size(), jobs, [&](std::size_t i) {
    const Field f = Field::make(kLargeFields[i]);
    expect_not_represented(parts[i], diag(f, {1, 3}), diag(f, {1, 1, 1}));
    expect_not_represented(parts[i], diag(f, {3, 3}), diag(f, {1, 1, 2}));
  });
  Evidence ev;
  for (auto& p : parts)
    for (auto& r : p.rows) ev.add(r, r["holds"].get<bool>());
  return finish("C2", ev);
}

std::map<std::pair<int, int>, std::vector<std::int64_t>> solvability_table(const AlgInt& b, std::int64_t m_max,
                                                                           nlohmann::json& scanned) {
  std::map<std::pair<int, int>, std::vector<std::int64_t>> table;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    if (!is_square_free(m)) continue;
    const Field f = Field::make(m);
    Int nb = f.norm(b);
    // 2c = N(b) needs N(b) even; the lattice is non-free iff (2, b) is not principal.
    if (nb % 2 != 0 || f.is_principal_ideal({AlgInt(2), b})) continue;
    scanned.push_back(m);
    const std::vector<AlgInt> ideal{AlgInt(2), f.conj(b)};
    for (int k = 0; k <= 5; ++k) {
      int x = 10 - 2 * k;
      bool y_ok = k == 0 || !f.elements_of_norm(k).empty();
      bool x_ok = x == 0;
      for (const auto& e : f.elements_of_norm(x))
        if (f.ideal_contains(ideal, e)) x_ok = true;
      if (y_ok && x_ok) table[{k, x}].push_back(m);
    }
  }
  return table;
}

struct SubcaseExpectation {
  std::string name;
  AlgInt b;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> expected;
};

const std::vector<SubcaseExpectation>& subcases() {
  static const std::vector<SubcaseExpectation> expectations{
      {"b=w", AlgInt(0, 1), {{{0, 10}, {6, 10, 15, 31, 39}}, {{1, 8}, {23, 31}}}},
      {"b=-1+w", AlgInt(-1, 1), {{{0, 10}, {15, 31, 39}}, {{1, 8}, {23, 31}}, {{5, 0}, {5}}}},
  };
  return expectations;
}

nlohmann::json table_json(const std::map<std::pair<int, int>, std::vector<std::int64_t>>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, ms] : t) out.push_back({{"y_norm", key.first}, {"border_norm", key.second}, {"m", ms}});
  return out;
}

CheckResult check_solvability(unsigned) {
  constexpr std::int64_t kMax = 50;
  Evidence ev;
  for (const auto& sc : subcases()) {
    nlohmann::json scanned = nlohmann::json::array();
    auto table = solvability_table(sc.b, kMax, scanned);
    ev.add({{"subcase", sc.name},
            {"m_range", "1.." + std::to_string(kMax)},
            {"nonfree_m_scanned", scanned},
            {"computed", table_json(table)},
            {"expected", table_json(sc.expected)}},
           table == sc.expected);
  }
  return finish("C3", ev);
}

CheckResult check_nonfree_ternary(unsigned jobs) {
  std::vector<std::pair<AlgInt, std::int64_t>> cases;
  for (const auto& sc : subcases()) {
    std::set<std::int64_t> ms;
    for (const auto& [key, list] : sc.expected) ms.insert(list.begin(), list.end());
    for (auto m : ms) cases.emplace_back(sc.b, m);
  }
  std::vector<Evidence> parts(cases.size());
  detail::parallel_for(cases.size(), jobs, [&](std::size_t i) {
    const Field f = Field::make(cases[i].second);
    const AlgInt& b = cases[i].first;
    HermLattice l33 = sum(diag(f, {1, 1}), binary(f, 2, b, f.norm(b) / 2));
    expect_not_represented(parts[i], binary(f, 2, 1, 2), l33, {{"b", to_string(b)}});
  });
  Evidence ev;
  for (auto& p : parts)
    for (auto& r : p.rows) ev.add(r, r["holds"].get<bool>());
  return finish("C4", ev);
}

CheckResult check_small_m_ternary(unsigned) {
  Evidence ev;
  {
    const Field f = Field::make(1);
    expect_not_represented(ev, binary(f, 2, 1, 2), diag(f, {1, 1, 2}));
  }
  {
    const Field f = Field::make(2);
    HermLattice t = binary(f, 2, AlgInt(-1, 1), 2);
    expect_not_represented(ev, t, diag(f, {1, 1, 1}));
    expect_not_represented(ev, t, diag(f, {1, 1, 2}));
  }
  {
    const Field f = Field::make(7);
    expect_not_represented(ev, binary(f, 2, 1, 2), diag(f, {1, 1, 2}));
  }
  {
    const Field f = Field::make(11);
    for (const AlgInt& b : {AlgInt(0, 1), AlgInt(-1, 1)}) {
      expect_not_represented(ev, binary(f, 2, b, 2), diag(f, {1, 1, 1}));
      expect_not_represented(ev, binary(f, 2, b, 2), diag(f, {1, 1, 2}));
    }
  }
  return finish("C5", ev);
}

// Target of X = X' P, i.e. P M P^*.
AlgMatrix congruence(const Field& f, const AlgMatrix& p, const AlgMatrix& m) {
  return multiply(f, multiply(f, p, m), conjugate_transpose(f, p));
}

void expect_substitution(Evidence& ev, const Field& f, const std::string& name, const AlgMatrix& p,
                         const AlgMatrix& base, const AlgMatrix& displayed) {
  AlgMatrix got = congruence(f, p, base);
  nlohmann::json row = {{"substitution", name}, {"change", to_json(p)}, {"displayed", to_json(displayed)}};
  if (got != displayed) row["computed"] = to_json(got);
  ev.add(std::move(row), got == displayed);
}

CheckResult check_q7(unsigned jobs) {
  const Field f = Field::make(7);
  const HermLattice id = diag(f, {1, 1, 1});
  const HermLattice other = lat(f, {{"2", "1", "w"}, {"1", "2", "1"}, {"~w", "1", "2"}});
  auto diag_w = [&](std::size_t k) {
    AlgMatrix p = AlgMatrix::diagonal({1, 1, 1});
    p(k, k) = f.omega();
    return p;
  };
  struct Case {
    std::string name;
    AlgMatrix change;
    AlgMatrix displayed;
  };
  const std::vector<Case> cases{
      {"first column even", diag_w(0), mat(f, {{"4", "w", "-2+w"}, {"~w", "2", "1"}, {"~-2+w", "1", "2"}})},
      {"second column even", diag_w(1), mat(f, {{"2", "~w", "w"}, {"w", "4", "w"}, {"~w", "~w", "2"}})},
      {"third column even", diag_w(2), mat(f, {{"2", "1", "2"}, {"1", "2", "~w"}, {"2", "w", "4"}})},
      {"first two columns alike", mat(f, {{"1", "1", "0"}, {"0", "w", "0"}, {"0", "0", "1"}}),
       mat(f, {{"6", "~3w", "1+w"}, {"3w", "4", "w"}, {"~1+w", "~w", "2"}})},
      {"last two columns alike", mat(f, {{"1", "0", "0"}, {"0", "1", "1"}, {"0", "0", "w"}}),
       mat(f, {{"2", "1+w", "2"}, {"~1+w", "6", "~3w"}, {"2", "3w", "4"}})},
      {"first and third columns alike", mat(f, {{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "w"}}),
       mat(f, {{"5", "2", "~2+2w"}, {"2", "2", "~w"}, {"2+2w", "w", "4"}})},
      {"three distinct column types", mat(f, {{"1", "0", "1"}, {"0", "1", "1"}, {"0", "0", "w"}}),
       mat(f, {{"5", "4+w", "~2+2w"}, {"~4+w", "6", "~3w"}, {"2+2w", "3w", "4"}})},
  };

  Evidence factorizations, substitutions, witnesses;
  expect_product(factorizations, f, "first column even", cases[0].displayed,
                 mat(f, {{"1", "1", "~w"}, {"0", "1", "-1"}, {"-1", "0", "-1"}}), id.gram(),
                 mat(f, {{"1", "0", "-1"}, {"1", "1", "0"}, {"w", "-1", "-1"}}));
  for (const auto& c : cases) expect_substitution(substitutions, f, c.name, c.change, other.gram(), c.displayed);
  std::vector<Evidence> parts(cases.size());
  detail::parallel_for(cases.size(), jobs, [&](std::size_t i) {
    expect_represented(parts[i], HermLattice::make(f, cases[i].displayed), id, {{"case", cases[i].name}});
  });
  for (auto& p : parts)
    for (auto& r : p.rows) witnesses.add(r, r["holds"].get<bool>());

  // The second genus class has the same determinant as I but is not isometric to it.
  Evidence ev;
  ev.add({{"other_class", show(other)},
          {"det", determinant(f, other.gram()).a.str()},
          {"isometric_to_I", is_isometric(other, id)}},
         determinant(f, other.gram()) == AlgInt(1) && !is_isometric(other, id));
  for (auto* part : {&factorizations, &substitutions, &witnesses})
    for (auto& r : part->rows) ev.add(r, r["holds"].get<bool>());
  return finish("C6", ev,
                {{"factorizations", factorizations.rows},
                 {"factorizations_ok", factorizations.ok},
                 {"substitutions_ok", substitutions.ok},
                 {"witnesses_ok", witnesses.ok}});
}

CheckResult check_quaternary(unsigned jobs) {
  std::vector<std::function<void(Evidence&)>> tasks;
  auto ones = [](const Field& f) { return diag(f, {1, 1}); };

  // Free candidates over the fields with a 2-universal ternary-like start.
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(1);
    HermLattice l = sum(ones(f), binary(f, 2, AlgInt(-1, 1), 2));
    expect_not_represented(ev, binary(f, 2, 1, 2), l);
    expect_not_represented(ev, binary(f, 2, AlgInt(0, 1), 2), l);
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(2);
    expect_not_represented(ev, binary(f, 2, AlgInt(-1, 1), 2), sum(ones(f), binary(f, 2, 1, 2)));
    HermLattice l = sum(ones(f), binary(f, 2, AlgInt(0, 1), 2));
    expect_not_represented(ev, binary(f, 2, 1, 2), l);
    expect_not_represented(ev, binary(f, 2, AlgInt(-1, 1), 2), l);
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(7);
    expect_not_represented(ev, binary(f, 3, AlgInt(1, 1), 3), sum(ones(f), binary(f, 2, 1, 2)));
    expect_not_represented(ev, binary(f, 2, 1, 2), sum(ones(f), binary(f, 2, AlgInt(0, 1), 2)));
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(11);
    expect_not_represented(ev, binary(f, 2, AlgInt(0, 1), 2), sum(ones(f), binary(f, 2, 1, 2)));
  });
  // <1,1,1,a> over Q(sqrt -2), bounded a.
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(2);
    for (int a = 1; a <= 6; ++a)
      expect_not_represented(ev, binary(f, 2, AlgInt(-1, 1), 2), sum(diag(f, {1, 1, 1}), diag(f, {a})),
                             {{"bounded_a", a}});
  });
  // Claims used on the way for the larger fields.
  for (std::int64_t m : kLargeFields)
    tasks.push_back([m, ones](Evidence& ev) {
      const Field f = Field::make(m);
      expect_not_represented(ev, binary(f, 2, 1, 2), diag(f, {1, 1, 2, 2}));
      const Int n = f.omega_norm();
      HermLattice l = sum(ones(f), binary(f, 2, 1, 2));
      for (Int c = n / 2 + 1; c < n; ++c)
        if (2 * c > n) expect_not_represented(ev, binary(f, 2, AlgInt(0, 1), c), l, {{"c", c.str()}});
    });

  // Non-free candidates, first shape <1,1,1> + (2, b).
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(6);
    HermLattice l = sum(diag(f, {1, 1, 1}), binary(f, 2, AlgInt(0, 1), 3));
    AlgMatrix target = mat(f, {{"2", "-1+w"}, {"~-1+w", "3"}});
    // A product X M X^* is positive semidefinite, so an indefinite target is
    // never represented. Such a row eliminates nothing; report the truant too.
    PositivityResult pos = is_positive(f, target);
    nlohmann::json row = {{"m", 6},
                          {"claim", "not represented"},
                          {"target", format_gram(target)},
                          {"lattice", show(l)},
                          {"target_det", determinant(f, target).a.str()},
                          {"target_definite", pos.kind == Positivity::Definite}};
    if (pos.kind == Positivity::Indefinite) {
      row["vacuous"] = true;
      auto rep = truant(l, 4);
      if (rep.truant) row["eliminated_by_truant"] = binary_class_json(*rep.truant);
      ev.add(std::move(row), rep.truant.has_value());
    } else {
      expect_not_represented(ev, HermLattice::make(f, target), l);
    }
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(15);
    HermLattice target = binary(f, 4, AlgInt(-1, 2), 4);
    for (const AlgInt& b : {AlgInt(0, 1), AlgInt(-1, 1)})
      expect_not_represented(ev, target, sum(diag(f, {1, 1, 1}), binary(f, 2, b, 2)));
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(23);
    HermLattice target = binary(f, 3, AlgInt(1, 1), 3);
    for (const AlgInt& b : {AlgInt(0, 1), AlgInt(-1, 1)})
      expect_not_represented(ev, target, sum(diag(f, {1, 1, 1}), binary(f, 2, b, 3)));
  });
  // Second shape <1,1> + [[2,1,w],[1,2,b],[w*,b*,c]].
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(6);
    HermLattice l = sum(ones(f), lat(f, {{"2", "1", "w"}, {"1", "2", "0"}, {"~w", "0", "4"}}));
    expect_not_represented(ev, diag(f, {2, 3}), l);
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(15);
    HermLattice l = sum(ones(f), lat(f, {{"2", "1", "w"}, {"1", "2", "1"}, {"~w", "1", "3"}}));
    expect_not_represented(ev, binary(f, 4, AlgInt(-1, 2), 4), l);
  });
  tasks.push_back([&](Evidence& ev) {
    const Field f = Field::make(23);
    HermLattice l = sum(ones(f), lat(f, {{"2", "1", "w"}, {"1", "2", "0"}, {"~w", "0", "4"}}));
    expect_not_represented(ev, diag(f, {2, 3}), l);
  });

  std::vector<Evidence> parts(tasks.size());
  detail::parallel_for(tasks.size(), jobs, [&](std::size_t i) { tasks[i](parts[i]); });
  Evidence ev;
  for (auto& p : parts)
    for (auto& r : p.rows) ev.add(r, r["holds"].get<bool>());
  return finish("C7", ev);
}

CheckResult check_inequality(unsigned) {
  constexpr std::int64_t kMax = 50;
  Evidence ev;
  std::set<Int> norms;
  nlohmann::json table = nlohmann::json::array();
  for (std::int64_t m = 1; m <= kMax; ++m) {
    if (!is_square_free(m)) continue;
    const Field f = Field::make(m);
    const Int n = f.omega_norm();
    // Only fields with non-principal ideals admit the non-free shape.
    bool has_nonprincipal = false;
    for (Int p = 2; p <= 10 && !has_nonprincipal; ++p)
      has_nonprincipal = !nonprincipal_residues(f, p).empty();
    if (!has_nonprincipal) continue;
    const Int c = n / 2 + 1;  // least c with 2c - N(w) > 0
    const Int rhs = c + (2 * c - n);
    // N(b) + N(b - w) = rhs with b ranging over elements of norm <= rhs.
    std::vector<std::string> sols;
    for (Int k = 0; k <= rhs; ++k)
      for (const auto& b : f.elements_of_norm(k))
        if (k + f.norm(b - f.omega()) == rhs) sols.push_back(to_string(b));
    if (!sols.empty()) norms.insert(n);
    table.push_back({{"m", m}, {"omega_norm", n.str()}, {"c", c.str()}, {"rhs", rhs.str()}, {"solutions", sols}});
  }
  std::vector<std::string> got;
  for (const auto& n : norms) got.push_back(n.str());
  ev.add({{"m_range", "1.." + std::to_string(kMax)}, {"omega_norms_with_solutions", got}, {"expected", {"4", "6"}}},
         norms == std::set<Int>{4, 6});
  return finish("C8", ev, {{"table", table}});
}

CheckResult check_q1(unsigned) {
  const Field f = Field::make(1);
  const HermLattice l = diag(f, {1, 1, 3});
  const HermLattice target = sum(diag(f, {1, 1}), binary(f, 2, 1, 2));
  const AlgMatrix displayed = mat(f, {{"2", "-1", "-1"}, {"-1", "4", "1+w"}, {"-1", "1-w", "4"}});
  const HermLattice even = even_sublattice(l);

  Evidence ev, factorizations;
  // Lemma: the sublattice spanned by the basis is exactly the set of even
  // vectors. Checked on every coordinate vector with entries in {-1,0,1} + {-1,0,1}w.
  {
    ZSpan span(6);
    AlgMatrix basis = even_sublattice_basis(3);
    for (const auto& r : basis.row_list()) {
      span.add(expand(r));
      CoordVector wr(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) wr[i] = f.mul(f.omega(), r[i]);
      span.add(expand(wr));
    }
    std::size_t tested = 0, agree = 0;
    IntVector z(6, Int(-1));
    while (true) {
      ++tested;
      bool even_norm = l.norm(collapse(z)) % 2 == 0;
      if (even_norm == span.contains(z)) ++agree;
      std::size_t k = 0;
      while (k < 6 && z[k] == 1) z[k++] = -1;
      if (k == 6) break;
      ++z[k];
    }
    ev.add({{"lemma_box", "coordinates in {-1,0,1}"}, {"tested", tested}, {"agree", agree}}, tested == agree);
  }
  {
    nlohmann::json row = {{"computed", to_json(even.gram())},
                          {"computed_shorthand", show(even)},
                          {"displayed", to_json(displayed)},
                          {"computed_det", determinant(f, even.gram()).a.str()},
                          {"displayed_det", determinant(f, displayed).a.str()}};
    bool equal = even.gram() == displayed;
    if (!equal) row["isometric"] = is_isometric(even, HermLattice::make(f, displayed));
    ev.add(std::move(row), equal);
  }
  expect_product(factorizations, f, "even sublattice into <1,1> + [[2,1],[1,2]]", displayed,
                 mat(f, {{"0", "0", "0", "1"}, {"0", "1+w", "-1", "0"}, {"1", "-w", "-1", "0"}}), target.gram(),
                 mat(f, {{"0", "0", "1"}, {"0", "1-w", "w"}, {"0", "-1", "-1"}, {"1", "0", "0"}}));
  for (auto& r : factorizations.rows) ev.add(r, r["holds"].get<bool>());
  // The conclusion drawn from the display, for the computed sublattice.
  expect_represented(ev, even, target, {{"role", "computed even sublattice"}});
  return finish("C9", ev, {{"factorizations", factorizations.rows}, {"factorizations_ok", factorizations.ok}});
}

CheckResult check_q2(unsigned jobs) {
  const Field f = Field::make(2);
  const HermLattice q = sum(diag(f, {1, 1}), binary(f, 2, AlgInt(-1, 1), 2));
  const std::vector<HermLattice> genus{
      diag(f, {1, 1, 2}),
      lat(f, {{"2", "0", "w"}, {"0", "2", "-1+w"}, {"~w", "~-1+w", "3"}}),
      lat(f, {{"2", "w", "-1+w"}, {"~w", "2", "-1+w"}, {"~-1+w", "~-1+w", "7"}}),
      lat(f, {{"2", "-1", "-1+w"}, {"-1", "5", "-1+2w"}, {"~-1+w", "~-1+2w", "5"}}),
  };
  std::vector<Evidence> parts(genus.size());
  detail::parallel_for(genus.size(), jobs, [&](std::size_t i) {
    expect_represented(parts[i], genus[i], q, {{"det", determinant(f, genus[i].gram()).a.str()}});
  });
  Evidence ev;
  for (auto& p : parts)
    for (auto& r : p.rows) ev.add(r, r["holds"].get<bool>() && r["det"] == "2");
  // Four classes of one genus must be pairwise non-isometric. Mutual
  // embeddings of equal rank are isometries, so both witnesses are recorded.
  for (std::size_t i = 0; i < genus.size(); ++i)
    for (std::size_t j = i + 1; j < genus.size(); ++j) {
      nlohmann::json row = {{"pair", {show(genus[i]), show(genus[j])}}};
      auto there = represents(genus[i], genus[j]);
      auto back = there ? represents(genus[j], genus[i]) : std::nullopt;
      row["isometric"] = there && back;
      if (there && back) {
        row["witness_forward"] = to_json(*there);
        row["witness_backward"] = to_json(*back);
      }
      ev.add(std::move(row), !(there && back));
    }
  return finish("C10", ev);
}

CheckResult check_q11(unsigned) {
  const Field f = Field::make(11);
  const AlgMatrix q = sum(diag(f, {1, 1}), binary(f, 2, AlgInt(0, 1), 2)).gram();
  const AlgMatrix id = AlgMatrix::diagonal({1, 1, 1});
  const AlgInt w = f.omega(), wc = f.conj(f.omega());
  Evidence factorizations, substitutions;

  expect_product(factorizations, f, "<3,1,1>", AlgMatrix::diagonal({3, 1, 1}),
                 mat(f, {{"0", "0", "1", "-1"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}}), q,
                 mat(f, {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}, {"-1", "0", "0"}}));
  const AlgMatrix pair_target = mat(f, {{"2", "~w", "0"}, {"w", "3", "0"}, {"0", "0", "1"}});
  expect_product(factorizations, f, "first two alike", pair_target,
                 mat(f, {{"0", "0", "0", "1"}, {"0", "1", "1", "0"}, {"1", "0", "0", "0"}}), q,
                 mat(f, {{"0", "0", "1"}, {"0", "1", "0"}, {"0", "1", "0"}, {"1", "0", "0"}}));
  for (int d1 : {1, -1})
    for (int d2 : {1, -1}) {
      const Int p(d1 * d2), e1(d1), e2(d2), ne2(-d2);
      AlgMatrix target{{2, p, e1 * wc}, {p, 2, e2 * wc}, {e1 * w, e2 * w, 3}};
      AlgMatrix left{{0, 0, 0, e1}, {0, 0, e2 * wc, ne2}, {0, 1, 1, 0}};
      AlgMatrix right{{0, 0, 0}, {0, 0, 1}, {0, e2 * w, 1}, {e1, ne2, 0}};
      expect_product(factorizations, f, "delta=(" + std::to_string(d1) + "," + std::to_string(d2) + ")", target,
                     left, q, right);
      AlgMatrix change{{1, 0, e1}, {0, 1, e2}, {0, 0, w}};
      expect_substitution(substitutions, f, "third column shifted", change, id, target);
    }
  AlgMatrix first{{w, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  expect_substitution(substitutions, f, "first column divisible by w", first, id, AlgMatrix::diagonal({3, 1, 1}));
  AlgMatrix second{{1, 1, 0}, {0, w, 0}, {0, 0, 1}};
  expect_substitution(substitutions, f, "first two alike", second, id, pair_target);

  Evidence ev;
  for (auto* part : {&factorizations, &substitutions})
    for (auto& r : part->rows) ev.add(r, r["holds"].get<bool>());
  return finish("C11", ev, {{"factorizations", factorizations.rows}, {"factorizations_ok", factorizations.ok}});
}

// Lattices L = <1,1> + L0 with L0 of rank <= 2 and diagonal <= 4.
std::vector<HermLattice> bounded_complements(const Field& f) {
  std::vector<HermLattice> out;
  for (int a = 1; a <= 4; ++a) out.push_back(sum(diag(f, {1, 1}), diag(f, {a})));
  for (Int a = 1; a <= 4; ++a)
    for (Int c = a; c <= 4; ++c)
      for (Int nb = 0; nb < a * c; ++nb)
        for (const auto& b : f.elements_of_norm(nb)) out.push_back(sum(diag(f, {1, 1}), binary(f, a, b, c)));
  return out;
}

// Every bounded L = <1,1> + L0 representing `second` contains <1,1,1> or <1,1,2>.
void criterion_scan(Evidence& ev, const Field& f, const HermLattice& second, unsigned jobs) {
  auto lats = bounded_complements(f);
  std::vector<int> state(lats.size());  // 0: skips second, 1: contains a base lattice, 2: counterexample
  detail::parallel_for(lats.size(), jobs, [&](std::size_t i) {
    RepresentationSearch search(lats[i]);
    if (!search.find(second)) return;
    state[i] = search.find(diag(f, {1, 1, 1})) || search.find(diag(f, {1, 1, 2})) ? 1 : 2;
  });
  std::size_t applicable = std::count(state.begin(), state.end(), 1) + std::count(state.begin(), state.end(), 2);
  nlohmann::json row = {{"criterion", {"<1,1>", show(second)}},
                        {"bound", "L = <1,1> + L0, rank L0 <= 2, diagonal of L0 <= 4"},
                        {"lattices_scanned", lats.size()},
                        {"lattices_representing_criterion", applicable}};
  auto bad = std::find(state.begin(), state.end(), 2);
  if (bad != state.end()) row["counterexample"] = show(lats[bad - state.begin()]);
  ev.add(std::move(row), bad == state.end() && applicable > 0);
}

CheckResult check_completions(unsigned jobs) {
  Evidence ev;
  struct Case {
    std::int64_t m;
    Rows block;
    std::vector<HermLattice> (*expected)(const Field&);
  };
  const std::vector<Case> cases{
      {1, {{"2", "1"}, {"1", "2"}},
       [](const Field& f) {
         return std::vector<HermLattice>{diag(f, {1, 1, 1}), diag(f, {1, 1, 1, 1}),
                                         sum(diag(f, {1, 1}), binary(f, 2, 1, 2))};
       }},
      {2, {{"2", "-1+w"}, {"~-1+w", "2"}},
       [](const Field& f) { return std::vector<HermLattice>{sum(diag(f, {1, 1}), binary(f, 2, AlgInt(-1, 1), 2))}; }},
      {11, {{"2", "w"}, {"~w", "2"}},
       [](const Field& f) { return std::vector<HermLattice>{sum(diag(f, {1, 1}), binary(f, 2, AlgInt(0, 1), 2))}; }},
  };
  for (const auto& c : cases) {
    const Field f = Field::make(c.m);
    auto found = finiteness_completions(f, mat(f, c.block));
    auto expected = c.expected(f);
    // Bijection between found classes and the expected list.
    std::vector<bool> used(expected.size(), false);
    bool match = found.size() == expected.size();
    nlohmann::json shown = nlohmann::json::array();
    for (const auto& l : found) {
      shown.push_back({{"gram", show(l)}, {"rank", l.rank()}, {"pseudo", l.pseudo()}});
      bool hit = false;
      for (std::size_t j = 0; j < expected.size() && !hit; ++j)
        if (!used[j] && is_isometric(l, expected[j])) used[j] = hit = true;
      match = match && hit;
    }
    nlohmann::json want = nlohmann::json::array();
    for (const auto& l : expected) want.push_back(show(l));
    ev.add({{"m", c.m}, {"entry_norm_bound", 2}, {"classes", shown}, {"expected", want}}, match);
  }
  {
    const Field f = Field::make(3);
    criterion_scan(ev, f, diag(f, {1, 2}), jobs);
  }
  return finish("C12", ev);
}

CheckResult check_q3_alternate(unsigned jobs) {
  const Field f = Field::make(3);
  const HermLattice alt = binary(f, 2, AlgInt(0, 1), 3);
  Evidence ev;
  criterion_scan(ev, f, alt, jobs);
  // Both criterion lattices are needed: neither is represented by <1,1>.
  expect_not_represented(ev, alt, diag(f, {1, 1}));
  expect_not_represented(ev, diag(f, {1, 2}), diag(f, {1, 1}));
  return finish("C13", ev);
}

CheckResult check_q19(unsigned jobs) {
  const Field f = Field::make(19);
  const std::vector<HermLattice> genus{
      diag(f, {1, 1, 1}),
      lat(f, {{"1", "0", "0"}, {"0", "2", "w"}, {"0", "~w", "3"}}),
      lat(f, {{"2", "1", "1"}, {"1", "3", "1+w"}, {"1", "~1+w", "3"}}),
  };
  Evidence ev;
  for (const auto& g : genus) {
    AlgInt d = determinant(f, g.gram());
    ev.add({{"genus_class", show(g)}, {"det", d.a.str()}}, d == AlgInt(1));
  }
  const HermLattice big = sum(sum(diag(f, {1, 1, 1}), binary(f, 2, AlgInt(0, 1), 3)), genus[2]);
  const Int cap = 2;
  auto report = certify_2universal(big, cap, true, jobs);
  ev.add({{"lattice", show(big)},
          {"rank", big.rank()},
          {"s_cap", cap.str()},
          {"classes_checked", report.entries.size()},
          {"certified_up_to_cap", report.certified_up_to_cap()}},
         big.rank() == 8 && report.certified_up_to_cap() && !report.entries.empty());
  return finish("C14", ev, {{"certification", certification_json(report)}});
}

CheckResult check_diagonal(unsigned jobs) {
  constexpr int kMaxEntry = 6;
  const std::vector<std::int64_t> fields{5, 6, 10, 13};
  std::vector<std::vector<int>> diags;
  for (int a = 1; a <= kMaxEntry; ++a)
    for (int b = a; b <= kMaxEntry; ++b)
      for (int c = b; c <= kMaxEntry; ++c)
        for (int d = c; d <= kMaxEntry; ++d) diags.push_back({a, b, c, d});
  Evidence ev;
  for (std::int64_t m : fields) {
    const Field f = Field::make(m);
    const Int n = f.omega_norm();
    std::vector<HermLattice> targets;
    std::vector<std::string> shown;
    for (Int c = n / 2 + 1; c < n; ++c) {
      targets.push_back(binary(f, 2, f.omega(), c));
      shown.push_back(show(targets.back()));
    }
    std::vector<std::optional<std::string>> hit(diags.size());
    detail::parallel_for(diags.size(), jobs, [&](std::size_t i) {
      const auto& a = diags[i];
      RepresentationSearch search(HermLattice::diagonal(f, {a[0], a[1], a[2], a[3]}));
      for (const auto& t : targets)
        if (search.find(t)) {
          hit[i] = show(t);
          return;
        }
    });
    nlohmann::json row = {{"m", m},
                          {"targets", shown},
                          {"diagonal_lattices", diags.size()},
                          {"entry_bound", kMaxEntry}};
    bool clean = true;
    for (std::size_t i = 0; i < diags.size() && clean; ++i)
      if (hit[i]) {
        clean = false;
        row["counterexample"] = {{"diagonal", diags[i]}, {"target", *hit[i]}};
      }
    ev.add(std::move(row), clean && !targets.empty());
  }
  return finish("C15", ev);
}

CheckResult check_bounds(unsigned) {
  constexpr std::int64_t kMax = 50;
  Evidence ev;
  nlohmann::json table = nlohmann::json::array();
  for (std::int64_t m = 1; m <= kMax; ++m) {
    if (!is_square_free(m)) continue;
    U2Bound b = u2_bound(m);
    const Int disc = 4 * b.omega_norm + 1;
    bool bracket = (2 * b.n - 1) * (2 * b.n - 1) <= disc && disc < (2 * b.n + 1) * (2 * b.n + 1);
    nlohmann::json row = {{"m", m},           {"omega_norm", b.omega_norm.str()}, {"n", b.n.str()},
                          {"s_lower", b.s_lower.str()}, {"brute_n", b.brute_n.str()}};
    table.push_back(row);
    // The closed form is meaningful once N(w) >= 2.
    bool holds = bracket && b.s_lower == b.n && (b.omega_norm < 2 || b.n == b.brute_n);
    if (!holds) ev.add(row, false);
  }
  U2Bound five = u2_bound(5);
  ev.add({{"m", 5}, {"n", five.n.str()}, {"expected_n", "2"}}, five.n == 2);
  return finish("C16", ev, {{"table", table}});
}

using CheckFn = CheckResult (*)(unsigned);

struct CatalogEntry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries{
      {{"C1", "escalation-base", "base"}, check_base},
      {{"C2", "ternary-elimination-large-m", "ternary"}, check_large_m_ternary},
      {{"C3", "nonfree-solvability-tables", "ternary"}, check_solvability},
      {{"C4", "nonfree-ternary-elimination", "ternary"}, check_nonfree_ternary},
      {{"C5", "small-m-ternary-table", "ternary"}, check_small_m_ternary},
      {{"C6", "q7-identities", "ternary"}, check_q7},
      {{"C7", "quaternary-eliminations", "quaternary"}, check_quaternary},
      {{"C8", "inequality-scan", "quaternary"}, check_inequality},
      {{"C9", "q1-lemma-and-identity", "quaternary"}, check_q1},
      {{"C10", "q2-genus-representations", "quaternary"}, check_q2},
      {{"C11", "q11-identities", "quaternary"}, check_q11},
      {{"C12", "finiteness-completions", "finiteness"}, check_completions},
      {{"C13", "q3-alternate-set", "finiteness"}, check_q3_alternate},
      {{"C14", "q19-rank8-demo", "higher-rank"}, check_q19},
      {{"C15", "diagonal-obstruction", "higher-rank"}, check_diagonal},
      {{"C16", "u2-bounds", "higher-rank"}, check_bounds},
  };
  return entries;
}

}  // namespace

const char* check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Skipped: return "Skipped";
  }
  return "Unknown";
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : catalog()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckResult run_check(const std::string& check_id, unsigned jobs) {
  for (const auto& e : catalog())
    if (e.info.id == check_id) {
      CheckResult r = e.fn(jobs);
      r.title = e.info.title;
      r.group = e.info.group;
      return r;
    }
  throw Error(ErrorCode::UnknownCheck, "no check named " + check_id);
}

std::vector<CheckResult> run_all(const std::optional<std::string>& filter, unsigned jobs) {
  std::vector<std::string> ids;
  for (const auto& info : check_catalog())
    if (!filter || filter->empty() || *filter == info.group || *filter == info.id) ids.push_back(info.id);
  std::vector<CheckResult> out(ids.size());
  detail::parallel_for(ids.size(), jobs, [&](std::size_t i) { out[i] = run_check(ids[i], 1); });
  return out;
}

std::vector<HermLattice> finiteness_completions(const Field& field, const AlgMatrix& binary_block) {
  if (binary_block.rows() != 2 || binary_block.cols() != 2)
    throw Error(ErrorCode::ShapeMismatch, "completion block must be 2x2");
  std::vector<AlgInt> pool;
  for (Int k = 0; k <= 2; ++k)
    for (const auto& x : field.elements_of_norm(k)) pool.push_back(x);
  std::vector<HermLattice> lats;
  const std::size_t p = pool.size();
  for (std::size_t code = 0; code < p * p * p * p; ++code) {
    std::size_t c = code;
    AlgInt x[4];
    for (auto& e : x) {
      e = pool[c % p];
      c /= p;
    }
    AlgMatrix g{{1, 0, x[0], x[1]},
                {0, 1, x[2], x[3]},
                {field.conj(x[0]), field.conj(x[2]), binary_block(0, 0), binary_block(0, 1)},
                {field.conj(x[1]), field.conj(x[3]), binary_block(1, 0), binary_block(1, 1)}};
    PositivityResult pos = is_positive(field, g);
    if (pos.kind == Positivity::Indefinite) continue;
    if (pos.rank + 1 < 4)
      throw Error(ErrorCode::PreconditionViolated, "completion of corank above one: " + format_gram(g));
    lats.push_back(HermLattice::make(field, g));
  }
  std::vector<HermLattice> out;
  for (std::size_t i : isometry_representatives(lats)) out.push_back(lats[i]);
  return out;
}

U2Bound u2_bound(std::int64_t m) {
  const Field f = Field::make(m);
  U2Bound b;
  b.m = m;
  b.omega_norm = f.omega_norm();
  const Int root = isqrt(4 * b.omega_norm + 1);
  // floor((s + 1) / 2) for real s depends only on floor(s).
  b.n = (root + 1) / 2;
  const Int r = f.omega_kind() == OmegaKind::Half ? isqrt(Int(m) + 2) : isqrt(4 * Int(m) + 1);
  b.s_lower = (r - 1) / 2 + 1;
  // Largest k >= 2 for which some integer c >= k lies in (N/k, N/(k-1)].
  b.brute_n = 1;
  const Int& nn = b.omega_norm;
  for (Int k = 2; k <= nn + 1; ++k) {
    Int lo = std::max(Int(nn / k + 1), k);
    Int hi = nn / (k - 1);
    if (lo <= hi) b.brute_n = k;
  }
  return b;
}

nlohmann::json check_json(const CheckResult& r) {
  return {{"check_id", r.check_id},
          {"title", r.title},
          {"group", r.group},
          {"status", check_status_name(r.status)},
          {"details", r.details}};
}

nlohmann::json report_json(const std::vector<CheckResult>& results) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t pass = 0, fail = 0, skipped = 0;
  for (const auto& r : results) {
    checks.push_back(check_json(r));
    pass += r.status == CheckStatus::Pass;
    fail += r.status == CheckStatus::Fail;
    skipped += r.status == CheckStatus::Skipped;
  }
  return {{"checks", checks}, {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skipped}}}};
}

std::string summary_table(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  os << std::left << std::setw(5) << "id" << std::setw(32) << "title" << std::setw(13) << "group" << "status\n";
  for (const auto& r : results)
    os << std::setw(5) << r.check_id << std::setw(32) << r.title << std::setw(13) << r.group
       << check_status_name(r.status) << '\n';
  return os.str();
}

}  // namespace hermlat
