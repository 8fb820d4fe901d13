// Command-line front end for the hermlat library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hermlat/escalate.hpp"
#include "hermlat/io.hpp"
#include "hermlat/paperlab.hpp"

namespace {

using namespace hermlat;

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A lattice argument is a file path when such a file exists, inline text otherwise.
HermLattice read_lattice(const Field& f, const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_lattice(f, buf.str());
  }
  return parse_lattice(f, arg);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + '"';
}

unsigned default_jobs() {
  if (const char* env = std::getenv("HERMLAT_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  std::int64_t m = 0;
  std::string lattice, target, in;
  int s_cap = 4;
  std::size_t max_rank = 4;
  bool include_pseudo = true;
  std::string format = "json";
  unsigned jobs = 1;
  std::vector<std::string> checks;
  std::string group;
};

void emit(const Options& o, const nlohmann::json& j, const std::string& csv, const std::string& text) {
  if (o.format == "csv") {
    if (csv.empty()) throw UsageError("csv output is not available for this command");
    std::cout << csv;
  } else if (o.format == "text") {
    std::cout << text;
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int cmd_represents(const Options& o) {
  const Field f = Field::make(o.m);
  HermLattice target = read_lattice(f, o.target), lattice = read_lattice(f, o.in);
  auto w = represents(target, lattice);
  nlohmann::json j = {{"m", o.m},
                      {"target", format_gram(target.gram())},
                      {"lattice", format_gram(lattice.gram())},
                      {"represented", w.has_value()}};
  if (w) j["witness"] = to_json(*w);
  std::string text = w ? "represented, witness rows " + to_json(*w).at("rows").dump() + "\n" : "not represented\n";
  std::string csv = "target,lattice,represented\n" + quote(format_gram(target.gram())) + "," +
                    quote(format_gram(lattice.gram())) + "," + (w ? "true" : "false") + "\n";
  emit(o, j, csv, text);
  return 0;
}

int cmd_truant(const Options& o) {
  const Field f = Field::make(o.m);
  HermLattice l = read_lattice(f, o.lattice);
  auto report = truant(l, o.s_cap, o.include_pseudo);
  std::string text;
  if (report.truant) {
    text = "truant S=" + report.truant->s.str() + " class " + format_gram(report.truant->lat.gram()) + "\n";
    for (const auto& c : report.failing_level) text += "  unrepresented " + format_gram(c.lat.gram()) + "\n";
  } else {
    text = "all classes with S <= " + std::to_string(o.s_cap) + " represented\n";
  }
  emit(o, truant_json(report), binary_classes_csv(report.failing_level), text);
  return 0;
}

int cmd_escalate(const Options& o) {
  const Field f = Field::make(o.m);
  auto tree = escalation_tree(f, o.s_cap, o.max_rank, o.include_pseudo, o.jobs);
  std::string text;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    text += std::to_string(i) + " rank " + std::to_string(n.lat.rank()) + " " + format_gram(n.lat.gram()) + " " +
            node_status_name(n.status);
    if (n.truant_class) text += " truant " + format_gram(n.truant_class->lat.gram());
    text += "\n";
  }
  emit(o, tree_json(tree), tree_csv(tree), text);
  return 0;
}

int cmd_certify(const Options& o) {
  const Field f = Field::make(o.m);
  HermLattice l = read_lattice(f, o.lattice);
  auto report = certify_2universal(l, o.s_cap, o.include_pseudo, o.jobs);
  std::string text = report.certified_up_to_cap()
                         ? "certified up to S <= " + std::to_string(o.s_cap) + " (" +
                               std::to_string(report.entries.size()) + " classes)\n"
                         : "not represented: " + format_gram(report.entries.back().cls.lat.gram()) + "\n";
  emit(o, certification_json(report), certification_csv(report), text);
  return 0;
}

int cmd_enum_binary(const Options& o) {
  const Field f = Field::make(o.m);
  const auto& classes = enumerate_binary(f, o.s_cap, o.include_pseudo);
  nlohmann::json list = nlohmann::json::array();
  std::string text;
  for (const auto& c : classes) {
    list.push_back(binary_class_json(c));
    text += c.s.str() + " " + format_gram(c.lat.gram()) + (c.lat.pseudo() ? " pseudo" : "") + "\n";
  }
  nlohmann::json j = {{"m", o.m}, {"s_max", o.s_cap}, {"include_pseudo", o.include_pseudo}, {"classes", list}};
  emit(o, j, binary_classes_csv(classes), text);
  return 0;
}

int cmd_s_value(const Options& o) {
  const Field f = Field::make(o.m);
  HermLattice l = read_lattice(f, o.lattice);
  Int s = s_value(l);
  emit(o, {{"m", o.m}, {"lattice", format_gram(l.gram())}, {"s", s.str()}},
       "lattice,s\n" + quote(format_gram(l.gram())) + "," + s.str() + "\n", s.str() + "\n");
  return 0;
}

int cmd_verify_paper(const Options& o) {
  std::vector<CheckResult> results;
  if (!o.checks.empty()) {
    for (const auto& id : o.checks) results.push_back(run_check(id, o.jobs));
  } else {
    results = run_all(o.group.empty() ? std::nullopt : std::optional<std::string>(o.group), o.jobs);
  }
  bool failed = false;
  for (const auto& r : results) failed = failed || r.status == CheckStatus::Fail;
  std::string csv = "check,title,group,status\n";
  for (const auto& r : results)
    csv += r.check_id + "," + r.title + "," + r.group + "," + check_status_name(r.status) + "\n";
  emit(o, report_json(results), csv, summary_table(results));
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian lattices over imaginary quadratic fields: representations, truants, escalations"};
  app.require_subcommand(1);
  Options o;
  o.jobs = default_jobs();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", o.jobs, "Worker threads (default $HERMLAT_JOBS or 1)")->check(CLI::PositiveNumber);
  };
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("-m", o.m, "Square-free m > 0 selecting Q(sqrt(-m))")->required();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--s-cap", o.s_cap, "Largest S-value of binary classes considered")
        ->default_val(4)
        ->check(CLI::PositiveNumber);
    sub->add_flag("--include-pseudo,!--no-include-pseudo", o.include_pseudo,
                  "Include binary classes given by formal Gram matrices (default on)");
  };

  auto* rep = app.add_subcommand("represents", "Search a witness X with X M X^* equal to the target Gram");
  add_field(rep);
  rep->add_option("--target", o.target, "Represented lattice (inline or file)")->required();
  rep->add_option("--in", o.in, "Representing lattice (inline or file)")->required();
  add_common(rep);

  auto* tru = app.add_subcommand("truant", "Smallest S-value of an unrepresented binary class");
  add_field(tru);
  tru->add_option("--lattice", o.lattice, "Lattice (inline or file)")->required();
  add_cap(tru);
  add_common(tru);

  auto* esc = app.add_subcommand("escalate", "Escalation tree from the zero lattice");
  add_field(esc);
  add_cap(esc);
  esc->add_option("--max-rank", o.max_rank, "Deepest rank explored")->default_val(4)->check(CLI::Range(1, 5));
  add_common(esc);

  auto* cert = app.add_subcommand("certify", "Witness for every binary class up to the S cap");
  add_field(cert);
  cert->add_option("--lattice", o.lattice, "Lattice (inline or file)")->required();
  add_cap(cert);
  add_common(cert);

  auto* enb = app.add_subcommand("enum-binary", "Binary classes with S up to the cap");
  add_field(enb);
  add_cap(enb);
  add_common(enb);

  auto* sv = app.add_subcommand("s-value", "Least t such that vectors of norm <= t generate the lattice");
  add_field(sv);
  sv->add_option("--lattice", o.lattice, "Binary lattice (inline or file)")->required();
  add_common(sv);

  auto* vp = app.add_subcommand("verify-paper", "Run the reproduction checks C1..C16");
  vp->add_option("--check", o.checks, "Check id, repeatable (default: all)");
  vp->add_option("--group", o.group, "Only checks of this group: base, ternary, quaternary, finiteness, higher-rank");
  add_common(vp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*rep) return cmd_represents(o);
    if (*tru) return cmd_truant(o);
    if (*esc) return cmd_escalate(o);
    if (*cert) return cmd_certify(o);
    if (*enb) return cmd_enum_binary(o);
    if (*sv) return cmd_s_value(o);
    if (*vp) return cmd_verify_paper(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
