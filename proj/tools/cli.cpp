#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "edgeideal/betti.hpp"
#include "edgeideal/digraph.hpp"
#include "edgeideal/enumerate.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/linalg.hpp"
#include "edgeideal/monomial_ideal.hpp"
#include "edgeideal/verifier.hpp"

namespace edgeideal::cli {

namespace {

struct Config {
  std::uint32_t characteristic = 0;
  std::size_t cap_n = 20;
  std::size_t cap_m = 14;
  std::size_t jobs = 1;
  bool json = false;
  std::string out;
  std::string format = "auto";
};

// Thrown for bad flags, unreadable files and failed input validation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

using Input = std::variant<Graph, MonomialIdeal>;

// Text files are graphs when they carry a #bipartite header or every line
// is a pair of distinct names; anything else is a monomial list. A
// "#vars a b c" comment fixes the variable order of a monomial list.
Input load_input(const std::string& path, const std::string& format) {
  const std::string text = read_file(path);
  std::string kind = format;
  if (kind == "auto" && path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) kind = "json";
  if (kind == "json") {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(path + ": " + e.what());
    }
    try {
      if (j.contains("edges")) return graph_from_json(j);
      return ideal_from_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }

  std::optional<std::vector<std::string>> vars;
  bool header = false;
  bool pairs = true;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens[0].rfind("#bipartite", 0) == 0) header = true;
    if (tokens[0] == "#vars") vars = std::vector<std::string>(tokens.begin() + 1, tokens.end());
    if (tokens[0][0] == '#') continue;
    if (tokens.size() != 2 || tokens[0] == tokens[1]) pairs = false;
  }
  if (kind == "auto") kind = header || (pairs && !vars) ? "graph" : "ideal";
  if (kind == "graph") return parse_edge_list(text);
  if (kind == "ideal") return parse_monomial_list(text, vars);
  throw UsageError("unknown format " + format);
}

MonomialIdeal ideal_of(const Input& in) {
  if (const auto* g = std::get_if<Graph>(&in)) return edge_ideal(*g);
  return std::get<MonomialIdeal>(in);
}

Graph bipartite_input(const Input& in) {
  Graph g;
  if (const auto* p = std::get_if<Graph>(&in)) {
    g = *p;
  } else {
    const auto& ideal = std::get<MonomialIdeal>(in);
    if (!ideal.is_square_free_quadratic()) throw UsageError("expected a graph or a square-free quadratic ideal");
    g = graph_of(ideal);
  }
  if (!g.is_bipartite()) throw UsageError("graph is not bipartite");
  return g;
}

VerifyOptions verify_options(const Config& c) {
  VerifyOptions o;
  o.characteristic = c.characteristic;
  o.cap_n = c.cap_n;
  o.cap_m = c.cap_m;
  o.jobs = c.jobs;
  return o;
}

Subject make_subject(const Input& in, const Config& c) {
  if (const auto* g = std::get_if<Graph>(&in)) return Subject(*g, verify_options(c));
  return Subject(std::get<MonomialIdeal>(in), verify_options(c));
}

std::string join(const std::vector<std::size_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::string>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string names_of(const std::vector<std::string>& names, VertexMask m) {
  std::vector<std::string> picked;
  for_each_bit(m, [&](std::size_t i) { picked.push_back(names[i]); });
  return "{" + join(picked, ",") + "}";
}

std::string arcs_text(const Digraph& d) {
  std::vector<std::string> arcs;
  for (auto [i, j] : d.arcs()) arcs.push_back(std::to_string(i + 1) + "->" + std::to_string(j + 1));
  return arcs.empty() ? "none" : join(arcs);
}

std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

// ------------------------------------------------------------ commands

int cmd_betti(const Input& in, const Config& c, std::ostream& out) {
  MonomialIdeal ideal = ideal_of(in);
  if (!ideal.is_square_free()) ideal = polarize(ideal);
  BettiOptions o;
  o.characteristic = c.characteristic;
  o.cap_n = c.cap_n;
  o.jobs = c.jobs;
  const BettiTable t = betti_table(ideal, o);
  if (c.json) {
    out << to_json(t).dump(2) << '\n';
    return kSuccess;
  }
  out << render_betti_triangle(t);
  if (t.projdim() > 0) {
    out << "M: " << join(t.M_list()) << '\n';
    out << "m: " << join(t.m_list()) << '\n';
  }
  if (!t.empty()) {
    out << "reg: " << t.reg() << '\n';
    out << "projdim: " << t.projdim() << '\n';
  }
  return kSuccess;
}

int cmd_mult(const Input& in, const Config& c, std::ostream& out) {
  MonomialIdeal ideal = ideal_of(in);
  if (!ideal.is_square_free()) ideal = polarize(ideal);
  if (ideal.is_unit()) throw UsageError("unit ideal has no multiplicity");
  const auto primes = unmixed_primes(ideal);
  std::optional<std::size_t> antichain_count;
  std::optional<Graph> g;
  if (ideal.is_square_free_quadratic()) g = graph_of(ideal);
  if (g && g->is_bipartite() && is_perfectly_matched(*g)) {
    const Reduction red = reduce_to_cm(*g);
    antichain_count = antichain_multiplicity(red.result);
  }
  if (c.json) {
    nlohmann::json list = nlohmann::json::array();
    for (VertexMask p : primes) {
      nlohmann::json s = nlohmann::json::array();
      for_each_bit(p, [&](std::size_t i) { s.push_back(ideal.variables()[i]); });
      list.push_back(std::move(s));
    }
    nlohmann::json j{{"e", primes.size()}, {"c", height(ideal)}, {"unmixed_primes", std::move(list)}};
    j["antichains"] = antichain_count ? nlohmann::json(*antichain_count) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "e: " << primes.size() << '\n';
  out << "c: " << height(ideal) << '\n';
  if (antichain_count) out << "antichains after reduction: " << *antichain_count << '\n';
  out << "unmixed primes:\n";
  for (VertexMask p : primes) out << "  " << names_of(ideal.variables(), p) << '\n';
  return kSuccess;
}

void render_report(const VerdictReport& rep, std::ostream& out) {
  const auto& q = rep.quantities;
  out << "n " << q.n << "  m " << q.m << "  e " << q.e << "  c " << q.c << "  rho " << q.rho << "  r "
      << optional_text(q.r) << "  reg " << optional_text(q.reg) << "  projdim " << optional_text(q.projdim) << '\n';
  if (!q.M.empty()) out << "M: " << join(q.M) << "\nm: " << join(q.m_low) << '\n';
  if (!q.T.empty()) out << "T: " << join(q.T) << '\n';
  std::size_t width = 0;
  for (const auto& r : rep.checks) width = std::max(width, r.name.size());
  for (const auto& r : rep.checks) {
    std::string line = r.name + std::string(width + 2 - r.name.size(), ' ');
    std::string status = to_string(r.status);
    line += status + std::string(13 - status.size(), ' ');
    std::string verdict = to_string(r.verdict);
    line += verdict + std::string(10 - verdict.size(), ' ');
    if (r.lhs && r.rhs) {
      std::ostringstream s;
      s << *r.lhs << ' ' << r.relation << ' ' << *r.rhs;
      line += s.str();
    }
    out << line;
    if (!r.witnesses.empty()) out << (r.lhs ? "  " : "") << "[" << join(r.witnesses, "; ") << "]";
    out << '\n';
  }
}

int cmd_bounds(const Input& in, const Config& c, std::ostream& out) {
  Subject s = make_subject(in, c);
  if (s.ideal().is_unit()) throw UsageError("unit ideal has no bounds to check");
  std::vector<std::string> checks{"hhsu", "taylor"};
  const bool cm = s.cohen_macaulay();
  if (cm) checks.insert(checks.end(), {"hhsl", "equality"});
  if (s.bipartite_graph()) checks.push_back("quasipure");
  VerdictReport rep = make_report(s, checks);
  const bool qp = is_quasi_pure(s.betti());
  if (c.json) {
    nlohmann::json j = to_json(rep);
    j["cohen_macaulay"] = cm;
    j["quasi_pure"] = qp;
    out << j.dump(2) << '\n';
  } else {
    render_report(rep, out);
    out << "cohen-macaulay: " << (cm ? "yes" : "no") << '\n';
    out << "quasi-pure: " << (qp ? "yes" : "no") << '\n';
  }
  return rep.has_fatal() ? kProvedFailure : kSuccess;
}

std::string hypothesis_message(const Graph& g) {
  const MonomialIdeal ideal = edge_ideal(g);
  const StandingHypothesis h = check_standing_hypothesis(ideal);
  std::string msg = "standing hypothesis fails";
  if (!h.holds && h.witness)
    msg += ": at " + ideal.variables()[*h.witness] + " the " + h.failed_side + " has height " +
           std::to_string(h.witness_height) + ", not c = " + std::to_string(h.c);
  return msg;
}

int cmd_reduce(const Input& in, const Config& c, std::ostream& out) {
  const Graph g = bipartite_input(in);
  if (!is_perfectly_matched(g)) throw UsageError(hypothesis_message(g));
  const Reduction red = reduce_to_cm(g);
  if (c.json) {
    out << to_json(red).dump(2) << '\n';
    return kSuccess;
  }
  for (const auto& step : red.steps) {
    out << step.kind;
    if (!step.contracted.empty()) {
      std::vector<std::size_t> one_based;
      for (std::size_t i : step.contracted) one_based.push_back(i + 1);
      out << " {" << join(one_based, ",") << "}";
    }
    out << ": c " << step.digraph.c << ", arcs " << arcs_text(step.digraph) << ", e " << step.e << ", kappa "
        << step.kappa << ", height " << step.height << '\n';
  }
  out << "result edges:";
  for (const Edge& e : red.graph.edges()) out << ' ' << red.graph.name(e.u) << '-' << red.graph.name(e.v);
  out << '\n';
  const auto& first = red.steps.front();
  const auto& last = red.steps.back();
  out << "e " << first.e << " -> " << last.e << ", kappa " << first.kappa << " -> " << last.kappa << ", height "
      << first.height << " -> " << last.height << '\n';
  return kSuccess;
}

int cmd_check_cm(const Input& in, const Config& c, std::ostream& out) {
  const Graph g = bipartite_input(in);
  const CmVerdict v = is_cm_bipartite(g);
  std::optional<bool> betti_cm;
  const MonomialIdeal ideal = edge_ideal(g);
  if (ideal.num_variables() <= c.cap_n) {
    BettiOptions o;
    o.characteristic = c.characteristic;
    o.cap_n = c.cap_n;
    o.jobs = c.jobs;
    betti_cm = is_cohen_macaulay(betti_table(ideal, o), ideal);
  }
  if (c.json) {
    nlohmann::json labeling = nlohmann::json::array();
    for (const auto& [x, y] : v.labeling) labeling.push_back({x, y});
    nlohmann::json j{{"cohen_macaulay", v.cohen_macaulay}, {"reason", v.reason}, {"labeling", std::move(labeling)}};
    j["betti_cohen_macaulay"] = betti_cm ? nlohmann::json(*betti_cm) : nlohmann::json(nullptr);
    out << j.dump(2) << '\n';
  } else {
    out << "cohen-macaulay: " << (v.cohen_macaulay ? "yes" : "no") << '\n';
    if (!v.reason.empty()) out << "reason: " << v.reason << '\n';
    if (!v.labeling.empty()) {
      out << "labeling:";
      for (std::size_t k = 0; k < v.labeling.size(); ++k)
        out << ' ' << v.labeling[k].first << '/' << v.labeling[k].second;
      out << '\n';
    }
    if (betti_cm) out << "projdim = height: " << (*betti_cm ? "yes" : "no") << '\n';
  }
  // Two independent computations of one proved equivalence.
  if (betti_cm && *betti_cm != v.cohen_macaulay) return kProvedFailure;
  return kSuccess;
}

std::vector<std::string> split_checks(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream s(list);
  for (std::string name; std::getline(s, name, ',');)
    if (!name.empty()) out.push_back(name);
  for (const auto& name : out)
    if (!is_registered_check(name)) throw UsageError("unknown check: " + name);
  return out;
}

int cmd_report(const Input& in, const Config& c, const std::string& checks, std::ostream& out) {
  Subject s = make_subject(in, c);
  std::vector<std::string> names = checks.empty() ? registered_checks() : split_checks(checks);
  const VerdictReport rep = make_report(s, names);
  if (c.json)
    out << to_json(rep).dump(2) << '\n';
  else
    render_report(rep, out);
  return rep.has_fatal() ? kProvedFailure : kSuccess;
}

struct VerifyArgs {
  std::size_t max_vertices = 6;
  std::string checks;
  std::string family = "bipartite";
  bool connected = false;
};

// The report stream goes to --out as JSON lines; the summary to stdout.
int cmd_verify(const VerifyArgs& a, const Config& c, std::ostream& out) {
  SweepOptions o;
  o.max_vertices = a.max_vertices;
  o.checks = split_checks(a.checks);
  if (a.family == "bipartite")
    o.family = SweepFamily::Bipartite;
  else if (a.family == "perfect")
    o.family = SweepFamily::PerfectlyMatched;
  else
    throw UsageError("unknown family " + a.family);
  o.connected_only = a.connected;
  o.verify = verify_options(c);
  std::ofstream stream;
  if (!c.out.empty()) {
    stream.open(c.out, std::ios::binary);
    if (!stream) throw UsageError("cannot write " + c.out);
    o.on_report = [&](const VerdictReport& r) { stream << to_json(r).dump() << '\n'; };
  }
  const SweepSummary sum = sweep_small_graphs(o);
  if (c.json) {
    out << to_json(sum).dump(2) << '\n';
  } else {
    out << "graphs: " << sum.graphs << '\n';
    std::size_t width = 5;
    for (const auto& [name, t] : sum.tallies) width = std::max(width, name.size());
    out << "check" << std::string(width - 5, ' ') << "    holds equality    fails      n/a\n";
    for (const auto& [name, t] : sum.tallies) {
      out << name << std::string(width - name.size(), ' ');
      for (std::size_t v : {t.holds, t.equality, t.fails, t.not_applicable}) {
        const std::string s = std::to_string(v);
        out << std::string(9 - std::min<std::size_t>(8, s.size()), ' ') << s;
      }
      out << '\n';
    }
    out << "fatal failures: " << sum.failures.size() << '\n';
    for (const auto& r : sum.failures) out << "  " << r.canonical.dump() << '\n';
    out << "findings: " << sum.findings.size() << '\n';
    for (const auto& r : sum.findings) out << "  " << r.canonical.dump() << '\n';
  }
  return sum.ok() ? kSuccess : kProvedFailure;
}

void apply_config_file(const std::string& path, Config& c, const CLI::App& app) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path + ": expected a JSON object");
  auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "char") {
        if (unset("--char")) c.characteristic = value.get<std::uint32_t>();
      } else if (key == "cap_n") {
        if (unset("--cap-n")) c.cap_n = value.get<std::size_t>();
      } else if (key == "cap_m") {
        if (unset("--cap-m")) c.cap_m = value.get<std::size_t>();
      } else if (key == "jobs") {
        if (unset("--jobs")) c.jobs = value.get<std::size_t>();
      } else if (key == "json") {
        if (unset("--json")) c.json = value.get<bool>();
      } else if (key == "out") {
        if (unset("--out")) c.out = value.get<std::string>();
      } else if (key == "format") {
        if (unset("--format")) c.format = value.get<std::string>();
      } else {
        throw UsageError(path + ": unknown key " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void validate(const Config& c) {
  if (c.characteristic != 0 && !is_prime(c.characteristic))
    throw UsageError("characteristic must be 0 or a prime");
  if (c.cap_n == 0 || c.cap_m == 0) throw UsageError("caps must be positive");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and bound checks for edge ideals"};
  app.name("edgeideal");
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  std::string config_path;
  app.add_option("--char", config.characteristic, "field characteristic, 0 or a prime");
  app.add_option("--cap-n", config.cap_n, "largest number of variables for Betti tables");
  app.add_option("--cap-m", config.cap_m, "largest number of generators for the Taylor oracle");
  app.add_option("--jobs", config.jobs, "worker threads, 0 for one per core");
  app.add_flag("--json", config.json, "JSON instead of text");
  app.add_option("--out", config.out, "output file (verify: JSON-lines report stream)");
  app.add_option("--format", config.format, "input format")->check(CLI::IsMember({"auto", "graph", "ideal", "json"}));
  app.add_option("--config", config_path, "JSON config file; flags win");

  std::string input;
  auto with_input = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "graph or ideal file")->required();
    return sub;
  };
  auto* betti = with_input("betti", "graded Betti table");
  auto* mult = with_input("mult", "multiplicity and unmixed primes");
  auto* bounds = with_input("bounds", "multiplicity bounds from the resolution");
  auto* reduce = with_input("reduce", "reduction to a Cohen-Macaulay graph");
  auto* check_cm = with_input("check-cm", "Cohen-Macaulay test for bipartite graphs");
  auto* report = with_input("report", "run registered checks on one input");
  std::string report_checks;
  report->add_option("--checks", report_checks, "comma separated check names");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "sweep small bipartite graphs");
  verify->add_option("--max-vertices", verify_args.max_vertices, "largest vertex count")->check(CLI::Range(1, 14));
  verify->add_option("--checks", verify_args.checks, "comma separated check names");
  verify->add_option("--family", verify_args.family, "bipartite or perfect");
  verify->add_flag("--connected", verify_args.connected, "connected graphs only");

  // CLI11 wants argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, config, app);
    validate(config);

    if (verify->parsed()) return cmd_verify(verify_args, config, out);

    const Input in = load_input(input, config.format);
    std::ostringstream buffer;
    int code = kSuccess;
    if (betti->parsed()) code = cmd_betti(in, config, buffer);
    else if (mult->parsed()) code = cmd_mult(in, config, buffer);
    else if (bounds->parsed()) code = cmd_bounds(in, config, buffer);
    else if (reduce->parsed()) code = cmd_reduce(in, config, buffer);
    else if (check_cm->parsed()) code = cmd_check_cm(in, config, buffer);
    else if (report->parsed()) code = cmd_report(in, config, report_checks, buffer);

    if (config.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + config.out);
      file << buffer.str();
    }
    return code;
  } catch (const ParseError& e) {
    err << "error: " << input << ": " << e.what() << '\n';
  } catch (const CapExceeded& e) {
    err << "error: cap exceeded: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace edgeideal::cli
