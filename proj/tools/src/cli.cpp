#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "idensity/sampling.hpp"
#include "report_json.hpp"

namespace idensity::cli {
namespace {

struct RunConfig {
  std::string ideal = "d";
  bool json = false;
  std::uint64_t seed = 1;
  std::string file;
  std::string set;
  std::string sets;
  std::string gen;
  std::string point;
  Natural index = 1;
  Natural random = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'", 1, 1);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A file path when it names an existing file, otherwise the literal text.
std::string file_or_literal(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return read_file(arg);
  return arg;
}

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(line);
  }
  return out;
}

IntervalSet load_set(const std::string& arg) {
  auto lines = content_lines(file_or_literal(arg));
  if (lines.size() != 1) throw ParseError("expected exactly one interval set in '" + arg + "'", 1, 1);
  return IntervalSet::parse(lines.front());
}

std::vector<IntervalSet> load_sets(const std::string& path) {
  std::vector<IntervalSet> out;
  std::size_t line_no = 0;
  for (const auto& line : content_lines(read_file(path))) {
    ++line_no;
    try {
      out.push_back(IntervalSet::parse(line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.column());
    }
  }
  return out;
}

Rational load_point(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw ParseError("bad point '" + text + "'", 1, 1);
  }
}

json envelope(const std::string& command, const RunConfig& cfg) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"ideal", cfg.ideal}};
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

// ---- paper-example -------------------------------------------------------

int cmd_paper_example(const RunConfig& cfg, std::ostream& out) {
  const Ideal d = Ideal::density_zero(), fin = Ideal::fin();
  const Rational p(0);
  IntervalGenerator gen = square_blowup_generator(p);
  IntervalSet e = IntervalSet::parse("(-1,1)");
  IndexSet s = script_s(gen);
  PiecewiseSequence x = ratio_sequence(gen, e);
  DensityClassification c = classify_i_density(p, e, d);

  struct Check {
    std::string name, expected, actual;
  };
  std::vector<Check> checks;
  auto check = [&](std::string name, std::string expected, std::string actual) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual)});
  };
  IndexSet off_squares = IndexSet::naturals() - IndexSet::squares();
  check("S(K_n)", off_squares.to_string(),
        normal_form(s) == normal_form(off_squares) ? off_squares.to_string() : s.to_string());
  check("S(K_n) in filter of I_d", "true", yes_no(d.in_filter(s)));
  check("S(K_n) in filter of I_fin", "false", yes_no(fin.in_filter(s)));
  // x_n = 1 off the squares and 1/m^2 at n = m^2
  std::string first_terms, expected_terms;
  for (Natural n = 1; n <= 16; ++n) {
    Natural m = isqrt(n);
    Rational want = m * m == n ? make_rational(1, static_cast<std::int64_t>(n)) : Rational(1);
    want.canonicalize();
    expected_terms += (n > 1 ? " " : "") + to_string(want);
    first_terms += (n > 1 ? " " : "") + to_string(x.eval(n));
  }
  check("x_1..x_16", expected_terms, first_terms);
  check("classical limsup", "1/1", to_string(i_limsup(x, fin)));
  check("classical liminf", "0/1", to_string(i_liminf(x, fin)));
  check("I_d limsup", "1/1", to_string(i_limsup(x, d)));
  check("I_d liminf", "1/1", to_string(i_liminf(x, d)));
  check("classification at 0 under I_d", "One", std::string(outcome_name(c.outcome)));

  bool ok = true;
  for (const auto& ch : checks) ok = ok && ch.expected == ch.actual;

  if (cfg.json) {
    json doc = envelope("paper-example", cfg);
    doc["ideal"] = "d";
    doc["generator"] = to_json(gen, d);
    doc["set"] = to_json(e);
    doc["ratio_sequence"] = to_json(x, d);
    json rows = json::array();
    for (const auto& ch : checks) {
      rows.push_back({{"name", ch.name}, {"expected", ch.expected}, {"actual", ch.actual}, {"match", ch.expected == ch.actual}});
    }
    doc["checks"] = rows;
    doc["golden_match"] = ok;
    emit(out, doc);
  } else {
    out << "generator K_n about 0:\n" << gen.to_string();
    out << "E = " << e.to_string() << "\n";
    out << "S(K_n) = " << s.to_string() << "\n";
    out << "S(K_n) in filter of I_d: " << yes_no(d.in_filter(s)) << "\n";
    out << "S(K_n) in filter of I_fin: " << yes_no(fin.in_filter(s)) << "\n";
    out << "ratio sequence x_n:\n" << x.to_string();
    out << "classical (limsup, liminf) = (" << to_string(i_limsup(x, fin)) << ", " << to_string(i_liminf(x, fin))
        << ")\n";
    out << "I_d (limsup, liminf) = (" << to_string(i_limsup(x, d)) << ", " << to_string(i_liminf(x, d)) << ")\n";
    out << "classification at p = 0 under I_d: " << outcome_name(c.outcome) << "\n";
    for (const auto& ch : checks) {
      if (ch.expected != ch.actual) {
        out << "MISMATCH " << ch.name << "\n  - expected " << ch.expected << "\n  + actual   " << ch.actual << "\n";
      }
    }
    out << (ok ? "golden: all values match\n" : "golden: MISMATCH\n");
  }
  if (!ok) throw Error(ErrorCode::GoldenMismatch, "worked example deviates from the reference values");
  return 0;
}

// ---- sequence ------------------------------------------------------------

int cmd_sequence(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
  const Ideal ideal = Ideal::parse(cfg.ideal);
  PiecewiseSequence seq = PiecewiseSequence::parse(read_file(cfg.file));
  json doc = envelope("sequence " + sub, cfg);
  std::string text;
  if (sub == "eval") {
    if (cfg.index == 0) throw Error(ErrorCode::PreconditionViolation, "sequences are indexed from 1");
    Rational v = seq.eval(cfg.index);
    doc["n"] = cfg.index;
    doc["value"] = to_json(v);
    text = to_string(v);
  } else if (sub == "limsup") {
    ExtReal v = i_limsup(seq, ideal);
    doc["value"] = to_json(v);
    text = to_string(v);
  } else if (sub == "liminf") {
    ExtReal v = i_liminf(seq, ideal);
    doc["value"] = to_json(v);
    text = to_string(v);
  } else {
    auto v = is_i_convergent(seq, ideal);
    doc["limit"] = v ? to_json(*v) : json(nullptr);
    doc["i_limsup"] = to_json(i_limsup(seq, ideal));
    doc["i_liminf"] = to_json(i_liminf(seq, ideal));
    doc["i_bounded"] = is_i_bounded(seq, ideal);
    text = v ? to_string(*v) : "none";
  }
  doc["pieces"] = to_json(seq, ideal);
  if (cfg.json) emit(out, doc);
  else out << text << "\n";
  return 0;
}

// ---- density -------------------------------------------------------------

int cmd_theta(const RunConfig& cfg, std::ostream& out, const std::string& name) {
  const Ideal ideal = Ideal::parse(cfg.ideal);
  IntervalSet e = load_set(cfg.set);
  IntervalSet t = theta(e, ideal);
  if (cfg.json) {
    json doc = envelope(name, cfg);
    doc["set"] = to_json(e);
    doc["theta"] = to_json(t);
    emit(out, doc);
  } else {
    out << t.to_string() << "\n";
  }
  return 0;
}

int cmd_density(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
  if (sub == "theta") return cmd_theta(cfg, out, "density theta");
  const Ideal ideal = Ideal::parse(cfg.ideal);
  IntervalSet e = load_set(cfg.set);
  json doc = envelope("density " + sub, cfg);
  doc["set"] = to_json(e);

  if (sub == "along") {
    IntervalGenerator gen = IntervalGenerator::parse(read_file(cfg.gen));
    doc["generator"] = to_json(gen, ideal);
    auto [lo, hi] = i_density_along(gen, e, ideal);
    PiecewiseSequence ratios = ratio_sequence(gen, e);
    doc["ratio_sequence"] = to_json(ratios, ideal);
    doc["i_liminf"] = to_json(lo);
    doc["i_limsup"] = to_json(hi);
    if (cfg.json) {
      emit(out, doc);
    } else {
      out << "i_liminf " << to_string(lo) << " i_limsup " << to_string(hi) << "\n";
      out << "S(J_n) = " << script_s(gen).to_string() << "\n";
      out << "ratio sequence:\n" << ratios.to_string();
    }
    return 0;
  }

  Rational p = load_point(cfg.point);
  doc["point"] = to_json(p);
  if (sub == "classify") {
    DensityClassification c = classify_i_density(p, e, ideal);
    LocalSignature sig = local_signature(p, e);
    doc["signature"] = to_json(sig);
    doc["classification"] = to_json(c, e, ideal);
    doc["classical_density"] = to_json(classical_density(p, e));
    if (cfg.json) {
      emit(out, doc);
    } else {
      out << outcome_name(c.outcome) << " lower " << to_string(c.lower) << " upper " << to_string(c.upper) << "\n";
      for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
        auto [lo, hi] = i_density_along(c.witnesses[i], e, ideal);
        out << "witness for " << (i == 0 ? "lower" : "upper") << " (i_liminf " << to_string(lo) << ", i_limsup "
            << to_string(hi) << "):\n"
            << c.witnesses[i].to_string();
      }
    }
    return 0;
  }
  bool dispersion = is_dispersion_point(p, e, ideal);
  doc["dispersion"] = dispersion;
  if (cfg.json) emit(out, doc);
  else out << yes_no(dispersion) << "\n";
  return 0;
}

// ---- topology ------------------------------------------------------------

int cmd_topology(const std::string& sub, const RunConfig& cfg, std::ostream& out) {
  const Ideal ideal = Ideal::parse(cfg.ideal);
  json doc = envelope("topology " + sub, cfg);

  if (sub == "open") {
    IntervalSet a = load_set(cfg.set);
    bool open = is_ti_open(a, ideal);
    doc["set"] = to_json(a);
    doc["theta"] = to_json(theta(a, ideal));
    doc["open"] = open;
    if (cfg.json) emit(out, doc);
    else out << yes_no(open) << "\n";
    return 0;
  }
  if (sub == "borel") {
    IntervalSet b = load_set(cfg.set);
    BorelDecomposition dec = borel_decompose(b, ideal);
    doc["set"] = to_json(b);
    doc["decomposition"] = to_json(dec);
    if (cfg.json) emit(out, doc);
    else out << "C = " << dec.open_part.to_string() << "\nD = " << dec.null_part.to_string() << "\n";
    return 0;
  }

  // check: the theta laws over every ordered pair of the family, then
  // finite closure when the whole family is open.
  std::vector<IntervalSet> family;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (!cfg.sets.empty()) {
    family = load_sets(cfg.sets);
    if (family.empty()) throw ParseError("no interval sets in '" + cfg.sets + "'", 1, 1);
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = 0; j < family.size(); ++j) {
        if (i != j || family.size() == 1) pairs.emplace_back(i, j);
      }
    }
  } else {
    if (cfg.random == 0) throw Error(ErrorCode::PreconditionViolation, "topology check needs --sets or --random");
    Sampler sampler(cfg.seed);
    for (Natural k = 0; k < cfg.random; ++k) {
      family.push_back(sampler.interval_set());
      family.push_back(sampler.interval_set());
      pairs.emplace_back(2 * k, 2 * k + 1);
    }
    doc["seed"] = cfg.seed;
  }
  std::vector<LemmaReport> reports;
  for (auto [i, j] : pairs) {
    for (auto& r : check_theta_lemmas(family[i], family[j], ideal)) reports.push_back(std::move(r));
  }
  if (!cfg.sets.empty()) {
    try {
      reports.push_back(check_finite_closure(family, ideal));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionViolation) throw;
      reports.push_back({"finite closure", "family of " + std::to_string(family.size()), "family is open",
                         e.what(), LemmaStatus::Vacuous});
    }
  }
  std::size_t passed = 0, failed = 0, vacuous = 0;
  for (const auto& r : reports) {
    if (r.status == LemmaStatus::Pass) ++passed;
    else if (r.status == LemmaStatus::Fail) ++failed;
    else ++vacuous;
  }
  if (cfg.json) {
    json rows = json::array();
    for (const auto& r : reports) rows.push_back(to_json(r));
    doc["reports"] = rows;
    doc["summary"] = {{"pass", passed}, {"fail", failed}, {"vacuous", vacuous}};
    emit(out, doc);
  } else {
    for (const auto& r : reports) {
      out << status_name(r.status) << "\t" << r.name << "\t" << r.inputs << "\t" << r.computed << "\n";
    }
    out << "pass " << passed << " fail " << failed << " vacuous " << vacuous << "\n";
  }
  return failed == 0 ? 0 : 1;
}

void report_error(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::string_view code,
                  const std::string& message) {
  if (cfg.json) {
    emit(out, {{"schema_version", kSchemaVersion}, {"error", {{"code", std::string(code)}, {"message", message}}}});
  }
  err << "error [" << code << "]: " << message << "\n";
}

}  // namespace

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
    case ErrorCode::MalformedInterval: return 2;
    case ErrorCode::PreconditionViolation:
    case ErrorCode::InvalidGenerator:
    case ErrorCode::UnsupportedSparseIntersection:
    case ErrorCode::PartitionViolation:
    case ErrorCode::GrammarOverflow:
    case ErrorCode::NormalizationOverflow: return 3;
    case ErrorCode::GoldenMismatch: return 4;
    case ErrorCode::InvariantBreach: return 1;
  }
  return 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact ideal convergence, I-density and density topology on interval sets", "idensity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--ideal", cfg.ideal, "fin or d")->check(CLI::IsMember({"fin", "d"}));
  app.add_flag("--json", cfg.json, "structured output");
  app.add_option("--seed", cfg.seed, "seed for random property runs");

  auto* paper = app.add_subcommand("paper-example", "reproduce the worked example and compare with reference values");

  auto* sequence = app.add_subcommand("sequence", "piecewise sequences");
  sequence->require_subcommand(1);
  for (const char* name : {"eval", "limsup", "liminf", "convergent"}) {
    auto* sub = sequence->add_subcommand(name);
    sub->add_option("--file", cfg.file, "sequence file")->required();
    if (std::string(name) == "eval") sub->add_option("--n", cfg.index, "index (>= 1)")->required();
  }

  auto add_theta = [&](CLI::App* sub) { sub->add_option("--set", cfg.set, "interval set or file")->required(); };
  auto* density = app.add_subcommand("density", "I-density at a point");
  density->require_subcommand(1);
  for (const char* name : {"classify", "along", "theta", "dispersion"}) {
    auto* sub = density->add_subcommand(name);
    add_theta(sub);
    std::string n = name;
    if (n == "classify" || n == "dispersion") sub->add_option("--point", cfg.point, "rational p/q")->required();
    if (n == "along") sub->add_option("--gen", cfg.gen, "generator file")->required();
  }
  auto* theta_cmd = app.add_subcommand("theta", "the density operator");
  add_theta(theta_cmd);

  auto* topology = app.add_subcommand("topology", "density topology");
  topology->require_subcommand(1);
  add_theta(topology->add_subcommand("open"));
  add_theta(topology->add_subcommand("borel"));
  auto* check = topology->add_subcommand("check");
  auto* sets_opt = check->add_option("--sets", cfg.sets, "file with one interval set per line");
  check->add_option("--random", cfg.random, "number of random pairs")->excludes(sets_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error [Parse]: " << e.what() << "\n";
    return 2;
  }

  try {
    if (paper->parsed()) return cmd_paper_example(cfg, out);
    if (theta_cmd->parsed()) return cmd_theta(cfg, out, "theta");
    for (auto* group : {sequence, density, topology}) {
      if (!group->parsed()) continue;
      for (auto* sub : group->get_subcommands()) {
        if (group == sequence) return cmd_sequence(sub->get_name(), cfg, out);
        if (group == density) return cmd_density(sub->get_name(), cfg, out);
        return cmd_topology(sub->get_name(), cfg, out);
      }
    }
    err << "error [Parse]: no command\n";
    return 2;
  } catch (const Error& e) {
    report_error(cfg, out, err, error_code_name(e.code()), e.what());
    return exit_code(e.code());
  } catch (const std::exception& e) {
    report_error(cfg, out, err, "Internal", e.what());
    return 1;
  }
}

}  // namespace idensity::cli
