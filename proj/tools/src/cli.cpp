#include "adel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "adel/dsl.hpp"
#include "adel/evaluation.hpp"
#include "adel/homgroups.hpp"
#include "adel/provers.hpp"

namespace adel::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string category_file;
  bool json = false;
  std::optional<std::uint64_t> seed;
  bool timings = false;
};

struct UsageError : Error {
  using Error::Error;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  bool verdict = true;
  std::vector<Certificate> certificates;
  std::optional<Json> invariant_factors;
  Json details = Json::object();
  std::vector<std::string> lines;

  void add(std::vector<Certificate> certs) {
    for (auto& c : certs) certificates.push_back(std::move(c));
  }
};

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Json factors_json(const SmithInvariants& s) {
  Json torsion = Json::array();
  for (const auto& d : s.torsion()) torsion.push_back(integer_json(d));
  return Json{{"torsion", torsion}, {"free_rank", s.free_rank}};
}

std::string group_string(const SmithInvariants& s) {
  std::vector<std::string> parts;
  for (const auto& d : s.torsion()) parts.push_back("Z/" + d.get_str());
  if (s.free_rank == 1) parts.push_back("Z");
  if (s.free_rank > 1) parts.push_back("Z^" + std::to_string(s.free_rank));
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Session load_session(const Options& opt) {
  if (opt.category_file.empty()) throw UsageError("this command needs --category FILE");
  return Session::parse(read_file(opt.category_file));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Report cmd_check_equal(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  const AdelMorphism g = s.resolve_morphism(args.at(1));
  Report r{"check-equal"};
  r.inputs = {{"lhs", args[0]}, {"rhs", args[1]}};
  if (!(f.source() == g.source()) || !(f.target() == g.target()))
    throw UsageError("the two morphisms are not parallel");
  const auto w = is_equal(f, g);
  r.verdict = w.has_value();
  if (w) r.certificates.push_back(zero_certificate("lhs - rhs = 0", f - g, *w));
  r.lines.push_back("equal: " + yes_no(r.verdict));
  return r;
}

Report cmd_kernel(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  const Kernel k = kernel(f);
  Report r{"kernel"};
  r.inputs = {{"morphism", args[0]}};
  r.details = {{"object", k.object.to_string()}, {"embedding", k.embedding.to_string()}};
  r.add(morphism_certificates("embedding", k.embedding));
  r.certificates.push_back(zero_certificate("embedding * morphism = 0", k.embedding * f, k.witness));
  r.lines.push_back("kernel object: " + k.object.to_string());
  r.lines.push_back("embedding datum: " + k.embedding.to_string());
  return r;
}

Report cmd_cokernel(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  const Cokernel c = cokernel(f);
  Report r{"cokernel"};
  r.inputs = {{"morphism", args[0]}};
  r.details = {{"object", c.object.to_string()}, {"projection", c.projection.to_string()}};
  r.add(morphism_certificates("projection", c.projection));
  r.certificates.push_back(zero_certificate("morphism * projection = 0", f * c.projection, c.witness));
  r.lines.push_back("cokernel object: " + c.object.to_string());
  r.lines.push_back("projection datum: " + c.projection.to_string());
  return r;
}

Report cmd_homology(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  const AdelMorphism g = s.resolve_morphism(args.at(1));
  Report r{"homology"};
  r.inputs = {{"first", args[0]}, {"second", args[1]}};
  const auto w = is_zero_morphism(f * g);
  if (!w) {
    r.verdict = false;
    r.lines.push_back("the composite is not zero; homology is undefined");
    return r;
  }
  const Homology h = homology(f, g);
  r.certificates.push_back(zero_certificate("composite = 0", f * g, *w));
  r.add(morphism_certificates("embedding", h.embedding));
  r.details = {{"object", h.object.to_string()}, {"zero", is_zero_object(h.object).has_value()}};
  r.lines.push_back("homology object: " + h.object.to_string());
  r.lines.push_back("homology is zero: " + yes_no(is_zero_object(h.object).has_value()));
  return r;
}

Report cmd_is_exact(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  const AdelMorphism g = s.resolve_morphism(args.at(1));
  Report r{"is-exact"};
  r.inputs = {{"first", args[0]}, {"second", args[1]}};
  if (!is_zero_morphism(f * g)) {
    r.verdict = false;
    r.lines.push_back("exact: no (the composite is not zero)");
    return r;
  }
  const ExactnessCheck e = check_exactness(f, g);
  r.certificates.push_back(zero_certificate("composite = 0", f * g, e.composite_zero));
  if (e.homology_zero)
    r.certificates.push_back(
        zero_certificate("homology = 0", kernel(g).embedding * cokernel(f).projection, *e.homology_zero));
  r.verdict = e.exact();
  r.lines.push_back("exact: " + yes_no(r.verdict));
  return r;
}

Report cmd_property(const Options& opt, const std::string& which, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelMorphism f = s.resolve_morphism(args.at(0));
  Report r{which};
  r.inputs = {{"morphism", args[0]}};
  auto zero_obj = [&](const std::string& label, const AdelObject& x) {
    const auto w = is_zero_object(x);
    if (w) r.certificates.push_back(zero_certificate(label, identity(x), *w));
    return w.has_value();
  };
  bool mono = true, epi = true;
  if (which != "is-epi") mono = zero_obj("kernel = 0", kernel(f).object);
  if (which != "is-mono") epi = zero_obj("cokernel = 0", cokernel(f).object);
  r.verdict = mono && epi;
  if (which != "is-epi") r.lines.push_back("mono: " + yes_no(mono));
  if (which != "is-mono") r.lines.push_back("epi: " + yes_no(epi));
  return r;
}

Report cmd_hom_group(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const AdelObject x = s.resolve_object(args.at(0));
  const AdelObject y = s.resolve_object(args.at(1));
  const HomGroupPresentation h = hom_group(x, y);
  Report r{"hom-group"};
  r.inputs = {{"source", args[0]}, {"target", args[1]}};
  r.invariant_factors = factors_json(h.invariants);
  Json gens = Json::array();
  r.lines.push_back("Hom = " + group_string(h.invariants));
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    const std::string order = sgn(h.orders[i]) == 0 ? "infinite" : h.orders[i].get_str();
    gens.push_back({{"datum", h.generators[i].to_string()}, {"order", integer_json(h.orders[i])}});
    r.lines.push_back("generator " + std::to_string(i + 1) + ": " + h.generators[i].to_string() + " (order " + order +
                      ")");
    r.add(morphism_certificates("generator " + std::to_string(i + 1), h.generators[i]));
  }
  r.details = {{"generators", gens}};
  return r;
}

Report cmd_connecting(const Options& opt, const std::vector<std::string>& args) {
  const Session s = load_session(opt);
  const MatMorphism a = s.resolve_matrix(args.at(0));
  const MatMorphism b = s.resolve_matrix(args.at(1));
  const MatMorphism c = s.resolve_matrix(args.at(2));
  const AdelMorphism d = connecting_homomorphism(a, b, c);
  Report r{"connecting"};
  r.inputs = {{"alpha", args[0]}, {"beta", args[1]}, {"gamma", args[2]}};
  r.add(morphism_certificates("connecting", d));
  r.details = {{"source", d.source().to_string()}, {"target", d.target().to_string()}, {"datum", d.to_string()}};
  r.lines.push_back("source: " + d.source().to_string());
  r.lines.push_back("target: " + d.target().to_string());
  r.lines.push_back("datum: " + d.to_string());
  return r;
}

Report cmd_prove(const std::string& lemma, const Integer& multiplier) {
  ProofReport p;
  if (lemma == "snake")
    p = prove_snake(multiplier);
  else if (lemma == "five")
    p = prove_refined_five();
  else
    p = prove_connecting_uniqueness();
  Report r{"prove"};
  r.inputs = {{"lemma", lemma}};
  if (lemma == "snake") r.inputs["multiplier"] = integer_json(multiplier);
  r.verdict = p.passed() && replay(p);
  Json checks = Json::array();
  for (const auto& c : p.checks) {
    Json j = {{"description", c.description}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
    r.lines.push_back(std::string(c.passed ? "[pass] " : "[FAIL] ") + c.description +
                      (c.detail.empty() ? "" : " (" + c.detail + ")"));
    r.add(c.certificates);
  }
  r.details = {{"checks", checks}};
  return r;
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--range expects A..B");
  try {
    std::size_t used = 0;
    const long lo = std::stol(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("--range expects A..B");
    const std::string rest = text.substr(dots + 2);
    const long hi = std::stol(rest, &used);
    if (used != rest.size()) throw UsageError("--range expects A..B");
    if (lo > hi) throw UsageError("--range is empty");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--range expects A..B");
  }
}

Report cmd_sweep(const std::string& range) {
  const auto [lo, hi] = parse_range(range);
  std::vector<Integer> values;
  for (long s = lo; s <= hi; ++s) values.emplace_back(s);
  Report r{"sweep"};
  r.inputs = {{"range", range}};
  Json exact = Json::object();
  Json witness = Json::object();
  for (const auto& p : exactness_sweep(values)) {
    exact[p.s.get_str()] = p.exact;
    witness[p.s.get_str()] = p.displayed_witness_verifies;
    r.lines.push_back("s = " + p.s.get_str() + ": exact " + yes_no(p.exact) + ", displayed witness " +
                      (p.displayed_witness_verifies ? "verifies" : "fails"));
  }
  r.details = {{"exact", exact}, {"displayed_witness", witness}};
  return r;
}

Report cmd_eval(const Options& opt, const std::string& rep_file, std::optional<std::size_t> random_count,
                std::size_t max_rank, const std::vector<std::string>& names) {
  const Session s = load_session(opt);
  const PathCategory& cat = *s.category();
  Report r{"eval"};
  r.inputs = {{"names", names}};

  std::vector<Representation> reps;
  if (!rep_file.empty()) {
    r.inputs["rep"] = rep_file;
    reps.push_back(parse_representation(cat, read_file(rep_file)));
    if (!check_representation(cat, reps.back())) throw UsageError("the representation violates a relation");
  } else {
    if (!random_count) throw UsageError("eval needs --rep FILE or --random N");
    if (opt.json && !opt.seed) throw UsageError("--seed is required with --json for random representations");
    const std::uint64_t seed = opt.seed.value_or(0);
    r.inputs["random"] = *random_count;
    r.inputs["seed"] = seed;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < *random_count; ++i) reps.push_back(random_representation(cat, rng, max_rank));
  }

  std::vector<std::pair<std::string, AdelObject>> objects;
  std::vector<std::pair<std::string, AdelMorphism>> morphisms;
  for (const auto& n : names) {
    try {
      objects.emplace_back(n, s.resolve_object(n));
    } catch (const Error&) {
      morphisms.emplace_back(n, s.resolve_morphism(n));
    }
  }

  Json results = Json::array();
  Json factors = Json::object();
  OracleReport oracle;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Representation& rep = reps[i];
    Json entry = Json::object();
    for (const auto& [name, x] : objects) {
      const SmithInvariants inv = eval_object(rep, x).group.invariants();
      entry[name] = factors_json(inv);
      if (reps.size() == 1) factors[name] = factors_json(inv);
      r.lines.push_back((reps.size() > 1 ? "rep " + std::to_string(i + 1) + ": " : "") + "F(" + name +
                        ") = " + group_string(inv));
    }
    for (const auto& [name, f] : morphisms) {
      oracle.merge(oracle_kernel(rep, f));
      oracle.merge(oracle_cokernel(rep, f));
    }
    if (morphisms.size() == 2 && morphisms[0].second.target() == morphisms[1].second.source() &&
        is_zero_morphism(morphisms[0].second * morphisms[1].second)) {
      oracle.merge(oracle_homology(rep, morphisms[0].second, morphisms[1].second));
      oracle.merge(oracle_exactness(rep, morphisms[0].second, morphisms[1].second));
    }
    if (!objects.empty()) results.push_back(std::move(entry));
  }
  if (reps.size() == 1 && !objects.empty()) r.invariant_factors = factors;
  r.verdict = oracle.ok();
  if (!morphisms.empty())
    r.lines.push_back("oracle mismatches: " + std::to_string(oracle.mismatches.size()) + " over " +
                      std::to_string(reps.size()) + " representation(s)");
  for (const auto& m : oracle.mismatches) r.lines.push_back("  " + m);
  r.details = {{"objects", results}, {"mismatches", oracle.mismatches}};
  return r;
}

Json certificates_json(const std::vector<Certificate>& certs) {
  Json out = Json::array();
  for (const auto& c : certs)
    out.push_back({{"label", c.label},
                   {"sigma1", c.sigma1.to_string()},
                   {"sigma2", c.sigma2.to_string()},
                   {"verified", c.verify()}});
  return out;
}

void emit(const Report& r, const Options& opt, double millis, std::ostream& out) {
  if (opt.json) {
    Json j;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["verdict"] = r.verdict ? "pass" : "fail";
    j["certificates"] = certificates_json(r.certificates);
    if (r.invariant_factors) j["invariant_factors"] = *r.invariant_factors;
    j["details"] = r.details;
    j["timings"] = opt.timings ? Json{{"total_ms", millis}} : Json::object();
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& l : r.lines) out << l << '\n';
  std::size_t verified = 0;
  for (const auto& c : r.certificates) verified += c.verify();
  if (!r.certificates.empty())
    out << "certificates: " << r.certificates.size() << " (" << verified << " re-verified)\n";
  out << "verdict: " << (r.verdict ? "pass" : "fail") << '\n';
  if (opt.timings) out << "time: " << millis << " ms\n";
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in free abelian categories", "adel"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--category", opt.category_file, "category/session file");
  app.add_flag("--json", opt.json, "machine-readable report");
  app.add_option("--seed", opt.seed, "seed for random representations");
  app.add_flag("--timings", opt.timings, "report wall-clock timings");

  std::vector<std::string> pos;
  auto positional = [&](CLI::App* sub, const char* name, int n) {
    sub->add_option(name, pos, "morphisms or objects")->expected(n)->required();
  };
  CLI::App* check_equal = app.add_subcommand("check-equal", "decide whether two morphisms are equal");
  positional(check_equal, "morphisms", 2);
  CLI::App* ker = app.add_subcommand("kernel", "kernel of a morphism");
  positional(ker, "morphism", 1);
  CLI::App* coker = app.add_subcommand("cokernel", "cokernel of a morphism");
  positional(coker, "morphism", 1);
  CLI::App* hom = app.add_subcommand("homology", "homology of a composable pair");
  positional(hom, "morphisms", 2);
  CLI::App* exact = app.add_subcommand("is-exact", "decide exactness of a composable pair");
  positional(exact, "morphisms", 2);
  std::vector<CLI::App*> props;
  for (const char* p : {"is-mono", "is-epi", "is-iso"}) {
    props.push_back(app.add_subcommand(p, "decide a property of a morphism"));
    positional(props.back(), "morphism", 1);
  }
  CLI::App* homgrp = app.add_subcommand("hom-group", "Hom(X, Y) as an abelian group");
  positional(homgrp, "objects", 2);
  CLI::App* conn = app.add_subcommand("connecting", "connecting morphism of alpha, beta, gamma");
  positional(conn, "morphisms", 3);

  CLI::App* prove = app.add_subcommand("prove", "verify a diagram lemma");
  std::string lemma;
  std::string multiplier = "1";
  prove->add_option("lemma", lemma)->required()->check(CLI::IsMember({"snake", "five", "uniqueness"}));
  prove->add_option("--multiplier", multiplier, "scale the connecting arrow of the snake diagram");

  CLI::App* sweep = app.add_subcommand("sweep", "exactness of the snake sequence for s*[beta]");
  std::string range;
  sweep->add_option("--range", range, "A..B")->required()->allow_extra_args(false);

  CLI::App* eval = app.add_subcommand("eval", "evaluate objects and check morphisms on representations");
  std::string rep_file;
  std::optional<std::size_t> random_count;
  std::size_t max_rank = 3;
  eval->add_option("--rep", rep_file, "representation file");
  eval->add_option("--random", random_count, "number of random representations");
  eval->add_option("--max-rank", max_rank, "largest rank of a random representation");
  eval->add_option("names", pos, "objects or morphisms")->required();

  // CLI11 consumes arguments from the back; a leading '-' in a range value
  // must not be read as a flag.
  std::vector<std::string> argv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--range" && i + 1 < args.size()) {
      argv.push_back("--range=" + args[++i]);
      continue;
    }
    argv.push_back(args[i]);
  }
  std::reverse(argv.begin(), argv.end());

  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "adel: " << e.what() << '\n';
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Report report;
  try {
    if (*check_equal) report = cmd_check_equal(opt, pos);
    else if (*ker) report = cmd_kernel(opt, pos);
    else if (*coker) report = cmd_cokernel(opt, pos);
    else if (*hom) report = cmd_homology(opt, pos);
    else if (*exact) report = cmd_is_exact(opt, pos);
    else if (*homgrp) report = cmd_hom_group(opt, pos);
    else if (*conn) report = cmd_connecting(opt, pos);
    else if (*prove) report = cmd_prove(lemma, Integer(multiplier));
    else if (*sweep) report = cmd_sweep(range);
    else if (*eval) report = cmd_eval(opt, rep_file, random_count, max_rank, pos);
    else
      for (CLI::App* p : props)
        if (*p) report = cmd_property(opt, p->get_name(), pos);
  } catch (const std::invalid_argument&) {
    err << "adel: --multiplier expects an integer\n";
    return kUsage;
  } catch (const Error& e) {
    err << "adel: " << e.what() << '\n';
    return kUsage;
  }
  const double millis =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(report, opt, millis, out);
  return report.verdict ? kPass : kFail;
}

}  // namespace adel::cli
