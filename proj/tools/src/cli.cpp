#include "mthv_cli/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mthv/analysis.hpp"
#include "mthv/errors.hpp"
#include "mthv/expr.hpp"
#include "mthv/rho.hpp"
#include "mthv/suites.hpp"
#include "mthv_cli/cache.hpp"

namespace mthv::cli {

namespace {

using Json = nlohmann::ordered_json;

struct ModuleFlags {
  std::string c = "0", h = "0", l = "0", alpha = "0", beta = "0", gamma = "1", kind = "A";
};

struct Config {
  std::string command;
  ModuleFlags m;
  // Second module for `iso`; empty fields default to the first module's.
  std::string c1, h1, l1, alpha1, beta1, gamma1, kind1;
  std::string level_bound = "2";
  int rs_bound = 5;
  std::string level_cap = "2", shift_cap = "2";
  std::string cache_dir;
  bool recheck = false;
  std::string format = "json";
  std::vector<std::string> exprs;
  std::string x, y, n, level;
  std::vector<std::string> modulo;
  std::string suite = "all";
  std::uint64_t seed = 1;
};

// Thrown for bad user input that CLI11 cannot see (fractions, expressions).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Inconclusive {
  Json result;
};

Scalar scalar_flag(const std::string& name, const std::string& text) {
  try {
    return parse_scalar(text);
  } catch (const std::exception& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

HalfInt half_flag(const std::string& name, const std::string& text) {
  const Scalar x = scalar_flag(name, text);
  if (!is_half_integer(x)) throw InputError("--" + name + " must be a multiple of 1/2, got " + text);
  return HalfInt::from_scalar(x);
}

Params params_of(const ModuleFlags& f) {
  Params p;
  p.c = scalar_flag("c", f.c);
  p.h = scalar_flag("h", f.h);
  p.l = scalar_flag("l", f.l);
  p.alpha = scalar_flag("alpha", f.alpha);
  p.beta = scalar_flag("beta", f.beta);
  p.gamma = scalar_flag("gamma", f.gamma);
  return p;
}

TensorKind kind_of(const std::string& s) { return s == "Aprime" ? TensorKind::APrime : TensorKind::A; }

Json params_json(const Params& p) {
  return Json{{"c", p.c.get_str()},         {"h", p.h.get_str()},       {"l", p.l.get_str()},
              {"alpha", p.alpha.get_str()}, {"beta", p.beta.get_str()}, {"gamma", p.gamma.get_str()}};
}

Json set_json(const HalfIntSet& s) {
  Json pts = Json::array();
  for (HalfInt k : s.points()) pts.push_back(k.to_string());
  return Json{{"text", s.to_string()},
              {"all_integers", s.all_integers()},
              {"all_half_odd", s.all_half_odd()},
              {"points", pts}};
}

Json kac_json(const std::vector<KacZero>& zs) {
  Json out = Json::array();
  for (const auto& z : zs) out.push_back(Json{{"r", z.r}, {"s", z.s}, {"level", z.level()}});
  return out;
}

Json search_json(const GeneratorSearch& s) {
  Json gens = Json::array();
  for (const auto& q : s.generators)
    gens.push_back(Json{{"level", (-q.homogeneous_degree()).to_string()}, {"element", format_element(q)}});
  return Json{{"generators", gens},
              {"c_virasoro", s.c_virasoro.get_str()},
              {"h_virasoro", s.h_virasoro.get_str()},
              {"kac_zeros", kac_json(s.kac_zeros)},
              {"unexplained_kac_zeros", kac_json(s.unexplained)},
              {"complete", s.complete()}};
}

UEAElement element_flag(const std::string& name, const std::string& text, const Params& p) {
  try {
    return parse_element(text, p);
  } catch (const ParseError& e) {
    throw InputError("--" + name + ": " + e.what());
  }
}

UEAElement negative_homogeneous(const std::string& name, const std::string& text, const Params& p) {
  UEAElement q = element_flag(name, text, p);
  if (q.is_zero() || !q.is_negative() || !q.is_homogeneous())
    throw InputError("--" + name + " must be a nonzero homogeneous element of U(D^-): " + text);
  return q;
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& err) : cfg_(cfg), err_(err) {}

  Json config_json() const {
    Json c;
    c["params"] = params_json(params_of(cfg_.m));
    const std::string& cmd = cfg_.command;
    if (cmd == "irreducible" || cmd == "iso") c["kind"] = cfg_.m.kind;
    if (cmd == "maxsub" || cmd == "irreducible" || cmd == "filtration") {
      c["level_bound"] = half_flag("level-bound", cfg_.level_bound).to_string();
      c["rs_bound"] = cfg_.rs_bound;
    }
    if (cmd == "verify") {
      c["suite"] = cfg_.suite;
      c["seed"] = cfg_.seed;
      c["level_cap"] = half_flag("level-cap", cfg_.level_cap).to_string();
      c["shift_cap"] = half_flag("shift-cap", cfg_.shift_cap).to_string();
    }
    if (!cfg_.exprs.empty()) c["expr"] = cfg_.exprs;
    if (!cfg_.x.empty()) c["x"] = cfg_.x;
    if (!cfg_.y.empty()) c["y"] = cfg_.y;
    if (!cfg_.n.empty()) c["n"] = cfg_.n;
    if (!cfg_.level.empty()) c["level"] = cfg_.level;
    if (!cfg_.modulo.empty()) c["modulo"] = cfg_.modulo;
    if (cmd == "iso") {
      c["other"] = params_json(params_of(other_flags()));
      c["other_kind"] = other_flags().kind;
    }
    return c;
  }

  Json execute() {
    const std::string& cmd = cfg_.command;
    if (cmd == "bracket") return bracket();
    if (cmd == "straighten") return straighten_cmd();
    if (cmd == "rho") return rho();
    if (cmd == "roots") return roots();
    if (cmd == "singular") return singular();
    if (cmd == "maxsub") return maxsub();
    if (cmd == "irreducible") return irreducible();
    if (cmd == "filtration") return filtration();
    if (cmd == "iso") return iso();
    if (cmd == "verify") return verify();
    throw std::logic_error("unhandled command " + cmd);
  }

  Json provenance() const {
    Json p;
    const std::string& cmd = cfg_.command;
    if (cmd == "maxsub" || cmd == "irreducible" || cmd == "filtration")
      p["bounds"] = Json{{"level_bound", cfg_.level_bound}, {"rs_bound", cfg_.rs_bound}};
    if (cmd == "verify") p["caps"] = Json{{"level_cap", cfg_.level_cap}, {"shift_cap", cfg_.shift_cap}};
    p["cache"] = cache_ ? Json{{"dir", cache_->dir().string()},
                               {"hits", cache_->hits()},
                               {"stored", cache_->stored()},
                               {"rejected", cache_->rejected()},
                               {"recheck", cfg_.recheck}}
                        : Json{{"enabled", false}};
    return p;
  }

  bool failed() const { return failed_; }

 private:
  ModuleFlags other_flags() const {
    ModuleFlags o = cfg_.m;
    auto pick = [](std::string& dst, const std::string& src) {
      if (!src.empty()) dst = src;
    };
    pick(o.c, cfg_.c1);
    pick(o.h, cfg_.h1);
    pick(o.l, cfg_.l1);
    pick(o.alpha, cfg_.alpha1);
    pick(o.beta, cfg_.beta1);
    pick(o.gamma, cfg_.gamma1);
    pick(o.kind, cfg_.kind1);
    return o;
  }

  SearchOptions search_options(const Params& p) {
    SearchOptions opt;
    opt.level_bound = half_flag("level-bound", cfg_.level_bound);
    if (opt.level_bound < HalfInt::halves(1)) throw InputError("--level-bound must be at least 1/2");
    if (cfg_.rs_bound < 1) throw InputError("--rs-bound must be at least 1");
    opt.rs_bound = cfg_.rs_bound;
    std::string dir = cfg_.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("MTHV_CACHE_DIR")) dir = env;
    if (!dir.empty() && p.l != 0) {
      cache_.emplace(dir, p, cfg_.recheck, err_);
      cache_->attach(opt);
    }
    return opt;
  }

  Json bracket() {
    const Params p = params_of(cfg_.m);
    const UEAElement x = element_flag("x", cfg_.x, p), y = element_flag("y", cfg_.y, p);
    return Json{{"x", format_element(x)}, {"y", format_element(y)}, {"bracket", format_element(commutator(x, y))}};
  }

  Json straighten_cmd() {
    const Params p = params_of(cfg_.m);
    const UEAElement x = element_flag("expr", cfg_.exprs.at(0), p);
    Json terms = Json::array();
    for (const auto& [m, k] : x.terms()) terms.push_back(Json{{"monomial", m.to_string()}, {"coefficient", k.get_str()}});
    return Json{{"canonical", format_element(x)}, {"terms", terms}};
  }

  Json rho() {
    const Params p = params_of(cfg_.m);
    const UEAElement x = element_flag("expr", cfg_.exprs.at(0), p);
    const CosetPolynomial cp = rho_polynomials(x, p);
    Json r{{"expr", format_element(x)}, {"p_int", cp.p_int.to_string()}, {"p_half", cp.p_half.to_string()}};
    if (!cfg_.n.empty()) r["value"] = rho_eval(x, scalar_flag("n", cfg_.n), p).get_str();
    return r;
  }

  Json roots() {
    const Params p = params_of(cfg_.m);
    std::vector<UEAElement> qs;
    Json each = Json::array();
    for (const auto& text : cfg_.exprs) {
      qs.push_back(element_flag("expr", text, p));
      const CosetPolynomial cp = rho_polynomials(qs.back(), p);
      each.push_back(Json{{"expr", format_element(qs.back())},
                          {"p_int", cp.p_int.to_string()},
                          {"p_half", cp.p_half.to_string()},
                          {"zeros", set_json(half_integer_roots(cp))}});
    }
    return Json{{"polynomials", each}, {"lambda", set_json(lambda_set(qs, p))}};
  }

  Json singular() {
    const Params p = params_of(cfg_.m);
    const HalfInt level = half_flag("level", cfg_.level);
    std::vector<UEAElement> modulo;
    for (const auto& t : cfg_.modulo) modulo.push_back(negative_homogeneous("modulo", t, p));
    if (level <= HalfInt()) throw InputError("--level must be positive");
    const auto qs = singular_vectors(p, level, modulo);
    Json vs = Json::array();
    bool ok = true;
    for (const auto& q : qs) {
      vs.push_back(format_element(q));
      ok = ok && is_singular_modulo(p, q, modulo);
    }
    if (!ok) failed_ = true;
    return Json{{"level", level.to_string()}, {"vectors", vs}, {"rechecked_singular", ok}};
  }

  Json maxsub() {
    const Params p = params_of(cfg_.m);
    if (p.l == 0) throw InputError("maxsub needs l != 0");
    const SearchOptions opt = search_options(p);
    const GeneratorSearch s = maximal_submodule_generators(p, opt);
    Json r = search_json(s);
    if (!s.complete()) throw Inconclusive{r};
    return r;
  }

  Json irreducible() {
    const Params p = params_of(cfg_.m);
    const TensorKind kind = kind_of(cfg_.m.kind);
    if (kind == TensorKind::A && p.gamma == 0) throw InputError("the A kind needs gamma != 0");
    const SearchOptions opt = search_options(p);
    const IrreducibilityVerdict v = tensor_irreducibility(p, kind, opt);
    Json r{{"clause", v.clause}, {"verdict", to_string(v.result)}, {"reason", v.reason}};
    if (v.result == VerdictKind::ReducesToVirasoro) {
      r["c_virasoro"] = v.c_virasoro.get_str();
      r["h_virasoro"] = v.h_virasoro.get_str();
    }
    if (v.lambda) r["lambda"] = set_json(*v.lambda);
    if (v.search) r["search"] = search_json(*v.search);
    if (v.result == VerdictKind::Inconclusive) throw Inconclusive{r};
    return r;
  }

  Json filtration() {
    const Params p = params_of(cfg_.m);
    if (p.l == 0) throw InputError("filtration needs l != 0");
    if (p.gamma == 0) throw InputError("the A kind needs gamma != 0");
    const SearchOptions opt = search_options(p);
    const FiltrationReport rep = filtration_report(p, opt);
    static const char* shapes[] = {"irreducible", "finite", "unbounded", "inconclusive"};
    Json steps = Json::array();
    for (const auto& s : rep.steps) steps.push_back(Json{{"k", s.k.to_string()}, {"highest_weight", s.highest_weight.get_str()}});
    Json r{{"shape", shapes[static_cast<int>(rep.shape)]},
           {"lambda", set_json(rep.lambda)},
           {"steps", steps},
           {"terminal_k", rep.terminal_k ? Json(rep.terminal_k->to_string()) : Json(nullptr)},
           {"central", Json{{"c", rep.c.get_str()}, {"l", rep.l.get_str()}}},
           {"description", rep.description},
           {"search", search_json(rep.search)}};
    if (rep.shape == FiltrationReport::Shape::Inconclusive) throw Inconclusive{r};
    return r;
  }

  Json iso() {
    const TensorModule a{kind_of(cfg_.m.kind), params_of(cfg_.m)};
    const ModuleFlags of = other_flags();
    const TensorModule b{kind_of(of.kind), params_of(of)};
    for (const auto* t : {&a, &b})
      if (t->kind == TensorKind::A && t->params.gamma == 0) throw InputError("the A kind needs gamma != 0");
    const IsoVerdict v = iso_classifier(a, b);
    return Json{{"isomorphic", v.isomorphic}, {"clause", v.clause}, {"reason", v.reason}};
  }

  Json verify() {
    SuiteOptions opt;
    opt.seed = cfg_.seed;
    opt.level_cap = half_flag("level-cap", cfg_.level_cap);
    opt.shift_cap = half_flag("shift-cap", cfg_.shift_cap);
    std::vector<std::string> names;
    if (cfg_.suite == "all") names = suite_names();
    else names.push_back(cfg_.suite);
    Json suites = Json::array();
    bool all = true;
    for (const auto& name : names) {
      const SuiteResult r = run_suite(name, opt);
      all = all && r.passed;
      suites.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
    }
    if (!all) failed_ = true;
    return Json{{"suites", suites}, {"all_passed", all}};
  }

  const Config& cfg_;
  std::ostream& err_;
  std::optional<SingularCache> cache_;
  bool failed_ = false;
};

void print_human(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_human(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    if (j.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < j.size(); ++i) print_human(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

void emit(const Config& cfg, Json report, std::ostream& out) {
  if (cfg.format == "human") {
    print_human(report, "", out);
    out << "generated: " << timestamp() << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
}

Json envelope(const std::string& command) {
  return Json{{"schema", "mthv-report"}, {"schema_version", kSchemaVersion}, {"tool_version", kToolVersion},
              {"command", command}};
}

void add_module_flags(CLI::App* sub, ModuleFlags& m) {
  sub->add_option("--c", m.c, "central charge c (exact fraction)");
  sub->add_option("--h", m.h, "highest weight h");
  sub->add_option("--l", m.l, "Heisenberg level l");
  sub->add_option("--alpha", m.alpha, "alpha of the intermediate series module");
  sub->add_option("--beta", m.beta, "beta of the intermediate series module");
  sub->add_option("--gamma", m.gamma, "gamma of A(alpha,beta,gamma)");
}

void add_search_flags(CLI::App* sub, Config& cfg) {
  sub->add_option("--level-bound", cfg.level_bound, "highest level searched for singular vectors");
  sub->add_option("--rs-bound", cfg.rs_bound, "bound on r and s in the Kac scan");
  sub->add_option("--cache-dir", cfg.cache_dir, "singular vector cache (default: $MTHV_CACHE_DIR)");
  sub->add_flag("--recheck", cfg.recheck, "re-verify cached singular vectors");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Highest weight modules over the mirror-twisted Heisenberg-Virasoro algebra", "mthv"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", kToolVersion);

  auto common = [&](CLI::App* sub) {
    add_module_flags(sub, cfg.m);
    sub->add_option("--format", cfg.format, "json (default, deterministic) or human")
        ->check(CLI::IsMember({"json", "human"}));
    return sub;
  };
  auto kind_flag = [&](CLI::App* sub) {
    sub->add_option("--kind", cfg.m.kind, "A or Aprime")->check(CLI::IsMember({"A", "Aprime"}));
  };

  auto* bracket = common(app.add_subcommand("bracket", "commutator [x, y] in canonical form"));
  bracket->add_option("--x", cfg.x, "left element")->required();
  bracket->add_option("--y", cfg.y, "right element")->required();

  auto* straighten = common(app.add_subcommand("straighten", "PBW normal form of an expression"));
  straighten->add_option("--expr", cfg.exprs, "expression")->required()->expected(1);

  auto* rho = common(app.add_subcommand("rho", "rho_n of an element of U(D^-) as polynomials in n"));
  rho->add_option("--expr", cfg.exprs, "expression")->required()->expected(1);
  rho->add_option("--n", cfg.n, "also evaluate at this n");

  auto* roots = common(app.add_subcommand("roots", "zeros of rho_n in Z/2 and their intersection"));
  roots->add_option("--expr", cfg.exprs, "expression (repeatable)")->required();

  auto* singular = common(app.add_subcommand("singular", "singular vectors of M(c,h,l) at one level"));
  singular->add_option("--level", cfg.level, "level (multiple of 1/2)")->required();
  singular->add_option("--modulo", cfg.modulo, "work modulo the submodule generated by these (repeatable)");

  auto* maxsub = common(app.add_subcommand("maxsub", "generators of the maximal submodule of M(c,h,l)"));
  add_search_flags(maxsub, cfg);

  auto* irreducible = common(app.add_subcommand("irreducible", "irreducibility of L(c,h,l) (x) A"));
  kind_flag(irreducible);
  add_search_flags(irreducible, cfg);

  auto* filtration = common(app.add_subcommand("filtration", "submodule chain of L(c,h,l) (x) A(alpha,beta,gamma)"));
  add_search_flags(filtration, cfg);

  auto* iso = common(app.add_subcommand("iso", "isomorphism test between two tensor modules"));
  kind_flag(iso);
  iso->add_option("--c1", cfg.c1, "c of the second module (defaults to --c)");
  iso->add_option("--h1", cfg.h1, "h of the second module");
  iso->add_option("--l1", cfg.l1, "l of the second module");
  iso->add_option("--alpha1", cfg.alpha1, "alpha of the second module");
  iso->add_option("--beta1", cfg.beta1, "beta of the second module");
  iso->add_option("--gamma1", cfg.gamma1, "gamma of the second module");
  iso->add_option("--kind1", cfg.kind1, "kind of the second module")->check(CLI::IsMember({"A", "Aprime"}));

  auto* verify = common(app.add_subcommand("verify", "run the built-in identity suites"));
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", cfg.suite, "suite name or all")->check(CLI::IsMember(suite_choices));
  verify->add_option("--seed", cfg.seed, "random seed");
  verify->add_option("--level-cap", cfg.level_cap, "membership level cap");
  verify->add_option("--shift-cap", cfg.shift_cap, "membership shift cap");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  Json report = envelope(cfg.command);
  Runner runner(cfg, err);
  int code = kOk;
  try {
    report["config"] = runner.config_json();
    report["result"] = runner.execute();
    if (runner.failed()) code = kInternal;
  } catch (const Inconclusive& inc) {
    report["result"] = inc.result;
    code = kInconclusive;
  } catch (const InconclusiveError& e) {
    report["error"] = Json{{"kind", "inconclusive"}, {"message", e.what()}};
    err << "inconclusive: " << e.what() << "\n";
    code = kInconclusive;
  } catch (const std::invalid_argument& e) {
    report["error"] = Json{{"kind", "invalid-input"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
    code = kInvalidInput;
  } catch (const std::domain_error& e) {
    report["error"] = Json{{"kind", "invalid-input"}, {"message", e.what()}};
    err << "error: " << e.what() << "\n";
    code = kInvalidInput;
  } catch (const std::exception& e) {
    report["error"] = Json{{"kind", "internal"}, {"message", e.what()}};
    err << "internal error: " << e.what() << "\n";
    code = kInternal;
  }
  report["provenance"] = runner.provenance();
  report["exit_code"] = code;
  emit(cfg, report, out);
  return code;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace mthv::cli
