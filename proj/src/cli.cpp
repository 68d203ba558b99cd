#include "hecke/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "hecke/cmspace.hpp"
#include "hecke/daha.hpp"
#include "hecke/degen.hpp"
#include "hecke/poisson.hpp"

namespace hecke {

namespace {

const std::set<std::string> kSubcommands = {"verify", "cm-map", "z-spec", "chart",
                                            "jordan", "poisson", "dunkl", "dual-trig"};

Rational parse_param(const std::string &name, const std::string &s) {
  try {
    return Rational::parse(s);
  } catch (const MathError &e) {
    throw ConfigError(name + ": " + e.what());
  }
}

struct Trial {
  json input;
  RelationReport checks;
};

json load_input(const RunConfig &cfg) {
  if (!cfg.input_path) return nullptr;
  std::ifstream in(*cfg.input_path);
  if (!in) throw ConfigError("cannot open input file " + *cfg.input_path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError("input file is not valid JSON");
  return j;
}

Vec vec_from_json(const json &j, const char *what) {
  if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array of \"p/q\" strings");
  Vec v;
  for (const auto &x : j) {
    try {
      v.push_back(rational_from_json(x));
    } catch (const MathError &e) {
      throw ConfigError(std::string(what) + ": " + e.what());
    }
  }
  return v;
}

std::vector<Character> characters(const RunConfig &cfg, const json &input, const Rational &tau) {
  std::vector<Character> out;
  if (!input.is_null()) {
    if (!input.contains("characters")) throw ConfigError("input needs a \"characters\" list");
    for (const auto &c : input["characters"]) {
      try {
        out.push_back(Character::make(vec_from_json(c.at("mu"), "mu"), vec_from_json(c.at("nu"), "nu")));
      } catch (const MathError &e) {
        throw ConfigError(std::string("character: ") + e.what());
      } catch (const json::exception &e) {
        throw ConfigError(std::string("character: ") + e.what());
      }
      if (static_cast<int>(out.back().nu.size()) != cfg.n) throw ConfigError("character length differs from --n");
    }
    return out;
  }
  Rng base(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    Rng r = base.split(k);
    out.push_back(Character::random(cfg.n, tau, r));
  }
  return out;
}

json character_json(const Character &c) { return {{"mu", to_json(c.mu)}, {"nu", to_json(c.nu)}}; }

void tag(RelationReport &dst, const RelationReport &src, const std::string &suffix = "") {
  for (auto c : src) {
    c.id += suffix;
    dst.push_back(std::move(c));
  }
}

std::vector<Trial> run_daha(const RunConfig &cfg, const Rational &tau, const json &input) {
  if (cfg.n < 1 || cfg.n > 5) throw ConfigError("n out of range");
  DahaParams p;
  try {
    p = DahaParams::make(cfg.n, tau);
  } catch (const MathError &e) {
    throw ConfigError(e.what());
  }
  std::vector<Trial> trials;
  for (const auto &chi : characters(cfg, input, tau)) {
    RepBundle rep = build_rep(p, chi);
    Trial t{character_json(chi), {}};
    if (cfg.subcommand == "verify") {
      t.checks = verify_relations(rep);
    } else if (cfg.subcommand == "cm-map") {
      auto c = cm_map(rep);
      t.checks = c.checks;
      t.input["xbar"] = to_json(c.xbar);
      t.input["ybar"] = to_json(c.ybar);
    } else {
      if (cfg.n < 2) throw ConfigError("z-spec needs n >= 2");
      auto z = z_element(rep);
      t.checks = z.checks;
      if (z.spectrum) t.input["spectrum"] = to_json(*z.spectrum);
    }
    trials.push_back(std::move(t));
  }
  if (cfg.subcommand == "z-spec") {
    // group-algebra companion: 2 sum s_{1i} has spectrum (2(n-1), -2, ..., -2)
    auto s = tau1_companion_spectrum(cfg.n);
    std::vector<Rational> expected(cfg.n - 1, Rational(-1));
    expected.push_back(Rational(cfg.n - 1));
    Trial t{{{"companion", "tau=1"}}, {}};
    json w = {{"expected", to_json(expected)}};
    if (s) w["got"] = to_json(*s);
    t.checks.push_back(check_flag("z:tau1-companion", {cfg.n}, s && *s == expected, w));
    trials.push_back(std::move(t));
  }
  return trials;
}

Matrix random_unimodular(std::size_t n, Rng &rng) {
  // product of a unit lower and a unit upper triangular matrix
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = Rational(rng.uniform(-3, 3));
      u(j, i) = Rational(rng.uniform(-3, 3));
    }
  return l * u;
}

CMCoords random_coords(int n, const Rational &tau, Rng &rng) {
  while (true) {
    CMCoords c{Vec(n), Vec(n)};
    for (int i = 0; i < n; ++i) {
      c.lambda[i] = rng.nonzero_rational();
      c.q[i] = rng.nonzero_rational();
    }
    try {
      point_from_coords(tau, c);
      return c;
    } catch (const MathError &) {
    }
  }
}

CMCoords sorted(const CMCoords &c) {
  std::vector<std::size_t> idx(c.lambda.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return c.lambda[a] < c.lambda[b]; });
  CMCoords s;
  for (auto i : idx) {
    s.lambda.push_back(c.lambda[i]);
    s.q.push_back(c.q[i]);
  }
  return s;
}

std::vector<Trial> run_chart(const RunConfig &cfg, const Rational &tau) {
  if (cfg.n < 1 || cfg.n > 6) throw ConfigError("n out of range");
  if (tau.is_zero() || tau == Rational(1) || tau == Rational(-1)) throw ConfigError("tau must avoid 0, 1, -1");
  std::vector<Trial> trials;
  Rng base(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    Rng rng = base.split(k);
    CMCoords c = random_coords(cfg.n, tau, rng);
    CMPoint p = point_from_coords(tau, c);
    Trial t{to_json(c), {}};
    t.checks.push_back(check_flag("eq:CMeq", {cfg.n}, p.satisfies_cmeq()));
    CMPoint moved = conjugate(p, random_unimodular(cfg.n, rng));
    t.checks.push_back(check_flag("eq:CMeq/conjugated", {cfg.n}, moved.satisfies_cmeq()));
    CMCoords back = canonicalize(moved);
    CMCoords want = sorted(c);
    t.checks.push_back(check_flag("prop:propcoor-roundtrip", {cfg.n},
                                  back.lambda == want.lambda && back.q == want.q,
                                  {{"got", to_json(back)}, {"want", to_json(want)}}));
    CMPoint e = epsilon_cm(p);
    t.checks.push_back(check_flag("eps:CMeq-inverse-tau", {cfg.n}, e.satisfies_cmeq() && e.tau == tau.inv()));
    CMPoint ee = epsilon_cm(e);
    t.checks.push_back(check_flag("eps:involution", {cfg.n}, ee.X == p.X && ee.Y == p.Y));
    t.checks.push_back(check_flag("cm:free-action", {cfg.n}, joint_commutant_dim(p.X, p.Y) == 1));
    trials.push_back(std::move(t));
  }
  return trials;
}

std::vector<Trial> run_jordan(const RunConfig &cfg, const Rational &tau) {
  if (cfg.n < 1 || cfg.n > 5) throw ConfigError("n out of range");
  if (tau.is_zero() || tau == Rational(1) || tau == Rational(-1)) throw ConfigError("tau must avoid 0, 1, -1");
  std::vector<Trial> trials;
  Rng base(cfg.seed);
  std::size_t index = 0;
  for (int size = 1; size <= cfg.n; ++size)
    for (const auto &shape : jordan_shapes(size)) {
      Rng rng = base.split(index++);
      JordanData d;
      while (true) {
        d.entries.clear();
        for (const auto &strings : shape) d.entries.push_back({rng.nonzero_rational(), strings});
        try {
          d.validate(tau);
          break;
        } catch (const MathError &) {
        }
      }
      Trial t{to_json(d), {}};
      Matrix j = jordan_matrix(d, tau);
      std::size_t bf = ker_dim_bruteforce(j, tau), fm = ker_dim_formula(d);
      t.checks.push_back(check_flag("lemma:kerSJ-dim", {size}, bf == fm, {{"formula", fm}, {"bruteforce", bf}}));
      for (const auto &e : d.entries) {
        for (const auto &part : e.strings) {
          std::size_t sf = stab_dim_formula(part), sb = stab_dim_bruteforce(part, e.lambda);
          t.checks.push_back(check_flag("lemma:stab-dim", part, sf == sb, {{"formula", sf}, {"bruteforce", sb}}));
        }
        if (d.entries.size() == 1) {
          auto iq = ineq_check(e);
          t.checks.push_back(check_flag("lemma:ineq", {size}, iq.positive, {{"lhs", iq.lhs}}));
        }
      }
      trials.push_back(std::move(t));
    }
  return trials;
}

std::vector<Trial> run_poisson(const RunConfig &cfg, const Rational &tau, const json &input) {
  if (cfg.n < 1 || cfg.n > 6) throw ConfigError("n out of range");
  if (tau.is_zero() || tau == Rational(1) || tau == Rational(-1)) throw ConfigError("tau must avoid 0, 1, -1");
  std::vector<Character> pts;
  if (!input.is_null()) {
    pts = characters(cfg, input, tau);
  } else {
    Rng base(cfg.seed);
    for (int k = 0; k < cfg.trials; ++k) {
      Rng r = base.split(k);
      pts.push_back(Character::random(cfg.n, tau, r));
    }
  }
  std::vector<Trial> trials;
  for (const auto &c : pts) {
    Trial t{{{"nu", to_json(c.nu)}, {"mu", to_json(c.mu)}}, {}};
    auto m = poisson_match(tau, c.nu, c.mu);
    t.checks.push_back(check_flag("thm:poisson-FR", {cfg.n}, m.match, m.witness));
    auto b = chain_rule_brackets(tau, c.nu, c.mu);
    t.checks.push_back(check_flag("poisson:antisymmetry", {cfg.n},
                                  antisymmetric(b.LL) && antisymmetric(b.QQ)));
    auto q = q_jets(tau, c.nu, c.mu);
    Matrix want(cfg.n, cfg.n);
    for (int i = 0; i < cfg.n; ++i) want(i, i) = c.nu[i] * q[i].value();
    t.checks.push_back(check_equal("poisson:lambda-q-diagonal", {cfg.n}, b.LQ, want));
    t.input["QQ"] = to_json(b.QQ);
    trials.push_back(std::move(t));
  }
  return trials;
}

std::vector<Trial> run_dunkl(const RunConfig &cfg) {
  if (cfg.n < 1 || cfg.n > 5) throw ConfigError("n out of range");
  if (cfg.degree_bound < 1) throw ConfigError("degree_bound must be >= 1");
  Rational t = parse_param("t", cfg.t), c = parse_param("c", cfg.c);
  std::vector<Flavor> flavors;
  if (cfg.flavor == "rational" || cfg.flavor == "both") flavors.push_back(Flavor::rational);
  if (cfg.flavor == "trig" || cfg.flavor == "both") flavors.push_back(Flavor::trigonometric);
  if (flavors.empty()) throw ConfigError("flavor must be rational, trig or both");
  std::vector<Trial> trials;
  for (auto f : flavors) {
    DegenParams p{cfg.n, t, c, f};
    Trial tr{{{"flavor", f == Flavor::rational ? "rational" : "trig"}}, {}};
    tag(tr.checks, verify_degenerate_relations(p, cfg.degree_bound));
    if (f == Flavor::trigonometric)
      tag(tr.checks, verify_degenerate_relations(p, cfg.degree_bound, RelationList::consistent_core));
    trials.push_back(std::move(tr));
  }
  return trials;
}

std::vector<Trial> run_dual(const RunConfig &cfg) {
  if (cfg.n < 1 || cfg.n > 4) throw ConfigError("n out of range");
  Rational c = parse_param("c", cfg.c);
  std::vector<Trial> trials;
  Rng base(cfg.seed);
  for (int k = 0; k < cfg.trials; ++k) {
    Rng rng = base.split(k);
    Vec alpha(cfg.n), beta(cfg.n);
    while (true) {
      for (int i = 0; i < cfg.n; ++i) {
        alpha[i] = rng.nonzero_rational();
        beta[i] = rng.rational();
      }
      std::set<std::string> seen;
      for (auto &b : beta) seen.insert(b.str());
      if (static_cast<int>(seen.size()) == cfg.n) break;
    }
    auto rep = trig_dual_rep(cfg.n, c, alpha, beta);
    Trial t{{{"alpha", to_json(alpha)}, {"beta", to_json(beta)}}, {}};
    tag(t.checks, verify_dual_relations(rep));
    tag(t.checks, verify_dual_relations(rep, RelationList::consistent_core));
    trials.push_back(std::move(t));
  }
  return trials;
}

json params_echo(const RunConfig &cfg) {
  json p = {{"n", cfg.n}, {"seed", cfg.seed}, {"trials", cfg.trials}};
  if (cfg.subcommand == "dunkl") {
    p["t"] = cfg.t;
    p["c"] = cfg.c;
    p["degree_bound"] = cfg.degree_bound;
    p["flavor"] = cfg.flavor;
  } else if (cfg.subcommand == "dual-trig") {
    p["c"] = cfg.c;
  } else {
    p["tau"] = cfg.tau;
  }
  if (cfg.input_path) p["input"] = *cfg.input_path;
  return p;
}

}  // namespace

RunResult run(const RunConfig &cfg) {
  RunResult res;
  std::vector<Trial> trials;
  try {
    if (!kSubcommands.count(cfg.subcommand)) throw ConfigError("unknown subcommand '" + cfg.subcommand + "'");
    if (cfg.trials < 0) throw ConfigError("trials must be >= 0");
    const std::string &s = cfg.subcommand;
    if (s == "dunkl") {
      trials = run_dunkl(cfg);
    } else if (s == "dual-trig") {
      trials = run_dual(cfg);
    } else {
      Rational tau = parse_param("tau", cfg.tau);
      json input = load_input(cfg);
      if (s == "verify" || s == "cm-map" || s == "z-spec") trials = run_daha(cfg, tau, input);
      else if (s == "chart") trials = run_chart(cfg, tau);
      else if (s == "jordan") trials = run_jordan(cfg, tau);
      else trials = run_poisson(cfg, tau, input);
    }
  } catch (const ConfigError &e) {
    res.exit_code = 2;
    res.error = e.what();
    return res;
  } catch (const MathError &e) {
    res.exit_code = 2;
    res.error = e.what();
    return res;
  }

  std::size_t total = 0, failed = 0;
  json jt = json::array();
  for (std::size_t k = 0; k < trials.size(); ++k) {
    total += trials[k].checks.size();
    failed += count_failures(trials[k].checks);
    jt.push_back({{"index", k}, {"input", trials[k].input}, {"checks", to_json(trials[k].checks)}});
  }
  res.report = {{"schema", "hecke-report/1"},
                {"subcommand", cfg.subcommand},
                {"params", params_echo(cfg)},
                {"trials", jt},
                {"summary", {{"total", total}, {"failed", failed}, {"pass", failed == 0}}}};
  res.exit_code = failed == 0 ? 0 : 1;
  if (cfg.output_path) {
    std::ofstream out(*cfg.output_path);
    if (!out) {
      res.exit_code = 2;
      res.error = "cannot write " + *cfg.output_path;
      return res;
    }
    out << res.report.dump(2) << "\n";
  }
  return res;
}

namespace {

bool has_float(const json &j) {
  if (j.is_number_float()) return true;
  if (j.is_structured())
    for (const auto &x : j)
      if (has_float(x)) return true;
  return false;
}

bool valid_check(const json &c) {
  if (!c.is_object() || !c.contains("id") || !c["id"].is_string()) return false;
  if (!c.contains("instance") || !c["instance"].is_array()) return false;
  for (const auto &i : c["instance"])
    if (!i.is_number_integer()) return false;
  if (!c.contains("pass") || !c["pass"].is_boolean()) return false;
  return c["pass"].get<bool>() != c.contains("witness");
}

}  // namespace

bool report_schema_validate_text(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return false;
  if (has_float(j)) return false;
  if (j.value("schema", "") != "hecke-report/1") return false;
  if (!j.contains("subcommand") || !j["subcommand"].is_string() || !kSubcommands.count(j["subcommand"].get<std::string>()))
    return false;
  if (!j.contains("params") || !j["params"].is_object()) return false;
  if (!j.contains("trials") || !j["trials"].is_array()) return false;
  std::size_t total = 0, failed = 0;
  for (const auto &t : j["trials"]) {
    if (!t.is_object() || !t.contains("index") || !t["index"].is_number_integer()) return false;
    if (!t.contains("checks") || !t["checks"].is_array()) return false;
    for (const auto &c : t["checks"]) {
      if (!valid_check(c)) return false;
      ++total;
      if (!c["pass"].get<bool>()) ++failed;
    }
  }
  const json &s = j.value("summary", json());
  if (!s.is_object() || !s.contains("total") || !s.contains("failed") || !s.contains("pass")) return false;
  if (!s["total"].is_number_integer() || !s["failed"].is_number_integer() || !s["pass"].is_boolean()) return false;
  return s["total"].get<std::size_t>() == total && s["failed"].get<std::size_t>() == failed &&
         s["pass"].get<bool>() == (failed == 0);
}

bool report_schema_validate(const std::string &path) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  return report_schema_validate_text(ss.str());
}

}  // namespace hecke
