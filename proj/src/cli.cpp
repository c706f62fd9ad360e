#include "rrcf/cli.hpp"

#include "rrcf/catalog.hpp"
#include "rrcf/errors.hpp"
#include "rrcf/invariants.hpp"
#include "rrcf/qseries.hpp"
#include "rrcf/recognition.hpp"
#include "rrcf/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace rrcf::cli {

using nlohmann::json;

std::string format_value(const Real& x, int sig) {
  if (x.is_zero()) return "0";
  const double e = std::floor(x.log10_abs());
  if (e >= -5 && e < 20) return x.to_fixed(std::max(0, sig - 1 - static_cast<int>(e)));
  return x.to_sci(sig);
}

namespace {

struct RunConfig {
  int digits = 300;
  int guard = 50;
  bool json = false;
  std::optional<std::uint64_t> seed;
  std::string out;
  int jobs = 1;

  PrecisionCtx ctx() const { return PrecisionCtx(digits, guard); }
  int shown_digits() const { return digits - guard; }
};

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--digits", cfg.digits, "decimal digits of the result")->check(CLI::Range(50, 1000000));
  sub->add_option("--guard", cfg.guard, "guard digits")->check(CLI::Range(20, 100000));
  sub->add_flag("--json", cfg.json, "machine-readable output");
  sub->add_option("--out", cfg.out, "also write JSON lines to this file");
  sub->add_option("--seed", cfg.seed, "seed for randomised checks");
  sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1, 256));
}

/// Appends JSON lines to --out when given.
class OutFile {
 public:
  explicit OutFile(const std::string& path) {
    if (!path.empty()) {
      f_.open(path, std::ios::app);
      if (!f_) throw PreconditionError("cannot open '" + path + "' for writing");
    }
  }
  void write(const json& j) {
    if (f_.is_open()) f_ << j.dump() << '\n' << std::flush;
  }

 private:
  std::ofstream f_;
};

int exit_for(const std::vector<Verdict>& verdicts) {
  int code = kOk;
  for (Verdict v : verdicts) {
    if (v == Verdict::Refuted) return kRefuted;
    if (v == Verdict::Inconclusive) code = kInconclusive;
  }
  return code;
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "  " << c.claim_id << ": " << to_string(c.verdict) << "  residual " << c.residual_lo.to_sci(3) << " @"
      << c.digits_lo << " -> " << c.residual_hi.to_sci(3) << " @" << c.digits_hi << '\n';
}

// ---------------------------------------------------------------------------
// eval

const std::vector<std::string> kEvalFns{"f", "theta2", "theta3", "R", "lambda-star", "lambda", "J", "G", "g"};

Real eval_fn(const std::string& fn, const SurdArg& r, const PrecisionCtx& ctx) {
  if (fn == "f") return eval_f_neg_q(r, ctx);
  if (fn == "theta2") return eval_theta2(nome(r, ctx), ctx);
  if (fn == "theta3") return eval_theta3(nome(r, ctx), ctx);
  if (fn == "R") return eval_R_product(r, ctx);
  if (fn == "lambda-star") return lambda_star(r, ctx);
  if (fn == "lambda") return lambda_of_tau(r, ctx);
  if (fn == "J") return klein_J(r, ctx);
  if (fn == "G") return ramanujan_G(r, ctx);
  if (fn == "g") return ramanujan_g(r, ctx);
  throw PreconditionError("unknown function '" + fn + "'");
}

int cmd_eval(const RunConfig& cfg, const std::string& fn, const std::string& arg, std::ostream& out) {
  const SurdArg r = SurdArg::parse(arg);
  const Real v = eval_fn(fn, r, cfg.ctx());
  const std::string text = format_value(v, cfg.shown_digits());
  const json j{{"fn", fn}, {"arg", r.str()}, {"digits", cfg.shown_digits()}, {"value", text}};
  if (cfg.json) {
    out << j.dump() << '\n';
  } else {
    out << fn << "(" << r.str() << ") = " << text << '\n';
  }
  OutFile(cfg.out).write(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// recognize

struct RecognizeOpts {
  std::string yi;
  std::vector<std::string> eval;
  std::string literal;
  std::string file;
  int degree = 8;
  int height = 0;
  std::string basis;
  long denom_cap = 10000;
};

std::vector<long> parse_basis(const std::string& text) {
  std::vector<long> b;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      b.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw PreconditionError("bad basis element '" + tok + "'");
    }
  }
  return b;
}

std::string read_decimal_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot read '" + path + "'");
  std::string s, line;
  while (std::getline(f, line)) {
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
  }
  return s;
}

int cmd_recognize(const RunConfig& cfg, const RecognizeOpts& o, std::ostream& out) {
  const PrecisionCtx ctx = cfg.ctx();
  const int sources = !o.yi.empty() + !o.eval.empty() + !o.literal.empty() + !o.file.empty();
  if (sources != 1) throw PreconditionError("give exactly one of --yi, --eval, --literal, --file");

  json j;
  if (!o.yi.empty()) {
    const YiResult res = yi_recognize(SurdArg::parse(o.yi), ctx);
    j = res.to_json();
    j["verdict"] = res.recognized() ? "recognized" : "none";
    j["s"] = format_value(res.s, cfg.shown_digits());
    if (cfg.json) {
      out << j.dump() << '\n';
    } else {
      out << "s_" << res.n.str() << " = " << format_value(res.s, 30) << "...\n";
      if (res.closed_form) out << "s = " << *res.closed_form << '\n';
      if (res.s_field) out << "s (field) = " << res.s_field->to_string() << '\n';
      if (res.a_field) out << "a = " << res.a_field->to_string() << '\n';
      if (res.s_minpoly) out << "minpoly(s) = " << res.s_minpoly->poly.to_string() << '\n';
      if (!res.recognized()) out << "none\n";
    }
    OutFile(cfg.out).write(j);
    return kOk;
  }

  // A decimal literal cannot be recomputed at higher precision, so it takes
  // the single-precision path and its candidates stay provisional.
  RealSource src;
  std::optional<Real> literal;
  json source;
  if (!o.eval.empty()) {
    if (o.eval.size() != 2) throw PreconditionError("--eval takes FN ARG");
    const std::string fn = o.eval[0];
    const SurdArg r = SurdArg::parse(o.eval[1]);
    if (std::find(kEvalFns.begin(), kEvalFns.end(), fn) == kEvalFns.end()) {
      throw PreconditionError("unknown function '" + fn + "'");
    }
    src = [fn, r](const PrecisionCtx& c) { return eval_fn(fn, r, c); };
    source = {{"eval", fn}, {"arg", r.str()}};
  } else {
    const std::string text = o.literal.empty() ? read_decimal_file(o.file) : o.literal;
    literal = Real(text, ctx.working_bits());
    source = {{"literal", text}};
  }

  j = {{"source", source}, {"digits", ctx.digits}};
  bool found = false;
  std::string human;
  if (!o.basis.empty()) {
    const auto basis = parse_basis(o.basis);
    const auto fe = literal ? recognize_in_field(*literal, basis, o.denom_cap, ctx)
                            : recognize_in_field(src, basis, o.denom_cap, ctx);
    if (fe) {
      found = true;
      j["field_element"] = fe->to_json();
      human = fe->to_string();
    }
  } else {
    const auto cand = literal ? recognize_minpoly(*literal, o.degree, o.height, ctx)
                              : recognize_minpoly(src, o.degree, o.height, ctx);
    if (cand) {
      found = true;
      j["candidate"] = cand->to_json();
      human = cand->poly.to_string() + "  (real root " + std::to_string(cand->root_index) + " of " +
              std::to_string(cand->real_root_count) + ", " + to_string(cand->confidence) + ")";
    }
  }
  j["verdict"] = found ? "recognized" : "none";
  if (cfg.json) {
    out << j.dump() << '\n';
  } else {
    out << (found ? human : std::string("none")) << '\n';
  }
  OutFile(cfg.out).write(j);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string target;
  std::vector<std::string> args;
  std::vector<std::string> q;
  int count = 5;
  std::string perturb;
};

/// q drawn uniformly from (1e-3, 0.6) as an exact 12-digit decimal.
std::vector<Real> random_nomes(std::uint64_t seed, int count, mpfr_prec_t bits) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1'000'000'000L, 600'000'000'000L);
  std::vector<Real> qs;
  for (int i = 0; i < count; ++i) {
    qs.emplace_back(mpq_class(mpz_class(dist(rng)), mpz_class("1000000000000")), bits);
  }
  return qs;
}

RealSource perturbed(RealSource s, const std::string& eps) {
  if (eps.empty()) return s;
  return [s, eps](const PrecisionCtx& c) {
    Real v = s(c);
    return v + v * Real(eps, v.bits());
  };
}

int cmd_verify(const RunConfig& cfg, const VerifyOpts& o, std::ostream& out) {
  const PrecisionCtx ctx = cfg.ctx();
  std::vector<Certificate> certs;
  if (o.target == "identities") {
    std::vector<Real> qs;
    for (const auto& t : o.q) qs.emplace_back(t, ctx.working_bits());
    if (qs.empty()) qs = random_nomes(cfg.seed.value_or(1), o.count, ctx.working_bits());
    for (const auto& q : qs) {
      const RealSource src = perturbed(exact_value(q), o.perturb);
      const std::string tag = "@" + q.to_sci(12);
      certs.push_back(check_companion(src, ctx, "companion" + tag));
      certs.push_back(check_recursions(src, ctx, "recursions" + tag));
    }
  } else if (o.target == "order25") {
    std::vector<std::int64_t> ns;
    for (const auto& a : o.args) ns.push_back(std::stoll(a));
    if (ns.empty()) ns = {130, 190, 240};
    for (auto n : ns) {
      auto [alpha, beta] = order25_sources(n);
      certs.push_back(check_order25(alpha, perturbed(beta, o.perturb), ctx, "order25@" + std::to_string(n)));
    }
  } else if (o.target == "icosahedral") {
    if (o.args.size() != 2) throw PreconditionError("icosahedral takes R_VALUE LAMBDA_VALUE (decimals)");
    const RealSource r = perturbed(exact_value(Real(o.args[0], ctx.working_bits())), o.perturb);
    const RealSource l = exact_value(Real(o.args[1], ctx.working_bits()));
    certs.push_back(check_icosahedral(r, l, ctx));
  } else {
    throw PreconditionError("unknown verify target '" + o.target + "'");
  }

  OutFile file(cfg.out);
  std::vector<Verdict> verdicts;
  for (const auto& c : certs) {
    verdicts.push_back(c.verdict);
    file.write(c.to_json());
    if (cfg.json) {
      out << c.to_json().dump() << '\n';
    } else {
      print_certificate(out, c);
    }
  }
  return exit_for(verdicts);
}

// ---------------------------------------------------------------------------
// reproduce

int cmd_reproduce(const RunConfig& cfg, const std::string& which, std::ostream& out) {
  std::vector<TheoremId> ids;
  if (which == "all") {
    ids = all_theorems();
  } else {
    try {
      ids.push_back(theorem_id_from_string(which));
    } catch (const DomainError& e) {
      throw PreconditionError(e.what());
    }
  }

  std::vector<std::optional<TheoremBundle>> bundles(ids.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < ids.size(); i = next++) bundles[i] = reproduce_theorem(ids[i], cfg.ctx());
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(cfg.jobs, static_cast<int>(ids.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  OutFile file(cfg.out);
  std::vector<Verdict> verdicts;
  for (const auto& b : bundles) {
    verdicts.push_back(b->verdict);
    file.write(b->to_json());
    if (cfg.json) {
      out << b->to_json().dump() << '\n';
      continue;
    }
    out << to_string(b->id) << ": " << to_string(b->verdict);
    if (!b->failing_stage.empty()) out << " (failing stage " << b->failing_stage << ")";
    out << '\n';
    for (const auto& c : b->stages) print_certificate(out, c);
    if (b->final_residual) out << "  |R^5 - (sqrt(a^2+1) - a)| = " << b->final_residual->to_sci(3) << '\n';
  }
  return exit_for(verdicts);
}

// ---------------------------------------------------------------------------
// search

struct SearchOpts {
  std::string nums = "1:40";
  std::vector<long> dens{5};
};

std::pair<long, long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const long v = std::stol(text);
      return {v, v};
    }
    return {std::stol(text.substr(0, colon)), std::stol(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw PreconditionError("bad range '" + text + "', expected A:B or A");
  }
}

std::string search_key(long n, long d) { return std::to_string(n) + "/" + std::to_string(d); }

std::set<std::string> existing_keys(const std::string& path) {
  std::set<std::string> keys;
  std::ifstream f(path);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      if (j.value("status", "") != "error") keys.insert(j.at("key").get<std::string>());
    } catch (const std::exception&) {
      // A torn final line from an interrupted run is re-done.
    }
  }
  return keys;
}

json search_one(long n, long d, const PrecisionCtx& ctx) {
  const SurdArg r(n, d);
  json j{{"key", search_key(n, d)}, {"n", n}, {"d", d}};
  try {
    const SurdArg yn = r.scaled(5, 4);
    const YiResult res = yi_recognize(yn, ctx);
    j["yi_n"] = yn.str();
    j["recognized"] = res.recognized();
    if (res.closed_form) j["form"] = *res.closed_form;
    if (res.s_field) j["s_field"] = res.s_field->to_string();
    if (res.a_field) j["a_field"] = res.a_field->to_string();
    if (res.s_minpoly) j["s_minpoly"] = res.s_minpoly->poly.to_string();
    std::string status = "none";
    if (res.recognized()) {
      status = "numerically-supported";
      for (const auto& e : Catalog::builtin().entries()) {
        if (e.kind == CatalogKind::R5 && e.arg.value() == r.value() && e.status == CatalogStatus::Established) {
          status = "established";
        }
      }
    }
    j["status"] = status;
  } catch (const std::exception& e) {
    j["recognized"] = false;
    j["status"] = "error";
    j["error"] = e.what();
  }
  return j;
}

int cmd_search(const RunConfig& cfg, const SearchOpts& o, std::ostream& out) {
  const std::string path = cfg.out.empty() ? "search_results.jsonl" : cfg.out;
  const auto [lo, hi] = parse_range(o.nums);
  const std::set<std::string> done = existing_keys(path);
  std::vector<std::pair<long, long>> todo;
  for (long d : o.dens) {
    if (d <= 0) throw PreconditionError("denominators must be positive");
    for (long n = lo; n <= hi; ++n) {
      if (n > 0 && !done.count(search_key(n, d))) todo.emplace_back(n, d);
    }
  }

  std::ofstream file(path, std::ios::app);
  if (!file) throw PreconditionError("cannot open '" + path + "' for writing");
  std::mutex write_mu;
  std::atomic<size_t> next{0};
  size_t recognized = 0;
  auto worker = [&] {
    for (size_t i = next++; i < todo.size(); i = next++) {
      const json j = search_one(todo[i].first, todo[i].second, cfg.ctx());
      std::lock_guard<std::mutex> lock(write_mu);
      file << j.dump() << '\n' << std::flush;
      if (j.value("recognized", false)) ++recognized;
      if (cfg.json) {
        out << j.dump() << '\n';
      } else if (j.value("recognized", false)) {
        out << j["key"].get<std::string>() << ": " << j["status"].get<std::string>();
        if (j.contains("a_field")) out << "  a = " << j["a_field"].get<std::string>();
        out << '\n';
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(cfg.jobs, static_cast<int>(todo.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (!cfg.json) {
    out << todo.size() << " evaluated, " << done.size() << " already present, " << recognized << " recognized; results in "
        << path << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// catalog

int cmd_catalog(const RunConfig& cfg, bool check, std::ostream& out) {
  const Catalog& cat = Catalog::builtin();
  if (!check) {
    out << cat.to_json().dump(cfg.json ? -1 : 2) << '\n';
    return kOk;
  }
  bool all_expected = true;
  for (const auto& e : cat.entries()) {
    const CatalogCheck c = check_entry(e, cfg.ctx());
    all_expected = all_expected && c.as_expected;
    if (cfg.json) {
      out << json{{"name", c.name},
                  {"status", to_string(e.status)},
                  {"relative_error", c.relative_error.to_sci(6)},
                  {"matches", c.matches},
                  {"as_expected", c.as_expected}}
                 .dump()
          << '\n';
    } else {
      out << e.name << ": " << (c.matches ? "matches" : "differs") << " (" << to_string(e.status)
          << ", relative error " << c.relative_error.to_sci(3) << ")" << (c.as_expected ? "" : "  UNEXPECTED")
          << '\n';
    }
  }
  return all_expected ? kOk : kRefuted;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rogers-Ramanujan continued fraction evaluations: compute, recognise, certify", "rrcf"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* eval = app.add_subcommand("eval", "evaluate a q-series or modular function at q = exp(-pi sqrt(r))");
  std::string fn, arg;
  eval->add_option("fn", fn, "f, theta2, theta3, R, lambda-star, lambda, J, G, g")
      ->required()
      ->check(CLI::IsMember(kEvalFns));
  eval->add_option("arg", arg, "r as num/den")->required();
  add_common(eval, cfg);

  auto* rec = app.add_subcommand("recognize", "find a minimal polynomial or a field element");
  RecognizeOpts ro;
  rec->add_option("--yi", ro.yi, "recognise Yi's s_n and a_n for n = num/den");
  rec->add_option("--eval", ro.eval, "FN ARG as for eval")->expected(2);
  rec->add_option("--literal", ro.literal, "decimal value carrying at least digits + guard digits");
  rec->add_option("--file", ro.file, "file holding such a decimal value");
  rec->add_option("--degree", ro.degree, "maximal degree")->check(CLI::Range(1, 64));
  rec->add_option("--height", ro.height, "coefficient height cap in digits (0 = automatic)");
  rec->add_option("--basis", ro.basis, "square-root basis, e.g. 1,5,13,65");
  rec->add_option("--denom-cap", ro.denom_cap, "largest denominator for --basis");
  add_common(rec, cfg);

  auto* ver = app.add_subcommand("verify", "certify identities: identities, order25, icosahedral");
  VerifyOpts vo;
  ver->add_option("target", vo.target, "identities | order25 | icosahedral")
      ->required()
      ->check(CLI::IsMember({"identities", "order25", "icosahedral"}));
  ver->add_option("args", vo.args, "order25: n values; icosahedral: R_VALUE LAMBDA_VALUE");
  ver->add_option("--q", vo.q, "nome values for identities (default: seeded random)");
  ver->add_option("--count", vo.count, "number of random nomes")->check(CLI::Range(1, 10000));
  ver->add_option("--perturb", vo.perturb, "multiply the checked input by 1 + EPS (decimal)");
  add_common(ver, cfg);

  auto* rep = app.add_subcommand("reproduce", "run a theorem pipeline");
  std::string which;
  rep->add_option("id", which, "thm2_26_5 | thm3_38_5 | lemma1 | thm4_48_5 | conj_16_15 | all")->required();
  add_common(rep, cfg);

  auto* sea = app.add_subcommand("search", "sweep r = n/d through Yi's recogniser (resumable JSON lines)");
  SearchOpts so;
  sea->add_option("--num", so.nums, "numerator range A:B");
  sea->add_option("--den", so.dens, "denominators")->delimiter(',');
  add_common(sea, cfg);

  auto* cat = app.add_subcommand("catalog", "print or check the closed-form catalog");
  bool check = false;
  cat->add_flag("--check", check, "compare every entry with its product definition");
  add_common(cat, cfg);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*eval) return cmd_eval(cfg, fn, arg, out);
    if (*rec) return cmd_recognize(cfg, ro, out);
    if (*ver) return cmd_verify(cfg, vo, out);
    if (*rep) return cmd_reproduce(cfg, which, out);
    if (*sea) return cmd_search(cfg, so, out);
    if (*cat) return cmd_catalog(cfg, check, out);
  } catch (const PreconditionError& e) {
    err << json{{"error", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << json{{"error", "domain"}, {"message", e.what()}}.dump() << '\n';
    return kDomain;
  } catch (const ConvergenceError& e) {
    err << json{{"error", "convergence"}, {"message", e.what()}}.dump() << '\n';
    return kDomain;
  } catch (const MismatchError& e) {
    err << json{{"error", "mismatch"}, {"message", e.what()}}.dump() << '\n';
    return kInconclusive;
  }
  return kUsage;
}

}  // namespace rrcf::cli
