#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "secmin/acceptance.hpp"
#include "secmin/bounds.hpp"
#include "secmin/chow.hpp"
#include "secmin/errors.hpp"
#include "secmin/granville.hpp"
#include "secmin/lattice.hpp"
#include "secmin/record.hpp"
#include "secmin/sieve.hpp"

namespace secmin::cli {

namespace {

enum class Status { pass, fail, report };

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::report: return "report";
  }
  return "?";
}

struct Context {
  OutputFormat format = OutputFormat::text;
  Exec exec = Exec::parallel;
  std::ostream* out = nullptr;
  std::string command;

  void emit(const Record& r) const { *out << r.render(format) << '\n'; }
};

// ---------------------------------------------------------------------------
// Options shared by several commands

struct FieldOpts {
  bool rationals = false;
  std::uint64_t degK = 1;
  std::optional<std::uint64_t> r1, r2;
  std::string logdisc = "0";

  void attach(CLI::App* app) {
    app->add_option("--field", field_name, "Q for the rationals");
    app->add_option("--degK", degK, "[K:Q]");
    app->add_option("--r1", r1, "real places");
    app->add_option("--r2", r2, "complex places");
    app->add_option("--logdisc", logdisc, "log |disc K|");
  }
  NumberFieldData get() const {
    if (field_name == "Q" || (degK == 1 && !r1 && !r2 && parse_real(logdisc) == 0)) {
      require(field_name.empty() || field_name == "Q", "--field Q", "only --field Q is named; use --degK/--r1/--r2");
      require(degK == 1 && parse_real(logdisc) == 0, "field Q", "--field Q conflicts with --degK/--logdisc");
      return NumberFieldData::rationals();
    }
    require(field_name.empty(), "--field Q", "only --field Q is named; use --degK/--r1/--r2");
    const std::uint64_t a = r1.value_or(r2 ? degK - 2 * *r2 : degK);
    const std::uint64_t b = r2.value_or(0);
    return NumberFieldData::make(degK, a, b, parse_real(logdisc));
  }
  std::string field_name;
};

struct SurfaceOpts {
  std::uint64_t g = 0, m = 0;
  std::string L2 = "0", Lw = "0", w2 = "0";
  void attach(CLI::App* app, bool need_m) {
    app->add_option("--g", g, "genus")->required();
    auto* mo = app->add_option("--m", m, "m = deg L - 2g + 2");
    if (need_m) mo->required();
    app->add_option("--L2", L2, "arithmetic self-intersection of L");
    app->add_option("--Lw", Lw, "L . omega");
    app->add_option("--w2", w2, "omega . omega");
  }
  SurfaceData get(const NumberFieldData& f) const {
    return SurfaceData::make(g, m, parse_real(L2), parse_real(Lw), parse_real(w2), f);
  }
};

BallIndexing balls_of(const std::string& s) {
  return s == "shifted" ? BallIndexing::shifted : BallIndexing::printed;
}

Record record_of(const BoundReport& r) {
  Record rec("bound");
  rec.add("kind", to_string(r.kind)).add("value", r.value);
  if (r.kind == BoundKind::thm4_ii_odd || r.kind == BoundKind::thm4_ii_even) rec.add("index", r.index);
  for (const auto& [k, v] : r.inputs_echo) rec.add(k, v);
  return rec;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const IntVec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::string> doubles(const std::vector<double>& v) {
  std::vector<std::string> out;
  for (double x : v) out.push_back(format_double(x));
  return out;
}

// ---------------------------------------------------------------------------
// Commands

Status granville_single(const Context& cx, std::uint64_t n) {
  require(n >= 2, "n >= 2", "granville single: n must be at least 2");
  const PrimePowerSieve sieve(n);
  const auto rec = c_of(n, sieve);
  const std::uint64_t b_digits = b_via_primes(n);
  Record r("granville");
  r.add("n", n).add("c", rec.c).add("witness", rec.witness_prime_power).add("b_digits", b_digits);
  bool ok = b_digits == rec.c;
  if (n <= 20000) {
    const std::uint64_t b = b_of(n);
    r.add("b", b);
    ok = ok && b == rec.c;
  }
  cx.emit(r);
  return ok ? Status::pass : Status::fail;
}

Status granville_verify(const Context& cx, std::uint64_t hi) {
  require(hi >= 2, "max >= 2", "granville verify: --max must be at least 2");
  const auto recs = verify_theorem3(hi, cx.exec);
  Record r("theorem3");
  r.add("lo", std::uint64_t{2}).add("hi", hi).add("records", static_cast<std::uint64_t>(recs.size())).add("b_equals_c", true);
  cx.emit(r);
  if (hi >= 30) {
    const PrimePowerSieve sieve(hi);
    const bool q = verify_quarter_bound(hi, sieve, cx.exec);
    Record qr("quarter_bound");
    qr.add("lo", std::uint64_t{30}).add("hi", hi).add("holds", q);
    cx.emit(qr);
    if (!q) return Status::fail;
  }
  return Status::pass;
}

double parse_exponent(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return static_cast<double>(parse_real(s));
  const Real den = parse_real(s.substr(slash + 1));
  require(den != 0, "denominator != 0", "granville asymptotic: zero denominator in --exponent");
  return static_cast<double>(parse_real(s.substr(0, slash)) / den);
}

Status granville_asymptotic(const Context& cx, std::uint64_t hi, double exponent) {
  require(hi >= 2, "max >= 2", "granville asymptotic: --max must be at least 2");
  const PrimePowerSieve sieve(hi);
  const auto s = asymptotic_report(hi, exponent, sieve, cx.exec);
  Record r("asymptotic");
  r.add("n", s.n)
      .add("exponent", s.exponent)
      .add("partial_sum", s.partial_sum)
      .add("ratio", s.ratio)
      .add("max_ratio", s.max_ratio)
      .add("argmax", s.argmax)
      .add("rh_max_ratio", s.rh_max_ratio)
      .add("rh_sum_ratio", s.rh_sum_ratio);
  cx.emit(r);
  return Status::report;
}

Status secant(const Context& cx, std::uint64_t g, std::uint64_t m, std::uint64_t d, const std::string& mode) {
  const auto p = SecantParams::make(g, m, d);
  Record r("secant");
  r.add("g", g).add("m", m).add("d", d);
  std::optional<BigInt> closed, oracle;
  if (mode != "oracle") closed = degree_closed_form(p);
  if (mode != "closed") oracle = degree_oracle(p);
  if (closed) r.add("closed", *closed);
  if (oracle) r.add("oracle", *oracle);
  if (closed && oracle) r.add("agree", *closed == *oracle);
  cx.emit(r);
  if (closed && oracle) return *closed == *oracle ? Status::pass : Status::fail;
  return Status::report;
}

struct BoundsArgs {
  std::string which;
  SurfaceOpts surface;
  FieldOpts field;
  std::uint64_t k = 0, n = 0, N = 0;
  std::optional<std::string> e;
  std::string balls = "printed";
};

Status bounds(const Context& cx, BoundsArgs& a, const CLI::App& sub) {
  const auto field = a.field.get();
  const auto balls = balls_of(a.balls);
  auto need = [&](const char* opt) {
    require(sub.count(opt) > 0, opt, std::string("bounds ") + a.which + ": " + opt + " is required");
  };
  BoundReport rep;
  if (a.which == "constant") {
    need("--N");
    rep = report_constant(a.N, field, balls);
  } else if (a.which == "cor1" || a.which == "cor2") {
    need("--g");
    need("--n");
    need("--k");
    const auto s = SurfaceData::make(a.surface.g, 1, 0, 0, parse_real(a.surface.w2), field);
    rep = a.which == "cor1" ? report_cor1(s, a.n, a.k) : report_cor2(s, a.n, a.k, balls);
  } else {
    need("--g");
    need("--m");
    const auto s = a.surface.get(field);
    if (a.which == "prop6") {
      rep = report_prop6(s);
    } else if (a.which == "thm4-ii") {
      rep = report_thm4_ii(s);
    } else {
      need("--k");
      const Real e = a.e ? parse_real(*a.e) : prop6_height_lower_bound(s);
      rep = a.which == "thm4-lambda" ? report_thm4_lambda(s, a.k, e) : report_thm4_mu(s, a.k, e, balls);
    }
  }
  if (cx.format == OutputFormat::text)
    *cx.out << serialize(rep) << '\n';
  else
    cx.emit(record_of(rep));
  return Status::report;
}

struct LatticeArgs {
  std::string action;
  std::string gram_file;
  std::string form_file;
  std::optional<std::uint32_t> D;
  std::string balls = "printed";
};

Status lattice(const Context& cx, const LatticeArgs& a) {
  const GramLattice l = parse_gram(read_file(a.gram_file));
  if (a.action == "minima") {
    const auto p = successive_minima(l, cx.exec);
    std::vector<std::string> norms, wits;
    for (auto v : p.norms_sq) norms.push_back(std::to_string(v));
    for (const auto& w : p.witnesses) wits.push_back("(" + join(w) + ")");
    Record r("minima");
    r.add("rank", static_cast<std::uint64_t>(l.rank()))
        .add("gram", format_gram(l))
        .add_list("log_minima", doubles(p.log_minima), true)
        .add_list("norms_sq", norms, true)
        .add_list("witnesses", wits, false)
        .add("minkowski_second", minkowski_second_holds(p));
    cx.emit(r);
    return minkowski_second_holds(p) ? Status::pass : Status::fail;
  }
  if (a.action == "dual") {
    const auto d = dual_lattice(l);
    std::string s = "[";
    for (std::size_t i = 0; i < d.rank; ++i) {
      s += i ? ";" : "";
      for (std::size_t j = 0; j < d.rank; ++j) s += (j ? "," : "") + d(i, j).get_str();
    }
    s += "]";
    const bool involution = inverse(d) == RationalGram::from(l);
    Record r("dual");
    r.add("rank", static_cast<std::uint64_t>(d.rank)).add("gram", s).add("double_dual_ok", involution);
    cx.emit(r);
    return involution ? Status::pass : Status::fail;
  }
  if (a.action == "heights") {
    const auto t = sublattice_heights(l, cx.exec);
    std::vector<std::string> cov;
    for (const auto& c : t.covolume_sq) cov.push_back(c.get_str());
    Record r("heights");
    r.add("rank", static_cast<std::uint64_t>(l.rank()))
        .add("gram", format_gram(l))
        .add_list("heights", doubles(t.heights), true)
        .add_list("covolume_sq", cov, false);
    cx.emit(r);
    return Status::report;
  }
  if (a.action == "prop4") {
    const auto rep = verify_prop4(l, NumberFieldData::rationals(), balls_of(a.balls), cx.exec);
    for (const auto& row : rep.rows) {
      Record r("prop4");
      r.add("p", static_cast<std::uint64_t>(row.p))
          .add("minima_sum", row.minima_sum)
          .add("dual_height", row.dual_height)
          .add("dual_height_raw", row.dual_height_raw)
          .add("constant", row.constant)
          .add("lower_slack", row.lower_slack)
          .add("upper_slack", row.upper_slack)
          .add("holds", row.holds);
      cx.emit(r);
    }
    return rep.all_hold ? Status::pass : Status::fail;
  }
  // avoid
  require(!a.form_file.empty(), "--form", "lattice avoid: --form FILE is required");
  const auto f = parse_form(read_file(a.form_file));
  if (a.D)
    require(*a.D == f.degree(), "--D = form degree",
            "lattice avoid: --D " + std::to_string(*a.D) + " but the form has degree " + std::to_string(f.degree()));
  const auto minima = successive_minima(l, cx.exec);
  const auto res = avoid_hypersurface(f, minima);
  Record r("avoid");
  r.add("D", f.degree())
      .add("grid", join(res.grid_coeffs))
      .add("vector", join(res.vector))
      .add("form_value", res.form_value)
      .add("log_norm", res.log_norm)
      .add("log_bound", res.log_bound)
      .add("bound_holds", res.bound_holds);
  cx.emit(r);
  return res.bound_holds ? Status::pass : Status::fail;
}

Status verify_all(const Context& cx, const std::vector<std::string>& only, std::uint64_t seed) {
  AcceptanceOptions opts;
  opts.exec = cx.exec;
  opts.only = only;
  opts.seed = seed;
  bool ok = true;
  run_acceptance(opts, [&](const CriterionResult& c) {
    Record r("criterion");
    r.add("id", c.id).add("status", to_string(c.status)).add("detail", c.detail);
    cx.emit(r);
    for (const auto& line : c.info) *cx.out << "# " << line << '\n';
    ok = ok && c.status != CriterionStatus::fail;
  });
  return ok ? Status::pass : Status::fail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Exact checks and bound evaluators for secant degrees, Granville's b(n) and lattice minima.",
               "secmin"};
  app.require_subcommand(1);
  std::string format = "text", exec = "parallel";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--exec", exec, "kernel selection")->check(CLI::IsMember({"serial", "parallel"}));

  // granville
  auto* gran = app.add_subcommand("granville", "b(n), c(n) and Theorem 3 checks");
  std::string gmode;
  std::uint64_t gn = 0, gmax = 0;
  std::string gexp = "0.535";
  gran->add_option("mode", gmode, "single|verify|asymptotic")
      ->required()
      ->check(CLI::IsMember({"single", "verify", "asymptotic"}));
  gran->add_option("--n", gn, "n for single");
  gran->add_option("--max", gmax, "range upper end");
  gran->add_option("--exponent", gexp, "exponent for asymptotic ratios, decimal or a/b");

  // secant
  auto* sec = app.add_subcommand("secant", "secant variety degree D(g,m,d)");
  std::uint64_t sg = 0, sm = 0, sd = 0;
  std::string smode = "both";
  sec->add_option("--g", sg, "genus")->required();
  sec->add_option("--m", sm, "m")->required();
  sec->add_option("--d", sd, "secant index")->required();
  sec->add_option("--mode", smode, "closed|oracle|both")->check(CLI::IsMember({"closed", "oracle", "both"}));

  // bounds
  auto* bnd = app.add_subcommand("bounds", "Arakelov bound evaluators");
  BoundsArgs ba;
  bnd->add_option("which", ba.which, "prop6|thm4-lambda|thm4-mu|thm4-ii|cor1|cor2|constant")
      ->required()
      ->check(CLI::IsMember({"prop6", "thm4-lambda", "thm4-mu", "thm4-ii", "cor1", "cor2", "constant"}));
  ba.surface.attach(bnd, false);
  bnd->get_option("--g")->required(false);
  ba.field.attach(bnd);
  bnd->add_option("--k", ba.k, "index k");
  bnd->add_option("--n", ba.n, "power n of omega");
  bnd->add_option("--N", ba.N, "N (rank N+1)");
  bnd->add_option("--e", ba.e, "value used for e(L); default: Prop 6 lower bound");
  bnd->add_option("--balls", ba.balls, "printed|shifted")->check(CLI::IsMember({"printed", "shifted"}));

  // lattice
  auto* lat = app.add_subcommand("lattice", "successive minima, duals, heights, Prop 4 and Prop 5");
  LatticeArgs la;
  lat->add_option("action", la.action, "minima|dual|heights|prop4|avoid")
      ->required()
      ->check(CLI::IsMember({"minima", "dual", "heights", "prop4", "avoid"}));
  lat->add_option("--gram", la.gram_file, "Gram matrix file")->required();
  lat->add_option("--form", la.form_file, "form file (avoid)");
  lat->add_option("--D", la.D, "expected form degree (avoid)");
  lat->add_option("--balls", la.balls, "printed|shifted")->check(CLI::IsMember({"printed", "shifted"}));

  // verify-all
  auto* all = app.add_subcommand("verify-all", "run the acceptance criteria");
  std::vector<std::string> only;
  std::uint64_t seed = AcceptanceOptions{}.seed;
  all->add_option("--only", only, "criterion ids, e.g. AC1 AC8")->delimiter(',');
  all->add_option("--seed", seed, "seed for random lattices and forms");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Context cx;
  cx.format = format == "json" ? OutputFormat::json : OutputFormat::text;
  cx.exec = exec == "serial" ? Exec::serial : Exec::parallel;
  cx.out = &out;

  Status status = Status::fail;
  int code = kExitFail;
  std::string command;
  try {
    if (gran->parsed()) {
      command = "granville " + gmode;
      if (gmode == "single") {
        require(gran->count("--n") > 0, "--n", "granville single: --n is required");
        status = granville_single(cx, gn);
      } else {
        require(gran->count("--max") > 0, "--max", "granville " + gmode + ": --max is required");
        status = gmode == "verify" ? granville_verify(cx, gmax) : granville_asymptotic(cx, gmax, parse_exponent(gexp));
      }
    } else if (sec->parsed()) {
      command = "secant";
      status = secant(cx, sg, sm, sd, smode);
    } else if (bnd->parsed()) {
      command = "bounds " + ba.which;
      status = bounds(cx, ba, *bnd);
    } else if (lat->parsed()) {
      command = "lattice " + la.action;
      status = lattice(cx, la);
    } else {
      command = "verify-all";
      status = verify_all(cx, only, seed);
    }
    code = status == Status::fail ? kExitFail : kExitPass;
  } catch (const Error& e) {
    if (dynamic_cast<const TheoremViolation*>(&e))
      err << "theorem check failed: " << e.what() << '\n';
    else if (const auto* pe = dynamic_cast<const PreconditionError*>(&e))
      err << "precondition violated [" << pe->clause() << "]: " << e.what() << '\n';
    else
      err << "error: " << e.what() << '\n';
    status = Status::fail;
    code = exit_code_of(e);
  }

  Record outcome("outcome");
  outcome.add("command", command).add("status", status_name(status)).add("exit", code);
  out << outcome.render(cx.format) << '\n';
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  out << "# elapsed_ms=" << ms.count() << '\n';
  return code;
}

int exit_code_of(const std::exception& e) {
  return dynamic_cast<const TheoremViolation*>(&e) ? kExitFail : kExitUsage;
}

}  // namespace secmin::cli
