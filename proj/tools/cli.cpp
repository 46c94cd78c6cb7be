#include "cli.hpp"

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "ffgauss/carlitz_core.hpp"
#include "ffgauss/gauss_sums.hpp"
#include "ffgauss/theorem_lab.hpp"
#include "ffgauss/vgamma.hpp"
#include "json.hpp"

namespace ffg::cli {
namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct Common {
  std::optional<int> q;
  std::string v, n, x, y, a = "1", kind, out;
  std::optional<long long> prec;
  long long s = 0;
  std::string format = "json";
};

void add_context_flags(CLI::App* app, Common& c) {
  app->add_option("--q", c.q, "size of the constant field F_q (prime power)");
  app->add_option("--v", c.v, "monic irreducible v, digits low-to-high or an expression in t");
  app->add_option("--n", c.n, "monic modulus n coprime to v");
  app->add_option("--prec", c.prec, "target v-adic precision")->check(CLI::PositiveNumber);
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  app->add_option("--out", c.out, "write output to this file instead of stdout");
}

int need_q(const Common& c) {
  if (!c.q) throw UsageError("--q is required");
  if (*c.q < 2) throw UsageError("--q must be a prime power >= 2");
  return *c.q;
}

FieldPtr base_field(const Common& c) {
  try {
    return Field::get(need_q(c), 1);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad --q: ") + e.what());
  }
}

Poly need_poly(const FieldPtr& F, const std::string& s, const char* flag) {
  if (s.empty()) throw UsageError(std::string(flag) + " is required");
  return Poly::parse(F, s);
}

// "r/(q^t-1)", "r/D" or an integer, as a p-adic rational.
PRat parse_prat(const std::string& s, int q) {
  static const std::regex qform(R"(^\s*(-?\d+)\s*/\s*\(\s*(\d+)\s*\^\s*(\d+)\s*-\s*1\s*\)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, qform)) {
    const long long base = std::stoll(m[2]), t = std::stoll(m[3]);
    if (base != q) throw UsageError("--y base " + m[2].str() + " does not match --q");
    if (t < 1 || t > 30) throw UsageError("--y exponent out of range");
    return PRat(std::stoll(m[1]), ipow(q, t) - 1);
  }
  PRat y = PRat::parse(s);
  int p = 2;
  while (q % p != 0) ++p;
  if (y.D % p == 0) throw UsageError("--y denominator must be prime to p");
  return y;
}

// y as digits over q^t - 1; 1 keeps every digit q - 1 rather than reducing to 0.
QDigits to_qdigits(const PRat& y, int q, int t) {
  const long long den = ipow(q, t) - 1;
  if (den % y.D != 0) throw UsageError("y = " + y.str() + " is not in (q^" + std::to_string(t) + " - 1)^{-1} Z");
  long long r = y.r * (den / y.D);
  if (r > 0 && r % den == 0) return QDigits{q, t, std::vector<int>(t, q - 1)};
  return q_digits(q, r, t);
}

json series_json(const Series& s) {
  json j;
  j["field"] = s.field()->name();
  j["uniformizer"] = s.ram() == 0 ? "1/theta~" : s.ram() == 1 ? "v" : "u";
  j["ram_index"] = s.ram();
  j["val"] = s.is_zero() ? json(nullptr) : json(s.val());
  j["prec"] = s.prec();
  json c = json::array();
  for (Elem e : s.digits()) c.push_back(e);
  j["coeffs"] = c;
  return j;
}

std::string series_tsv(const json& meta, const Series& s) {
  std::ostringstream os;
  for (const auto& [k, v] : meta.items()) os << "# " << k << "\t" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  os << "# field\t" << s.field()->name() << "\n# ram_index\t" << s.ram() << "\n# prec\t" << s.prec() << "\n";
  os << "exponent\tcoeff\n";
  if (!s.is_zero())
    for (size_t i = 0; i < s.digits().size(); ++i) os << s.val() + static_cast<long long>(i) << "\t" << s.digits()[i] << "\n";
  return os.str();
}

std::string table_tsv(const std::string& name, const std::vector<std::vector<long long>>& t) {
  std::ostringstream os;
  os << "# " << name << "\n";
  for (const auto& row : t) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? "\t" : "") << row[j];
    os << "\n";
  }
  return os.str();
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw UsageError("cannot open --out file '" + c.out + "'");
  f << text;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s.push_back('\n');
  return s;
}

int cmd_gauss(const Common& c, std::ostream& out) {
  const FieldPtr F = base_field(c);
  const int q = *c.q;
  const Poly v = need_poly(F, c.v, "--v"), n = need_poly(F, c.n, "--n");
  const long long prec = c.prec.value_or(8);
  ContextPtr ctx = get_context(q, v, n, prec);
  const std::string kind = c.kind.empty() ? "geo" : c.kind;
  json meta;
  meta["kind"] = kind;
  meta["q"] = q;
  meta["v"] = v.str();
  meta["n"] = n.str();
  meta["d"] = ctx->d;
  meta["l"] = ctx->l;
  Series value;
  std::optional<QDigits> y;
  if (!c.y.empty()) {
    y = to_qdigits(parse_prat(c.y, q), q, ctx->dl);
    meta["y"] = y->str();
  }
  std::optional<AFrac> x;
  if (kind != "ari") {
    if (c.x.empty()) throw UsageError("--x is required for kind " + kind);
    x = context_frac(*ctx, RatFunc::parse(F, c.x));
    meta["x"] = x->str();
  }
  if (kind == "geo") {
    if (y) {
      value = gauss_monomial(*ctx, *x, *y);
    } else {
      const Poly a = Poly::parse(F, c.a);
      value = geo_gauss_value(*ctx, *x, a, c.s);
      meta["a"] = a.str();
      meta["conj_s"] = c.s;
    }
  } else if (kind == "ari") {
    if (y) {
      value = ari_monomial(*ctx, *y);
    } else {
      value = ari_gauss(*ctx, c.s);
      meta["conj_s"] = c.s;
    }
  } else {
    if (!y) throw UsageError("--y is required for kind two");
    value = two_var_monomial(*ctx, *x, *y);
  }
  meta["target_prec"] = prec;
  if (c.format == "tsv") {
    emit(c, series_tsv(meta, value), out);
  } else {
    json j = meta;
    j["value"] = series_json(value);
    emit(c, j.dump(1) + "\n", out);
  }
  return 0;
}

int cmd_gamma(const Common& c, std::ostream& out) {
  const FieldPtr F = base_field(c);
  const int q = *c.q;
  const Poly v = need_poly(F, c.v, "--v");
  const long long prec = c.prec.value_or(8);
  GammaEngine E = GammaEngine::standalone(q, v, prec);
  const std::string kind = c.kind.empty() ? "geo" : c.kind;
  json meta;
  meta["kind"] = kind;
  meta["q"] = q;
  meta["v"] = v.str();
  Series value;
  if (kind == "ari") {
    if (c.y.empty()) throw UsageError("--y is required for kind ari");
    const PRat y = parse_prat(c.y, q);
    meta["y"] = y.str();
    value = E.gamma_ari(y);
  } else {
    if (c.x.empty()) throw UsageError("--x is required for kind " + kind);
    const RatFunc x = RatFunc::parse(F, c.x);
    if (!x.v_integral(v)) throw UsageError("--x must be v-integral");
    meta["x"] = x.str();
    if (kind == "geo" && c.y.empty()) {
      value = E.gamma_geo(x);
    } else {
      if (c.y.empty()) throw UsageError("--y is required for kind two");
      const PRat y = parse_prat(c.y, q);
      meta["y"] = y.str();
      value = kind == "geo" ? E.gamma_geo(x, y) : E.gamma_two(x, y);
    }
  }
  if (c.format == "tsv") {
    emit(c, series_tsv(meta, value), out);
  } else {
    json j = meta;
    const json sj = series_json(value);
    for (const auto& [k, val] : sj.items()) j[k] = val;
    emit(c, j.dump(1) + "\n", out);
  }
  return 0;
}

int cmd_verify(const Common& c, const std::string& id, std::ostream& out) {
  SuiteOptions opt;
  opt.prec = c.prec;
  const bool any_ctx = !c.v.empty() || !c.n.empty();
  if (c.q && !any_ctx) {
    opt.q = need_q(c);
    if (!c.x.empty() || !c.y.empty()) throw UsageError("--x and --y need --v and --n");
  } else if (any_ctx) {
    const FieldPtr F = base_field(c);
    GridPoint g{*c.q, need_poly(F, c.v, "--v"), need_poly(F, c.n, "--n")};
    if (!g.v.is_monic() || !is_irreducible(g.v)) throw UsageError("--v must be monic irreducible");
    if (!g.n.is_monic() || !gcd(g.v, g.n).is_one()) throw UsageError("--n must be monic and coprime to v");
    if (!c.x.empty()) {
      AFrac x = a_fractional(RatFunc::parse(F, c.x));
      if (!x.is_zero() && !x.n.divides(g.n)) throw UsageError("--x must lie in n^{-1} A");
      opt.x = x;
    }
    if (!c.y.empty()) {
      const int dl = g.v.deg() * order_mod(g.v, g.n);
      opt.y = to_qdigits(parse_prat(c.y, g.q), g.q, dl);
    }
    opt.point = g;
  } else if (!c.x.empty() || !c.y.empty()) {
    throw UsageError("--x and --y need --q, --v and --n");
  }
  auto reports = run_suite(id, opt);
  emit(c, c.format == "tsv" ? reports_tsv(reports) : with_newline(reports_json(reports)), out);
  for (const auto& r : reports)
    if (!r.passed()) return 1;
  return 0;
}

int cmd_pairing_table(const Common& c, std::ostream& out) {
  const FieldPtr F = base_field(c);
  const int q = *c.q;
  const Poly v = need_poly(F, c.v, "--v"), n = need_poly(F, c.n, "--n");
  ContextPtr ctx = get_context(q, v, n, c.prec.value_or(8));
  PairingTables t = pairing_tables(*ctx);
  if (c.format == "tsv") {
    emit(c, table_tsv("residue", t.residue) + table_tsv("trace", t.trace) + table_tsv("poonen", t.poonen), out);
  } else {
    json j;
    j["q"] = q;
    j["v"] = v.str();
    j["n"] = n.str();
    j["m"] = ctx->m.str();
    j["dl"] = ctx->dl;
    j["residue"] = t.residue;
    j["trace"] = t.trace;
    j["poonen"] = t.poonen;
    j["poonen_recognised"] = t.poonen_recognised;
    emit(c, j.dump(1) + "\n", out);
  }
  return 0;
}

int cmd_stickelberger(const Common& c, std::ostream& out) {
  const FieldPtr F = base_field(c);
  const int q = *c.q;
  const Poly v = need_poly(F, c.v, "--v");
  if (c.x.empty()) throw UsageError("--x is required");
  AFrac x = a_fractional(RatFunc::parse(F, c.x));
  if (x.is_zero()) throw UsageError("--x must not lie in A");
  const Poly n = c.n.empty() ? x.n : Poly::parse(F, c.n);
  if (!x.n.divides(n)) throw UsageError("--x must lie in n^{-1} A");
  ContextPtr ctx = get_context(q, v, n, c.prec.value_or(8));
  StickelbergerData st = stickelberger_data(*ctx, context_frac(*ctx, x.value()));
  const bool consistent = st.expected == st.measured && st.exponent_sum == ctx->l;
  if (c.format == "tsv") {
    std::ostringstream os;
    os << "# eta\t" << st.eta.str() << "\n# exponent_sum\t" << st.exponent_sum << "\n# l\t" << ctx->l << "\n";
    os << "coset\texpected\tmeasured\n";
    for (size_t i = 0; i < st.expected.size(); ++i)
      os << st.expected[i].first << "\t" << st.expected[i].second << "\t"
         << (i < st.measured.size() ? std::to_string(st.measured[i].second) : "") << "\n";
    emit(c, os.str(), out);
  } else {
    json j;
    j["q"] = q;
    j["v"] = v.str();
    j["n"] = n.str();
    j["x"] = x.str();
    j["eta"] = st.eta.str();
    json e = json::array(), m = json::array();
    for (const auto& [k, val] : st.expected) e.push_back({{"coset", k}, {"exponent", val}});
    for (const auto& [k, val] : st.measured) m.push_back({{"coset", k}, {"exponent", val}});
    j["expected"] = e;
    j["measured"] = m;
    j["exponent_sum"] = st.exponent_sum;
    j["l"] = ctx->l;
    j["consistent"] = consistent;
    emit(c, j.dump(1) + "\n", out);
  }
  return consistent ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"v-adic and infinity-adic Gauss sums over F_q[theta]", "ffgauss"};
  app.require_subcommand(1);
  Common c;
  std::string id;

  auto* gauss = app.add_subcommand("gauss", "evaluate a Gauss sum or Gauss-sum monomial in W");
  add_context_flags(gauss, c);
  gauss->add_option("--x", c.x, "x = a0/n");
  gauss->add_option("--y", c.y, "monomial exponent r/(q^t-1); omit for a single conjugate");
  gauss->add_option("--a", c.a, "Galois twist a, a unit mod n");
  gauss->add_option("--s", c.s, "Frobenius conjugate tau^s")->check(CLI::NonNegativeNumber);
  gauss->add_option("--kind", c.kind, "geo, ari or two")->check(CLI::IsMember({"geo", "ari", "two"}));

  auto* gamma = app.add_subcommand("gamma", "evaluate a v-adic gamma value");
  add_context_flags(gamma, c);
  gamma->add_option("--x", c.x, "v-integral x in F_q(theta)");
  gamma->add_option("--y", c.y, "p-adic argument r/D or r/(q^t-1)");
  gamma->add_option("--kind", c.kind, "ari, geo or two")->check(CLI::IsMember({"ari", "geo", "two"}));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_context_flags(verify, c);
  verify->add_option("id", id, "suite or theorem id, or 'all'")->required();
  verify->add_option("--x", c.x, "restrict to x = a0/n");
  verify->add_option("--y", c.y, "restrict to y = r/(q^t-1)");

  auto* pairing = app.add_subcommand("pairing-table", "residue, trace and Poonen pairing tables");
  add_context_flags(pairing, c);

  auto* stick = app.add_subcommand("stickelberger", "Stickelberger element and measured valuations");
  add_context_flags(stick, c);
  stick->add_option("--x", c.x, "x = a0/n");

  std::vector<const char*> argv{"ffgauss"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*gauss) return cmd_gauss(c, out);
    if (*gamma) return cmd_gamma(c, out);
    if (*verify) return cmd_verify(c, id, out);
    if (*pairing) return cmd_pairing_table(c, out);
    if (*stick) return cmd_stickelberger(c, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ffg::cli
