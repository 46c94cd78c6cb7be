#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffgauss/affine_ring.hpp"
#include "ffgauss/gauss_sums.hpp"
#include "ffgauss/local_inf.hpp"
#include "ffgauss/local_v.hpp"
#include "ffgauss/vgamma.hpp"

namespace ffg {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct VerificationReport {
  std::string theorem_id;
  std::vector<std::pair<std::string, std::string>> params;
  Status status = Status::Fail;
  std::string lhs, rhs;
  long long achieved_precision = 0;
  long long runtime_ms = 0;  // always 0 so reports are byte-reproducible
  std::string note;

  bool passed() const { return status == Status::Pass; }
};

std::string report_json(const VerificationReport& r);
std::string reports_json(const std::vector<VerificationReport>& rs);
std::string reports_tsv(const std::vector<VerificationReport>& rs);

struct Comparison {
  Status status = Status::Fail;
  long long achieved = 0;
};
// Pass when the series agree through `target`; Fail when a digit known on
// both sides differs; Inconclusive when they agree but precision < target.
Comparison compare_series(const Series& lhs, const Series& rhs, long long target);
Comparison compare_elems(Elem lhs, Elem rhs);

// Contexts are memoised by (q, v, n, prec).
ContextPtr get_context(int q, const Poly& v, const Poly& n, long long prec);

// Integer tables for the pairing suite; entries are F_q element indices and
// an unrecognised Poonen entry is -1.
struct PairingTables {
  std::vector<std::vector<long long>> residue, trace, poonen;
  bool poonen_recognised = true;
};
PairingTables pairing_tables(const CyclotomicContext& ctx);

// Stickelberger data for x = a0/n in lowest terms.
struct StickelbergerData {
  GroupRingElem eta;
  std::vector<std::pair<std::string, long long>> expected;  // coset label, exponent
  std::vector<std::pair<std::string, long long>> measured;
  long long exponent_sum = 0;  // over sigma_{eps,s}
};
StickelbergerData stickelberger_data(const CyclotomicContext& ctx, const AFrac& x);

// Single-point verifiers; `prec` is the v-adic working precision.
VerificationReport verify_worked_example(int q, Elem eps, long long prec);
VerificationReport verify_oracle(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec);
VerificationReport verify_reflection(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec);
VerificationReport verify_reflection_corollary(int q, const Poly& v, const Poly& n, const AFrac& x,
                                               const QDigits& y, long long prec);
VerificationReport verify_gkt_first(int q, const Poly& v, const Poly& n, const AFrac& x, int s, long long prec);
VerificationReport verify_gkt_geo(int q, const Poly& v, const Poly& n, const AFrac& x, const QDigits& y,
                                  long long prec);
VerificationReport verify_gkt_ari(int q, const Poly& v, const Poly& n, const QDigits& y, long long prec);
VerificationReport verify_gkt_two(int q, const Poly& v, const Poly& n, const AFrac& x, const QDigits& y,
                                  long long prec);
VerificationReport verify_hd_geo(int q, const Poly& v, const Poly& n, const Poly& g, const AFrac& x,
                                 const PRat& y, long long prec);
VerificationReport verify_hd_two(int q, const Poly& v, const Poly& n, const Poly& g, const AFrac& x,
                                 const PRat& y, long long prec);
VerificationReport verify_hd_ymult(int q, const Poly& v, long long N, long long nmul, const RatFunc& x,
                                   const PRat& y, long long prec);
VerificationReport verify_hd_lifting(int q, const Poly& v, const Poly& n, const Poly& n2, const AFrac& x,
                                     const QDigits& y, long long prec);
VerificationReport verify_stickelberger(int q, const Poly& v, const AFrac& x, long long prec);
VerificationReport verify_infinity(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec);
VerificationReport verify_pairings(int q, const Poly& v, const Poly& n, long long prec, bool at_infinity);
VerificationReport verify_compatibility(int q, const Poly& v, const Poly& n, const Poly& n2, const AFrac& x,
                                        long long prec);
VerificationReport verify_tilde(int q, const Poly& v, const Poly& n, const AFrac& x, long long prec);

enum class GammaEq { Reflection1, Reflection2, NoCarry, Multiplication, MultiplicationSquared, Translation, Levels };
std::string gamma_eq_name(GammaEq e);
struct GammaParams {
  int q = 3;
  Poly v;
  RatFunc x;
  PRat y;
  PRat y2;         // second argument of the no-carry rule
  long long n = 2; // multiplication factor
  Poly g;          // translation modulus
};
VerificationReport verify_gamma_functional(GammaEq eq, const GammaParams& p, long long prec);

// Runs f(prec); an inconclusive result is rerun with extra working precision
// (the target stays `prec`).
VerificationReport with_retry(const std::function<VerificationReport(long long)>& f, long long prec);

// (q, v, n) triples of the default grid: q in {2, 3}, deg v <= 2, deg n <= 2, q^{dl} <= 2^12.
struct GridPoint {
  int q;
  Poly v, n;
};
std::vector<GridPoint> default_grid();
// Every x = a0/n with deg a0 < deg n (a0 = 0 excluded when `skip_zero`).
std::vector<AFrac> grid_fractions(const Poly& n, bool skip_zero);

// Suites: one id per family of statements; `all_suite_ids` lists them in run order.
std::vector<std::string> all_suite_ids();
struct SuiteOptions {
  std::optional<GridPoint> point;  // default grid when empty
  std::optional<int> q;            // restricts the default grid and the worked example
  std::optional<AFrac> x;
  std::optional<QDigits> y;
  std::optional<long long> prec;
};
std::vector<VerificationReport> run_suite(const std::string& id, const SuiteOptions& opt);

}  // namespace ffg
