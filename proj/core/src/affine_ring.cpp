#include "ffgauss/affine_ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace ffg {

Poly::Poly(FieldPtr F, std::vector<Elem> c) : F_(std::move(F)), c_(std::move(c)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const FieldPtr& F, Elem c) { return Poly(F, {c}); }

Poly Poly::monomial(const FieldPtr& F, int k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(F, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(F_->inv(lead()));
}

Poly Poly::operator+(const Poly& o) const { return Poly(F_ ? F_ : o.F_, fpoly::add(*(F_ ? F_ : o.F_), c_, o.c_)); }
Poly Poly::operator-(const Poly& o) const { return Poly(F_ ? F_ : o.F_, fpoly::sub(*(F_ ? F_ : o.F_), c_, o.c_)); }
Poly Poly::operator-() const {
  std::vector<Elem> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = F_->neg(c_[i]);
  return Poly(F_, std::move(r));
}
Poly Poly::operator*(const Poly& o) const { return Poly(F_ ? F_ : o.F_, fpoly::mul(*(F_ ? F_ : o.F_), c_, o.c_)); }
Poly Poly::scale(Elem c) const { return Poly(F_, fpoly::scale(*F_, c_, c)); }

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  auto [qt, r] = fpoly::divmod(*F_, c_, o.c_);
  return {Poly(F_, std::move(qt)), Poly(F_, std::move(r))};
}

bool Poly::operator<(const Poly& o) const {
  if (deg() != o.deg()) return deg() < o.deg();
  for (int i = deg(); i >= 0; --i)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

Poly Poly::pow(unsigned long long k) const {
  Poly r = constant(F_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::frob(int k) const {
  if (is_zero()) return *this;
  long long step = 1;
  for (int i = 0; i < k; ++i) step *= q();
  std::vector<Elem> r(static_cast<size_t>(deg()) * step + 1, 0);
  for (int i = 0; i <= deg(); ++i) r[i * step] = c_[i];
  return Poly(F_, std::move(r));
}

Elem Poly::eval(const Field& G, Elem x) const {
  Elem acc = 0;
  for (int i = deg(); i >= 0; --i) acc = G.add(G.mul(acc, x), c_[i]);
  return acc;
}

std::uint64_t Poly::index() const {
  std::uint64_t idx = 0;
  for (int i = deg(); i >= 0; --i) idx = idx * q() + c_[i];
  return idx;
}

Poly Poly::from_index(const FieldPtr& F, std::uint64_t idx) {
  std::vector<Elem> c;
  while (idx > 0) {
    c.push_back(static_cast<Elem>(idx % F->q()));
    idx /= F->q();
  }
  return Poly(F, std::move(c));
}

namespace {
char digit_char(Elem c) { return c < 10 ? static_cast<char>('0' + c) : static_cast<char>('a' + c - 10); }
int digit_value(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
  return -1;
}
}  // namespace

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (Elem c : c_) s.push_back(digit_char(c));
  return s;
}

Poly Poly::parse(const FieldPtr& F, const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(static_cast<char>(std::tolower(ch)));
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  bool digits_only = std::all_of(s.begin(), s.end(), [&](char ch) {
    int d = digit_value(ch);
    return d >= 0 && d < F->q() && ch != 't';
  });
  if (digits_only) {
    std::vector<Elem> c;
    for (char ch : s) c.push_back(static_cast<Elem>(digit_value(ch)));
    return Poly(F, std::move(c));
  }
  // Expression form: sum of [coef][*](t|theta)[^k] terms, coef read mod p.
  Poly acc(F);
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    long long coef = -1;
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) coef = std::stoll(s.substr(i, j - i));
    i = j;
    if (i < s.size() && s[i] == '*') ++i;
    int power = 0;
    if (s.compare(i, 5, "theta") == 0 || (i < s.size() && s[i] == 't')) {
      i += s.compare(i, 5, "theta") == 0 ? 5 : 1;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t k = i;
        while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
        if (k == i) throw std::invalid_argument("bad exponent in '" + raw + "'");
        power = std::stoi(s.substr(i, k - i));
        i = k;
      }
    } else if (coef < 0) {
      throw std::invalid_argument("cannot parse polynomial '" + raw + "'");
    }
    if (coef < 0) coef = 1;
    Elem c = F->from_int(sign * coef);
    acc = acc + monomial(F, power, c);
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      throw std::invalid_argument("cannot parse polynomial '" + raw + "'");
  }
  return acc;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<Poly, Poly, Poly> xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& F = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b, s0 = Poly::constant(F, 1), s1(F), t0(F), t1 = Poly::constant(F, 1);
  while (!r1.is_zero()) {
    auto [qt, r] = r0.divmod(r1);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - qt * s1, t2 = t0 - qt * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = F->inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

Poly powmod(const Poly& a, unsigned long long k, const Poly& n) {
  Poly r = Poly::constant(a.field(), 1) % n, b = a % n;
  while (k > 0) {
    if (k & 1) r = (r * b) % n;
    k >>= 1;
    if (k) b = (b * b) % n;
  }
  return r;
}

Poly invmod(const Poly& a, const Poly& n) {
  auto [g, s, t] = xgcd(a % n, n);
  if (!g.is_one()) throw std::domain_error("not invertible modulo " + n.str());
  return s % n;
}

RatFunc::RatFunc(const Poly& a) : num_(a), den_(Poly::constant(a.field(), 1)) {}

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = Poly(den.field());
    den_ = Poly::constant(den.field(), 1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = num / g, d = den / g;
  Elem li = d.field()->inv(d.lead());
  num_ = n.scale(li);
  den_ = d.scale(li);
}

RatFunc RatFunc::operator+(const RatFunc& o) const { return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-(const RatFunc& o) const { return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }
RatFunc RatFunc::operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long long k) const {
  if (k < 0) return RatFunc(Poly::constant(field(), 1)) / pow(-k);
  return RatFunc(num_.pow(k), den_.pow(k));
}

int RatFunc::vval(const Poly& v) const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  int r = 0;
  Poly a = num_;
  while (v.divides(a)) {
    a = a / v;
    ++r;
  }
  Poly b = den_;
  while (v.divides(b) && b.deg() > 0) {
    b = b / v;
    --r;
  }
  return r;
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

RatFunc RatFunc::parse(const FieldPtr& F, const std::string& s) {
  auto pos = s.find('/');
  if (pos == std::string::npos) return RatFunc(Poly::parse(F, s));
  std::string a = s.substr(0, pos), b = s.substr(pos + 1);
  if (!b.empty() && b.front() == '(' && b.back() == ')') b = b.substr(1, b.size() - 2);
  Poly den = Poly::parse(F, b);
  if (den.is_zero()) throw std::invalid_argument("zero denominator in '" + s + "'");
  return RatFunc(Poly::parse(F, a), den);
}

AFrac a_fractional(const RatFunc& x) {
  return AFrac{x.num() % x.den(), x.den()};
}

std::vector<Poly> enumerate_monic(const FieldPtr& F, int i) {
  std::vector<Poly> out;
  for_each_monic(F, i, [&](const Poly& a) { out.push_back(a); });
  return out;
}

void for_each_monic(const FieldPtr& F, int i, const std::function<void(const Poly&)>& f) {
  if (i < 0) return;
  const int q = F->q();
  std::vector<Elem> c(i + 1, 0);
  c[i] = 1;
  while (true) {
    f(Poly(F, c));
    int k = 0;
    while (k < i) {
      if (++c[k] < static_cast<Elem>(q)) break;
      c[k] = 0;
      ++k;
    }
    if (k == i) break;
  }
}

std::vector<Poly> enumerate_below(const FieldPtr& F, int i) {
  std::vector<Poly> out;
  std::uint64_t total = 1;
  for (int k = 0; k < i; ++k) total *= F->q();
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) out.push_back(Poly::from_index(F, idx));
  return out;
}

Elem residue_map(const Poly& a, const Poly& n) {
  if (n.deg() < 1) throw std::invalid_argument("residue_map: deg n must be >= 1");
  Poly r = a % n;
  return r[n.deg() - 1];
}

namespace fmat {
M inverse(const Field& F, M a) {
  const size_t n = a.size();
  M inv(n, std::vector<Elem>(n, 0));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Elem pi = F.inv(a[col][col]);
    for (size_t j = 0; j < n; ++j) {
      a[col][j] = F.mul(a[col][j], pi);
      inv[col][j] = F.mul(inv[col][j], pi);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Elem f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] = F.sub(a[r][j], F.mul(f, a[col][j]));
        inv[r][j] = F.sub(inv[r][j], F.mul(f, inv[col][j]));
      }
    }
  }
  return inv;
}
}  // namespace fmat

DualFamilies dual_families(const Poly& n) {
  const FieldPtr& F = n.field();
  const int d = n.deg();
  if (d < 1) throw std::invalid_argument("dual_families: deg n must be >= 1");
  fmat::M G(d, std::vector<Elem>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) G[i][j] = residue_map(Poly::monomial(F, i + j), n);
  fmat::M Minv = fmat::inverse(*F, G);
  if (Minv.empty()) throw std::logic_error("residue pairing is degenerate");
  DualFamilies out;
  for (int i = 0; i < d; ++i) out.a.push_back(Poly::monomial(F, i));
  for (int j = 0; j < d; ++j) {
    std::vector<Elem> c(d);
    for (int k = 0; k < d; ++k) c[k] = Minv[k][j];
    out.b.push_back(Poly(F, c));
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (residue_map(out.a[i] * out.b[j], n) != (i == j ? 1u : 0u))
        throw std::logic_error("dual_families: pairing check failed");
  return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& a) {
  if (a.is_zero()) throw std::invalid_argument("factor of zero");
  const FieldPtr& F = a.field();
  std::vector<std::pair<Poly, int>> out;
  Poly r = a.monic();
  for (int dg = 1; 2 * dg <= r.deg(); ++dg) {
    for (const Poly& f : enumerate_monic(F, dg)) {
      int e = 0;
      while (r.deg() >= dg && f.divides(r)) {
        r = r / f;
        ++e;
      }
      if (e > 0) out.emplace_back(f, e);
      if (2 * dg > r.deg()) break;
    }
  }
  if (r.deg() >= 1) {
    bool merged = false;
    for (auto& [f, e] : out)
      if (f == r) {
        ++e;
        merged = true;
      }
    if (!merged) out.emplace_back(r, 1);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

bool is_irreducible(const Poly& a) {
  if (a.deg() < 1) return false;
  auto f = factor(a);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<Poly> monic_divisors(const Poly& n) {
  auto fac = factor(n);
  std::vector<Poly> divs{Poly::constant(n.field(), 1)};
  for (const auto& [f, e] : fac) {
    std::vector<Poly> next;
    for (const Poly& d : divs) {
      Poly acc = d;
      for (int k = 0; k <= e; ++k) {
        next.push_back(acc);
        acc = acc * f;
      }
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

int mobius(const Poly& a) {
  int mu = 1;
  for (const auto& [f, e] : factor(a)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

long long QDigits::numerator() const {
  long long r = 0;
  for (int s = t - 1; s >= 0; --s) r = r * q + digits[s];
  return r;
}

long long QDigits::denominator() const {
  long long d = 1;
  for (int s = 0; s < t; ++s) d *= q;
  return d - 1;
}

bool QDigits::is_zero() const {
  return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

std::string QDigits::str() const {
  std::ostringstream os;
  os << numerator() << "/(" << q << "^" << t << "-1)";
  return os.str();
}

QDigits q_digits(int q, long long r, int t) {
  if (t < 1) throw std::invalid_argument("q_digits: t must be >= 1");
  QDigits y;
  y.q = q;
  y.t = t;
  long long D = 1;
  for (int s = 0; s < t; ++s) D *= q;
  D -= 1;
  long long rr = r % D;
  if (rr < 0) rr += D;
  y.digits.resize(t);
  for (int s = 0; s < t; ++s) {
    y.digits[s] = static_cast<int>(rr % q);
    rr /= q;
  }
  return y;
}

QDigits digit_shift(const QDigits& y, long long h) {
  QDigits r = y;
  long long t = y.t;
  for (long long s = 0; s < t; ++s) {
    long long src = ((s - h) % t + t) % t;
    r.digits[s] = y.digits[src];
  }
  return r;
}

DigitStream::DigitStream(int q, long long r, long long D) : q_(q), r0_(r), D0_(D), r_(r) {
  if (D == 0) throw std::invalid_argument("DigitStream: zero denominator");
  if (D < 0) {
    r0_ = -r;
    D0_ = -D;
    r_ = r0_;
  }
  auto [p, e] = prime_power(q);
  (void)e;
  if (D0_ % p == 0) throw std::invalid_argument("DigitStream: denominator divisible by p");
}

DigitStream DigitStream::from_qdigits(const QDigits& y) {
  return DigitStream(y.q, y.numerator(), y.denominator());
}

DigitStream DigitStream::finite(int q, std::vector<int> digits) {
  DigitStream s;
  s.q_ = q;
  s.finite_ = true;
  s.digits_ = std::move(digits);
  long long r = 0;
  for (int i = static_cast<int>(s.digits_.size()) - 1; i >= 0; --i) r = r * q + s.digits_[i];
  s.r0_ = r;
  s.D0_ = 1;
  return s;
}

void DigitStream::extend(long long upto) const {
  if (finite_) return;
  while (static_cast<long long>(digits_.size()) <= upto) {
    // y0 = r / D mod q, then r <- (r - y0 D) / q.
    long long Dm = ((D0_ % q_) + q_) % q_;
    long long rm = ((r_ % q_) + q_) % q_;
    long long y0 = 0;
    for (long long c = 0; c < q_; ++c)
      if ((c * Dm - rm) % q_ == 0) {
        y0 = c;
        break;
      }
    digits_.push_back(static_cast<int>(y0));
    r_ = (r_ - y0 * D0_) / q_;
  }
}

int DigitStream::operator[](long long i) const {
  long long j = i - shift_;
  if (j < 0) return 0;
  if (finite_) return j < static_cast<long long>(digits_.size()) ? digits_[j] : 0;
  extend(j);
  return digits_[j];
}

DigitStream DigitStream::shifted(long long h) const {
  DigitStream s = *this;
  s.shift_ += h;
  return s;
}

std::string DigitStream::str(int count) const {
  std::ostringstream os;
  for (int i = 0; i < count; ++i) os << (*this)[i];
  os << "...";
  return os.str();
}

std::pair<Elem, RatFunc> sgn_flat(const RatFunc& x, const Poly& v) {
  if (!x.v_integral(v)) throw std::domain_error("sgn_flat: x is not v-integral");
  const FieldPtr& F = v.field();
  if (x.is_zero()) return {0, RatFunc(Poly::constant(F, 1))};
  Elem sgn = x.num().lead();
  if (v.divides(x.num())) return {sgn, RatFunc(Poly::constant(F, 1))};
  return {sgn, x};
}

}  // namespace ffg
