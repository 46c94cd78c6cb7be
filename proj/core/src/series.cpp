#include "ffgauss/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffg {

namespace {
constexpr long long kInf = Cap::kUnbounded;
long long clamp_add(long long a, long long b) {
  if (a >= kInf || b >= kInf) return kInf;
  long long r = a + b;
  return r > kInf ? kInf : r;
}
}  // namespace

Series::Series(FieldPtr F, Cap cap, int ram) : F_(std::move(F)), cap_(cap), ram_(ram) {}

Series Series::zero(const FieldPtr& F, Cap cap, int ram) {
  Series s(F, cap, ram);
  s.val_ = s.prec_ = kInf;
  s.normalize();
  return s;
}

Series Series::constant(const FieldPtr& F, Elem c, Cap cap, int ram) {
  return monomial(F, c, 0, cap, ram);
}

Series Series::monomial(const FieldPtr& F, Elem c, long long k, Cap cap, int ram) {
  Series s(F, cap, ram);
  if (c == 0) return zero(F, cap, ram);
  s.val_ = k;
  s.prec_ = kInf;
  s.c_.assign(1, c);
  s.normalize();
  return s;
}

Series Series::from_coeffs(const FieldPtr& F, long long val, std::vector<Elem> c, long long prec,
                           Cap cap, int ram) {
  Series s(F, cap, ram);
  s.val_ = val;
  if (static_cast<long long>(c.size()) > prec - val) c.resize(std::max(0LL, prec - val));
  c.resize(std::max(0LL, prec - val), 0);
  s.c_ = std::move(c);
  s.prec_ = prec;
  s.normalize();
  return s;
}

void Series::normalize() {
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    val_ = prec_;
  } else if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<long long>(lead);
  }
  long long limit = cap_.abs;
  if (!c_.empty()) limit = std::min(limit, clamp_add(val_, cap_.rel));
  if (prec_ > limit) {
    prec_ = limit;
    if (c_.empty()) {
      val_ = prec_;
    } else if (prec_ <= val_) {
      c_.clear();
      val_ = prec_;
    } else {
      c_.resize(static_cast<size_t>(prec_ - val_));
      // trailing part may now start with zeros only if lead was zero; lead is nonzero.
    }
  }
  if (c_.empty()) val_ = prec_;
}

Elem Series::coeff(long long i) const {
  if (i >= prec_) throw std::out_of_range("series coefficient beyond precision");
  if (i < val_) return 0;
  return c_[static_cast<size_t>(i - val_)];
}

long long Series::valuation() const {
  if (c_.empty()) throw std::domain_error("valuation of a series indistinguishable from zero");
  return val_;
}

Series Series::operator+(const Series& o) const {
  Series r(F_ ? F_ : o.F_, cap_.meet(o.cap_), ram_);
  r.prec_ = std::min(prec_, o.prec_);
  long long lo = std::min(val_, o.val_);
  if (lo >= r.prec_) {
    r.val_ = r.prec_;
    r.normalize();
    return r;
  }
  r.val_ = lo;
  r.c_.assign(static_cast<size_t>(r.prec_ - lo), 0);
  const Field& F = *r.F_;
  for (size_t i = 0; i < c_.size(); ++i) {
    long long k = val_ + static_cast<long long>(i);
    if (k >= r.prec_) break;
    r.c_[k - lo] = c_[i];
  }
  for (size_t i = 0; i < o.c_.size(); ++i) {
    long long k = o.val_ + static_cast<long long>(i);
    if (k >= r.prec_) break;
    r.c_[k - lo] = F.add(r.c_[k - lo], o.c_[i]);
  }
  r.normalize();
  return r;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = F_->neg(x);
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  Series r(F_ ? F_ : o.F_, cap_.meet(o.cap_), ram_);
  r.prec_ = std::min(clamp_add(prec_, o.val_), clamp_add(o.prec_, val_));
  if (c_.empty() || o.c_.empty()) {
    r.val_ = r.prec_;
    r.normalize();
    return r;
  }
  r.val_ = val_ + o.val_;
  long long limit = std::min(r.prec_, r.cap_.abs);
  limit = std::min(limit, clamp_add(r.val_, r.cap_.rel));
  r.prec_ = limit;
  if (limit <= r.val_) {
    r.c_.clear();
    r.val_ = r.prec_;
    r.normalize();
    return r;
  }
  const size_t len = static_cast<size_t>(limit - r.val_);
  r.c_.assign(len, 0);
  const Field& F = *r.F_;
  const size_t na = std::min(c_.size(), len), nb = std::min(o.c_.size(), len);
  for (size_t i = 0; i < na; ++i) {
    Elem a = c_[i];
    if (a == 0) continue;
    const size_t jmax = std::min(nb, len - i);
    for (size_t j = 0; j < jmax; ++j)
      if (o.c_[j] != 0) r.c_[i + j] = F.add(r.c_[i + j], F.mul(a, o.c_[j]));
  }
  r.normalize();
  return r;
}

Series Series::scale(Elem c) const {
  if (c == 0) return zero(F_, cap_, ram_);
  Series r = *this;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Series Series::inv() const {
  if (c_.empty()) throw std::domain_error("inverse of a series indistinguishable from zero");
  const long long rel = prec_ >= kInf ? std::min(cap_.rel, kInf) : prec_ - val_;
  long long n = rel;
  if (n >= kInf) n = cap_.abs >= kInf ? 64 : std::max<long long>(1, cap_.abs + val_);
  if (n >= kInf / 2) n = 64;
  // Exact monomials invert exactly.
  if (c_.size() == 1 && prec_ >= kInf) return monomial(F_, F_->inv(c_[0]), -val_, cap_, ram_);
  const Field& F = *F_;
  std::vector<Elem> b(static_cast<size_t>(n), 0);
  Elem c0i = F.inv(c_[0]);
  b[0] = c0i;
  for (long long k = 1; k < n; ++k) {
    Elem acc = 0;
    long long jmax = std::min<long long>(k, static_cast<long long>(c_.size()) - 1);
    for (long long j = 1; j <= jmax; ++j) acc = F.add(acc, F.mul(c_[j], b[k - j]));
    b[k] = F.neg(F.mul(c0i, acc));
  }
  return from_coeffs(F_, -val_, std::move(b), -val_ + n, cap_, ram_);
}

Series Series::pow(long long k) const {
  if (k < 0) return inv().pow(-k);
  Series r = constant(F_, 1, cap_, ram_), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Series Series::frob(int k) const {
  long long Q = 1;
  for (int i = 0; i < k; ++i) Q *= F_->q();
  Series r(F_, cap_, ram_);
  auto mulc = [&](long long a) {
    if (a >= kInf || a <= -kInf) return a;
    __int128 x = static_cast<__int128>(a) * Q;
    if (x >= kInf) return kInf;
    if (x <= -kInf) return -kInf;
    return static_cast<long long>(x);
  };
  r.prec_ = mulc(prec_);
  if (c_.empty()) {
    r.val_ = r.prec_;
    r.normalize();
    return r;
  }
  r.val_ = mulc(val_);
  long long limit = std::min({r.prec_, cap_.abs, clamp_add(r.val_, cap_.rel)});
  r.prec_ = limit;
  if (limit <= r.val_) {
    r.val_ = r.prec_;
    r.normalize();
    return r;
  }
  r.c_.assign(static_cast<size_t>(limit - r.val_), 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    long long pos = static_cast<long long>(i) * Q;
    if (pos >= limit - r.val_) break;
    r.c_[pos] = F_->frob(c_[i], k);
  }
  r.normalize();
  return r;
}

Series Series::frob_coeffs(long long k) const {
  Series r = *this;
  for (auto& x : r.c_) x = F_->frob(x, k);
  return r;
}

Series Series::shift(long long k) const {
  Series r = *this;
  if (r.val_ < kInf) r.val_ += k;
  if (r.prec_ < kInf) r.prec_ += k;
  r.normalize();
  return r;
}

Series Series::truncate(long long prec) const {
  Series r = *this;
  if (prec < r.prec_) {
    r.prec_ = prec;
    if (r.c_.empty() || prec <= r.val_) {
      r.c_.clear();
      r.val_ = prec;
    } else {
      r.c_.resize(static_cast<size_t>(prec - r.val_));
    }
  }
  r.normalize();
  return r;
}

Series Series::with_cap(Cap cap) const {
  Series r = *this;
  r.cap_ = cap;
  r.normalize();
  return r;
}

Series Series::map_field(const Embedding& emb) const {
  Series r = *this;
  r.F_ = emb.big();
  for (auto& x : r.c_) x = emb(x);
  return r;
}

long long Series::agree_upto(const Series& o) const {
  long long n = std::min(prec_, o.prec_);
  long long lo = std::min(val_, o.val_);
  for (long long i = lo; i < n; ++i)
    if (coeff(i) != o.coeff(i)) return i;
  return n;
}

bool Series::equals_to(const Series& o, long long n) const {
  long long a = agree_upto(o);
  return a >= n;
}

bool Series::is_constant_upto(long long n) const {
  if (val_ < 0 && !c_.empty()) return false;
  for (long long i = std::max(1LL, val_); i < std::min(n, prec_); ++i)
    if (coeff(i) != 0) return false;
  return prec_ >= n;
}

std::string Series::digest() const {
  std::ostringstream os;
  os << (F_ ? F_->name() : std::string("GF(?)")) << ";";
  if (ram_ == 0)
    os << "inf";
  else
    os << "ram=" << ram_;
  os << ";prec=" << prec_ << ";val=";
  if (c_.empty())
    os << "none";
  else
    os << val_;
  os << ";c=";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  return os.str();
}

}  // namespace ffg
