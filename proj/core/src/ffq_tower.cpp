#include "ffgauss/ffq_tower.hpp"

#include <algorithm>
#include <sstream>

namespace ffg {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(long long q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  long long p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  long long r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1 || !is_prime(p))
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), e};
}

namespace {

std::recursive_mutex& field_mutex() {
  static std::recursive_mutex mu;
  return mu;
}

std::map<std::pair<int, int>, FieldPtr>& field_cache() {
  static std::map<std::pair<int, int>, FieldPtr> cache;
  return cache;
}

// a * b mod f for length-m coefficient vectors over the base field.
std::vector<Elem> mulmod_vec(const Field& B, const std::vector<Elem>& a,
                             const std::vector<Elem>& b,
                             const std::vector<Elem>& f) {
  const size_t m = f.size() - 1;
  std::vector<Elem> prod(2 * m, 0);
  for (size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < m; ++j)
      prod[i + j] = B.add(prod[i + j], B.mul(a[i], b[j]));
  }
  for (size_t k = 2 * m - 1; k >= m; --k) {
    Elem c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (size_t j = 0; j < m; ++j)
      prod[k - m + j] = B.sub(prod[k - m + j], B.mul(c, f[j]));
  }
  prod.resize(m);
  return prod;
}

}  // namespace

FieldPtr Field::get(int q, int m) {
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::lock_guard<std::recursive_mutex> lock(field_mutex());
  auto key = std::make_pair(q, m);
  auto it = field_cache().find(key);
  if (it != field_cache().end()) return it->second;
  FieldPtr f = build(q, m);
  field_cache()[key] = f;
  return f;
}

FieldPtr Field::base() const { return Field::get(q_, 1); }

FieldPtr Field::build(int q, int m) {
  auto [p, e] = prime_power(q);
  long long sz = 1;
  for (int i = 0; i < e * m; ++i) {
    sz *= p;
    if (sz > (1LL << 24)) throw std::invalid_argument("field too large");
  }
  std::shared_ptr<Field> F(new Field());
  F->p_ = p;
  F->e_ = e;
  F->q_ = q;
  F->m_ = m;
  F->size_ = static_cast<Elem>(sz);
  const std::uint32_t N1 = F->size_ - 1;

  if (m == 1 && e > 1) {
    FieldPtr inner = Field::get(p, e);
    F->exp_ = inner->exp_;
    F->log_ = inner->log_;
    F->zech_ = inner->zech_;
    F->modulus_ = {0, 1};
    F->qpow_mod_ = {1 % N1};
    return F;
  }

  std::vector<Elem> gen_exp(N1);
  if (m == 1) {
    // Prime field: smallest primitive root.
    F->modulus_ = {0, 1};
    for (long long g = 1; g < p; ++g) {
      long long x = 1;
      bool ok = true;
      for (std::uint32_t k = 0; k < N1; ++k) {
        gen_exp[k] = static_cast<Elem>(x);
        if (k > 0 && x == 1) {
          ok = false;
          break;
        }
        x = x * g % p;
      }
      if (ok) break;
    }
  } else {
    FieldPtr B = Field::get(q, 1);
    long long total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    for (long long k = 0; k < total; ++k) {
      fpoly::P f(m + 1, 0);
      long long r = k;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<Elem>(r % q);
        r /= q;
      }
      f[m] = 1;
      if (fpoly::is_irreducible(*B, f)) {
        F->modulus_ = f;
        break;
      }
    }
    auto vec_of = [&](Elem idx) {
      std::vector<Elem> v(m);
      for (int i = 0; i < m; ++i) {
        v[i] = idx % q;
        idx /= q;
      }
      return v;
    };
    auto idx_of = [&](const std::vector<Elem>& v) {
      Elem idx = 0;
      for (int i = m - 1; i >= 0; --i) idx = idx * q + v[i];
      return idx;
    };
    // Candidates in index order starting at u.
    for (Elem cand = static_cast<Elem>(q); cand < F->size_; ++cand) {
      std::vector<Elem> g = vec_of(cand);
      std::vector<Elem> x(m, 0);
      x[0] = 1;
      bool ok = true;
      for (std::uint32_t k = 0; k < N1; ++k) {
        Elem idx = idx_of(x);
        if (k > 0 && idx == 1) {
          ok = false;
          break;
        }
        gen_exp[k] = idx;
        x = mulmod_vec(*B, x, g, F->modulus_);
      }
      if (ok) break;
    }
  }

  F->exp_.assign(2 * static_cast<size_t>(N1), 0);
  F->log_.assign(F->size_, 0);
  for (std::uint32_t k = 0; k < N1; ++k) {
    F->exp_[k] = gen_exp[k];
    F->exp_[k + N1] = gen_exp[k];
    F->log_[gen_exp[k]] = k;
  }
  F->zech_.assign(N1, -1);
  for (std::uint32_t k = 0; k < N1; ++k) {
    Elem idx = F->exp_[k];
    Elem d0 = idx % p;
    Elem idx1 = idx - d0 + (d0 + 1) % p;
    F->zech_[k] = idx1 == 0 ? -1 : static_cast<std::int64_t>(F->log_[idx1]);
  }
  F->qpow_mod_.resize(m);
  std::uint64_t acc = 1 % N1;
  for (int s = 0; s < m; ++s) {
    F->qpow_mod_[s] = static_cast<std::uint32_t>(acc);
    acc = acc * static_cast<std::uint64_t>(q) % N1;
  }
  return F;
}

Elem Field::exp(long long k) const {
  long long r = k % static_cast<long long>(order());
  if (r < 0) r += order();
  return exp_[r];
}

Elem Field::pow(Elem a, long long k) const {
  if (a == 0) {
    if (k == 0) return 1;
    if (k < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  long long o = order();
  long long kk = k % o;
  if (kk < 0) kk += o;
  return exp_[static_cast<std::uint64_t>(log_[a]) * kk % o];
}

Elem Field::frob(Elem a, long long s) const {
  if (a == 0 || a == 1) return a;
  long long ss = s % m_;
  if (ss < 0) ss += m_;
  if (ss == 0) return a;
  return exp_[static_cast<std::uint64_t>(log_[a]) * qpow_mod_[ss] % order()];
}

Elem Field::from_int(long long k) const {
  long long r = k % p_;
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<Elem> Field::coeffs(Elem a) const {
  std::vector<Elem> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = a % q_;
    a /= q_;
  }
  return c;
}

Elem Field::from_coeffs(const std::vector<Elem>& c) const {
  Elem idx = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) idx = idx * q_ + c[i];
  return idx;
}

std::string Field::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << "^" << m_ << ")";
  return os.str();
}

FFElem frobenius(const FFElem& x, long long s) { return {x.F, x.F->frob(x.v, s)}; }

Embedding::Embedding(FieldPtr small, FieldPtr big, Elem gen_image)
    : small_(std::move(small)), big_(std::move(big)), gen_image_(gen_image) {
  if (small_->q() != big_->q() || big_->m() % small_->m() != 0)
    throw std::invalid_argument("not a subfield");
  map_.resize(small_->size());
  for (Elem x = 0; x < small_->size(); ++x) {
    auto c = small_->coeffs(x);
    Elem acc = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
      acc = big_->add(big_->mul(acc, gen_image_), c[i]);
    map_[x] = acc;
    inv_[acc] = x;
  }
}

Elem Embedding::back(Elem x) const {
  auto it = inv_.find(x);
  if (it == inv_.end()) throw std::domain_error("element not in subfield image");
  return it->second;
}

EmbeddingPtr Embedding::standard(const FieldPtr& small, const FieldPtr& big) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, EmbeddingPtr> cache;
  auto key = std::make_tuple(small->q(), small->m(), big->m());
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  if (small->q() != big->q() || big->m() % small->m() != 0)
    throw std::invalid_argument("not a subfield");
  Elem gen = 0;
  if (small->m() == 1) {
    gen = 0;  // image of u = 0 in degree-1 representation is unused
  } else {
    auto roots = roots_over(small->base(), small->modulus(), big);
    if (roots.empty()) throw std::logic_error("subfield modulus has no root");
    gen = roots.front();
  }
  auto emb = std::make_shared<Embedding>(small, big, gen);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, emb);
  return cache[key];
}

std::pair<FFElem, FFElem> trace_norm(const FFElem& x, const FieldPtr& down) {
  const Field& F = *x.F;
  if (down->q() != F.q() || F.m() % down->m() != 0)
    throw std::invalid_argument("trace_norm: target is not a subfield");
  int steps = F.m() / down->m();
  Elem t = 0, n = 1, y = x.v;
  for (int s = 0; s < steps; ++s) {
    t = F.add(t, y);
    n = F.mul(n, y);
    y = F.frob(y, down->m());
  }
  auto emb = Embedding::standard(down, x.F);
  return {FFElem(down, emb->back(t)), FFElem(down, emb->back(n))};
}

std::vector<Elem> roots_over(const FieldPtr& src, const fpoly::P& f,
                             const FieldPtr& target) {
  fpoly::P g = f;
  fpoly::trim(g);
  if (g.empty()) throw std::invalid_argument("roots_over: zero polynomial");
  if (src->m() > 1) {
    auto emb = Embedding::standard(src, target);
    for (auto& c : g) c = (*emb)(c);
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < target->size(); ++x)
    if (fpoly::eval(*target, g, x) == 0) out.push_back(x);
  return out;
}

namespace fpoly {

void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const P& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

P add(const Field& F, const P& a, const P& b) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

P sub(const Field& F, const P& a, const P& b) {
  P r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

P mul(const Field& F, const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

P scale(const Field& F, const P& a, Elem c) {
  P r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

std::pair<P, P> divmod(const Field& F, const P& a, const P& b) {
  int db = deg(b);
  if (db < 0) throw std::domain_error("polynomial division by zero");
  P r = a;
  trim(r);
  int dr = deg(r);
  if (dr < db) return {{}, r};
  P qt(dr - db + 1, 0);
  Elem lc_inv = F.inv(b[db]);
  for (int k = dr; k >= db; --k) {
    Elem c = r[k];
    if (c == 0) continue;
    Elem t = F.mul(c, lc_inv);
    qt[k - db] = t;
    for (int j = 0; j <= db; ++j) r[k - db + j] = F.sub(r[k - db + j], F.mul(t, b[j]));
  }
  trim(qt);
  trim(r);
  return {qt, r};
}

P mod(const Field& F, const P& a, const P& b) { return divmod(F, a, b).second; }

P gcd(const Field& F, P a, P b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    P r = mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(F, a, F.inv(a.back()));
  return a;
}

P powmod(const Field& F, const P& a, unsigned long long k, const P& f) {
  P result{1};
  P base = mod(F, a, f);
  while (k > 0) {
    if (k & 1) result = mod(F, mul(F, result, base), f);
    base = mod(F, mul(F, base, base), f);
    k >>= 1;
  }
  return mod(F, result, f);
}

Elem eval(const Field& F, const P& a, Elem x) {
  Elem acc = 0;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) acc = F.add(F.mul(acc, x), a[i]);
  return acc;
}

bool is_irreducible(const Field& F, const P& f) {
  int m = deg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  const unsigned long long q = F.size();
  // Frobenius images u^{q^k} mod f for k = 0..m.
  std::vector<P> fr(m + 1);
  fr[0] = mod(F, P{0, 1}, f);
  for (int k = 1; k <= m; ++k) fr[k] = powmod(F, fr[k - 1], q, f);
  if (sub(F, fr[m], fr[0]).size() != 0) return false;
  for (int r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime(r)) continue;
    P g = gcd(F, sub(F, fr[m / r], fr[0]), f);
    if (deg(g) > 0) return false;
  }
  return true;
}

}  // namespace fpoly

}  // namespace ffg
