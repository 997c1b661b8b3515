#include "padlift/padic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace padlift {

namespace {

// ---- polynomial arithmetic over F_p (dense coefficient vectors) ----

std::vector<Int> fp_trim(std::vector<Int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<Int> fp_mulmod(const std::vector<Int>& a, const std::vector<Int>& b,
                           const std::vector<Int>& m, const Int& p) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (auto& x : c) x = mod_reduce(x, p);
  // m is monic of degree f; reduce c modulo m.
  size_t f = m.size() - 1;
  for (size_t k = c.size(); k-- > f;) {
    Int lead = c[k];
    if (lead == 0) continue;
    for (size_t t = 0; t < f; ++t)
      c[k - f + t] = mod_reduce(c[k - f + t] - lead * m[t], p);
    c[k] = 0;
  }
  c.resize(f);
  return c;
}

std::vector<Int> fp_powmod(std::vector<Int> base, Int k,
                           const std::vector<Int>& m, const Int& p) {
  std::vector<Int> r{Int(1)};
  while (k > 0) {
    if (bit_test(k, 0)) r = fp_mulmod(r, base, m, p);
    base = fp_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

std::vector<Int> fp_gcd(std::vector<Int> a, std::vector<Int> b, const Int& p) {
  a = fp_trim(std::move(a));
  b = fp_trim(std::move(b));
  while (!b.empty()) {
    // a mod b
    Int inv_lead = mod_inverse(b.back(), p);
    while (a.size() >= b.size()) {
      Int c = mod_reduce(a.back() * inv_lead, p);
      size_t off = a.size() - b.size();
      if (c != 0)
        for (size_t t = 0; t < b.size(); ++t)
          a[off + t] = mod_reduce(a[off + t] - c * b[t], p);
      a.pop_back();
      a = fp_trim(std::move(a));
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool irreducible_mod_p(const std::vector<Int>& m, const Int& p) {
  size_t f = m.size() - 1;
  std::vector<Int> u{Int(0), Int(1)};
  // u^(p^f) == u mod (m, p)
  std::vector<Int> t = u;
  for (size_t k = 0; k < f; ++k) t = fp_powmod(t, p, m, p);
  std::vector<Int> diff = t;
  if (diff.size() < 2) diff.resize(2, Int(0));
  diff[1] = mod_reduce(diff[1] - 1, p);
  if (!fp_trim(diff).empty()) return false;
  // gcd(u^(p^(f/l)) - u, m) = 1 for every prime l | f
  std::vector<size_t> prime_divs;
  size_t n = f;
  for (size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_divs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_divs.push_back(n);
  for (size_t l : prime_divs) {
    std::vector<Int> s = u;
    for (size_t k = 0; k < f / l; ++k) s = fp_powmod(s, p, m, p);
    std::vector<Int> d = s;
    if (d.size() < 2) d.resize(2, Int(0));
    d[1] = mod_reduce(d[1] - 1, p);
    std::vector<Int> g = fp_gcd(std::move(d), m, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::string Valuation::str() const {
  std::ostringstream os;
  if (at_least) os << ">=";
  os << v;
  return os.str();
}

Valuation val_min(const Valuation& a, const Valuation& b) {
  // min of two (partially known) valuations: an exact value below the other's
  // bound stays exact; otherwise only a bound survives.
  if (!a.at_least && a.v <= b.v) return a;
  if (!b.at_least && b.v <= a.v) return b;
  return Valuation::bound(std::min(a.v, b.v));
}

// ---- field implementation ----

struct PadicField::Impl {
  Int p;
  int f = 1;
  int e = 1;
  int N = 1;
  long long guard = 0;
  long long B = 0;   // p-adic digits carried per coordinate
  Int base;          // p^B
  Int q;             // p^f
  std::vector<Int> unram;                 // monic, degree f, coeffs mod base
  std::vector<std::vector<Int>> eis;      // monic, degree e, O_{E0} coeffs
  // pi^k for k = 0..2e-2 written in the basis: e rows of f coordinates each.
  std::vector<std::vector<Int>> pi_pow;
  std::vector<Int> w;       // pi^e / p (a unit), full coordinates
  std::vector<Int> w_inv;   // its inverse

  size_t dim() const { return static_cast<size_t>(f) * e; }

  Int rb(const Int& x) const { return mod_reduce(x, base); }

  // O_{E0} product of two u-coordinate rows (length f), reduced mod unram.
  std::vector<Int> row_mul(const std::vector<Int>& a,
                           const std::vector<Int>& b) const {
    std::vector<Int> c(2 * f - 1, Int(0));
    for (int i = 0; i < f; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < f; ++j)
        if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    for (int k = 2 * f - 2; k >= f; --k) {
      if (c[k] == 0) continue;
      Int lead = c[k];
      for (int t = 0; t < f; ++t) c[k - f + t] -= lead * unram[t];
      c[k] = 0;
    }
    c.resize(f);
    for (auto& x : c) x = rb(x);
    return c;
  }

  std::vector<Int> mul_coords(const std::vector<Int>& a,
                              const std::vector<Int>& b) const {
    // Convolve in pi with O_{E0} coefficients, then fold pi^k (k >= e) using
    // the precomputed table.
    std::vector<std::vector<Int>> acc(2 * e - 1, std::vector<Int>(f, Int(0)));
    for (int i = 0; i < e; ++i) {
      const Int* ra = &a[static_cast<size_t>(i) * f];
      bool zero = true;
      for (int j = 0; j < f; ++j)
        if (ra[j] != 0) {
          zero = false;
          break;
        }
      if (zero) continue;
      for (int k = 0; k < e; ++k) {
        const Int* rbp = &b[static_cast<size_t>(k) * f];
        auto& dst = acc[i + k];
        std::vector<Int> prod(2 * f - 1, Int(0));
        for (int ja = 0; ja < f; ++ja) {
          if (ra[ja] == 0) continue;
          for (int jb = 0; jb < f; ++jb)
            if (rbp[jb] != 0) prod[ja + jb] += ra[ja] * rbp[jb];
        }
        for (int t = 2 * f - 2; t >= f; --t) {
          if (prod[t] == 0) continue;
          Int lead = prod[t];
          for (int s = 0; s < f; ++s) prod[t - f + s] -= lead * unram[s];
          prod[t] = 0;
        }
        for (int s = 0; s < f; ++s) dst[s] += prod[s];
      }
    }
    std::vector<Int> out(dim(), Int(0));
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < f; ++j) out[static_cast<size_t>(i) * f + j] = acc[i][j];
    for (int k = e; k <= 2 * e - 2; ++k) {
      auto row = acc[k];  // O_{E0} coefficient of pi^k
      bool zero = true;
      for (auto& x : row)
        if (x != 0) {
          zero = false;
          break;
        }
      if (zero) continue;
      for (auto& x : row) x = rb(x);
      // row * pi^k, with pi^k = sum_i pipow_row_i(u) pi^i
      for (int i = 0; i < e; ++i) {
        std::vector<Int> piece(pi_pow[k].begin() + static_cast<size_t>(i) * f,
                               pi_pow[k].begin() + static_cast<size_t>(i + 1) * f);
        bool pz = true;
        for (auto& x : piece)
          if (x != 0) {
            pz = false;
            break;
          }
        if (pz) continue;
        auto prod = row_mul(row, piece);
        for (int j = 0; j < f; ++j)
          out[static_cast<size_t>(i) * f + j] += prod[j];
      }
    }
    for (auto& x : out) x = rb(x);
    return out;
  }

  std::vector<Int> add_coords(const std::vector<Int>& a,
                              const std::vector<Int>& b) const {
    std::vector<Int> c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = rb(a[i] + b[i]);
    return c;
  }

  std::vector<Int> sub_coords(const std::vector<Int>& a,
                              const std::vector<Int>& b) const {
    std::vector<Int> c(dim());
    for (size_t i = 0; i < dim(); ++i) c[i] = rb(a[i] - b[i]);
    return c;
  }

  std::vector<Int> one_coords() const {
    std::vector<Int> c(dim(), Int(0));
    c[0] = 1;
    return c;
  }

  long long min_val_coords(const std::vector<Int>& c) const {
    // min over stored coordinates of e*val_p + i; dim()*B acts as infinity.
    long long best = e * B;
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < f; ++j) {
        const Int& x = c[static_cast<size_t>(i) * f + j];
        if (x == 0) continue;
        long long vp = p_valuation(x, p, B);
        best = std::min(best, e * vp + i);
      }
    return best;
  }

  std::vector<Int> res_inv_coords(const std::vector<Int>& r) const {
    // inverse in F_q via x^(q-2)
    std::vector<Int> m(f + 1);
    for (int j = 0; j <= f; ++j) m[j] = mod_reduce(unram[j], p);
    std::vector<Int> x(r.begin(), r.begin() + f);
    for (auto& v : x) v = mod_reduce(v, p);
    auto y = fp_powmod(fp_trim(x), q - 2, m, p);
    y.resize(f, Int(0));
    return y;
  }

  std::vector<Int> invert_coords(const std::vector<Int>& x) const {
    // Newton lift of the residue-field inverse: y <- y(2 - x y). The number
    // of correct varpi digits doubles each round.
    std::vector<Int> y(dim(), Int(0));
    auto r = res_inv_coords(x);
    for (int j = 0; j < f; ++j) y[j] = r[j];
    long long target = e * B;
    int rounds = 1;
    while ((1LL << rounds) < target) ++rounds;
    ++rounds;
    auto two = one_coords();
    two[0] = rb(Int(2));
    for (int it = 0; it < rounds; ++it) {
      auto t = sub_coords(two, mul_coords(x, y));
      y = mul_coords(y, t);
    }
    return y;
  }
};

static void check_field_input(const Int& p, int f, int e, int N) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::NotPrime, "p is not prime");
  if (f < 1 || e < 1) throw Error(Errc::BadInput, "f and e must be positive");
  if (N < 1) throw Error(Errc::BadInput, "precision cap N must be positive");
}

long long PadicField::default_guard(const Int& p, long long max_series_order) {
  long long pm1 = (p > 65) ? 64 : static_cast<long long>(p) - 1;
  return 2 + (max_series_order + pm1 - 1) / pm1;
}

PadicField PadicField::make(const Int& p, int f, int e,
                            std::vector<Int> unram_poly,
                            std::vector<std::vector<Int>> eis_poly, int N,
                            long long guard) {
  check_field_input(p, f, e, N);
  if (guard < 0) guard = default_guard(p, 64);
  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->f = f;
  impl->e = e;
  impl->N = N;
  impl->guard = guard;
  impl->B = (N + e - 1) / e + guard;
  impl->base = pow_int(p, impl->B);
  impl->q = pow_int(p, f);

  if (f == 1) {
    impl->unram = {Int(0), Int(1)};  // placeholder u - 0; never consulted
  } else {
    if (static_cast<int>(unram_poly.size()) != f + 1 || unram_poly[f] != 1)
      throw Error(Errc::BadInput, "unramified polynomial must be monic of degree f");
    if (!irreducible_mod_p(unram_poly, p))
      throw Error(Errc::NotIrreducibleModP,
                  "unramified polynomial is reducible mod p");
    impl->unram = std::move(unram_poly);
    for (auto& c : impl->unram) c = impl->rb(c);
    impl->unram[f] = 1;
  }

  if (static_cast<int>(eis_poly.size()) != e + 1)
    throw Error(Errc::BadInput, "Eisenstein polynomial must have degree e");
  for (auto& row : eis_poly) {
    if (static_cast<int>(row.size()) > f)
      throw Error(Errc::BadInput, "Eisenstein coefficient has too many coordinates");
    row.resize(f, Int(0));
    for (auto& c : row) c = impl->rb(c);
  }
  {
    auto& lead = eis_poly[e];
    if (lead[0] != 1 ||
        std::any_of(lead.begin() + 1, lead.end(), [](const Int& c) { return c != 0; }))
      throw Error(Errc::NotEisenstein, "Eisenstein polynomial must be monic");
    for (int i = 0; i < e; ++i)
      for (const Int& c : eis_poly[i])
        if (mod_reduce(c, p) != 0)
          throw Error(Errc::NotEisenstein,
                      "lower Eisenstein coefficients must be divisible by p");
    bool const_val_one = false;
    for (const Int& c : eis_poly[0])
      if (c != 0 && p_valuation(c, p, impl->B) == 1) const_val_one = true;
    if (!const_val_one)
      throw Error(Errc::NotEisenstein,
                  "constant Eisenstein coefficient must have valuation exactly 1");
  }
  impl->eis = std::move(eis_poly);

  // pi^k table for k = 0..2e-2. pi^e = -sum_{i<e} E_i pi^i.
  impl->pi_pow.assign(2 * e - 1, std::vector<Int>(impl->dim(), Int(0)));
  for (int k = 0; k < e; ++k)
    impl->pi_pow[k][static_cast<size_t>(k) * f] = 1;
  if (e >= 2) {
    std::vector<Int> pe(impl->dim(), Int(0));
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < f; ++j)
        pe[static_cast<size_t>(i) * f + j] = impl->rb(-impl->eis[i][j]);
    impl->pi_pow[e] = pe;
    for (int k = e + 1; k <= 2 * e - 2; ++k) {
      // shift the previous power by one pi and fold the overflow row via pe
      const auto& prev = impl->pi_pow[k - 1];
      std::vector<Int> cur(impl->dim(), Int(0));
      for (int i = 0; i + 1 < e; ++i)
        for (int j = 0; j < f; ++j)
          cur[static_cast<size_t>(i + 1) * f + j] = prev[static_cast<size_t>(i) * f + j];
      std::vector<Int> top(prev.begin() + static_cast<size_t>(e - 1) * f,
                           prev.begin() + static_cast<size_t>(e) * f);
      for (int i = 0; i < e; ++i) {
        std::vector<Int> piece(pe.begin() + static_cast<size_t>(i) * f,
                               pe.begin() + static_cast<size_t>(i + 1) * f);
        auto prod = impl->row_mul(top, piece);
        for (int j = 0; j < f; ++j) {
          auto& slot = cur[static_cast<size_t>(i) * f + j];
          slot = impl->rb(slot + prod[j]);
        }
      }
      impl->pi_pow[k] = cur;
    }
  }

  // w = pi^e / p: divide the expansion of pi^e by p coordinate-wise (exact by
  // the Eisenstein condition). For e = 1 this is -E_0 / p.
  {
    std::vector<Int> pe_coords;
    if (e >= 2) {
      pe_coords = impl->pi_pow[e];
    } else {
      pe_coords.assign(impl->dim(), Int(0));
      for (int j = 0; j < f; ++j) pe_coords[j] = impl->rb(-impl->eis[0][j]);
    }
    impl->w.assign(impl->dim(), Int(0));
    for (size_t i = 0; i < impl->dim(); ++i) {
      // Coordinates are reduced representatives; recover divisibility by
      // lifting to a representative divisible by p inside [0, p^B).
      Int c = pe_coords[i];
      if (mod_reduce(c, p) != 0)
        throw Error(Errc::NotEisenstein, "pi^e is not divisible by p");
      impl->w[i] = impl->rb(c / p);
    }
    impl->w_inv = impl->invert_coords(impl->w);
  }

  return PadicField(std::move(impl));
}

PadicField PadicField::make_qp(const Int& p, int N, long long guard) {
  return make(p, 1, 1, {}, {{-p}, {Int(1)}}, N, guard);
}

const Int& PadicField::p() const { return impl->p; }
int PadicField::f() const { return impl->f; }
int PadicField::e() const { return impl->e; }
Int PadicField::q() const { return impl->q; }
int PadicField::N() const { return impl->N; }
long long PadicField::guard() const { return impl->guard; }
long long PadicField::base_digits() const { return impl->B; }
const Int& PadicField::base_modulus() const { return impl->base; }
long long PadicField::max_prec() const { return impl->e * impl->B; }
const std::vector<Int>& PadicField::unram_poly() const { return impl->unram; }
const std::vector<std::vector<Int>>& PadicField::eis_poly() const {
  return impl->eis;
}

bool PadicField::same_tower(const PadicField& other) const {
  if (impl == other.impl) return true;
  return impl->p == other.impl->p && impl->f == other.impl->f &&
         impl->e == other.impl->e &&
         (impl->f == 1 || impl->unram == other.impl->unram) &&
         impl->eis == other.impl->eis;
}

bool PadicField::same_as(const PadicField& other) const {
  return same_tower(other) && impl->N == other.impl->N &&
         impl->guard == other.impl->guard;
}

PadicElem PadicField::zero() const {
  return PadicElem(*this, std::vector<Int>(impl->dim(), Int(0)), max_prec());
}

PadicElem PadicField::one() const {
  return PadicElem(*this, impl->one_coords(), max_prec());
}

PadicElem PadicField::from_int(const Int& v) const {
  std::vector<Int> c(impl->dim(), Int(0));
  c[0] = impl->rb(v);
  return PadicElem(*this, std::move(c), max_prec());
}

PadicElem PadicField::from_coords(std::vector<Int> coords,
                                  long long prec) const {
  if (coords.size() != impl->dim())
    throw Error(Errc::BadInput, "coordinate vector has wrong length");
  for (auto& c : coords) c = impl->rb(c);
  return PadicElem(*this, std::move(coords), std::min(prec, max_prec()));
}

PadicElem PadicField::uniformizer() const {
  std::vector<Int> c(impl->dim(), Int(0));
  if (impl->e > 1) {
    c[static_cast<size_t>(impl->f)] = 1;
  } else {
    for (int j = 0; j < impl->f; ++j) c[j] = impl->rb(-impl->eis[0][j]);
  }
  return PadicElem(*this, std::move(c), max_prec());
}

void require_same_field(const PadicField& a, const PadicField& b,
                        const char* who) {
  if (!a.same_as(b))
    throw Error(Errc::FieldMismatch, std::string(who) + ": field descriptors differ");
}

// ---- elements ----

PadicElem::PadicElem(PadicField field, std::vector<Int> coords, long long prec)
    : field_(std::move(field)), coords_(std::move(coords)), prec_(prec) {}

long long PadicElem::reported_prec() const {
  return std::min<long long>(prec_, field_.N());
}

bool PadicElem::is_zero_stored() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Int& c) { return c == 0; });
}

PadicElem PadicElem::operator+(const PadicElem& o) const {
  require_same_field(field_, o.field_, "add");
  return PadicElem(field_, field_.impl->add_coords(coords_, o.coords_),
                   std::min(prec_, o.prec_));
}

PadicElem PadicElem::operator-(const PadicElem& o) const {
  require_same_field(field_, o.field_, "sub");
  return PadicElem(field_, field_.impl->sub_coords(coords_, o.coords_),
                   std::min(prec_, o.prec_));
}

PadicElem PadicElem::operator*(const PadicElem& o) const {
  require_same_field(field_, o.field_, "mul");
  // Valuation-aware claim: with x = x0 + eps_x (val eps_x >= prec_x), the
  // product error x0*eps_y + y0*eps_x + eps_x*eps_y has valuation at least
  // min(val(x0) + prec_y, val(y0) + prec_x).
  long long va = std::min(field_.impl->min_val_coords(coords_), prec_);
  long long vb = std::min(field_.impl->min_val_coords(o.coords_), o.prec_);
  long long prec = std::min(prec_ + vb, o.prec_ + va);
  prec = std::min(prec, field_.max_prec());
  return PadicElem(field_, field_.impl->mul_coords(coords_, o.coords_), prec);
}

PadicElem PadicElem::operator-() const {
  auto z = field_.zero();
  return z - *this;
}

PadicElem PadicElem::pow(long long k) const {
  if (k < 0) return invert(pow(-k));
  PadicElem r = field_.one().with_prec(prec_);
  PadicElem b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

PadicElem PadicElem::with_prec(long long prec) const {
  return PadicElem(field_, coords_, std::min(prec_, prec));
}

Valuation valuation(const PadicElem& x) {
  long long v = x.field().impl->min_val_coords(x.coords());
  if (v >= x.prec()) return Valuation::bound(x.prec());
  return Valuation::exact(v);
}

std::pair<Rational, bool> valuation_p(const PadicElem& x) {
  Valuation v = valuation(x);
  return {Rational(v.v, x.field().e()), !v.at_least};
}

PadicElem invert(const PadicElem& x) {
  Valuation v = valuation(x);
  if (!v.is_zero_exact())
    throw Error(Errc::NotAUnit, "invert: element is not a unit (valuation " +
                                    v.str() + ")");
  auto y = x.field().impl->invert_coords(x.coords());
  return PadicElem(x.field(), std::move(y), x.prec());
}

ResidueElem residue(const PadicElem& x) {
  const auto& impl = *x.field().impl;
  ResidueElem r;
  r.coords.resize(impl.f);
  for (int j = 0; j < impl.f; ++j) r.coords[j] = mod_reduce(x.coords()[j], impl.p);
  return r;
}

PadicElem mul_by_exact_pi_power(const PadicElem& x, long long k) {
  if (k == 0) return x;
  const auto& impl = *x.field().impl;
  long long e = impl.e;
  // pi^k = p^(k/e) * pi^(k%e) up to the relation pi^e = p w.
  long long a = k / e, r = k % e;
  std::vector<Int> c = x.coords();
  if (a > 0) {
    Int pa = pow_int(impl.p, a);
    for (auto& v : c) v = impl.rb(v * pa);
    PadicElem t(x.field(), std::move(c), x.prec());
    PadicElem wk = PadicElem(x.field(), impl.w, x.field().max_prec()).pow(a);
    t = t * wk;
    c = t.coords();
  }
  if (r > 0) {
    std::vector<Int> pir(impl.dim(), Int(0));
    if (e > 1) {
      pir[static_cast<size_t>(r) * impl.f] = 1;
      PadicElem t(x.field(), std::move(c), x.prec());
      t = t * PadicElem(x.field(), pir, x.field().max_prec());
      c = t.coords();
    }
  }
  return PadicElem(x.field(), std::move(c),
                   std::min(x.prec() + k, x.field().max_prec()));
}

PadicElem div_by_pi_power(const PadicElem& x, long long t) {
  if (t == 0) return x;
  if (t < 0) return mul_by_exact_pi_power(x, -t);
  const auto& impl = *x.field().impl;
  PadicElem cur = x;
  long long remaining = t;
  while (remaining > 0) {
    // Divide by p once after multiplying by pi^(e-1) w^{-1}; this removes
    // exactly one power of pi and costs one stored p-digit.
    long long e = impl.e;
    PadicElem y = cur;
    if (e > 1) {
      std::vector<Int> pir(impl.dim(), Int(0));
      pir[static_cast<size_t>(e - 1) * impl.f] = 1;
      y = y * PadicElem(x.field(), pir, x.field().max_prec());
    }
    y = y * PadicElem(x.field(), impl.w_inv, x.field().max_prec());
    std::vector<Int> c = y.coords();
    for (auto& v : c) {
      if (mod_reduce(v, impl.p) != 0)
        throw Error(Errc::NotDivisible,
                    "exact division by the uniformizer failed");
      v = v / impl.p;
    }
    cur = PadicElem(x.field(), std::move(c), cur.prec() - 1);
    if (cur.prec() <= 0)
      throw Error(Errc::PrecisionExhausted,
                  "division by the uniformizer exhausted all carried digits");
    --remaining;
  }
  return cur;
}

bool eq_at_joint_prec(const PadicElem& x, const PadicElem& y) {
  return valuation(x - y).at_least;
}

bool eq_at(const PadicElem& x, const PadicElem& y, long long t) {
  return valuation(x - y).lower() >= t;
}

PadicElem embed(const PadicElem& x, const PadicField& target) {
  const auto& src = *x.field().impl;
  if (src.f != 1 || src.e != 1)
    throw Error(Errc::BadInput, "embed: source must be the base field");
  if (src.p != target.p())
    throw Error(Errc::FieldMismatch, "embed: residue characteristics differ");
  std::vector<Int> c(target.impl->dim(), Int(0));
  c[0] = target.impl->rb(x.coords()[0]);
  long long known_digits = std::min<long long>(x.prec(), src.B);
  long long prec = std::min<long long>(target.e() * known_digits,
                                       target.max_prec());
  if (target.base_digits() > known_digits)
    prec = std::min<long long>(prec, target.e() * known_digits);
  return PadicElem(target, std::move(c), prec);
}

// ---- residue field ----

bool ResidueElem::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](const Int& c) { return c == 0; });
}

ResidueElem res_zero(const PadicField& k) {
  return ResidueElem{std::vector<Int>(static_cast<size_t>(k.f()), Int(0))};
}

ResidueElem res_one(const PadicField& k) {
  auto r = res_zero(k);
  r.coords[0] = 1;
  return r;
}

ResidueElem res_add(const PadicField& k, const ResidueElem& a,
                    const ResidueElem& b) {
  ResidueElem c = res_zero(k);
  for (int j = 0; j < k.f(); ++j)
    c.coords[j] = mod_reduce(a.coords[j] + b.coords[j], k.p());
  return c;
}

ResidueElem res_neg(const PadicField& k, const ResidueElem& a) {
  ResidueElem c = res_zero(k);
  for (int j = 0; j < k.f(); ++j) c.coords[j] = mod_reduce(-a.coords[j], k.p());
  return c;
}

ResidueElem res_mul(const PadicField& k, const ResidueElem& a,
                    const ResidueElem& b) {
  const auto& impl = *k.impl;
  std::vector<Int> m(impl.f + 1);
  for (int j = 0; j <= impl.f; ++j) m[j] = mod_reduce(impl.unram[j], impl.p);
  auto c = fp_mulmod(fp_trim(a.coords), fp_trim(b.coords), m, impl.p);
  c.resize(impl.f, Int(0));
  return ResidueElem{std::move(c)};
}

ResidueElem res_inverse(const PadicField& k, const ResidueElem& a) {
  if (a.is_zero())
    throw Error(Errc::NotAUnit, "residue inverse of zero");
  return ResidueElem{k.impl->res_inv_coords(a.coords)};
}

}  // namespace padlift
