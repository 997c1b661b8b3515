#include "padlift/weights.hpp"

#include <utility>

#include "padlift/error.hpp"

namespace padlift {

namespace {

using Poly = std::vector<Int>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& x, const Poly& y) {
  if (x.empty() || y.empty()) return {};
  Poly out(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  trim(out);
  return out;
}

// Remainder of x modulo a monic divisor; exact integer arithmetic.
Poly rem_monic(Poly x, const Poly& m) {
  trim(x);
  while (x.size() >= m.size()) {
    Int lead = x.back();
    size_t off = x.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) x[off + i] -= lead * m[i];
    trim(x);
  }
  return x;
}

// Exact quotient x / m for monic m dividing x.
Poly div_monic(Poly x, const Poly& m) {
  trim(x);
  if (x.empty()) return {};
  Poly q(x.size() - m.size() + 1, 0);
  while (x.size() >= m.size()) {
    Int lead = x.back();
    size_t off = x.size() - m.size();
    q[off] = lead;
    for (size_t i = 0; i < m.size(); ++i) x[off + i] -= lead * m[i];
    trim(x);
  }
  if (!x.empty())
    throw Error(Errc::BadInput, "cyclotomic division left a remainder");
  return q;
}

// Substitute x -> x^j into A, then reduce modulo the monic phi.
Poly substitute_power(const Poly& A, long long j, const Poly& phi) {
  if (A.empty()) return {};
  Poly out(static_cast<size_t>(j) * (A.size() - 1) + 1, 0);
  for (size_t i = 0; i < A.size(); ++i) out[i * static_cast<size_t>(j)] += A[i];
  return rem_monic(std::move(out), phi);
}

bool small_prime(long long d) {
  if (d < 2) return false;
  for (long long t = 2; t * t <= d; ++t)
    if (d % t == 0) return false;
  return true;
}

}  // namespace

WeightVector make_weights(std::vector<Int> a) {
  if (a.size() < 2)
    throw Error(Errc::BadInput, "need at least two weights");
  for (const Int& x : a)
    if (x < 0) throw Error(Errc::BadInput, "weights must be nonnegative");
  WeightVector w;
  w.d = static_cast<long long>(a.size());
  w.a = std::move(a);
  return w;
}

std::vector<Int> cyclotomic_poly(long long d) {
  if (d < 1) throw Error(Errc::BadInput, "cyclotomic index must be positive");
  // (x^d - 1) divided by the product of Phi_e over proper divisors e of d.
  Poly num(static_cast<size_t>(d) + 1, 0);
  num[0] = -1;
  num.back() = 1;
  for (long long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    num = div_monic(std::move(num), cyclotomic_poly(e));
  }
  return num;
}

Int eigenvalue_product(const WeightVector& w) {
  Poly phi = cyclotomic_poly(w.d);
  Poly A(w.a.begin(), w.a.end());
  trim(A);
  Poly prod{1};
  for (long long j = 0; j < w.d; ++j)
    prod = rem_monic(mul(prod, substitute_power(A, j, phi)), phi);
  // The product is Galois-stable, hence a rational integer.
  if (prod.size() > 1)
    throw Error(Errc::BadInput, "eigenvalue product failed to collapse");
  return prod.empty() ? Int(0) : prod[0];
}

Int circulant_det(const WeightVector& w) {
  const long long d = w.d;
  std::vector<std::vector<Int>> m(static_cast<size_t>(d),
                                  std::vector<Int>(static_cast<size_t>(d)));
  for (long long i = 0; i < d; ++i)
    for (long long j = 0; j < d; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          w.a[static_cast<size_t>(((j - i) % d + d) % d)];

  // Bareiss fraction-free elimination with row pivoting.
  int sign = 1;
  Int prev = 1;
  Int det = 0;
  bool singular = false;
  for (long long c = 0; c < d && !singular; ++c) {
    long long pivot = -1;
    for (long long r = c; r < d; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(c)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      singular = true;
      break;
    }
    if (pivot != c) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(c)]);
      sign = -sign;
    }
    for (long long r = c + 1; r < d; ++r) {
      for (long long j = c + 1; j < d; ++j) {
        auto& rr = m[static_cast<size_t>(r)];
        const auto& cc = m[static_cast<size_t>(c)];
        rr[static_cast<size_t>(j)] =
            (cc[static_cast<size_t>(c)] * rr[static_cast<size_t>(j)] -
             rr[static_cast<size_t>(c)] * cc[static_cast<size_t>(j)]) /
            prev;
      }
      m[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    }
    prev = m[static_cast<size_t>(c)][static_cast<size_t>(c)];
  }
  det = singular ? Int(0) : sign * m.back().back();

  Int cross = eigenvalue_product(w);
  if (cross != det)
    throw Error(Errc::BadInput,
                "circulant determinant cross-check failed: elimination " +
                    to_decimal(det) + " vs eigenvalue product " +
                    to_decimal(cross));
  return det;
}

const char* weight_class_name(WeightClass c) {
  switch (c) {
    case WeightClass::ZeroMap: return "ZeroMap";
    case WeightClass::TraceLine: return "TraceLine";
    case WeightClass::Bijective: return "Bijective";
  }
  return "?";
}

WeightClass classify_weights(const WeightVector& w) {
  if (!small_prime(w.d))
    throw Error(Errc::DNotPrime, "classification requires prime modulus, got " +
                                     std::to_string(w.d));
  bool all_equal = true;
  for (const Int& x : w.a)
    if (x != w.a[0]) all_equal = false;
  if (all_equal) return w.a[0] == 0 ? WeightClass::ZeroMap : WeightClass::TraceLine;
  return WeightClass::Bijective;
}

std::optional<WeightVector> search_singular_nonconstant(long long d,
                                                        long long bound) {
  if (d < 2 || bound < 1)
    throw Error(Errc::BadInput, "need d >= 2 and bound >= 1");
  double volume = 1;
  for (long long i = 0; i < d; ++i) {
    volume *= static_cast<double>(bound + 1);
    if (volume > 2e7)
      throw Error(Errc::BadInput, "search space too large");
  }
  Poly phi = cyclotomic_poly(d);
  std::vector<Int> a(static_cast<size_t>(d), 0);
  for (;;) {
    // Advance the odometer, a_0 most significant.
    long long pos = d - 1;
    while (pos >= 0) {
      if (a[static_cast<size_t>(pos)] < bound) {
        ++a[static_cast<size_t>(pos)];
        break;
      }
      a[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;

    bool all_equal = true;
    for (const Int& x : a)
      if (x != a[0]) all_equal = false;
    if (all_equal) continue;

    Poly A(a.begin(), a.end());
    if (rem_monic(A, phi).empty()) return make_weights(a);
  }
}

}  // namespace padlift
