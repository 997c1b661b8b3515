#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padlift/series.hpp"
#include "support.hpp"

using namespace padlift;
using testsupport::binom_int;
using testsupport::make_rng;
using testsupport::rand_elem;

namespace {

PadicField q3(int N = 8) { return PadicField::make_qp(3, N); }

TruncSeries rand_series(std::mt19937_64& rng, const PadicField& k,
                        long long len, bool zero_const) {
  std::vector<PadicElem> c;
  c.reserve(static_cast<size_t>(len));
  for (long long i = 0; i < len; ++i) c.push_back(rand_elem(rng, k));
  if (zero_const) c[0] = k.zero();
  return TruncSeries(k, 0, std::move(c));
}

long long joint_claim(const TruncSeries& a, const TruncSeries& b) {
  long long m = a.field().max_prec();
  for (const auto& c : a.coeffs()) m = std::min(m, c.prec());
  for (const auto& c : b.coeffs()) m = std::min(m, c.prec());
  return m;
}

// (1+T)^n - 1 with exact integer coefficients, padded to the window.
TruncSeries one_plus_t_pow(const PadicField& k, long long n, long long len) {
  std::vector<Int> cs(static_cast<size_t>(len), Int(0));
  for (long long j = 1; j < len && j <= n; ++j) cs[static_cast<size_t>(j)] = binom_int(n, j);
  return TruncSeries::from_ints(k, cs);
}

}  // namespace

TEST_CASE("ring operations on series") {
  auto k = q3();
  auto t = TruncSeries::identity(k, 6);
  auto t2 = t * t;
  CHECK(eq_at_joint_prec(t2.coeff(2), k.one()));
  CHECK(valuation(t2.coeff(1)).at_least);
  CHECK(valuation(t2.coeff(3)).at_least);

  // (1+T) * (1 - T + T^2 - ...) = 1
  auto one_plus_t = TruncSeries::from_ints(k, {1, 1, 0, 0, 0, 0});
  std::vector<Int> alt;
  for (int i = 0; i < 6; ++i) alt.push_back(i % 2 ? -1 : 1);
  auto geo = TruncSeries::from_ints(k, alt);
  auto prod = one_plus_t * geo;
  CHECK(series_eq_at(prod, TruncSeries::constant(k.one(), 6), k.N()));

  // T^{-1} * T = 1 with Laurent shifts adding
  auto t_inv = TruncSeries::constant(k.one(), 4).mul_monomial(-1);
  auto p2 = t_inv * TruncSeries::identity(k, 4);
  CHECK(p2.shift() == -1);
  CHECK(eq_at_joint_prec(p2.coeff(0), k.one()));
  CHECK(valuation(p2.coeff(-1)).at_least);
}

TEST_CASE("composition basics") {
  auto k = q3();
  auto f = TruncSeries::from_ints(k, {0, 1, 1, 0, 0, 0});  // T + T^2
  auto g = TruncSeries::from_ints(k, {0, 0, 1, 0, 0, 0});  // T^2
  auto fg = compose(f, g);
  auto expect = TruncSeries::from_ints(k, {0, 0, 1, 0, 1, 0});  // T^2 + T^4
  CHECK(series_eq_at(fg, expect, k.N()));

  // composing with T is the identity
  auto r = compose(f, TruncSeries::identity(k, 6));
  CHECK(series_eq_at(r, f, k.N()));
}

TEST_CASE("composition matches the binomial expansion oracle") {
  auto k = q3();
  long long M = 16;
  auto p3 = one_plus_t_pow(k, 3, M);
  auto p9 = one_plus_t_pow(k, 9, M);
  CHECK(series_eq_at(compose(p3, p3), p9, k.N()));
}

TEST_CASE("composition rejects unit constant terms") {
  auto k = q3();
  auto f = TruncSeries::from_ints(k, {0, 1, 0, 0});
  auto g = TruncSeries::from_ints(k, {1, 1, 0, 0});
  CHECK_THROWS_AS(compose(f, g), Error);
  try {
    compose(f, g);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ConstantTermNotSmall);
  }
}

TEST_CASE("composition is associative at the joint claim") {
  auto rng = make_rng(0xa55eu);
  auto k = q3();
  for (int i = 0; i < 20; ++i) {
    auto f = rand_series(rng, k, 10, false);
    auto g = rand_series(rng, k, 10, true);
    auto h = rand_series(rng, k, 10, true);
    auto left = compose(compose(f, g), h);
    auto right = compose(f, compose(g, h));
    CHECK(series_diff_val(left, right) >= joint_claim(left, right));
  }
}

TEST_CASE("compositional inverse") {
  auto k = q3(8);
  CHECK(series_eq_at(comp_inverse(TruncSeries::identity(k, 8)),
                     TruncSeries::identity(k, 8), k.N()));

  // F = 2T + T^2 = (1+T)^2 - 1; inverse is (1+T)^{1/2} - 1 and F(G) = T
  long long M = 16;
  auto F = one_plus_t_pow(k, 2, M);
  auto G = comp_inverse(F);
  CHECK(series_eq_at(compose(F, G), TruncSeries::identity(k, M), 6));
  CHECK(series_eq_at(compose(G, F), TruncSeries::identity(k, M), 6));
  auto half = invert(k.from_int(2));
  CHECK(series_eq_at(G, binomial_series(half, M), 6));

  // second inverse returns the original
  CHECK(series_eq_at(comp_inverse(G), F, 6));

  // non-unit linear coefficient
  auto bad = TruncSeries::from_ints(k, {0, 3, 0, 1});
  CHECK_THROWS_AS(comp_inverse(bad), Error);
  try {
    comp_inverse(bad);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotInvertible);
  }
}

TEST_CASE("compositional inverse on random series") {
  auto rng = make_rng(0xc0ffeeu);
  auto k = q3();
  for (int i = 0; i < 10; ++i) {
    auto f = rand_series(rng, k, 12, true);
    // force a unit linear coefficient
    auto c = f.coeffs();
    c[1] = testsupport::rand_unit(rng, k);
    f = TruncSeries(k, 0, std::move(c));
    auto g = comp_inverse(f);
    auto id = TruncSeries::identity(k, 12);
    CHECK(series_diff_val(compose(f, g), id) >= joint_claim(f, g));
    CHECK(series_diff_val(compose(g, f), id) >= joint_claim(f, g));
  }
}

TEST_CASE("multiplicative inverse") {
  auto k = q3();
  auto one_minus_t = TruncSeries::from_ints(k, {1, -1, 0, 0, 0, 0});
  auto inv = mul_inverse(one_minus_t);
  for (long long j = 0; j < 6; ++j)
    CHECK(eq_at_joint_prec(inv.coeff(j), k.one()));

  auto tinv = mul_inverse(TruncSeries::identity(k, 4));
  CHECK(tinv.shift() == -1);
  CHECK(eq_at_joint_prec(tinv.coeff(-1), k.one()));

  auto bad = TruncSeries::from_ints(k, {3, 1, 0, 0});
  CHECK_THROWS_AS(mul_inverse(bad), Error);
}

TEST_CASE("derivative") {
  auto k = q3();
  auto f = one_plus_t_pow(k, 4, 8);
  CHECK(eq_at_joint_prec(derivative(f).coeff(0), k.from_int(4)));

  // Leibniz rule, exactly, on random series
  auto rng = make_rng(0xdd11u);
  for (int i = 0; i < 10; ++i) {
    auto a = rand_series(rng, k, 9, false);
    auto b = rand_series(rng, k, 9, false);
    auto lhs = derivative(a * b);
    auto rhs = derivative(a) * b + a * derivative(b);
    CHECK(series_diff_val(lhs, rhs) >= joint_claim(a, b));
  }

  // Laurent case: d/dT (T^{-1}) = -T^{-2}
  auto tinv = TruncSeries::constant(k.one(), 4).mul_monomial(-1);
  auto d = derivative(tinv);
  CHECK(d.shift() == -2);
  CHECK(eq_at_joint_prec(d.coeff(-2), k.from_int(-1)));
}

TEST_CASE("taylor shift") {
  auto k = q3();
  auto a = k.from_int(3);
  auto f = TruncSeries::from_ints(k, {0, 0, 1, 0, 0, 0});  // T^2
  auto sh = taylor_shift(f, a);
  CHECK(eq_at(sh.coeff(0), k.from_int(9), sh.coeff(0).prec()));
  CHECK(eq_at(sh.coeff(1), k.from_int(6), sh.coeff(1).prec()));
  CHECK(eq_at(sh.coeff(2), k.one(), sh.coeff(2).prec()));

  // constant term is f(a)
  auto rng = make_rng(0x7a7au);
  for (int i = 0; i < 10; ++i) {
    auto g = rand_series(rng, k, 10, false);
    auto c = taylor_shift(g, a).coeff(0);
    auto v = evaluate(g, a);
    CHECK(valuation(c - v).lower() >= std::min(c.prec(), v.prec()));
  }

  // shift then unshift
  for (int i = 0; i < 10; ++i) {
    auto g = rand_series(rng, k, 10, false);
    auto back = taylor_shift(taylor_shift(g, a), -a);
    CHECK(series_diff_val(back, g) >= back.min_reported_prec());
  }

  CHECK_THROWS_AS(taylor_shift(f, k.from_int(2)), Error);
}

TEST_CASE("binomial series") {
  auto k = q3();
  auto b3 = binomial_series(k.from_int(3), 8);
  CHECK(series_eq_at(b3, one_plus_t_pow(k, 3, 8), k.N()));

  auto b0 = binomial_series(k.zero(), 8);
  CHECK(series_eq_at(b0, TruncSeries::zero(k, 8), k.N()));

  // c = 1/2: (1 + B)^2 = 1 + T, i.e. 2B + B^2 = T
  auto half = invert(k.from_int(2));
  auto b = binomial_series(half, 12);
  auto lhs = b.mul_scalar(k.from_int(2)) + b * b;
  CHECK(series_eq_at(lhs, TruncSeries::identity(k, 12), k.N()));

  // group law B(c1+c2) = B(c1) + B(c2) + B(c1) B(c2)
  auto rng = make_rng(0xb10bu);
  for (int i = 0; i < 8; ++i) {
    auto c1 = rand_elem(rng, k);
    auto c2 = rand_elem(rng, k);
    auto l = binomial_series(c1 + c2, 10);
    auto r0 = binomial_series(c1, 10);
    auto r1 = binomial_series(c2, 10);
    auto r = r0 + r1 + r0 * r1;
    CHECK(series_eq_at(l, r, k.N()));
  }
}

TEST_CASE("reduction to the residue field") {
  auto k = q3();
  auto p3 = one_plus_t_pow(k, 3, 6);
  auto r = reduce_mod_p(p3);
  CHECK(res_series_is_monomial(r, 3, res_one(k)));

  auto t = reduce_mod_p(TruncSeries::identity(k, 6));
  CHECK(res_series_is_monomial(t, 1, res_one(k)));

  auto z = reduce_mod_p(TruncSeries::from_ints(k, {0, 0, 3, 0}));
  CHECK(res_series_is_monomial(z, 2, res_zero(k)));

  // ring homomorphism commuting with composition
  auto rng = make_rng(0x5e5eu);
  for (int i = 0; i < 10; ++i) {
    auto a = rand_series(rng, k, 8, false);
    auto b = rand_series(rng, k, 8, true);
    CHECK(res_series_eq(reduce_mod_p(a * b),
                        res_series_mul(reduce_mod_p(a), reduce_mod_p(b))));
    CHECK(res_series_eq(reduce_mod_p(a + b),
                        ResidueSeries{k, 0,
                                      [&] {
                                        auto ra = reduce_mod_p(a).coeffs;
                                        auto rb = reduce_mod_p(b).coeffs;
                                        for (size_t j = 0; j < ra.size(); ++j)
                                          ra[j] = res_add(k, ra[j], rb[j]);
                                        return ra;
                                      }()}));
    CHECK(res_series_eq(reduce_mod_p(compose(a, b)),
                        res_series_compose(reduce_mod_p(a), reduce_mod_p(b))));
  }
}

TEST_CASE("evaluate matches Horner on plain integers") {
  auto k = q3();
  auto f = TruncSeries::from_ints(k, {5, 4, 3, 2});
  // f(3) = 5 + 12 + 27 + 54 = 98 but claims are capped by the tail bound
  auto v = evaluate(f, k.from_int(3));
  CHECK(eq_at(v, k.from_int(98), v.prec()));
  CHECK(v.prec() == 4);  // window 4, val 1
}
