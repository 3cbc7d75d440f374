#include <random>

#include <gtest/gtest.h>

#include "gsp4/euler.hpp"
#include "gsp4/arith/dirichlet.hpp"
#include "oracles.hpp"

using namespace gsp4;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gsp4::Error thrown";
  return ErrorCode::InvariantError;
}

std::vector<Rational> binomial_row(int n, int sign) {
  std::vector<Rational> c{1};
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> d(c.size() + 1, 0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      d[j] += c[j];
      d[j + 1] += Rational(sign) * c[j];
    }
    c = d;
  }
  return c;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

const std::uint64_t kPrimes[] = {2, 3, 5, 7};

}  // namespace

TEST(SpinReciprocal, SatakeExamples) {
  auto one = spin_reciprocal_satake(SpinMultiset<Rational>{{1, 1, 1, 1}}, 2);
  EXPECT_EQ(one.reciprocal.coefficients(), binomial_row(4, -1));
  EXPECT_EQ(one.degree, 4);
  EXPECT_EQ(one.normalization, Normalization::Analytic);
  auto sign = spin_reciprocal_satake(SpinMultiset<Rational>{{1, 1, -1, -1}}, 2);
  EXPECT_EQ(sign.reciprocal.coefficients(), (std::vector<Rational>{1, 0, -2, 0, 1}));
}

TEST(SpinReciprocal, SatakeIsVieta) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(oracle::random_rational(rng));
    SpinMultiset<Rational> m{{xs[0], xs[1], xs[2], xs[3]}};
    EXPECT_EQ(spin_reciprocal_satake(m, 3).reciprocal.coefficients(), oracle::reciprocal_from_roots(xs));
  }
}

TEST(SpinReciprocal, EigenExamples) {
  for (std::uint64_t p : kPrimes) {
    for (int k : {3, 7, 12}) {
      auto f = spin_reciprocal_eigen(Rational(0), -rpow(p, 2LL * k - 4), p, k);
      EXPECT_EQ(f.reciprocal.coefficients(), (std::vector<Rational>{1, 0, 0, 0, rpow(p, 4LL * k - 6)}));
      auto g = spin_reciprocal_eigen(rat(7, 3), rat(-11, 5), p, k);
      EXPECT_EQ(g.reciprocal[3], -rat(7, 3) * rpow(p, 2LL * k - 3));
      EXPECT_EQ(g.reciprocal[4], rpow(p, 4LL * k - 6));
    }
  }
  EXPECT_EQ(code_of([] { spin_reciprocal_eigen(Rational(1), Rational(1), 2, 2); }), ErrorCode::WeightTooSmall);
}

TEST(SpinReciprocal, NonUnitaryExactRecord) {
  // alpha = 2, beta = 3 at p = 2, k = 4; eigenvalues from the arithmetic parameters alpha0 * {1, a1, a2, a1 a2}.
  const std::uint64_t p = 2;
  const int k = 4;
  NormalizedSatake<Surd> n{p, Surd(2), Surd(3)};
  auto [l1, l2] = eigenvalues_from_normalized(n, k);
  auto eig = spin_reciprocal_eigen(l1, l2, p, k);
  auto sat = renormalize(spin_reciprocal_satake(spin_multiset(n), p), k, Normalization::Arithmetic);
  EXPECT_TRUE(eig.reciprocal.equals(sat.reciprocal));
}

TEST(SpinReciprocal, CrossIdentityOverRandomClassicalData) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t p = kPrimes[t % 4];
    int k = 3 + t % 18;
    auto c = oracle::random_classical(rng, p, k);
    auto [l1, l2] = eigenvalues_from_classical(c);
    auto eig = spin_reciprocal_eigen(Surd(l1), Surd(l2), p, k);
    auto sat = spin_reciprocal_satake(spin_multiset(normalize(oracle::to_surd(c))), p);
    EXPECT_TRUE(eig.reciprocal.equals(renormalize(sat, k, Normalization::Arithmetic).reciprocal));
    // and back
    EXPECT_TRUE(renormalize(eig, k, Normalization::Analytic).reciprocal.equals(sat.reciprocal));
    // arithmetic reciprocal is Vieta over alpha0 * {1, a1, a2, a1 a2}
    auto rational_eig = spin_reciprocal_eigen(l1, l2, p, k);
    EXPECT_EQ(rational_eig.reciprocal.coefficients(), oracle::reciprocal_from_roots(oracle::arithmetic_spin(c)));
  }
}

TEST(SpinReciprocal, TraceFormMatchesMultiset) {
  auto tr = spin_reciprocal_traces(rat(5, 2), rat(10, 3), 5);
  auto ms = spin_reciprocal_satake(SpinMultiset<Rational>{{2, rat(1, 2), 3, rat(1, 3)}}, 5);
  EXPECT_EQ(tr.reciprocal.coefficients(), ms.reciprocal.coefficients());
}

TEST(StdReciprocal, Examples) {
  auto one = std_reciprocal(StdMultiset<Rational>{{1, 1, 1, 1, 1}}, 3);
  EXPECT_EQ(one.reciprocal.coefficients(), binomial_row(5, -1));
  StdMultiset<Rational> m{{1, -1, -1, 2, rat(1, 2)}};
  auto f = std_reciprocal(m, 3);
  std::vector<Rational> expect{1};
  for (const auto& x : m.values) expect = poly_mul(expect, {1, -x});
  EXPECT_EQ(f.reciprocal.coefficients(), expect);
}

TEST(StdReciprocal, PalindromicUpToSign) {
  // inversion-closed with one fixed point 1: c_i = -c_(5-i)
  std::mt19937_64 rng(10);
  for (int t = 0; t < 100; ++t) {
    auto c = oracle::random_classical(rng, 3, 3 + t % 10);
    auto f = std_reciprocal(std_multiset(c), 3).reciprocal;
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(f[i], -f[5 - i]);
  }
}

TEST(StdReciprocal, FromSpinMatchesClassicalRoute) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    std::uint64_t p = kPrimes[t % 4];
    int k = 3 + t % 18;
    auto c = oracle::random_classical(rng, p, k);
    auto [l1, l2] = eigenvalues_from_classical(c);
    auto spin = renormalize(spin_reciprocal_eigen(Surd(l1), Surd(l2), p, k), k, Normalization::Analytic);
    auto from_spin = std_reciprocal_from_spin(spin);
    auto direct = std_reciprocal(std_multiset(c), p);
    ASSERT_EQ(from_spin.reciprocal.order(), 5u);
    for (int i = 0; i <= 5; ++i) EXPECT_EQ(from_spin.reciprocal[i], Surd(direct.reciprocal[i])) << t << " " << i;
  }
  auto arith = spin_reciprocal_eigen(Rational(1), Rational(1), 2, 4);
  EXPECT_EQ(code_of([&] { std_reciprocal_from_spin(arith); }), ErrorCode::KindMismatch);
}

TEST(RankinReciprocal, Examples) {
  SpinMultiset<Rational> one{{1, 1, 1, 1}}, sign{{1, 1, -1, -1}};
  EXPECT_EQ(rankin_reciprocal(one, one, 2).reciprocal.coefficients(), binomial_row(16, -1));
  EXPECT_EQ(rankin_reciprocal(sign, sign, 2).reciprocal.coefficients(), poly_mul(binomial_row(8, -1), binomial_row(8, 1)));
  EXPECT_EQ(rankin_reciprocal(sign, sign, 2).degree, 16);
  StdMultiset<Rational> s{{1, 1, 1, 1, 1}};
  EXPECT_EQ(rankin_reciprocal(s, s, 2).degree, 25);
}

TEST(RankinReciprocal, DoubleLoopOracleAndKindMismatch) {
  std::mt19937_64 rng(13);
  std::vector<Rational> a, b, prods;
  for (int i = 0; i < 4; ++i) a.push_back(oracle::random_rational(rng, 3, 2));
  for (int i = 0; i < 4; ++i) b.push_back(oracle::random_rational(rng, 3, 2));
  for (auto& x : a)
    for (auto& y : b) prods.push_back(x * y);
  std::vector<Rational> expect{1};
  for (const auto& g : prods) expect = poly_mul(expect, {1, -g});
  auto f = rankin_reciprocal<Rational>(std::span<const Rational>(a), std::span<const Rational>(b), 2);
  EXPECT_EQ(f.reciprocal.coefficients(), expect);
  std::vector<Rational> five(5, Rational(1));
  EXPECT_EQ(code_of([&] { rankin_reciprocal<Rational>(std::span<const Rational>(a), std::span<const Rational>(five), 2); }),
            ErrorCode::KindMismatch);
}

TEST(EigenSeries, StructureAndPaperRecursions) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 500; ++t) {
    std::uint64_t p = kPrimes[t % 4];
    int k = 3 + t % 18;
    Rational l1 = oracle::random_rational(rng, 50, 7), l2 = oracle::random_rational(rng, 50, 7);
    auto s = eigen_series_local(l1, l2, p, k, 8);
    EXPECT_EQ(s[0], Rational(1));
    EXPECT_EQ(s[1], l1);
    EXPECT_EQ(s[2], l2);
    Rational a = rpow(p, 2LL * k - 3), b = rpow(p, 2LL * k - 4);
    EXPECT_EQ(s[3], 2 * l1 * l2 - l1 * l1 * l1 + l1 * (a + b));
    Rational e4 = -l1 * l1 * l1 * l1 + l1 * l1 * l2 + l2 * l2 + l1 * l1 * b + l2 * b + 2 * l1 * l1 * a - rpow(p, 4LL * k - 6);
    EXPECT_EQ(s[4], e4);
  }
}

TEST(EigenSeries, MatchesSymmetricFunctionOracle) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    auto c = oracle::random_classical(rng, kPrimes[t % 4], 3 + t % 10);
    auto [l1, l2] = eigenvalues_from_classical(c);
    auto s = eigen_series_local(l1, l2, c.p, c.k, 7);
    for (unsigned r = 0; r <= 7; ++r) EXPECT_EQ(s[r], oracle::lambda_pr(c, r));
  }
}

TEST(NormalizedEigenSeries, Examples) {
  for (std::uint64_t p : kPrimes) {
    auto s = normalized_eigen_series_local(SpinMultiset<Rational>{{1, 1, 1, 1}}, p, 4);
    EXPECT_EQ(s[0], Rational(1));
    EXPECT_EQ(s[1], Rational(4));
    EXPECT_EQ(s[2], Rational(10) - rat(1, static_cast<long long>(p)));
  }
  std::mt19937_64 rng(16);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> xs{oracle::random_rational(rng), 0, oracle::random_rational(rng), 0};
    xs[1] = Rational(1) / xs[0];
    xs[3] = Rational(1) / xs[2];
    SpinMultiset<Rational> m{{xs[0], xs[1], xs[2], xs[3]}};
    auto s = normalized_eigen_series_local(m, 5, 3);
    EXPECT_EQ(s[2], oracle::complete_homogeneous(xs, 2) - rat(1, 5));
    auto t2 = normalized_eigen_series_traces(xs[0] + xs[1], xs[2] + xs[3], 5, 3);
    EXPECT_TRUE(s.equals(t2));
  }
}

TEST(EulerExpand, SinglePrimeSpinFactor) {
  auto f = spin_reciprocal_satake(SpinMultiset<Rational>{{2, rat(1, 2), 3, rat(1, 3)}}, 2);
  std::map<std::uint64_t, SeriesPoly<Rational>> local{{2, f.reciprocal}};
  auto a = euler_expand(local, 8, MissingPrimePolicy::Trivial);
  auto inv = series_invert(f.reciprocal.with_order(3));
  EXPECT_EQ(a[2], inv[1]);
  EXPECT_EQ(a[4], inv[2]);
  EXPECT_EQ(a[8], inv[3]);
  for (std::uint64_t n : {3u, 5u, 6u, 7u}) EXPECT_EQ(a[n], Rational(0));
  // a(p^r) = h_r of the multiset
  std::vector<Rational> xs{2, rat(1, 2), 3, rat(1, 3)};
  EXPECT_EQ(a[8], oracle::complete_homogeneous(xs, 3));
}

TEST(EulerExpand, TrivialReciprocalIsDelta) {
  std::map<std::uint64_t, SeriesPoly<Rational>> local;
  for (auto p : primes_up_to(30)) local.emplace(p, SeriesPoly<Rational>::polynomial({1}));
  EXPECT_TRUE(euler_expand(local, 30).equals(DirichletSeries<Rational>::delta(30)));
}
