#include <array>
#include <random>

#include <gtest/gtest.h>

#include "gsp4/hecke.hpp"
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

EigenvalueSystem single(std::uint64_t p, int k, Rational l1, Rational l2) {
  return EigenvalueSystem(k, 1, {{p, {std::move(l1), std::move(l2), {}}}});
}

/// System built from random exact classical data at every prime up to max_p.
EigenvalueSystem random_system(std::mt19937_64& rng, int k, std::uint64_t max_p,
                               std::map<std::uint64_t, ClassicalSatake<Rational>>* keep = nullptr) {
  std::map<std::uint64_t, EigenvalueSystem::PrimeData> data;
  for (auto p : primes_up_to(max_p)) {
    auto c = oracle::random_classical(rng, p, k);
    if (keep) (*keep)[p] = c;
    data[p] = {oracle::lambda_pr(c, 1), oracle::lambda_pr(c, 2), {}};
  }
  return EigenvalueSystem(k, 1, std::move(data));
}

}  // namespace

TEST(System, ValidationAndLookup) {
  auto s = single(2, 10, 240, 3);
  EXPECT_EQ(s.at(2).lambda_p, Rational(240));
  EXPECT_EQ(code_of([&] { s.at(3); }), ErrorCode::UnknownPrime);
  EigenvalueSystem lvl(6, 6, {{5, {1, 1, {}}}});
  EXPECT_EQ(code_of([&] { lvl.at(3); }), ErrorCode::BadPrime);
  EXPECT_EQ(code_of([] { EigenvalueSystem(6, 2, {{2, {1, 1, {}}}}); }), ErrorCode::InvariantError);
  EXPECT_EQ(code_of([] { EigenvalueSystem(2, 1, {}); }), ErrorCode::WeightTooSmall);
  EXPECT_EQ(code_of([] { EigenvalueSystem(6, 1, {{4, {1, 1, {}}}}); }), ErrorCode::InvariantError);
}

TEST(Recursion, PaperExamples) {
  auto s = single(2, 4, 1, 1);
  EXPECT_EQ(lambda_p3(s, 2), Rational(49));
  EXPECT_EQ(lambda_p4(s, 2), Rational(-927));
  auto z = single(3, 7, 0, 5);
  EXPECT_EQ(lambda_p3(z, 3), Rational(0));
  auto zz = single(3, 7, 0, 0);
  EXPECT_EQ(lambda_p4(zz, 3), -rpow(3, 4LL * 7 - 6));
}

TEST(Recursion, AgreesWithSeriesOverRandomExactInputs) {
  std::mt19937_64 rng(20);
  const std::uint64_t ps[] = {2, 3, 5, 7};
  for (int t = 0; t < 500; ++t) {
    std::uint64_t p = ps[t % 4];
    int k = 3 + t % 18;
    auto s = single(p, k, oracle::random_rational(rng, 1000, 9), oracle::random_rational(rng, 1000, 9));
    auto series = eigen_series(s, p, 8);
    EXPECT_EQ(lambda_p3(s, p), series[3]);
    EXPECT_EQ(lambda_p4(s, p), series[4]);
    auto rec = lambda_prime_powers_recursive(s, p, 8);
    for (unsigned r = 0; r <= 8; ++r) EXPECT_EQ(rec[r], series[r]) << t << " r=" << r;
    EXPECT_EQ(lambda_prime_power(s, p, 0), Rational(1));
    EXPECT_EQ(lambda_prime_power(s, p, 1), s.at(p).lambda_p);
  }
}

TEST(Recursion, TabulatedSeedsOnlyWhenAsked) {
  EigenvalueSystem s(4, 1, {{2, {1, 1, {{3, Rational(50)}}}}});
  EXPECT_EQ(lambda_prime_powers_recursive(s, 2, 5)[3], Rational(49));
  auto seeded = lambda_prime_powers_recursive(s, 2, 5, true);
  EXPECT_EQ(seeded[3], Rational(50));
  EXPECT_NE(seeded[5], eigen_series(s, 2, 5)[5]);
}

TEST(LambdaN, MultiplicativityAndEulerProduct) {
  std::mt19937_64 rng(21);
  std::map<std::uint64_t, ClassicalSatake<Rational>> cs;
  auto sys = random_system(rng, 6, 13, &cs);
  EXPECT_EQ(lambda_n(sys, 1), Rational(1));
  EXPECT_EQ(lambda_n(sys, 12), lambda_prime_power(sys, 2, 2) * sys.at(3).lambda_p);
  // global series: prod_p (1 - p^(2k-4) X^2) / spin reciprocal, by Dirichlet expansion
  std::map<std::uint64_t, SeriesPoly<Rational>> recips;
  for (auto& [p, c] : cs) recips.emplace(p, SeriesPoly<Rational>::polynomial(oracle::reciprocal_from_roots(oracle::arithmetic_spin(c))));
  auto spin = euler_expand(recips, 13 * 13, MissingPrimePolicy::Trivial);
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u})
      if (p < q) {
        // at squarefree pq the eigenvalue and spin coefficients coincide
        EXPECT_EQ(lambda_n(sys, p * q), spin[p * q]);
        EXPECT_EQ(lambda_n(sys, p * q), sys.at(p).lambda_p * sys.at(q).lambda_p);
      }
  EXPECT_EQ(lambda_n(sys, 4), spin[4] - rpow(2, 2LL * 6 - 4));
  EXPECT_EQ(code_of([&] { lambda_n(sys, 0); }), ErrorCode::DomainError);
  EXPECT_EQ(code_of([&] { lambda_n(sys, 17); }), ErrorCode::UnknownPrime);
}

TEST(LambdaN, NormalizedValues) {
  std::mt19937_64 rng(22);
  std::map<std::uint64_t, ClassicalSatake<Rational>> cs;
  const int k = 7;
  auto sys = random_system(rng, k, 7, &cs);
  EXPECT_EQ(normalized_lambda_n(sys, 1), Surd(1));
  for (auto& [p, c] : cs) {
    auto m = spin_multiset(normalize(oracle::to_surd(c)));
    auto series = normalized_eigen_series_local(m, p, 4);
    std::uint64_t q = p;
    for (unsigned r = 1; r <= 4; ++r, q *= p) EXPECT_EQ(normalized_lambda_n(sys, q), series[r]) << p << "^" << r;
  }
  // identity Satake datum: lambda(p) = 4 p^(k-3/2)
  NormalizedSatake<Surd> id{5, Surd(1), Surd(1)};
  auto [l1, l2] = eigenvalues_from_normalized(id, k);
  EXPECT_EQ(l1 * Surd::half_power(5, 3 - 2LL * k), Surd(4));
}

TEST(ACoefficients, RelationsToNormalizedEigenvalues) {
  std::mt19937_64 rng(23);
  auto sys = random_system(rng, 5, 31);
  auto a = a_coefficients(sys, 30);
  EXPECT_EQ(a[1], Surd(1));
  for (std::uint64_t p : primes_up_to(30)) EXPECT_EQ(a[p], normalized_lambda_n(sys, p));
  for (std::uint64_t p : {2u, 3u, 5u})
    EXPECT_EQ(a[p * p], normalized_lambda_n(sys, p * p) + Surd(rat(1, static_cast<long long>(p))));
  for (std::uint64_t m = 2; m <= 30; ++m)
    for (std::uint64_t n = 2; m * n <= 30; ++n)
      if (std::gcd(m, n) == 1) EXPECT_EQ(a[m * n], a[m] * a[n]);
  auto short_sys = single(2, 5, 1, 1);
  EXPECT_EQ(code_of([&] { a_coefficients(short_sys, 5); }), ErrorCode::MissingPrime);
}

TEST(Lemma14, Examples) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int k : {3, 6, 10}) {
      EXPECT_EQ(lemma14_check(0, p, k).status, Lemma14Status::HoldsPaperBound);
      Rational sign_point = rpow(p, 2LL * k - 3) * (2 - rat(1, static_cast<long long>(p)));
      EXPECT_EQ(lemma14_check(sign_point, p, k).status, Lemma14Status::HoldsPaperBound);
      EXPECT_EQ(lemma14_check(rpow(p, 2LL * k - 1), p, k).status, Lemma14Status::Violates);
      EXPECT_EQ(lemma14_check(-rpow(p, 2LL * k - 1), p, k).status, Lemma14Status::Violates);
      // between the stated and the weak bound
      Rational mid = rpow(p, 2LL * k - 2) + 2 * rpow(p, 2LL * k - 4);
      auto r = lemma14_check(mid, p, k);
      EXPECT_EQ(r.status, Lemma14Status::HoldsWeakBound);
      EXPECT_FALSE(r.within_stated);
      EXPECT_TRUE(r.within_transposed);
    }
  }
}

TEST(Lemma14, TemperedDataWithVanishingLambdaP) {
  // lambda(p) = 0 forces B = -A, and then lambda(p^2) = p^(2k-3) (A^2 - 2 - 1/p) with |A| <= 2.
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> num(-200, 200);
  for (int t = 0; t < 300; ++t) {
    std::uint64_t p = std::array<std::uint64_t, 3>{2, 3, 5}[t % 3];
    int k = 3 + t % 15;
    Rational a = rat(num(rng), 100);
    Rational l2 = rpow(p, 2LL * k - 3) * (a * a - 2 - rat(1, static_cast<long long>(p)));
    auto s = single(p, k, 0, l2);
    // B = -A really is a consistent pair of traces
    auto series = normalized_eigen_series_traces(Surd(a), Surd(-a), p, 2);
    EXPECT_EQ(series[2], normalized_lambda_n(s, p * p));
    EXPECT_EQ(lemma14_check(l2, p, k).status, Lemma14Status::HoldsPaperBound) << p << " " << k << " " << a;
  }
}
