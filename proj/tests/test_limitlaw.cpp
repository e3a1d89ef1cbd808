#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bspin/limitlaw.hpp"
#include "bspin/measure.hpp"

using namespace bspin;

namespace {

std::mt19937 rng(778899);

double poisson_pmf(long long s, double theta) {
  double f = 1.0;
  for (long long i = 2; i <= s; ++i) f *= static_cast<double>(i);
  return std::pow(theta, static_cast<double>(s)) * std::exp(-theta) / f;
}

}  // namespace

TEST_CASE("theta validation") {
  CHECK_THROWS_AS(ThetaVector({1.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(ThetaVector({-2.0}), ValidationError);
  CHECK_THROWS_AS(ThetaVector(std::vector<double>{}), ValidationError);
}

TEST_CASE("t_from_theta and the round trip") {
  const auto t0 = t_from_theta(100, ThetaVector({100.0}));
  CHECK(t0[0] == doctest::Approx(0.0));
  const double e2 = std::exp(2.0);
  CHECK(t_from_theta(static_cast<long long>(std::llround(e2)), ThetaVector({1.0}))[0] ==
        doctest::Approx(0.5 * std::log(std::llround(e2))));
  for (int rep = 0; rep < 30; ++rep) {
    const long long N = 1 + static_cast<long long>(rng() % 100000);
    const double theta = 0.01 + static_cast<double>(rng() % 1000) / 97.0;
    const double t = t_from_theta(N, ThetaVector({theta}))[0];
    CHECK(static_cast<double>(N) * std::exp(-2 * t) ==
          doctest::Approx(theta).epsilon(1e-12));
  }
}

TEST_CASE("gamma_from_s") {
  CHECK(gamma_from_s(SVector({0, 0})) == std::vector<BigRat>{0, 0});
  CHECK(gamma_from_s(SVector({0, 1})) == std::vector<BigRat>{BigRat(1), BigRat(-1)});
  CHECK(gamma_from_s(SVector({1, 2, 3})) ==
        std::vector<BigRat>{BigRat(2), BigRat(0), BigRat(-2)});
  // Rational coordinates with even integer differences.
  const auto g = gamma_from_s(SVector({0, 0, 1}));
  CHECK(g == std::vector<BigRat>{BigRat(2, 3), BigRat(2, 3), BigRat(-4, 3)});
  CHECK(g[0] + g[1] + g[2] == 0);
}

TEST_CASE("tau_from_theta") {
  CHECK(tau_from_theta(ThetaVector({2.5, 2.5, 2.5})) == std::vector<double>{0.0, 0.0});
  CHECK(tau_from_theta(ThetaVector({std::exp(2.0), 1.0}))[0] == doctest::Approx(1.0));
  CHECK(tau_from_theta(ThetaVector({3.0})).empty());
}

TEST_CASE("limit density reduces to Poisson at rank 1") {
  for (double theta : {0.5, 1.0, 5.0}) {
    for (long long s = 0; s <= 20; ++s) {
      const double got = limit_density(1, SVector({s}), ThetaVector({theta}));
      CHECK(got == doctest::Approx(poisson_pmf(s, theta)).epsilon(1e-12));
    }
  }
  CHECK(limit_density(1, SVector({0}), ThetaVector({1.0})) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
}

TEST_CASE("limit density rank 2 closed cases") {
  for (double t1 : {0.5, 1.0, 2.0}) {
    for (double t2 : {0.7, 1.0, 3.0}) {
      CHECK(limit_density(2, SVector({0, 0}), ThetaVector({t1, t2})) ==
            doctest::Approx(std::exp(-t1 - t2)).epsilon(1e-12));
    }
  }
  CHECK(limit_density(2, SVector({0, 1}), ThetaVector({1.0, 1.0})) ==
        doctest::Approx(2 * std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("limit density vanishes exactly on tied configurations") {
  CHECK(limit_density(2, SVector({1, 0}), ThetaVector({1.0, 2.0})) == 0.0);
  CHECK(limit_density(3, SVector({0, 2, 1}), ThetaVector({1.0, 1.0, 1.0})) == 0.0);
  // Non-dominant without a tie is rejected rather than continued.
  CHECK_THROWS_AS(limit_density(2, SVector({2, 0}), ThetaVector({1.0, 1.0})),
                  ValidationError);
  CHECK_THROWS_AS(limit_density(2, SVector({-1, 0}), ThetaVector({1.0, 1.0})),
                  ValidationError);
  // The exact measure puts no mass on those labels: they are outside the
  // dominant support by construction.
  for (const auto& s : support(2, 6)) CHECK(is_valid_s(s));
}

TEST_CASE("truncated limit normalization") {
  CHECK(std::abs(limit_normalization(1, ThetaVector({1.0}), 30) - 1.0) < 1e-10);
  CHECK(std::abs(limit_normalization(1, ThetaVector({5.0}), 60) - 1.0) < 1e-10);
  const double total = limit_normalization(2, ThetaVector({1.0, 1.0}), 30);
  CHECK(total > 0.999);
  CHECK(total < 1.001);
}

TEST_CASE("tau and theta evaluation routes coincide") {
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + static_cast<int>(rng() % 2);
    std::vector<double> th(n);
    for (auto& v : th) v = 0.2 + static_cast<double>(rng() % 400) / 100.0;
    std::vector<Coord> raw(n);
    Coord prev = 0;
    for (auto& v : raw) {
      prev += static_cast<Coord>(rng() % 3);
      v = prev;
    }
    const ThetaVector theta(th);
    const auto gamma = gamma_from_s(SVector(raw));
    const double via_tau = an_character_at_tau(gamma, tau_from_theta(theta));
    const double via_theta = an_character_at_theta(gamma, theta);
    CHECK(via_tau == doctest::Approx(via_theta).epsilon(1e-12));
  }
}

TEST_CASE("convergence table trends") {
  const ThetaVector theta({1.0, 2.0});
  const std::vector<SVector> ss = {SVector({0, 0}), SVector({0, 1}), SVector({1, 0})};
  const std::vector<long long> Ns = {64, 128, 256};
  const auto records = convergence_table(2, theta, ss, Ns);
  // The tied s=(1,0) has zero limit density and is skipped.
  REQUIRE(records.size() == 6);
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].rel_err < 0.1);
    CHECK(records[i].p_limit > 0);
  }
  // Ordered by ascending N; error shrinks with N for each s.
  CHECK(records[0].N == 64);
  CHECK(records.back().N == 256);
  for (int k = 0; k < 2; ++k) {
    CHECK(records[2 + k].rel_err < records[0 + k].rel_err);
    CHECK(records[4 + k].rel_err < records[2 + k].rel_err);
  }
}

TEST_CASE("convergence csv") {
  const ThetaVector theta({1.0});
  const auto records = convergence_table(1, theta, {SVector({0})}, {16, 32});
  std::ostringstream os;
  write_csv(os, records, 1, "converge --n 1 --theta 1 --s 0 --N-list 16,32");
  const std::string text = os.str();
  CHECK(text.rfind("N,s_1,theta_1,p_exact,p_limit,rel_err\n", 0) == 0);
  CHECK(text.find("\n16,0,1,") != std::string::npos);
  CHECK(text.find("\n32,0,1,") != std::string::npos);
  CHECK(text.find("# converge --n 1") != std::string::npos);
}
