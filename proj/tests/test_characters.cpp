#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "bspin/characters.hpp"

using namespace bspin;

namespace {

std::mt19937 rng(424242);

// Random rational point with distinct coordinates away from 1, so the B_n
// denominator alternant cannot vanish by the y_i = y_j or y_i = 1 walls.
// The remaining wall y_i y_j = 1 is excluded by rejection.
TorusPoint generic_point(int n) {
  while (true) {
    std::vector<BigRat> y(n);
    bool ok = true;
    for (auto& v : y) v = BigRat(2 + rng() % 17, 1 + rng() % 7);
    for (int i = 0; i < n && ok; ++i) {
      if (y[i] == 1) ok = false;
      for (int j = i + 1; j < n && ok; ++j) {
        if (y[i] == y[j] || y[i] * y[j] == 1) ok = false;
      }
    }
    if (ok) return TorusPoint(std::move(y));
  }
}

BigRat eval_weight_sum(const WeightMultiplicityMap& weights, const TorusPoint& pt) {
  return weight_sum_polynomial(weights, pt.vars()).eval(pt);
}

}  // namespace

TEST_CASE("spinor character structure") {
  const LaurentPoly s1 = spinor_character(1);
  LaurentPoly expect = LaurentPoly::monomial({1}, 1);
  expect += LaurentPoly::monomial({-1}, 1);
  CHECK(s1 == expect);

  CHECK(spinor_character(2).eval(TorusPoint::ones(2)) == 4);

  const LaurentPoly s3 = spinor_character(3);
  REQUIRE(s3.term_count() == 8);
  for (const auto& [e, c] : s3.terms()) {
    CHECK(c == 1);
    for (int v : e) CHECK(std::abs(v) == 1);
  }
}

TEST_CASE("character of the trivial representation is 1") {
  for (int n = 1; n <= 3; ++n) {
    CHECK(character_Bn(RescaledWeight(std::vector<Coord>(n, 0)), generic_point(n)) == 1);
  }
}

TEST_CASE("freudenthal weight diagrams at desk scale") {
  const auto so3 = freudenthal_weights(RescaledWeight({2}));
  REQUIRE(so3.size() == 3);
  CHECK(so3.at(RescaledWeight({2})) == 1);
  CHECK(so3.at(RescaledWeight({0})) == 1);
  CHECK(so3.at(RescaledWeight({-2})) == 1);

  const auto trivial = freudenthal_weights(RescaledWeight({0, 0}));
  REQUIRE(trivial.size() == 1);
  CHECK(trivial.at(RescaledWeight({0, 0})) == 1);

  // Vector representation of so_5.
  const auto so5 = freudenthal_weights(RescaledWeight({2, 0}));
  REQUIRE(so5.size() == 5);
  for (const auto& [mu, m] : so5) CHECK(m == 1);
  CHECK(so5.count(RescaledWeight({0, 0})) == 1);
  CHECK(so5.count(RescaledWeight({0, -2})) == 1);
}

TEST_CASE("character_Bn equals the Freudenthal weight sum") {
  // n=1, lambda=(2) at y=2: weights {2,0,-2} give 4 + 1 + 1/4.
  const TorusPoint two({BigRat(2)});
  CHECK(character_Bn(RescaledWeight({2}), two) == BigRat(21, 4));
  CHECK(eval_weight_sum(freudenthal_weights(RescaledWeight({2})), two) == BigRat(21, 4));

  // Small dominant weights, both parities, ranks 1..3.
  for (int n = 1; n <= 3; ++n) {
    std::vector<RescaledWeight> lams;
    if (n == 1) lams = {RescaledWeight({4}), RescaledWeight({3})};
    if (n == 2) lams = {RescaledWeight({2, 2}), RescaledWeight({3, 1}), RescaledWeight({4, 2})};
    if (n == 3) lams = {RescaledWeight({2, 2, 0}), RescaledWeight({1, 1, 1})};
    for (const auto& lam : lams) {
      const auto diagram = freudenthal_weights(lam);
      for (int rep = 0; rep < 5; ++rep) {
        const TorusPoint pt = generic_point(n);
        CHECK(character_Bn(lam, pt) == eval_weight_sum(diagram, pt));
      }
    }
  }
}

TEST_CASE("spinor highest weight reproduces the product character") {
  // n=2 spinor at y=(2,3): (2 + 1/2)(3 + 1/3) = 25/3.
  const TorusPoint pt({BigRat(2), BigRat(3)});
  CHECK(character_Bn(RescaledWeight({1, 1}), pt) == BigRat(25, 3));

  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    const LaurentPoly chi = spinor_character(n);
    const RescaledWeight spinor(std::vector<Coord>(n, 1));
    for (int rep = 0; rep < 34; ++rep) {
      const TorusPoint p = generic_point(n);
      CHECK(character_Bn(spinor, p) == chi.eval(p));
      ++checked;
    }
  }
  CHECK(checked >= 100);
}

TEST_CASE("character_Bn is Weyl invariant") {
  for (int n = 2; n <= 3; ++n) {
    const auto group = weyl_elements(WeylType::B, n);
    const RescaledWeight lam = n == 2 ? RescaledWeight({4, 2}) : RescaledWeight({2, 2, 0});
    for (int rep = 0; rep < 6; ++rep) {
      const TorusPoint pt = generic_point(n);
      const BigRat base = character_Bn(lam, pt);
      const auto& w = group[rng() % group.size()];
      std::vector<BigRat> moved(n);
      for (int i = 0; i < n; ++i) moved[i] = rat_pow(pt.y[w.perm[i]], w.signs[i]);
      CHECK(character_Bn(lam, TorusPoint(std::move(moved))) == base);
    }
  }
}

TEST_CASE("character_Bn singular points raise") {
  CHECK_THROWS_AS(character_Bn(RescaledWeight({2, 0}), TorusPoint::ones(2)),
                  SingularPointError);
  // y_1 y_2 = 1 also kills the denominator alternant.
  CHECK_THROWS_AS(character_Bn(RescaledWeight({2, 0}), TorusPoint({BigRat(2), BigRat(1, 2)})),
                  SingularPointError);
}

TEST_CASE("character_Bn validates its weight") {
  CHECK_THROWS_AS(character_Bn(RescaledWeight({1, 3}), generic_point(2)), ValidationError);
  CHECK_THROWS_AS(character_Bn(RescaledWeight({2, 1}), generic_point(2)), ValidationError);
}

TEST_CASE("dim_weyl") {
  CHECK(dim_weyl(RescaledWeight({0, 0})) == 1);
  CHECK(dim_weyl(RescaledWeight({2, 0})) == 5);
  for (int n = 1; n <= 6; ++n) {
    CHECK(dim_weyl(RescaledWeight(std::vector<Coord>(n, 1))) == BigInt(1) << n);
  }
}

TEST_CASE("dim_weyl equals total Freudenthal multiplicity") {
  for (const auto& lam : {RescaledWeight({2, 0}), RescaledWeight({2, 2}),
                          RescaledWeight({3, 1}), RescaledWeight({4, 2})}) {
    BigInt total = 0;
    for (const auto& [mu, m] : freudenthal_weights(lam)) total += m;
    CHECK(total == dim_weyl(lam));
  }
  BigInt total = 0;
  for (const auto& [mu, m] : freudenthal_weights(RescaledWeight({2, 2, 0}))) total += m;
  CHECK(total == dim_weyl(RescaledWeight({2, 2, 0})));
}

TEST_CASE("weight diagrams are Weyl invariant with top multiplicity 1") {
  const RescaledWeight lam({4, 2});
  const auto diagram = freudenthal_weights(lam);
  CHECK(diagram.at(lam) == 1);
  for (const auto& w : weyl_elements(WeylType::B, 2)) {
    for (const auto& [mu, m] : diagram) {
      CHECK(diagram.at(w.apply(mu)) == m);
    }
  }
}

TEST_CASE("character_An values") {
  // Trivial weight.
  CHECK(character_An(AnHighestWeight({0, 0}), generic_point(2)) == 1);
  // All-equal point gives the dimension.
  CHECK(character_An(AnHighestWeight({1, -1}), TorusPoint({BigRat(3), BigRat(3)})) == 2);
  CHECK(dim_An(AnHighestWeight({2, 0, -2})) == 8);  // adjoint of sl_3
  // n=2, gamma=(1,-1) at (2,1): y1/y2 + y2/y1 = 5/2.
  CHECK(character_An(AnHighestWeight({1, -1}), TorusPoint({BigRat(2), BigRat(1)})) ==
        BigRat(5, 2));
  // n=1 is always trivial.
  CHECK(character_An(AnHighestWeight({0}), TorusPoint({BigRat(7, 3)})) == 1);
}

TEST_CASE("character_An partial ties raise, weight sum covers them") {
  const AnHighestWeight gamma({2, 0, -2});
  const TorusPoint tied({BigRat(2), BigRat(2), BigRat(5)});
  CHECK_THROWS_AS(character_An(gamma, tied), SingularPointError);
  // The weight-sum route agrees with the alternant at a generic point...
  const TorusPoint pt({BigRat(2), BigRat(3), BigRat(5)});
  CHECK(character_An(gamma, pt) == character_An_weight_sum(gamma, pt));
  // ...and still evaluates at the tied point.
  CHECK(character_An_weight_sum(gamma, tied) > 0);
}

TEST_CASE("character_An is invariant under common scaling") {
  for (int rep = 0; rep < 10; ++rep) {
    const AnHighestWeight gamma({4, 0, -4});
    const TorusPoint pt = generic_point(3);
    const BigRat c(1 + rng() % 9, 1 + rng() % 9);
    std::vector<BigRat> scaled(3);
    for (int i = 0; i < 3; ++i) scaled[i] = pt.y[i] * c;
    CHECK(character_An(gamma, TorusPoint(std::move(scaled))) == character_An(gamma, pt));
  }
}

TEST_CASE("character_An matches its weight sum on random inputs") {
  const std::vector<AnHighestWeight> gammas = {
      AnHighestWeight({2, -2}), AnHighestWeight({4, -4}), AnHighestWeight({4, 2, -6}),
      AnHighestWeight({4, 0, -4}), AnHighestWeight({2, 2, -4})};
  for (const auto& gamma : gammas) {
    for (int rep = 0; rep < 5; ++rep) {
      const TorusPoint pt = generic_point(gamma.rank());
      CHECK(character_An(gamma, pt) == character_An_weight_sum(gamma, pt));
    }
    BigInt total = 0;
    for (const auto& [mu, m] : freudenthal_weights_An(gamma)) total += m;
    CHECK(total == dim_An(gamma));
  }
}

TEST_CASE("An weight validation") {
  CHECK_THROWS_AS(dim_An(AnHighestWeight({1, 0})), ValidationError);    // sum != 0
  CHECK_THROWS_AS(dim_An(AnHighestWeight({-1, 1})), ValidationError);   // not sorted
  CHECK_THROWS_AS(dim_An(AnHighestWeight({1, 0, -1})), ValidationError);  // odd differences
}

TEST_CASE("log-space character agrees with the exact value") {
  for (int n = 1; n <= 3; ++n) {
    const RescaledWeight lam = n == 1   ? RescaledWeight({4})
                               : n == 2 ? RescaledWeight({4, 2})
                                        : RescaledWeight({2, 2, 0});
    for (int rep = 0; rep < 8; ++rep) {
      const TorusPoint pt = generic_point(n);
      std::vector<double> t(n);
      for (int i = 0; i < n; ++i) t[i] = std::log(to_double(pt.y[i]));
      const double exact = std::log(to_double(character_Bn(lam, pt)));
      CHECK(log_character_Bn(lam, t) == doctest::Approx(exact).epsilon(1e-10));
      const double spin_exact = std::log(to_double(spinor_character(n).eval(pt)));
      CHECK(log_spinor_character(t) == doctest::Approx(spin_exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("log-space character raises at tied points") {
  const std::vector<double> tied = {0.5, 0.5};
  CHECK_THROWS_AS(log_character_Bn(RescaledWeight({4, 2}), tied), SingularPointError);
}

TEST_CASE("floating An character handles rational gamma") {
  // gamma from s=(0,0,1) is (2/3, 2/3, -4/3), the second fundamental weight
  // of sl_3 (dimension 3); at the all-ones point the character is the dim.
  const std::vector<BigRat> gamma = {BigRat(2, 3), BigRat(2, 3), BigRat(-4, 3)};
  const std::vector<double> ones = {1.0, 1.0, 1.0};
  CHECK(character_An_value(gamma, ones) == doctest::Approx(3.0).epsilon(1e-12));

  // Integer gamma agrees with the exact alternant.
  const AnHighestWeight g2({4, 2, -6});
  const TorusPoint pt = generic_point(3);
  std::vector<double> y(3);
  for (int i = 0; i < 3; ++i) y[i] = to_double(pt.y[i]);
  std::vector<BigRat> g2r = {BigRat(4), BigRat(2), BigRat(-6)};
  CHECK(character_An_value(g2r, y) ==
        doctest::Approx(to_double(character_An(g2, pt))).epsilon(1e-12));
}
