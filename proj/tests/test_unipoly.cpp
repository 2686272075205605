#include <doctest.h>

#include <compare>

#include <sheafstab/errors.hpp>
#include <sheafstab/unipoly.hpp>

#include "generators.hpp"

using sheafstab::Rational;
using sheafstab::UniPoly;
using sheafstab::domain_error;
using sheafstab::eventually_compare;

TEST_SUITE("unipoly") {

TEST_CASE("zero polynomial has no degree") {
  CHECK(UniPoly().is_zero());
  CHECK(!UniPoly().degree().has_value());
  CHECK(UniPoly::constant(Rational(0)).is_zero());
  CHECK_THROWS_AS(UniPoly().leading(), domain_error);
}

TEST_CASE("trailing zeros are trimmed") {
  UniPoly p({Rational(1), Rational(0), Rational(0)});
  CHECK(p.degree() == 0);
  UniPoly q({Rational(1), Rational(2)});
  CHECK((q - q).is_zero());
  CHECK(!(q - q).degree().has_value());
}

TEST_CASE("coeff beyond the degree is zero") {
  UniPoly p({Rational(3), Rational(0), Rational(5)});
  CHECK(p.degree() == 2);
  CHECK(p.coeff(0) == Rational(3));
  CHECK(p.coeff(1) == Rational(0));
  CHECK(p.coeff(2) == Rational(5));
  CHECK(p.coeff(3) == Rational(0));
  CHECK(p.coeff(100) == Rational(0));
  CHECK(p.leading() == Rational(5));
}

TEST_CASE("ring arithmetic") {
  UniPoly m = UniPoly::variable();
  UniPoly one = UniPoly::constant(Rational(1));
  UniPoly two = UniPoly::constant(Rational(2));
  UniPoly prod = (m + one) * (m + two);
  CHECK(prod == UniPoly({Rational(2), Rational(3), Rational(1)}));
  CHECK(prod - prod == UniPoly());
  CHECK(prod * UniPoly() == UniPoly());
  CHECK(prod * Rational(2) / Rational(2) == prod);
  CHECK(-prod + prod == UniPoly());
  CHECK_THROWS_AS(prod / Rational(0), domain_error);
}

TEST_CASE("monomial and variable") {
  CHECK(UniPoly::monomial(Rational(3), 2).str() == "3*m^2");
  CHECK(UniPoly::variable().degree() == 1);
  CHECK(UniPoly::monomial(Rational(0), 5).is_zero());
}

TEST_CASE("horner evaluation") {
  UniPoly p({Rational(2), Rational(-1), Rational(1)});  // m^2 - m + 2
  CHECK(p(Rational(0)) == Rational(2));
  CHECK(p(Rational(3)) == Rational(8));
  CHECK(p(Rational(1, 2)) == Rational(7, 4));

  auto rng = testsupport::make_rng(11);
  for (int i = 0; i < 100; ++i) {
    UniPoly q = testsupport::rand_poly(rng);
    Rational x = testsupport::rand_rational(rng);
    Rational direct(0);
    Rational pw(1);
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
      direct += q.coeff(k) * pw;
      pw *= x;
    }
    CHECK(q(x) == direct);
  }
}

TEST_CASE("eventual order on fixed pairs") {
  UniPoly msq = UniPoly::monomial(Rational(1), 2);
  UniPoly bigline = UniPoly::monomial(Rational(1000), 1);
  CHECK(eventually_compare(msq, bigline) == std::strong_ordering::greater);
  CHECK(eventually_compare(bigline, msq) == std::strong_ordering::less);
  CHECK(eventually_compare(msq, msq) == std::strong_ordering::equal);
  CHECK(eventually_compare(UniPoly(), UniPoly()) == std::strong_ordering::equal);
  CHECK(eventually_compare(UniPoly::constant(Rational(-1)), UniPoly()) ==
        std::strong_ordering::less);
}

// Soundness of the eventual order: past the Cauchy bound of the difference,
// pointwise comparison agrees with the verdict.
TEST_CASE("eventual order matches evaluation past the cauchy bound") {
  auto rng = testsupport::make_rng(13);
  int nontrivial = 0;
  for (int i = 0; i < 150; ++i) {
    UniPoly p = testsupport::rand_poly(rng);
    UniPoly q = testsupport::rand_poly(rng);
    auto verdict = eventually_compare(p, q);
    UniPoly d = p - q;
    if (d.is_zero()) {
      CHECK(verdict == std::strong_ordering::equal);
      continue;
    }
    ++nontrivial;
    Rational bound(0);
    for (std::size_t k = 0; k + 1 < d.coeffs().size(); ++k) {
      Rational ratio = abs(d.coeff(k) / d.leading());
      if (ratio > bound) bound = ratio;
    }
    long long big = 2;
    while (Rational(big) <= Rational(1) + bound) ++big;
    Rational gap = p(Rational(big)) - q(Rational(big));
    if (verdict == std::strong_ordering::greater) CHECK(gap.sign() == 1);
    if (verdict == std::strong_ordering::less) CHECK(gap.sign() == -1);
  }
  CHECK(nontrivial >= 100);
}

TEST_CASE("eventual order is antisymmetric and scale-covariant") {
  auto rng = testsupport::make_rng(17);
  for (int i = 0; i < 100; ++i) {
    UniPoly p = testsupport::rand_poly(rng);
    UniPoly q = testsupport::rand_poly(rng);
    auto ab = eventually_compare(p, q);
    auto ba = eventually_compare(q, p);
    if (ab == std::strong_ordering::equal) {
      CHECK(ba == std::strong_ordering::equal);
      CHECK(p == q);
    } else {
      CHECK(ab != ba);
    }
    CHECK(eventually_compare(p * Rational(3), q * Rational(3)) == ab);
  }
}

TEST_CASE("rendering") {
  CHECK(UniPoly({Rational(-20), Rational(0), Rational(2)}).str() == "2*m^2 - 20");
  CHECK(UniPoly({Rational(2), Rational(0), Rational(1)}).str() == "m^2 + 2");
  CHECK(UniPoly({Rational(0), Rational(0), Rational(1, 2)}).str() == "(1/2)*m^2");
  CHECK(UniPoly({Rational(3), Rational(-1)}).str() == "-m + 3");
  CHECK(UniPoly().str() == "0");
  CHECK(UniPoly::constant(Rational(-7, 2)).str() == "-7/2");
  CHECK(UniPoly({Rational(0), Rational(4)}).str("t") == "4*t");
}

}  // TEST_SUITE
