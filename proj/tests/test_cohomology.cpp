#include <doctest.h>

#include <vector>

#include <sheafstab/cohomology.hpp>
#include <sheafstab/errors.hpp>
#include <sheafstab/variety.hpp>

#include "generators.hpp"

using sheafstab::CohClass;
using sheafstab::GradedClass;
using sheafstab::PolarizedVariety;
using sheafstab::Rational;
using sheafstab::UniPoly;
using sheafstab::class_add;
using sheafstab::class_mul;
using sheafstab::class_scale;
using sheafstab::class_sub;
using sheafstab::domain_error;
using sheafstab::integrate;
using sheafstab::lift_to_poly;

namespace {

CohClass basis_deg2(const PolarizedVariety& x, std::size_t i) {
  CohClass c = CohClass::zero(x);
  c.deg2[i] = Rational(1);
  return c;
}

CohClass rand_class(std::mt19937_64& rng, const PolarizedVariety& x) {
  CohClass c = CohClass::zero(x);
  c.deg0 = testsupport::rand_rational(rng);
  for (auto& v : c.deg2) v = testsupport::rand_rational(rng);
  if (x.dimension() == 2) c.deg4 = testsupport::rand_rational(rng);
  return c;
}

// Rank-3 lattice with off-diagonal terms; H = e_0, H^2 = 2.
PolarizedVariety rho3() {
  return PolarizedVariety::surface({{2, 1, 0}, {1, -2, 1}, {0, 1, -2}},
                                   {1, 0, 0},
                                   {Rational(0), Rational(0), Rational(0)},
                                   Rational(-24), "rho3");
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("constructors fix the shape") {
  PolarizedVariety x = PolarizedVariety::k3(2);
  CohClass z = CohClass::zero(x);
  CHECK(z.deg2.size() == 1);
  CHECK(z.deg0 == Rational(0));

  CohClass s = CohClass::scalar(x, Rational(5));
  CHECK(s.deg0 == Rational(5));
  CHECK(s.deg4 == Rational(0));

  CohClass p = CohClass::point(x, Rational(7));
  CHECK(p.deg4 == Rational(7));

  PolarizedVariety c = PolarizedVariety::curve(1, 3);
  CohClass pc = CohClass::point(c, Rational(7));
  CHECK(pc.deg2[0] == Rational(7));
  CHECK(integrate(pc) == Rational(7));
}

TEST_CASE("hyperplane square on a k3") {
  for (long long d : {2, 4, 6}) {
    PolarizedVariety x = PolarizedVariety::k3(d);
    CohClass h = basis_deg2(x, 0);
    CHECK(integrate(class_mul(h, h)) == Rational(d));

    CohClass oneplus = class_add(CohClass::scalar(x, Rational(1)), h);
    CohClass sq = class_mul(oneplus, oneplus);
    CHECK(sq.deg0 == Rational(1));
    CHECK(sq.deg2[0] == Rational(2));
    CHECK(sq.deg4 == Rational(d));
  }
}

TEST_CASE("character times todd shape on a k3") {
  PolarizedVariety x = PolarizedVariety::k3(2);
  // (2 - 24 pt)(1 + 2 pt) = 2 - 20 pt.
  CohClass ch = class_add(CohClass::scalar(x, Rational(2)),
                          CohClass::point(x, Rational(-24)));
  CohClass td = class_add(CohClass::scalar(x, Rational(1)),
                          CohClass::point(x, Rational(2)));
  CohClass prod = class_mul(ch, td);
  CHECK(prod.deg0 == Rational(2));
  CHECK(prod.deg4 == Rational(-20));
  CHECK(integrate(prod) == Rational(-20));
}

TEST_CASE("products truncate above the top degree") {
  PolarizedVariety x = PolarizedVariety::k3(2);
  CohClass pt = CohClass::point(x, Rational(1));
  CohClass sq = class_mul(pt, pt);
  CHECK(sq == CohClass::zero(x));

  CohClass h = basis_deg2(x, 0);
  CohClass hpt = class_mul(h, pt);
  CHECK(hpt == CohClass::zero(x));

  PolarizedVariety c = PolarizedVariety::curve(0, 1);
  CohClass p1 = CohClass::point(c, Rational(3));
  CHECK(class_mul(p1, p1) == CohClass::zero(c));
}

TEST_CASE("ring laws are exhaustive on the rank-3 basis") {
  PolarizedVariety x = rho3();
  std::vector<CohClass> basis;
  basis.push_back(CohClass::scalar(x, Rational(1)));
  for (std::size_t i = 0; i < 3; ++i) basis.push_back(basis_deg2(x, i));
  basis.push_back(CohClass::point(x, Rational(1)));

  for (const auto& a : basis)
    for (const auto& b : basis) {
      CHECK(class_mul(a, b) == class_mul(b, a));
      for (const auto& c : basis)
        CHECK(class_mul(class_mul(a, b), c) == class_mul(a, class_mul(b, c)));
    }
}

TEST_CASE("intersection pairing off the diagonal") {
  PolarizedVariety x = rho3();
  CHECK(integrate(class_mul(basis_deg2(x, 0), basis_deg2(x, 1))) == Rational(1));
  CHECK(integrate(class_mul(basis_deg2(x, 1), basis_deg2(x, 1))) == Rational(-2));
  CHECK(integrate(class_mul(basis_deg2(x, 0), basis_deg2(x, 2))) == Rational(0));
}

TEST_CASE("add sub scale and bilinearity on random classes") {
  auto rng = testsupport::make_rng(23);
  PolarizedVariety x = rho3();
  for (int i = 0; i < 100; ++i) {
    CohClass a = rand_class(rng, x);
    CohClass b = rand_class(rng, x);
    CohClass c = rand_class(rng, x);
    Rational s = testsupport::rand_rational(rng);

    CHECK(class_sub(class_add(a, b), b) == a);
    CHECK(class_mul(a, b) == class_mul(b, a));
    CHECK(class_mul(class_add(a, b), c) ==
          class_add(class_mul(a, c), class_mul(b, c)));
    CHECK(class_mul(class_scale(a, s), b) == class_scale(class_mul(a, b), s));
    CHECK(integrate(class_add(a, b)) == integrate(a) + integrate(b));
  }
}

TEST_CASE("distinct varieties never mix") {
  PolarizedVariety x = PolarizedVariety::k3(2);
  PolarizedVariety y = PolarizedVariety::k3(2);  // same shape, distinct model
  CHECK(!(x == y));
  PolarizedVariety x2 = x;  // shared handle
  CHECK(x == x2);

  CohClass a = CohClass::scalar(x, Rational(1));
  CohClass b = CohClass::scalar(y, Rational(1));
  CHECK_THROWS_AS(class_mul(a, b), domain_error);
  CHECK_THROWS_AS(class_add(a, b), domain_error);
  CHECK_THROWS_AS(class_mul(a, a, y), domain_error);
  CHECK_THROWS_AS(integrate(a, y), domain_error);
  CHECK(integrate(a, x) == Rational(0));
}

TEST_CASE("polynomial coefficients multiply the same way") {
  PolarizedVariety x = PolarizedVariety::k3(4);
  auto rng = testsupport::make_rng(29);
  for (int i = 0; i < 50; ++i) {
    CohClass a = rand_class(rng, x);
    CohClass b = rand_class(rng, x);
    // Lifting to constant polynomials commutes with the product.
    GradedClass<UniPoly> lifted = class_mul(lift_to_poly(a), lift_to_poly(b));
    CHECK(lifted == lift_to_poly(class_mul(a, b)));
  }
}

}  // TEST_SUITE
