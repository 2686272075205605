#include "sheafstab/bundle.hpp"

#include "sheafstab/errors.hpp"

namespace sheafstab {

namespace {

void require_rank(const std::vector<Rational>& v, const PolarizedVariety& x,
                  const char* what) {
  if (v.size() != x.ns_rank())
    throw domain_error(std::string(what) + ": degree-2 class has wrong rank");
}

void require_same(const VirtualBundle& a, const VirtualBundle& b) {
  if (!(a.variety() == b.variety())) throw domain_error("foreign class");
}

}  // namespace

VirtualBundle VirtualBundle::from_chern(long long rank, std::vector<Rational> c1,
                                        Rational c2, const PolarizedVariety& x,
                                        std::string label) {
  require_rank(c1, x, "from_chern");
  if (x.dimension() == 1) {
    if (!c2.is_zero()) throw domain_error("from_chern: c2 on a curve");
    return VirtualBundle(x, rank, std::move(c1), Rational(0), std::move(label));
  }
  Rational ch2 = (x.pair(c1, c1) - Rational(2) * c2) / Rational(2);
  return VirtualBundle(x, rank, std::move(c1), std::move(ch2), std::move(label));
}

VirtualBundle VirtualBundle::from_character(long long rank, std::vector<Rational> ch1,
                                            Rational ch2, const PolarizedVariety& x,
                                            std::string label) {
  require_rank(ch1, x, "from_character");
  if (x.dimension() == 1) ch2 = Rational(0);
  return VirtualBundle(x, rank, std::move(ch1), std::move(ch2), std::move(label));
}

VirtualBundle VirtualBundle::structure_sheaf(const PolarizedVariety& x) {
  return VirtualBundle(x, 1, std::vector<Rational>(x.ns_rank()), Rational(0), "O");
}

VirtualBundle VirtualBundle::line_bundle(std::vector<Rational> c1,
                                         const PolarizedVariety& x, std::string label) {
  return from_chern(1, std::move(c1), Rational(0), x, std::move(label));
}

VirtualBundle VirtualBundle::tangent_bundle(const PolarizedVariety& x) {
  if (x.dimension() == 1)
    return VirtualBundle(x, 1, x.tangent_c1(), Rational(0), "TX");
  return VirtualBundle(x, 2, x.tangent_c1(), x.tangent_ch2(), "TX");
}

VirtualBundle VirtualBundle::with_label(std::string label) const {
  VirtualBundle out = *this;
  out.label_ = std::move(label);
  return out;
}

CohClass VirtualBundle::chern_character() const {
  CohClass c = CohClass::zero(variety_);
  c.deg0 = Rational(rank_);
  c.deg2 = ch1_;
  if (variety_.dimension() == 2) c.deg4 = ch2_;
  return c;
}

std::pair<std::vector<Rational>, Rational> VirtualBundle::chern_classes() const {
  if (variety_.dimension() == 1) return {ch1_, Rational(0)};
  Rational c2 = variety_.pair(ch1_, ch1_) / Rational(2) - ch2_;
  return {ch1_, std::move(c2)};
}

bool VirtualBundle::has_integral_chern_data() const {
  for (const auto& c : ch1_)
    if (!c.is_integer()) return false;
  return chern_classes().second.is_integer();
}

VirtualBundle dual(const VirtualBundle& e) {
  std::vector<Rational> ch1;
  ch1.reserve(e.ch1().size());
  for (const auto& c : e.ch1()) ch1.push_back(-c);
  return VirtualBundle::from_character(e.rank(), std::move(ch1), e.ch2(), e.variety(),
                                       e.label().empty() ? "" : e.label() + "^");
}

VirtualBundle direct_sum(const VirtualBundle& a, const VirtualBundle& b) {
  require_same(a, b);
  std::vector<Rational> ch1 = a.ch1();
  for (std::size_t i = 0; i < ch1.size(); ++i) ch1[i] += b.ch1()[i];
  return VirtualBundle::from_character(a.rank() + b.rank(), std::move(ch1),
                                       a.ch2() + b.ch2(), a.variety());
}

VirtualBundle difference(const VirtualBundle& a, const VirtualBundle& b) {
  require_same(a, b);
  std::vector<Rational> ch1 = a.ch1();
  for (std::size_t i = 0; i < ch1.size(); ++i) ch1[i] -= b.ch1()[i];
  return VirtualBundle::from_character(a.rank() - b.rank(), std::move(ch1),
                                       a.ch2() - b.ch2(), a.variety());
}

VirtualBundle tensor(const VirtualBundle& a, const VirtualBundle& b) {
  require_same(a, b);
  const Rational ra(a.rank()), rb(b.rank());
  std::vector<Rational> ch1(a.ch1().size());
  for (std::size_t i = 0; i < ch1.size(); ++i)
    ch1[i] = rb * a.ch1()[i] + ra * b.ch1()[i];
  Rational ch2(0);
  if (a.variety().dimension() == 2)
    ch2 = rb * a.ch2() + a.variety().pair(a.ch1(), b.ch1()) + ra * b.ch2();
  return VirtualBundle::from_character(a.rank() * b.rank(), std::move(ch1),
                                       std::move(ch2), a.variety());
}

CohClass todd_class(const PolarizedVariety& x) {
  CohClass td = CohClass::zero(x);
  td.deg0 = Rational(1);
  if (x.dimension() == 1) {
    td.deg2[0] = x.tangent_c1()[0] / Rational(2);
    return td;
  }
  for (std::size_t i = 0; i < td.deg2.size(); ++i)
    td.deg2[i] = x.tangent_c1()[i] / Rational(2);
  const Rational c1sq = x.pair(x.tangent_c1(), x.tangent_c1());
  td.deg4 = (c1sq + x.tangent_c2()) / Rational(12);
  return td;
}

Rational euler_char(const VirtualBundle& e) {
  return integrate(class_mul(e.chern_character(), todd_class(e.variety())));
}

Rational euler_char(const VirtualBundle& e, const PolarizedVariety& x) {
  if (!(e.variety() == x)) throw domain_error("foreign class");
  return euler_char(e);
}

namespace {

// e^{mH} in the truncated ring, with coefficients polynomial in m:
// 1 + mH (+ m^2 H^2/2 as a point class on a surface).
GradedClass<UniPoly> hyperplane_twist(const PolarizedVariety& x) {
  GradedClass<UniPoly> t = GradedClass<UniPoly>::zero(x);
  t.deg0 = UniPoly::constant(Rational(1));
  const auto h = x.ample_coords();
  for (std::size_t i = 0; i < h.size(); ++i) t.deg2[i] = UniPoly::monomial(h[i], 1);
  if (x.dimension() == 2)
    t.deg4 = UniPoly::monomial(x.hyperplane_self_intersection() / Rational(2), 2);
  return t;
}

}  // namespace

UniPoly hilbert_polynomial(const VirtualBundle& e) {
  const PolarizedVariety& x = e.variety();
  const auto ch = lift_to_poly(e.chern_character());
  const auto td = lift_to_poly(todd_class(x));
  return integrate(class_mul(class_mul(ch, hyperplane_twist(x)), td));
}

UniPoly hilbert_polynomial(const VirtualBundle& e, const PolarizedVariety& x) {
  if (!(e.variety() == x)) throw domain_error("foreign class");
  return hilbert_polynomial(e);
}

Rational degree(const VirtualBundle& e) {
  const PolarizedVariety& x = e.variety();
  if (x.dimension() == 1) return e.ch1()[0];
  return x.pair(e.ch1(), x.ample_coords());
}

Rational degree(const VirtualBundle& e, const PolarizedVariety& x) {
  if (!(e.variety() == x)) throw domain_error("foreign class");
  return degree(e);
}

}  // namespace sheafstab
