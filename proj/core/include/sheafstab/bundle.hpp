#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sheafstab/cohomology.hpp"
#include "sheafstab/rational.hpp"
#include "sheafstab/unipoly.hpp"
#include "sheafstab/variety.hpp"

namespace sheafstab {

// A bundle at the level of Chern data: rank plus the degree-2 and degree-4
// components of the Chern character. Negative ranks are legal (virtual
// differences arise as filtration quotients); predicates that need a genuine
// sheaf demand positive rank at the point of use. The label is display
// metadata and is ignored by equality.
class VirtualBundle {
 public:
  // ch2 = (gram(c1,c1) - 2 c2) / 2. On a curve c2 must be zero.
  static VirtualBundle from_chern(long long rank, std::vector<Rational> c1,
                                  Rational c2, const PolarizedVariety& x,
                                  std::string label = "");

  // Direct Chern-character data; ch2 ignored (forced 0) on a curve.
  static VirtualBundle from_character(long long rank, std::vector<Rational> ch1,
                                      Rational ch2, const PolarizedVariety& x,
                                      std::string label = "");

  static VirtualBundle structure_sheaf(const PolarizedVariety& x);
  static VirtualBundle line_bundle(std::vector<Rational> c1, const PolarizedVariety& x,
                                   std::string label = "");
  static VirtualBundle tangent_bundle(const PolarizedVariety& x);

  const PolarizedVariety& variety() const { return variety_; }
  long long rank() const { return rank_; }
  const std::vector<Rational>& ch1() const { return ch1_; }
  const Rational& ch2() const { return ch2_; }
  const std::string& label() const { return label_; }

  VirtualBundle with_label(std::string label) const;

  // ch(E) = rank + ch1 + ch2.
  CohClass chern_character() const;

  // (c1, c2) recovered from the character; c2 = gram(ch1,ch1)/2 - ch2.
  // On a curve c2 is identically zero.
  std::pair<std::vector<Rational>, Rational> chern_classes() const;

  // c1 integral and c2 integral.
  bool has_integral_chern_data() const;

  // Equality is Chern data on the same variety; labels do not participate.
  friend bool operator==(const VirtualBundle& a, const VirtualBundle& b) {
    return a.variety_ == b.variety_ && a.rank_ == b.rank_ && a.ch1_ == b.ch1_ &&
           a.ch2_ == b.ch2_;
  }

 private:
  VirtualBundle(PolarizedVariety x, long long rank, std::vector<Rational> ch1,
                Rational ch2, std::string label)
      : variety_(std::move(x)),
        rank_(rank),
        ch1_(std::move(ch1)),
        ch2_(std::move(ch2)),
        label_(std::move(label)) {}

  PolarizedVariety variety_;
  long long rank_;
  std::vector<Rational> ch1_;
  Rational ch2_;
  std::string label_;
};

// rank, -ch1, ch2 (odd-degree components flip).
VirtualBundle dual(const VirtualBundle& e);

VirtualBundle direct_sum(const VirtualBundle& a, const VirtualBundle& b);

// Virtual difference a - b, e.g. a filtration quotient.
VirtualBundle difference(const VirtualBundle& a, const VirtualBundle& b);

// ch(a (x) b) = ch(a) ch(b) in the truncated ring.
VirtualBundle tensor(const VirtualBundle& a, const VirtualBundle& b);

// td(X) = 1 + c1(TX)/2 + (c1(TX)^2 + c2(TX))/12, truncated to the dimension.
CohClass todd_class(const PolarizedVariety& x);

// chi(E) = integrate(ch(E) td(X)).
Rational euler_char(const VirtualBundle& e);
Rational euler_char(const VirtualBundle& e, const PolarizedVariety& x);

// P_E(m) = chi(E (x) O(mH)) = integrate(ch(E) e^{mH} td(X)), exact in m.
UniPoly hilbert_polynomial(const VirtualBundle& e);
UniPoly hilbert_polynomial(const VirtualBundle& e, const PolarizedVariety& x);

// deg E = gram(c1(E), H) on a surface; the single c1 coordinate on a curve.
Rational degree(const VirtualBundle& e);
Rational degree(const VirtualBundle& e, const PolarizedVariety& x);

}  // namespace sheafstab
