#pragma once

#include <cstddef>
#include <vector>

#include "sheafstab/errors.hpp"
#include "sheafstab/rational.hpp"
#include "sheafstab/unipoly.hpp"
#include "sheafstab/variety.hpp"

namespace sheafstab {

// Even-degree class in the truncated cohomology ring of X, graded over a
// coefficient ring T. T = Rational gives ordinary classes; T = UniPoly gives
// classes with polynomial coefficients, which is how the Hilbert polynomial
// is collected in one pass (the twist e^{mH} has UniPoly coefficients).
//
// deg2 is a coordinate vector against the Neron-Severi basis. On a curve the
// single deg2 coordinate is a multiple of the point class and is already the
// top degree; deg4 is unused there. Products beyond the top degree truncate
// to zero.
template <typename T>
struct GradedClass {
  PolarizedVariety variety;
  T deg0{};
  std::vector<T> deg2;
  T deg4{};

  static GradedClass zero(const PolarizedVariety& x) {
    GradedClass c{x};
    c.deg2.assign(x.ns_rank(), T{});
    return c;
  }

  static GradedClass scalar(const PolarizedVariety& x, T value) {
    GradedClass c = zero(x);
    c.deg0 = std::move(value);
    return c;
  }

  static GradedClass point(const PolarizedVariety& x, T value) {
    GradedClass c = zero(x);
    if (x.dimension() == 2) {
      c.deg4 = std::move(value);
    } else {
      c.deg2[0] = std::move(value);
    }
    return c;
  }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.variety == b.variety && a.deg0 == b.deg0 && a.deg2 == b.deg2 &&
           a.deg4 == b.deg4;
  }
};

using CohClass = GradedClass<Rational>;

namespace detail {

template <typename T>
void require_same_variety(const GradedClass<T>& a, const GradedClass<T>& b) {
  if (!(a.variety == b.variety)) throw domain_error("foreign class");
}

template <typename T>
void require_shape(const GradedClass<T>& a) {
  if (a.deg2.size() != a.variety.ns_rank())
    throw internal_error("graded class deg2 rank mismatch");
}

// Gram form with coefficients in T: sum a_i * gram[i][j] * b_j.
template <typename T>
T gram_form(const PolarizedVariety& x, const std::vector<T>& a, const std::vector<T>& b) {
  const auto& g = x.gram();
  T acc{};
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (g[i][j] == 0) continue;
      acc += a[i] * Rational(g[i][j]) * b[j];
    }
  return acc;
}

}  // namespace detail

template <typename T>
GradedClass<T> class_add(const GradedClass<T>& a, const GradedClass<T>& b) {
  detail::require_same_variety(a, b);
  detail::require_shape(a);
  detail::require_shape(b);
  GradedClass<T> out = a;
  out.deg0 += b.deg0;
  for (std::size_t i = 0; i < out.deg2.size(); ++i) out.deg2[i] += b.deg2[i];
  out.deg4 += b.deg4;
  return out;
}

template <typename T>
GradedClass<T> class_sub(const GradedClass<T>& a, const GradedClass<T>& b) {
  detail::require_same_variety(a, b);
  detail::require_shape(a);
  detail::require_shape(b);
  GradedClass<T> out = a;
  out.deg0 -= b.deg0;
  for (std::size_t i = 0; i < out.deg2.size(); ++i) out.deg2[i] -= b.deg2[i];
  out.deg4 -= b.deg4;
  return out;
}

template <typename T>
GradedClass<T> class_scale(const GradedClass<T>& a, const T& s) {
  detail::require_shape(a);
  GradedClass<T> out = a;
  out.deg0 = out.deg0 * s;
  for (auto& c : out.deg2) c = c * s;
  out.deg4 = out.deg4 * s;
  return out;
}

// Graded truncated product. On a surface
//   deg4(a*b) = a0*b4 + a4*b0 + gram(a2, b2);
// on a curve deg2 is top, so deg2(a*b) = a0*b2 + a2*b0 and nothing else
// survives.
template <typename T>
GradedClass<T> class_mul(const GradedClass<T>& a, const GradedClass<T>& b) {
  detail::require_same_variety(a, b);
  detail::require_shape(a);
  detail::require_shape(b);
  const PolarizedVariety& x = a.variety;
  GradedClass<T> out = GradedClass<T>::zero(x);
  out.deg0 = a.deg0 * b.deg0;
  for (std::size_t i = 0; i < out.deg2.size(); ++i)
    out.deg2[i] = a.deg0 * b.deg2[i] + a.deg2[i] * b.deg0;
  if (x.dimension() == 2)
    out.deg4 = a.deg0 * b.deg4 + a.deg4 * b.deg0 + detail::gram_form(x, a.deg2, b.deg2);
  return out;
}

template <typename T>
GradedClass<T> class_mul(const GradedClass<T>& a, const GradedClass<T>& b,
                         const PolarizedVariety& x) {
  if (!(a.variety == x) || !(b.variety == x)) throw domain_error("foreign class");
  return class_mul(a, b);
}

// Top-degree component: deg4 on a surface, the single deg2 coordinate on a
// curve.
template <typename T>
T integrate(const GradedClass<T>& a) {
  detail::require_shape(a);
  return a.variety.dimension() == 2 ? a.deg4 : a.deg2[0];
}

template <typename T>
T integrate(const GradedClass<T>& a, const PolarizedVariety& x) {
  if (!(a.variety == x)) throw domain_error("foreign class");
  return integrate(a);
}

// Lift a rational class to polynomial coefficients (constant polynomials).
inline GradedClass<UniPoly> lift_to_poly(const CohClass& a) {
  GradedClass<UniPoly> out = GradedClass<UniPoly>::zero(a.variety);
  out.deg0 = UniPoly::constant(a.deg0);
  for (std::size_t i = 0; i < a.deg2.size(); ++i)
    out.deg2[i] = UniPoly::constant(a.deg2[i]);
  out.deg4 = UniPoly::constant(a.deg4);
  return out;
}

}  // namespace sheafstab
