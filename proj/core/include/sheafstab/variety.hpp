#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "sheafstab/rational.hpp"

namespace sheafstab {

// Ambient geometry for all computations: a polarized smooth projective
// variety of dimension 1 or 2, modelled by its Neron-Severi lattice (a Gram
// matrix with a distinguished ample class) and the Chern data of its tangent
// bundle. Instances are immutable and shared by handle; two handles denote
// the same variety exactly when they share the underlying model, which is
// what the "foreign class" checks test.
class PolarizedVariety {
 public:
  // Surface with an explicit intersection form. `gram` must be square,
  // symmetric, with positive self-intersection on `ample`.
  static PolarizedVariety surface(std::vector<std::vector<long long>> gram,
                                  std::vector<long long> ample,
                                  std::vector<Rational> tangent_c1,
                                  Rational tangent_ch2,
                                  std::string name = "surface");

  // K3 surface of polarization degree h2 = H^2 (positive and even; the K3
  // intersection form is even). Tangent data is forced: c1 = 0, ch2 = -24.
  static PolarizedVariety k3(long long h2 = 2);

  // Smooth projective curve of the given genus, polarized by a divisor of
  // the given positive degree. Degree-2 classes on a curve are stored as
  // rational multiples of the point class.
  static PolarizedVariety curve(long long genus, long long degree);

  int dimension() const;
  std::size_t ns_rank() const;
  const std::vector<std::vector<long long>>& gram() const;
  const std::vector<long long>& ample() const;

  long long curve_degree() const;  // dimension 1 only
  long long genus() const;         // dimension 1 only

  const std::vector<Rational>& tangent_c1() const;
  Rational tangent_ch2() const;  // dimension 2 only
  Rational tangent_c2() const;   // dimension 2 only, recovered from ch2

  // H^2 = gram(ample, ample); dimension 2 only.
  Rational hyperplane_self_intersection() const;

  // The intersection form on degree-2 coordinate vectors; dimension 2 only.
  Rational pair(const std::vector<Rational>& a, const std::vector<Rational>& b) const;

  // Ample class coordinates as rationals.
  std::vector<Rational> ample_coords() const;

  const std::string& name() const;

  bool same(const PolarizedVariety& o) const { return model_ == o.model_; }
  friend bool operator==(const PolarizedVariety& a, const PolarizedVariety& b) {
    return a.same(b);
  }

 private:
  struct Model;
  explicit PolarizedVariety(std::shared_ptr<const Model> m) : model_(std::move(m)) {}

  std::shared_ptr<const Model> model_;
};

}  // namespace sheafstab
