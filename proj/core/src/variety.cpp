#include "sheafstab/variety.hpp"

#include <utility>

#include "sheafstab/errors.hpp"

namespace sheafstab {

struct PolarizedVariety::Model {
  int dim = 2;
  std::vector<std::vector<long long>> gram;  // dim 2
  std::vector<long long> ample;              // dim 2
  long long curve_degree = 0;                // dim 1
  long long genus = 0;                       // dim 1
  std::vector<Rational> tangent_c1;
  Rational tangent_ch2;  // dim 2
  std::string name;
};

PolarizedVariety PolarizedVariety::surface(std::vector<std::vector<long long>> gram,
                                           std::vector<long long> ample,
                                           std::vector<Rational> tangent_c1,
                                           Rational tangent_ch2,
                                           std::string name) {
  const std::size_t rho = gram.size();
  if (rho == 0) throw domain_error("surface: empty Gram matrix");
  for (const auto& row : gram)
    if (row.size() != rho) throw domain_error("surface: Gram matrix is not square");
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = i + 1; j < rho; ++j)
      if (gram[i][j] != gram[j][i]) throw domain_error("surface: Gram matrix is not symmetric");
  if (ample.size() != rho) throw domain_error("surface: ample class has wrong rank");
  if (tangent_c1.size() != rho) throw domain_error("surface: tangent c1 has wrong rank");

  auto m = std::make_shared<Model>();
  m->dim = 2;
  m->gram = std::move(gram);
  m->ample = std::move(ample);
  m->tangent_c1 = std::move(tangent_c1);
  m->tangent_ch2 = std::move(tangent_ch2);
  m->name = std::move(name);

  PolarizedVariety v{std::move(m)};
  if (!(v.hyperplane_self_intersection() > Rational(0)))
    throw domain_error("surface: ample class has non-positive self-intersection");
  return v;
}

PolarizedVariety PolarizedVariety::k3(long long h2) {
  if (h2 <= 0 || h2 % 2 != 0)
    throw domain_error("k3: polarization degree must be a positive even integer");
  // Rank-1 lattice generated by the ample class H with H^2 = h2.
  // c1(TX) = 0 and ch2(TX) = -c2(TX) = -24.
  return surface({{h2}}, {1}, {Rational(0)}, Rational(-24), "k3");
}

PolarizedVariety PolarizedVariety::curve(long long genus, long long degree) {
  if (genus < 0) throw domain_error("curve: negative genus");
  if (degree <= 0) throw domain_error("curve: polarization degree must be positive");
  auto m = std::make_shared<Model>();
  m->dim = 1;
  m->curve_degree = degree;
  m->genus = genus;
  // deg TX = 2 - 2g, stored as a point-class multiple.
  m->tangent_c1 = {Rational(2 - 2 * genus)};
  m->name = "curve";
  return PolarizedVariety{std::move(m)};
}

int PolarizedVariety::dimension() const { return model_->dim; }

std::size_t PolarizedVariety::ns_rank() const {
  return model_->dim == 2 ? model_->gram.size() : 1;
}

const std::vector<std::vector<long long>>& PolarizedVariety::gram() const {
  if (model_->dim != 2) throw domain_error("gram: surface only");
  return model_->gram;
}

const std::vector<long long>& PolarizedVariety::ample() const {
  if (model_->dim != 2) throw domain_error("ample: surface only");
  return model_->ample;
}

long long PolarizedVariety::curve_degree() const {
  if (model_->dim != 1) throw domain_error("curve_degree: curve only");
  return model_->curve_degree;
}

long long PolarizedVariety::genus() const {
  if (model_->dim != 1) throw domain_error("genus: curve only");
  return model_->genus;
}

const std::vector<Rational>& PolarizedVariety::tangent_c1() const {
  return model_->tangent_c1;
}

Rational PolarizedVariety::tangent_ch2() const {
  if (model_->dim != 2) throw domain_error("tangent_ch2: surface only");
  return model_->tangent_ch2;
}

Rational PolarizedVariety::tangent_c2() const {
  // ch2 = (c1^2 - 2 c2) / 2, so c2 = c1^2 / 2 - ch2.
  const Rational c1sq = pair(model_->tangent_c1, model_->tangent_c1);
  return c1sq / Rational(2) - model_->tangent_ch2;
}

Rational PolarizedVariety::hyperplane_self_intersection() const {
  const auto a = ample_coords();
  return pair(a, a);
}

Rational PolarizedVariety::pair(const std::vector<Rational>& a,
                                const std::vector<Rational>& b) const {
  if (model_->dim != 2) throw domain_error("pair: surface only");
  const std::size_t rho = model_->gram.size();
  if (a.size() != rho || b.size() != rho)
    throw domain_error("pair: coordinate vector has wrong rank");
  Rational acc;
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j)
      acc += a[i] * Rational(model_->gram[i][j]) * b[j];
  return acc;
}

std::vector<Rational> PolarizedVariety::ample_coords() const {
  if (model_->dim == 1) return {Rational(model_->curve_degree)};
  std::vector<Rational> out;
  out.reserve(model_->ample.size());
  for (long long x : model_->ample) out.emplace_back(x);
  return out;
}

const std::string& PolarizedVariety::name() const { return model_->name; }

}  // namespace sheafstab
