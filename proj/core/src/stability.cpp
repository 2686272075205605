#include "sheafstab/stability.hpp"

#include "sheafstab/errors.hpp"

namespace sheafstab {

void Filtration::validate() const {
  if (steps.empty()) throw domain_error("filtration: no steps");
  if (certificates.size() != steps.size())
    throw domain_error("filtration: certificate count differs from step count");
  long long prev_rank = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!(steps[i].variety() == ambient.variety()))
      throw domain_error("filtration: foreign class");
    if (steps[i].rank() <= prev_rank)
      throw domain_error("filtration: ranks must strictly increase");
    prev_rank = steps[i].rank();
  }
  if (!(steps.back() == ambient))
    throw domain_error("filtration: final step differs from ambient");
}

std::vector<VirtualBundle> Filtration::quotients() const {
  std::vector<VirtualBundle> out;
  out.reserve(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    VirtualBundle q = i == 0 ? steps[0] : difference(steps[i], steps[i - 1]);
    out.push_back(q.with_label(certificates[i].subject));
  }
  return out;
}

void WeightedFiltration::validate() const {
  filtration.validate();
  if (weights.size() != filtration.steps.size())
    throw domain_error("weighted filtration: weight count differs from step count");
  for (std::size_t i = 1; i < weights.size(); ++i)
    if (!(weights[i - 1] < weights[i]))
      throw domain_error("weighted filtration: weights must strictly increase");
}

Rational mumford_slope(const VirtualBundle& e) {
  if (e.rank() <= 0) throw domain_error("mumford_slope: non-positive rank");
  return degree(e) / Rational(e.rank());
}

UniPoly gieseker_slope(const VirtualBundle& e) {
  if (e.rank() <= 0) throw domain_error("gieseker_slope: non-positive rank");
  return hilbert_polynomial(e) / Rational(e.rank());
}

bool destabilizes(const VirtualBundle& f, const VirtualBundle& e, SlopeMode mode) {
  if (!(f.variety() == e.variety())) throw domain_error("foreign class");
  if (f.rank() <= 0 || f.rank() >= e.rank())
    throw domain_error("destabilizes: requires 0 < rk F < rk E");
  if (mode == SlopeMode::mumford_takemoto)
    return mumford_slope(f) > mumford_slope(e);
  return eventually_compare(gieseker_slope(f), gieseker_slope(e)) ==
         std::strong_ordering::greater;
}

HnVerdict verify_hn_certificate(const Filtration& f) {
  f.validate();
  HnVerdict v;
  const auto qs = f.quotients();
  v.slope_chain.reserve(qs.size());
  for (const auto& q : qs)
    v.slope_chain.push_back(hilbert_polynomial(q) / Rational(q.rank()));
  for (const auto& cert : f.certificates) {
    if (!cert.covers_semistable()) {
      v.reason = "uncertified quotient";
      return v;
    }
  }
  for (std::size_t i = 1; i < v.slope_chain.size(); ++i) {
    if (eventually_compare(v.slope_chain[i - 1], v.slope_chain[i]) !=
        std::strong_ordering::greater) {
      v.reason = "slopes not strictly decreasing";
      return v;
    }
  }
  v.certified = true;
  return v;
}

UniPoly weighted_filtration_pairing(const WeightedFiltration& wf) {
  wf.validate();
  const Filtration& f = wf.filtration;
  const Rational rk_e(f.ambient.rank());
  const UniPoly p_e = hilbert_polynomial(f.ambient);
  UniPoly acc;
  for (std::size_t i = 0; i + 1 < f.steps.size(); ++i) {
    const Rational gap = wf.weights[i + 1] - wf.weights[i];
    const UniPoly term = rk_e * hilbert_polynomial(f.steps[i]) -
                         Rational(f.steps[i].rank()) * p_e;
    acc += term * gap;
  }
  return acc;
}

UniPoly filtration_hilbert(const Filtration& f) {
  f.validate();
  const Rational rk_e(f.ambient.rank());
  const UniPoly p_e = hilbert_polynomial(f.ambient);
  UniPoly acc;
  for (std::size_t i = 0; i + 1 < f.steps.size(); ++i)
    acc += rk_e * hilbert_polynomial(f.steps[i]) -
           Rational(f.steps[i].rank()) * p_e;
  return acc;
}

}  // namespace sheafstab
