#include "sheafstab/pairing.hpp"

#include <algorithm>

#include "sheafstab/errors.hpp"
#include "sheafstab/stability.hpp"

namespace sheafstab {

void Tower::validate() const {
  if (factors.empty()) throw domain_error("tower: no factors");
  if (extension_flags.size() + 1 != factors.size())
    throw domain_error("tower: flag count must be factor count minus one");
  for (std::size_t i = 1; i < factors.size(); ++i)
    if (!(factors[i].variety() == factors[0].variety()))
      throw domain_error("tower: foreign class");
}

VirtualBundle Tower::total() const {
  validate();
  return prefix_total(factors.size()).with_label(label);
}

VirtualBundle Tower::prefix_total(std::size_t len) const {
  if (len > factors.size()) throw domain_error("tower: prefix exceeds length");
  VirtualBundle acc = VirtualBundle::from_character(
      0, std::vector<Rational>(factors[0].variety().ns_rank()), Rational(0),
      factors[0].variety());
  for (std::size_t i = 0; i < len; ++i) acc = direct_sum(acc, factors[i]);
  return acc;
}

Tower dual(const Tower& t) {
  t.validate();
  Tower out;
  out.factors.reserve(t.factors.size());
  for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
    out.factors.push_back(dual(*it));
  out.extension_flags.assign(t.extension_flags.rbegin(), t.extension_flags.rend());
  out.label = t.label.empty() ? "" : t.label + "^";
  return out;
}

void SumObject::validate() const {
  if (towers.empty()) throw domain_error("sum object: no towers");
  for (const auto& t : towers) {
    t.validate();
    if (!(t.factors[0].variety() == towers[0].factors[0].variety()))
      throw domain_error("sum object: foreign class");
  }
}

VirtualBundle SumObject::total() const {
  validate();
  VirtualBundle acc = towers[0].total();
  for (std::size_t i = 1; i < towers.size(); ++i)
    acc = direct_sum(acc, towers[i].total());
  return acc;
}

const PolarizedVariety& SumObject::variety() const {
  if (towers.empty() || towers[0].factors.empty())
    throw domain_error("sum object: no towers");
  return towers[0].factors[0].variety();
}

void validate_sub(const AdmissibleSub& s, const SumObject& o) {
  o.validate();
  if (s.prefix_lengths.size() != o.towers.size())
    throw domain_error("admissible sub: wrong tower count");
  for (std::size_t t = 0; t < o.towers.size(); ++t)
    if (s.prefix_lengths[t] > o.towers[t].factors.size())
      throw domain_error("admissible sub: prefix exceeds tower length");
}

VirtualBundle sub_bundle(const AdmissibleSub& s, const SumObject& o) {
  validate_sub(s, o);
  VirtualBundle acc = VirtualBundle::from_character(
      0, std::vector<Rational>(o.variety().ns_rank()), Rational(0), o.variety());
  for (std::size_t t = 0; t < o.towers.size(); ++t)
    acc = direct_sum(acc, o.towers[t].prefix_total(s.prefix_lengths[t]));
  return acc;
}

long long sub_rank(const AdmissibleSub& s, const SumObject& o) {
  return sub_bundle(s, o).rank();
}

std::string sub_label(const AdmissibleSub& s, const SumObject& o) {
  validate_sub(s, o);
  std::string out;
  const auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += " + ";
    out += piece.empty() ? "?" : piece;
  };
  for (std::size_t t = 0; t < o.towers.size(); ++t) {
    const Tower& tw = o.towers[t];
    // A fully selected tower reads by its own name.
    if (s.prefix_lengths[t] == tw.factors.size() && !tw.label.empty()) {
      append(tw.label);
      continue;
    }
    for (std::size_t j = 0; j < s.prefix_lengths[t]; ++j) append(tw.factors[j].label());
  }
  return out.empty() ? "0" : out;
}

bool sub_leq(const AdmissibleSub& a, const AdmissibleSub& b) {
  if (a.prefix_lengths.size() != b.prefix_lengths.size())
    throw domain_error("admissible sub: wrong tower count");
  for (std::size_t t = 0; t < a.prefix_lengths.size(); ++t)
    if (a.prefix_lengths[t] > b.prefix_lengths[t]) return false;
  return true;
}

AdmissibleSub sub_meet(const AdmissibleSub& a, const AdmissibleSub& b) {
  if (a.prefix_lengths.size() != b.prefix_lengths.size())
    throw domain_error("admissible sub: wrong tower count");
  AdmissibleSub out = a;
  for (std::size_t t = 0; t < out.prefix_lengths.size(); ++t)
    out.prefix_lengths[t] = std::min(a.prefix_lengths[t], b.prefix_lengths[t]);
  return out;
}

AdmissibleSub sub_join(const AdmissibleSub& a, const AdmissibleSub& b) {
  if (a.prefix_lengths.size() != b.prefix_lengths.size())
    throw domain_error("admissible sub: wrong tower count");
  AdmissibleSub out = a;
  for (std::size_t t = 0; t < out.prefix_lengths.size(); ++t)
    out.prefix_lengths[t] = std::max(a.prefix_lengths[t], b.prefix_lengths[t]);
  return out;
}

PairingStructure PairingStructure::make(std::vector<std::size_t> partner,
                                        PairingSymmetry symmetry,
                                        const SumObject& o) {
  o.validate();
  const std::size_t n = o.towers.size();
  if (partner.size() != n) throw domain_error("pairing: wrong tower count");
  for (std::size_t t = 0; t < n; ++t) {
    if (partner[t] >= n) throw domain_error("pairing: partner index out of range");
    if (partner[t] == t) throw domain_error("pairing: self-paired tower");
    if (partner[partner[t]] != t) throw domain_error("pairing: partner map is not an involution");
  }
  for (std::size_t t = 0; t < n; ++t) {
    const Tower& a = o.towers[t];
    const Tower& b = o.towers[partner[t]];
    const std::size_t k = a.factors.size();
    if (b.factors.size() != k)
      throw domain_error("pairing: partnered towers differ in length");
    for (std::size_t j = 0; j < k; ++j)
      if (!(a.factors[j] == dual(b.factors[k - 1 - j])))
        throw domain_error("pairing: partnered towers are not slotwise dual");
  }
  return PairingStructure(std::move(partner), symmetry);
}

void PairingStructure::require_fits(const SumObject& o) const {
  if (partner_.size() != o.towers.size())
    throw domain_error("pairing: structure does not fit object");
}

AdmissibleSub annihilator(const AdmissibleSub& s, const PairingStructure& p,
                          const SumObject& o) {
  validate_sub(s, o);
  p.require_fits(o);
  AdmissibleSub out;
  out.prefix_lengths.resize(o.towers.size());
  for (std::size_t t = 0; t < o.towers.size(); ++t)
    out.prefix_lengths[t] =
        o.towers[t].factors.size() - s.prefix_lengths[p.partner()[t]];
  return out;
}

bool is_isotropic(const AdmissibleSub& s, const PairingStructure& p,
                  const SumObject& o) {
  return sub_leq(s, annihilator(s, p, o));
}

std::vector<Def54Verdict> orthogonal_semistability_check(
    const std::vector<AdmissibleSub>& isotropics, const PairingStructure& p,
    const SumObject& o, const PolarizedVariety& x) {
  o.validate();
  if (!(o.variety() == x)) throw domain_error("foreign class");
  for (std::size_t i = 0; i < isotropics.size(); ++i)
    if (!is_isotropic(isotropics[i], p, o))
      throw domain_error("orthogonal_semistability_check: sub " + std::to_string(i) +
                         " is not isotropic");
  const UniPoly p_e = hilbert_polynomial(o.total());
  std::vector<Def54Verdict> out;
  out.reserve(isotropics.size());
  for (const auto& s : isotropics) {
    AdmissibleSub ann = annihilator(s, p, o);
    UniPoly diff = hilbert_polynomial(sub_bundle(s, o)) +
                   hilbert_polynomial(sub_bundle(ann, o)) - p_e;
    const auto order = eventually_compare(diff, UniPoly{});
    out.push_back(Def54Verdict{s, std::move(ann), std::move(diff), order});
  }
  return out;
}

ParabolicVerdict filtration_matches_parabolic(const std::vector<AdmissibleSub>& steps,
                                              const PairingStructure& p,
                                              const SumObject& o) {
  o.validate();
  p.require_fits(o);
  for (const auto& s : steps) validate_sub(s, o);
  for (std::size_t i = 1; i < steps.size(); ++i)
    if (!(sub_leq(steps[i - 1], steps[i]) && !(steps[i - 1] == steps[i])))
      throw domain_error("filtration_matches_parabolic: steps must strictly increase");

  const AdmissibleSub zero{std::vector<std::size_t>(o.towers.size(), 0)};
  AdmissibleSub full;
  full.prefix_lengths.reserve(o.towers.size());
  for (const auto& t : o.towers) full.prefix_lengths.push_back(t.factors.size());

  std::vector<AdmissibleSub> chain;
  if (steps.empty() || !(steps.front() == zero)) chain.push_back(zero);
  chain.insert(chain.end(), steps.begin(), steps.end());
  if (!(chain.back() == full)) chain.push_back(full);

  ParabolicVerdict v;
  const std::size_t l = chain.size() - 1;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    AdmissibleSub ann = annihilator(chain[i], p, o);
    if (!(ann == chain[l - i])) {
      v.compatible = false;
      v.witness = chain[i];
      v.witness_annihilator = std::move(ann);
      return v;
    }
  }
  v.compatible = true;
  return v;
}

}  // namespace sheafstab
