#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sheafstab/bundle.hpp"
#include "sheafstab/unipoly.hpp"

namespace sheafstab {

enum class ExtensionKind { split, nonsplit };

// Iterated-extension presentation of a bundle: ordered factors, bottom-up,
// with a split/nonsplit flag between consecutive layers. The flags are
// provenance (they record why only prefix subobjects are admissible) and
// never enter any arithmetic.
struct Tower {
  std::vector<VirtualBundle> factors;
  std::vector<ExtensionKind> extension_flags;  // size = factors.size() - 1
  std::string label;

  void validate() const;  // throws domain_error
  VirtualBundle total() const;
  VirtualBundle prefix_total(std::size_t len) const;  // sum of first len factors
};

// Dual tower: factors dualized and reversed (the dual of an extension
// filters with the duals in the opposite order), flags reversed.
Tower dual(const Tower& t);

struct SumObject {
  std::vector<Tower> towers;

  void validate() const;
  VirtualBundle total() const;
  const PolarizedVariety& variety() const;
};

// A flag-compatible subobject: a prefix length per tower.
struct AdmissibleSub {
  std::vector<std::size_t> prefix_lengths;

  friend bool operator==(const AdmissibleSub&, const AdmissibleSub&) = default;
};

void validate_sub(const AdmissibleSub& s, const SumObject& o);
VirtualBundle sub_bundle(const AdmissibleSub& s, const SumObject& o);
long long sub_rank(const AdmissibleSub& s, const SumObject& o);
std::string sub_label(const AdmissibleSub& s, const SumObject& o);

bool sub_leq(const AdmissibleSub& a, const AdmissibleSub& b);
AdmissibleSub sub_meet(const AdmissibleSub& a, const AdmissibleSub& b);
AdmissibleSub sub_join(const AdmissibleSub& a, const AdmissibleSub& b);

enum class PairingSymmetry { symmetric, antisymmetric };

// Perfect bilinear form on a SumObject given by a fixed-point-free pairing
// of towers, each tower flag-dual to its partner: factor j of tower t is
// the dual of factor len-1-j of partner(t) (0-indexed). The symmetry tag is
// carried for reporting; the flag-dual arithmetic below does not depend on
// it.
class PairingStructure {
 public:
  static PairingStructure make(std::vector<std::size_t> partner,
                               PairingSymmetry symmetry, const SumObject& o);

  const std::vector<std::size_t>& partner() const { return partner_; }
  PairingSymmetry symmetry() const { return symmetry_; }

  void require_fits(const SumObject& o) const;

 private:
  PairingStructure(std::vector<std::size_t> partner, PairingSymmetry symmetry)
      : partner_(std::move(partner)), symmetry_(symmetry) {}

  std::vector<std::size_t> partner_;
  PairingSymmetry symmetry_;
};

// Flag-dual rule: the annihilator selects, in each tower t, the prefix of
// length len(t) minus the partner's selected prefix length.
AdmissibleSub annihilator(const AdmissibleSub& s, const PairingStructure& p,
                          const SumObject& o);

// S is isotropic iff S <= annihilator(S) in the admissible lattice.
bool is_isotropic(const AdmissibleSub& s, const PairingStructure& p,
                  const SumObject& o);

struct Def54Verdict {
  AdmissibleSub sub;
  AdmissibleSub annihilator;
  UniPoly difference;           // P_F + P_{F^perp} - P_E
  std::strong_ordering order;   // difference vs 0, eventual order

  bool semistable_here() const { return order != std::strong_ordering::greater; }
};

// For each listed isotropic F: compares P_F + P_{F^perp} against P_E in the
// eventual order. A non-isotropic input is a domain_error naming the
// offender.
std::vector<Def54Verdict> orthogonal_semistability_check(
    const std::vector<AdmissibleSub>& isotropics, const PairingStructure& p,
    const SumObject& o, const PolarizedVariety& x);

struct ParabolicVerdict {
  bool compatible = false;
  // First step whose annihilator is not a step (or is misplaced), with that
  // annihilator.
  std::optional<AdmissibleSub> witness;
  std::optional<AdmissibleSub> witness_annihilator;

  explicit operator bool() const { return compatible; }
};

// A filtration by admissible subs corresponds to a parabolic reduction iff
// the step chain, augmented with 0 and the full object, satisfies
// annihilator(F_i) = F_{l-i} for all i.
ParabolicVerdict filtration_matches_parabolic(const std::vector<AdmissibleSub>& steps,
                                              const PairingStructure& p,
                                              const SumObject& o);

}  // namespace sheafstab
