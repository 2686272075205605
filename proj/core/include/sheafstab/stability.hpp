#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sheafstab/bundle.hpp"
#include "sheafstab/rational.hpp"
#include "sheafstab/unipoly.hpp"

namespace sheafstab {

// Semistability of a named bundle is consumed as a declared fact, never
// decided: the Chern-level model has no subsheaf data to decide it with.
enum class CertStatus { declared_semistable, declared_stable, unknown };

struct SemistabilityCertificate {
  std::string subject;
  CertStatus status = CertStatus::unknown;
  std::string justification;

  bool covers_semistable() const {
    return status == CertStatus::declared_semistable ||
           status == CertStatus::declared_stable;
  }
};

// 0 = F_0 c F_1 c ... c F_l = E, recorded by its proper steps plus the
// ambient. Quotient i is the virtual difference F_i - F_{i-1} and carries
// its own certificate slot.
struct Filtration {
  VirtualBundle ambient;
  std::vector<VirtualBundle> steps;                    // F_1 .. F_l, F_l = ambient
  std::vector<SemistabilityCertificate> certificates;  // one per quotient

  // Throws domain_error unless: at least one step, ranks strictly increase,
  // every quotient has positive rank, the final step equals the ambient in
  // all components, and certificate count matches step count.
  void validate() const;

  std::vector<VirtualBundle> quotients() const;
};

struct WeightedFiltration {
  Filtration filtration;
  std::vector<Rational> weights;  // strictly increasing, one per step

  void validate() const;
};

enum class SlopeMode { mumford_takemoto, gieseker };

// deg E / rk E. Requires rank > 0.
Rational mumford_slope(const VirtualBundle& e);

// P_E / rk E. Requires rank > 0.
UniPoly gieseker_slope(const VirtualBundle& e);

// Whether F destabilizes E: MT compares rational slopes strictly; Gieseker
// compares reduced Hilbert polynomials in the eventual order. Requires
// 0 < rk F < rk E.
bool destabilizes(const VirtualBundle& f, const VirtualBundle& e, SlopeMode mode);

struct HnVerdict {
  bool certified = false;
  std::string reason;                // empty when certified
  std::vector<UniPoly> slope_chain;  // reduced Hilbert polynomials of the quotients

  explicit operator bool() const { return certified; }
};

// Checks the two defining properties against declared certificates: every
// quotient declared semistable, successive reduced Hilbert polynomials
// strictly decreasing eventually. Does not search for the filtration.
HnVerdict verify_hn_certificate(const Filtration& f);

// Sum over i < l of (w_{i+1} - w_i) (rk E P_{F_i} - rk F_i P_E).
// Semistability demands the result be eventually <= 0.
UniPoly weighted_filtration_pairing(const WeightedFiltration& wf);

// Sum over proper steps of rk E P_{F_i} - rk F_i P_E; equals the weighted
// pairing at unit-gap weights.
UniPoly filtration_hilbert(const Filtration& f);

}  // namespace sheafstab
