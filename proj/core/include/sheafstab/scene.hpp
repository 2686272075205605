#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sheafstab/bundle.hpp"
#include "sheafstab/pairing.hpp"
#include "sheafstab/stability.hpp"
#include "sheafstab/unipoly.hpp"
#include "sheafstab/variety.hpp"

namespace sheafstab {

// Declarative description of a verification run: one variety, named bundles
// built in declaration order, declared semistability certificates, named
// filtrations and pairings, and an ordered list of checks with optional
// expected values. The JSON surface syntax is documented in
// docs/scene-format.md; this is the fully resolved form.

struct SceneFiltration {
  std::string name;
  std::string ambient;
  std::vector<std::string> steps;
  std::vector<std::string> quotients;  // names whose ch matches each step difference
  std::optional<std::vector<Rational>> weights;
};

struct ScenePairing {
  std::string name;
  std::vector<std::string> towers;
  std::vector<std::size_t> partner;
  PairingSymmetry symmetry = PairingSymmetry::symmetric;
};

struct HilbertExpect {
  std::optional<Rational> c2;
  std::optional<Rational> euler;
  std::optional<Rational> degree;
  std::optional<UniPoly> poly;
};
struct HilbertCheck {
  std::string bundle;
  HilbertExpect expect;
};

struct SlopesExpect {
  std::optional<std::strong_ordering> order;  // gieseker slope of left vs right
  std::optional<UniPoly> difference;
  std::optional<bool> mt;
  std::optional<bool> gieseker;
};
struct SlopesCheck {
  std::string left;
  std::string right;
  SlopesExpect expect;
};

struct HnExpect {
  std::optional<bool> certified;
  std::optional<std::string> reason;
  std::optional<std::vector<UniPoly>> slopes;
};
struct HnCheck {
  std::string filtration;
  HnExpect expect;
};

struct WeightedExpect {
  std::optional<UniPoly> value;
  std::optional<std::strong_ordering> sign;
};
struct WeightedCheck {
  std::string filtration;
  WeightedExpect expect;
};

struct Def54Expect {
  std::optional<std::vector<std::strong_ordering>> orders;
  std::optional<std::vector<UniPoly>> differences;
};
struct Def54Check {
  std::string pairing;
  std::vector<AdmissibleSub> subs;
  Def54Expect expect;
};

struct ParabolicExpect {
  std::optional<bool> compatible;
  std::optional<AdmissibleSub> witness;
};
struct ParabolicCheck {
  std::string pairing;
  std::vector<AdmissibleSub> steps;
  ParabolicExpect expect;
};

using Check = std::variant<HilbertCheck, SlopesCheck, HnCheck, WeightedCheck,
                           Def54Check, ParabolicCheck>;

struct Scene {
  std::string name;
  PolarizedVariety variety;
  std::string variety_desc;

  std::vector<std::string> bundle_order;
  std::map<std::string, VirtualBundle> bundles;
  std::map<std::string, Tower> towers;  // names that carry a tower presentation
  std::map<std::string, SemistabilityCertificate> certificates;  // by subject
  std::vector<SceneFiltration> filtrations;
  std::vector<ScenePairing> pairings;
  std::vector<Check> checks;

  const VirtualBundle& bundle(const std::string& name) const;
  // The tower presentation of a name: the declared tower, or the bundle
  // wrapped as a single-factor tower.
  Tower tower_of(const std::string& name) const;
  const SceneFiltration& filtration(const std::string& name) const;
  const ScenePairing& pairing(const std::string& name) const;

  // Assembles the stability-module filtration, attaching the certificate of
  // each named quotient (unknown status when no certificate is declared).
  Filtration build_filtration(const SceneFiltration& f) const;
  SumObject build_object(const ScenePairing& p) const;
  PairingStructure build_pairing(const ScenePairing& p, const SumObject& o) const;
};

// Parses and fully validates a scene document. Throws scene_error: parse
// errors carry line/column; references to names declared later in the file
// are reported as cyclic (declaration order is the acyclicity witness);
// names never declared are unknown; everything else is an invariant
// violation.
Scene parse_scene_text(const std::string& text);
Scene load_scene(const std::string& path);

// The built-in scenario: a degree-h2 K3 with O, TX, the nonsplit extension
// tower V = [TX, O], its dual, their sum, the three-step filtration with
// weights (-1, 0, 1), both pairings, and the full check list with expected
// values.
Scene builtin_paper_scene(long long h2 = 2);

}  // namespace sheafstab
