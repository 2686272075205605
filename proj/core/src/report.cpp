#include "sheafstab/report.hpp"

#include <sstream>

#include <json.hpp>

#include "sheafstab/errors.hpp"
#include "sheafstab/pairing.hpp"
#include "sheafstab/stability.hpp"

namespace sheafstab {

namespace {

std::string order_name(std::strong_ordering o) {
  if (o == std::strong_ordering::less) return "less";
  if (o == std::strong_ordering::greater) return "greater";
  return "equal";
}

std::string index_key(const char* base, std::size_t i) {
  return std::string(base) + "[" + std::to_string(i) + "]";
}

class Recorder {
 public:
  explicit Recorder(CheckRecord& rec) : rec_(rec) {}

  void value(std::string key, ReportValue v) {
    rec_.values.emplace_back(std::move(key), std::move(v));
  }

  template <typename T>
  void expect(const std::optional<T>& want, const T& got, const std::string& what) {
    if (!want) return;
    rec_.has_expectations = true;
    if (!(*want == got))
      rec_.failures.push_back(what + ": expected " + render(*want) + ", got " +
                              render(got));
  }

  void expect_order(const std::optional<std::strong_ordering>& want,
                    std::strong_ordering got, const std::string& what) {
    if (!want) return;
    rec_.has_expectations = true;
    if (*want != got)
      rec_.failures.push_back(what + ": expected " + order_name(*want) + ", got " +
                              order_name(got));
  }

  void fail(std::string msg) {
    rec_.has_expectations = true;
    rec_.failures.push_back(std::move(msg));
  }

 private:
  static std::string render(bool b) { return b ? "true" : "false"; }
  static std::string render(const Rational& r) { return r.str(); }
  static std::string render(const UniPoly& p) { return p.str(); }
  static std::string render(const std::string& s) { return s; }
  static std::string render(const std::vector<std::size_t>& v) {
    return render_value(ReportValue(v));
  }

  CheckRecord& rec_;
};

const char* symmetry_name(PairingSymmetry s) {
  return s == PairingSymmetry::symmetric ? "symmetric" : "antisymmetric";
}

void run_hilbert(const Scene& scene, const HilbertCheck& c, CheckRecord& rec) {
  Recorder r(rec);
  const VirtualBundle& e = scene.bundle(c.bundle);
  const auto [c1, c2] = e.chern_classes();
  const Rational deg = degree(e);
  const Rational chi = euler_char(e);
  const UniPoly poly = hilbert_polynomial(e);
  r.value("rank", Rational(e.rank()));
  r.value("c1", c1);
  r.value("c2", c2);
  r.value("ch2", e.ch2());
  r.value("degree", deg);
  r.value("euler", chi);
  r.value("poly", poly);
  r.expect(c.expect.c2, c2, "c2");
  r.expect(c.expect.euler, chi, "euler");
  r.expect(c.expect.degree, deg, "degree");
  r.expect(c.expect.poly, poly, "poly");
}

void run_slopes(const Scene& scene, const SlopesCheck& c, CheckRecord& rec) {
  Recorder r(rec);
  const VirtualBundle& left = scene.bundle(c.left);
  const VirtualBundle& right = scene.bundle(c.right);
  const UniPoly gl = gieseker_slope(left);
  const UniPoly gr = gieseker_slope(right);
  const UniPoly diff = gl - gr;
  const auto order = eventually_compare(gl, gr);
  r.value("mumford_left", mumford_slope(left));
  r.value("mumford_right", mumford_slope(right));
  r.value("gieseker_left", gl);
  r.value("gieseker_right", gr);
  r.value("difference", diff);
  r.value("order", std::string(order_name(order)));
  const bool proper = left.rank() > 0 && left.rank() < right.rank();
  if (proper) {
    r.value("destabilizes_mt", destabilizes(left, right, SlopeMode::mumford_takemoto));
    r.value("destabilizes_gieseker", destabilizes(left, right, SlopeMode::gieseker));
  }
  r.expect_order(c.expect.order, order, "order");
  r.expect(c.expect.difference, diff, "difference");
  if (proper) {
    r.expect(c.expect.mt, destabilizes(left, right, SlopeMode::mumford_takemoto), "mt");
    r.expect(c.expect.gieseker, destabilizes(left, right, SlopeMode::gieseker),
             "gieseker");
  } else if (c.expect.mt || c.expect.gieseker) {
    r.fail("destabilizes: not applicable, requires 0 < rk left < rk right");
  }
}

void run_hn(const Scene& scene, const HnCheck& c, CheckRecord& rec) {
  Recorder r(rec);
  const Filtration fl = scene.build_filtration(scene.filtration(c.filtration));
  const HnVerdict v = verify_hn_certificate(fl);
  r.value("certified", v.certified);
  if (!v.certified) r.value("reason", v.reason);
  for (std::size_t i = 0; i < v.slope_chain.size(); ++i)
    r.value(index_key("slope", i), v.slope_chain[i]);
  r.expect(c.expect.certified, v.certified, "certified");
  r.expect(c.expect.reason, v.reason, "reason");
  if (c.expect.slopes) {
    if (c.expect.slopes->size() != v.slope_chain.size()) {
      r.fail("slopes: expected " + std::to_string(c.expect.slopes->size()) +
             " entries, got " + std::to_string(v.slope_chain.size()));
    } else {
      for (std::size_t i = 0; i < v.slope_chain.size(); ++i)
        r.expect(std::optional<UniPoly>((*c.expect.slopes)[i]), v.slope_chain[i],
                 index_key("slope", i));
    }
  }
}

void run_weighted(const Scene& scene, const WeightedCheck& c, CheckRecord& rec) {
  Recorder r(rec);
  const SceneFiltration& sf = scene.filtration(c.filtration);
  if (!sf.weights) throw domain_error("filtration '" + sf.name + "' has no weights");
  const WeightedFiltration wf{scene.build_filtration(sf), *sf.weights};
  const UniPoly value = weighted_filtration_pairing(wf);
  const auto sign = eventually_compare(value, UniPoly{});
  std::string weights = "[";
  for (std::size_t i = 0; i < sf.weights->size(); ++i) {
    if (i) weights += ", ";
    weights += (*sf.weights)[i].str();
  }
  weights += "]";
  r.value("weights", weights);
  r.value("value", value);
  r.value("sign", std::string(order_name(sign)));
  r.expect(c.expect.value, value, "value");
  r.expect_order(c.expect.sign, sign, "sign");
}

void run_def54(const Scene& scene, const Def54Check& c, CheckRecord& rec) {
  Recorder r(rec);
  const ScenePairing& pd = scene.pairing(c.pairing);
  const SumObject o = scene.build_object(pd);
  const PairingStructure p = scene.build_pairing(pd, o);
  r.value("symmetry", std::string(symmetry_name(pd.symmetry)));
  const auto verdicts = orthogonal_semistability_check(c.subs, p, o, scene.variety);
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    const Def54Verdict& v = verdicts[i];
    r.value(index_key("sub", i), v.sub.prefix_lengths);
    r.value(index_key("sub", i) + ".bundle", sub_label(v.sub, o));
    r.value(index_key("annihilator", i), v.annihilator.prefix_lengths);
    r.value(index_key("annihilator", i) + ".bundle", sub_label(v.annihilator, o));
    r.value(index_key("difference", i), v.difference);
    r.value(index_key("order", i), std::string(order_name(v.order)));
  }
  if (c.expect.orders) {
    if (c.expect.orders->size() != verdicts.size()) {
      r.fail("orders: expected " + std::to_string(c.expect.orders->size()) +
             " entries, got " + std::to_string(verdicts.size()));
    } else {
      for (std::size_t i = 0; i < verdicts.size(); ++i)
        r.expect_order(std::optional((*c.expect.orders)[i]), verdicts[i].order,
                       index_key("order", i));
    }
  }
  if (c.expect.differences) {
    if (c.expect.differences->size() != verdicts.size()) {
      r.fail("differences: expected " + std::to_string(c.expect.differences->size()) +
             " entries, got " + std::to_string(verdicts.size()));
    } else {
      for (std::size_t i = 0; i < verdicts.size(); ++i)
        r.expect(std::optional<UniPoly>((*c.expect.differences)[i]),
                 verdicts[i].difference, index_key("difference", i));
    }
  }
}

void run_parabolic(const Scene& scene, const ParabolicCheck& c, CheckRecord& rec) {
  Recorder r(rec);
  const ScenePairing& pd = scene.pairing(c.pairing);
  const SumObject o = scene.build_object(pd);
  const PairingStructure p = scene.build_pairing(pd, o);
  r.value("symmetry", std::string(symmetry_name(pd.symmetry)));
  for (std::size_t i = 0; i < c.steps.size(); ++i)
    r.value(index_key("step", i), c.steps[i].prefix_lengths);
  const ParabolicVerdict v = filtration_matches_parabolic(c.steps, p, o);
  r.value("compatible", v.compatible);
  if (v.witness) {
    r.value("witness", v.witness->prefix_lengths);
    r.value("witness.bundle", sub_label(*v.witness, o));
    r.value("witness_annihilator", v.witness_annihilator->prefix_lengths);
    r.value("witness_annihilator.bundle", sub_label(*v.witness_annihilator, o));
  }
  r.expect(c.expect.compatible, v.compatible, "compatible");
  if (c.expect.witness) {
    rec.has_expectations = true;
    if (!v.witness) {
      rec.failures.push_back("witness: expected " +
                             render_value(ReportValue(c.expect.witness->prefix_lengths)) +
                             ", got none (compatible)");
    } else if (!(*c.expect.witness == *v.witness)) {
      rec.failures.push_back("witness: expected " +
                             render_value(ReportValue(c.expect.witness->prefix_lengths)) +
                             ", got " +
                             render_value(ReportValue(v.witness->prefix_lengths)));
    }
  }
}

struct CheckMeta {
  std::string kind;
  std::string subject;
};

CheckMeta meta_of(const Check& c) {
  return std::visit(
      [](const auto& x) -> CheckMeta {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, HilbertCheck>) {
          return {"hilbert", x.bundle};
        } else if constexpr (std::is_same_v<T, SlopesCheck>) {
          return {"slopes", x.left + " vs " + x.right};
        } else if constexpr (std::is_same_v<T, HnCheck>) {
          return {"hn", x.filtration};
        } else if constexpr (std::is_same_v<T, WeightedCheck>) {
          return {"weighted", x.filtration};
        } else if constexpr (std::is_same_v<T, Def54Check>) {
          return {"def54", x.pairing};
        } else {
          return {"parabolic", x.pairing};
        }
      },
      c);
}

}  // namespace

std::string render_value(const ReportValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, UniPoly>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          std::string out = "[";
          for (std::size_t i = 0; i < x.size(); ++i) {
            if (i) out += ", ";
            if constexpr (std::is_same_v<T, std::vector<std::size_t>>)
              out += std::to_string(x[i]);
            else
              out += x[i].str();
          }
          return out + "]";
        }
      },
      v);
}

std::size_t Report::failed_checks() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (!c.passed()) ++n;
  return n;
}

Report run_checks(const Scene& scene) {
  Report report{scene.name, scene.variety_desc, {}};
  report.checks.reserve(scene.checks.size());
  for (const auto& check : scene.checks) {
    const CheckMeta meta = meta_of(check);
    CheckRecord rec{meta.kind, meta.subject, {}, {}, std::nullopt, false};
    try {
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, HilbertCheck>) run_hilbert(scene, c, rec);
            else if constexpr (std::is_same_v<T, SlopesCheck>) run_slopes(scene, c, rec);
            else if constexpr (std::is_same_v<T, HnCheck>) run_hn(scene, c, rec);
            else if constexpr (std::is_same_v<T, WeightedCheck>) run_weighted(scene, c, rec);
            else if constexpr (std::is_same_v<T, Def54Check>) run_def54(scene, c, rec);
            else run_parabolic(scene, c, rec);
          },
          check);
    } catch (const scene_error& e) {
      rec.error = e.what();
    } catch (const domain_error& e) {
      rec.error = e.what();
    }
    report.checks.push_back(std::move(rec));
  }
  return report;
}

std::string to_plain(const Report& r) {
  std::ostringstream os;
  os << "scene: " << r.scene_name << "\n";
  os << "variety: " << r.variety_desc << "\n";
  os << "checks: " << r.checks.size() << "\n";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const CheckRecord& c = r.checks[i];
    os << "\ncheck " << i + 1 << ": " << c.kind << " " << c.subject << "\n";
    for (const auto& [k, v] : c.values) os << "  " << k << " = " << render_value(v) << "\n";
    for (const auto& f : c.failures) os << "  FAIL " << f << "\n";
    if (c.error) os << "  error: " << *c.error << "\n";
    os << "  result: " << (c.passed() ? "pass" : "FAIL") << "\n";
  }
  const std::size_t failed = r.failed_checks();
  os << "\nresult: ";
  if (failed == 0)
    os << "pass (" << r.checks.size() << " checks)\n";
  else
    os << "FAIL (" << failed << " of " << r.checks.size() << " checks failed)\n";
  return os.str();
}

std::string to_tap(const Report& r) {
  std::ostringstream os;
  os << "TAP version 13\n";
  std::size_t points = 0;
  for (const auto& c : r.checks)
    if (c.has_expectations) ++points;
  os << "1.." << points << "\n";
  std::size_t n = 0;
  for (const auto& c : r.checks) {
    if (!c.has_expectations) {
      if (c.error)
        os << "# error: " << c.kind << " " << c.subject << ": " << *c.error << "\n";
      else
        os << "# no expectations: " << c.kind << " " << c.subject << "\n";
      continue;
    }
    ++n;
    if (c.passed()) {
      os << "ok " << n << " - " << c.kind << " " << c.subject << "\n";
    } else {
      os << "not ok " << n << " - " << c.kind << " " << c.subject << "\n";
      os << "  ---\n";
      os << "  failures:\n";
      for (const auto& f : c.failures) {
        std::string quoted;
        for (char ch : f) {
          if (ch == '"' || ch == '\\') quoted += '\\';
          quoted += ch;
        }
        os << "    - \"" << quoted << "\"\n";
      }
      if (c.error) {
        std::string quoted;
        for (char ch : *c.error) {
          if (ch == '"' || ch == '\\') quoted += '\\';
          quoted += ch;
        }
        os << "  error: \"" << quoted << "\"\n";
      }
      os << "  ...\n";
    }
  }
  return os.str();
}

namespace {

nlohmann::ordered_json value_to_json(const ReportValue& v) {
  using J = nlohmann::ordered_json;
  return std::visit(
      [](const auto& x) -> J {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return x.str();
        } else if constexpr (std::is_same_v<T, UniPoly>) {
          J obj = J::object();
          const auto deg = x.degree();
          if (deg) {
            for (int i = *deg; i >= 0; --i)
              if (!x.coeff(i).is_zero())
                obj[std::to_string(i)] = x.coeff(i).str();
          }
          return obj;
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else if constexpr (std::is_same_v<T, std::vector<std::size_t>>) {
          return J(x);
        } else {
          J arr = J::array();
          for (const auto& r : x) arr.push_back(r.str());
          return arr;
        }
      },
      v);
}

}  // namespace

std::string to_json(const Report& r) {
  using J = nlohmann::ordered_json;
  J root;
  root["scene"] = r.scene_name;
  root["variety"] = r.variety_desc;
  root["pass"] = r.all_passed();
  J checks = J::array();
  for (const auto& c : r.checks) {
    J rec;
    rec["kind"] = c.kind;
    rec["subject"] = c.subject;
    rec["checked"] = c.has_expectations;
    rec["pass"] = c.passed();
    J values = J::object();
    for (const auto& [k, v] : c.values) values[k] = value_to_json(v);
    rec["values"] = values;
    rec["failures"] = J(c.failures);
    if (c.error) rec["error"] = *c.error;
    checks.push_back(std::move(rec));
  }
  root["checks"] = std::move(checks);
  return root.dump(2) + "\n";
}

}  // namespace sheafstab
