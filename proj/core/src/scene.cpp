#include "sheafstab/scene.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "sheafstab/errors.hpp"

namespace sheafstab {

namespace {

using nlohmann::json;

[[noreturn]] void fail_inv(const std::string& msg) {
  throw scene_error(scene_error::kind::invariant, msg);
}
[[noreturn]] void fail_unknown(const std::string& msg) {
  throw scene_error(scene_error::kind::unknown_name, msg);
}
[[noreturn]] void fail_cyclic(const std::string& msg) {
  throw scene_error(scene_error::kind::cyclic_reference, msg);
}

std::pair<int, int> line_col_at(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void check_keys(const json& o, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  for (const auto& item : o.items()) {
    bool ok = false;
    for (auto a : allowed)
      if (item.key() == a) {
        ok = true;
        break;
      }
    if (!ok) fail_inv(where + ": unknown field '" + item.key() + "'");
  }
}

const json& require(const json& o, const char* key, const std::string& where) {
  auto it = o.find(key);
  if (it == o.end()) fail_inv(where + ": missing field '" + std::string(key) + "'");
  return *it;
}

std::string get_string(const json& v, const std::string& where) {
  if (!v.is_string()) fail_inv(where + ": expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& v, const std::string& where) {
  if (!v.is_boolean()) fail_inv(where + ": expected a boolean");
  return v.get<bool>();
}

long long get_int(const json& v, const std::string& where) {
  if (v.is_number_float()) fail_inv(where + ": floating-point values are not accepted");
  if (!v.is_number_integer() && !v.is_number_unsigned())
    fail_inv(where + ": expected an integer");
  return v.get<long long>();
}

Rational get_rational(const json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_number_unsigned())
    return Rational(v.get<long long>());
  if (v.is_number_float()) fail_inv(where + ": floating-point values are not accepted");
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const domain_error& e) {
      fail_inv(where + ": " + e.what());
    }
  }
  fail_inv(where + ": expected a rational as \"p/q\" string or integer");
}

std::vector<Rational> get_rational_vector(const json& v, std::size_t want,
                                          const std::string& where) {
  if (!v.is_array()) fail_inv(where + ": expected an array");
  if (v.size() != want)
    fail_inv(where + ": expected " + std::to_string(want) + " entries, got " +
             std::to_string(v.size()));
  std::vector<Rational> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(get_rational(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

// {"power": "coeff", ...}; powers are decimal strings.
UniPoly get_poly(const json& v, const std::string& where) {
  if (!v.is_object()) fail_inv(where + ": expected a polynomial object {\"power\": coeff}");
  UniPoly p;
  for (const auto& item : v.items()) {
    const std::string& k = item.key();
    if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
      fail_inv(where + ": bad power '" + k + "'");
    const unsigned long power = std::stoul(k);
    if (power > 64) fail_inv(where + ": power " + k + " too large");
    p += UniPoly::monomial(get_rational(item.value(), where + "[" + k + "]"), power);
  }
  return p;
}

AdmissibleSub get_sub(const json& v, const std::string& where) {
  if (!v.is_array()) fail_inv(where + ": expected an array of prefix lengths");
  AdmissibleSub s;
  s.prefix_lengths.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const long long n = get_int(v[i], where + "[" + std::to_string(i) + "]");
    if (n < 0) fail_inv(where + ": prefix lengths must be nonnegative");
    s.prefix_lengths.push_back(static_cast<std::size_t>(n));
  }
  return s;
}

std::strong_ordering get_order(const json& v, const std::string& where) {
  const std::string s = get_string(v, where);
  if (s == "less") return std::strong_ordering::less;
  if (s == "equal") return std::strong_ordering::equal;
  if (s == "greater") return std::strong_ordering::greater;
  fail_inv(where + ": expected \"less\", \"equal\" or \"greater\"");
}

std::pair<PolarizedVariety, std::string> parse_variety(const json& v) {
  const std::string where = "variety";
  if (!v.is_object()) fail_inv(where + ": expected an object");
  const std::string kind = get_string(require(v, "kind", where), where + ".kind");
  try {
    if (kind == "k3") {
      check_keys(v, {"kind", "h2"}, where);
      long long h2 = 2;
      if (auto it = v.find("h2"); it != v.end()) h2 = get_int(*it, where + ".h2");
      return {PolarizedVariety::k3(h2),
              "K3 surface, H^2 = " + std::to_string(h2)};
    }
    if (kind == "curve") {
      check_keys(v, {"kind", "genus", "degree"}, where);
      const long long g = get_int(require(v, "genus", where), where + ".genus");
      const long long d = get_int(require(v, "degree", where), where + ".degree");
      return {PolarizedVariety::curve(g, d),
              "curve, genus " + std::to_string(g) + ", deg H = " + std::to_string(d)};
    }
    if (kind == "surface") {
      check_keys(v, {"kind", "gram", "ample", "tangent_c1", "tangent_ch2"}, where);
      const json& gj = require(v, "gram", where);
      if (!gj.is_array() || gj.empty()) fail_inv(where + ".gram: expected a nonempty array");
      const std::size_t rho = gj.size();
      std::vector<std::vector<long long>> gram;
      for (std::size_t i = 0; i < rho; ++i) {
        const std::string rw = where + ".gram[" + std::to_string(i) + "]";
        if (!gj[i].is_array() || gj[i].size() != rho)
          fail_inv(rw + ": expected a row of " + std::to_string(rho) + " integers");
        std::vector<long long> row;
        for (std::size_t j = 0; j < rho; ++j)
          row.push_back(get_int(gj[i][j], rw + "[" + std::to_string(j) + "]"));
        gram.push_back(std::move(row));
      }
      const json& aj = require(v, "ample", where);
      if (!aj.is_array() || aj.size() != rho)
        fail_inv(where + ".ample: expected " + std::to_string(rho) + " integers");
      std::vector<long long> ample;
      for (std::size_t i = 0; i < rho; ++i)
        ample.push_back(get_int(aj[i], where + ".ample[" + std::to_string(i) + "]"));
      auto c1 = get_rational_vector(require(v, "tangent_c1", where), rho,
                                    where + ".tangent_c1");
      auto ch2 = get_rational(require(v, "tangent_ch2", where), where + ".tangent_ch2");
      PolarizedVariety x =
          PolarizedVariety::surface(std::move(gram), std::move(ample), std::move(c1),
                                    std::move(ch2));
      std::string desc = "polarized surface, rho = " + std::to_string(rho) +
                         ", H^2 = " + x.hyperplane_self_intersection().str();
      return {std::move(x), std::move(desc)};
    }
  } catch (const domain_error& e) {
    fail_inv(where + ": " + e.what());
  }
  fail_inv(where + ".kind: expected \"k3\", \"curve\" or \"surface\"");
}

ExtensionKind parse_extension(const json& v, const std::string& where) {
  const std::string s = get_string(v, where);
  if (s == "split") return ExtensionKind::split;
  if (s == "nonsplit") return ExtensionKind::nonsplit;
  fail_inv(where + ": expected \"split\" or \"nonsplit\"");
}

void parse_bundles(const json& root, Scene& scene) {
  auto it = root.find("bundles");
  if (it == root.end()) return;
  const json& arr = *it;
  if (!arr.is_array()) fail_inv("bundles: expected an array");

  std::set<std::string> declared;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = "bundles[" + std::to_string(i) + "]";
    if (!arr[i].is_object()) fail_inv(where + ": expected an object");
    const std::string name = get_string(require(arr[i], "name", where), where + ".name");
    if (name.empty()) fail_inv(where + ".name: empty name");
    if (!declared.insert(name).second) fail_inv(where + ": duplicate bundle name '" + name + "'");
  }

  auto resolve = [&](const std::string& n, const std::string& where) -> const VirtualBundle& {
    auto found = scene.bundles.find(n);
    if (found != scene.bundles.end()) return found->second;
    if (declared.count(n))
      fail_cyclic(where + ": '" + n + "' is declared later in the file");
    fail_unknown(where + ": unknown bundle '" + n + "'");
  };

  const PolarizedVariety& x = scene.variety;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const json& b = arr[i];
    const std::string name = b["name"].get<std::string>();
    const std::string where = "bundles[" + std::to_string(i) + "] ('" + name + "')";
    const std::string cons =
        get_string(require(b, "construction", where), where + ".construction");
    try {
      if (cons == "structure_sheaf") {
        check_keys(b, {"name", "construction"}, where);
        scene.bundles.emplace(name, VirtualBundle::structure_sheaf(x).with_label(name));
      } else if (cons == "tangent_bundle") {
        check_keys(b, {"name", "construction"}, where);
        scene.bundles.emplace(name, VirtualBundle::tangent_bundle(x).with_label(name));
      } else if (cons == "line_bundle") {
        check_keys(b, {"name", "construction", "c1"}, where);
        auto c1 = get_rational_vector(require(b, "c1", where), x.ns_rank(), where + ".c1");
        scene.bundles.emplace(name,
                              VirtualBundle::line_bundle(std::move(c1), x, name));
      } else if (cons == "from_chern") {
        check_keys(b, {"name", "construction", "rank", "c1", "c2"}, where);
        const long long rank = get_int(require(b, "rank", where), where + ".rank");
        if (rank < 1) fail_inv(where + ": genuine bundle must have rank >= 1");
        auto c1 = get_rational_vector(require(b, "c1", where), x.ns_rank(), where + ".c1");
        Rational c2(0);
        if (auto c2it = b.find("c2"); c2it != b.end())
          c2 = get_rational(*c2it, where + ".c2");
        scene.bundles.emplace(
            name, VirtualBundle::from_chern(rank, std::move(c1), std::move(c2), x, name));
      } else if (cons == "tower") {
        check_keys(b, {"name", "construction", "factors", "extensions"}, where);
        const json& fj = require(b, "factors", where);
        if (!fj.is_array() || fj.empty())
          fail_inv(where + ".factors: expected a nonempty array of names");
        Tower t;
        t.label = name;
        for (std::size_t k = 0; k < fj.size(); ++k)
          t.factors.push_back(resolve(
              get_string(fj[k], where + ".factors[" + std::to_string(k) + "]"), where));
        if (auto ej = b.find("extensions"); ej != b.end()) {
          if (!ej->is_array() || ej->size() + 1 != t.factors.size())
            fail_inv(where + ".extensions: expected " +
                     std::to_string(t.factors.size() - 1) + " entries");
          for (std::size_t k = 0; k < ej->size(); ++k)
            t.extension_flags.push_back(parse_extension(
                (*ej)[k], where + ".extensions[" + std::to_string(k) + "]"));
        } else {
          t.extension_flags.assign(t.factors.size() - 1, ExtensionKind::nonsplit);
        }
        scene.bundles.emplace(name, t.total().with_label(name));
        scene.towers.emplace(name, std::move(t));
      } else if (cons == "dual") {
        check_keys(b, {"name", "construction", "of"}, where);
        const std::string of = get_string(require(b, "of", where), where + ".of");
        const VirtualBundle& e = resolve(of, where);
        scene.bundles.emplace(name, dual(e).with_label(name));
        if (auto t = scene.towers.find(of); t != scene.towers.end()) {
          Tower dt = dual(t->second);
          dt.label = name;
          scene.towers.emplace(name, std::move(dt));
        }
      } else if (cons == "sum" || cons == "tensor") {
        check_keys(b, {"name", "construction", "of"}, where);
        const json& of = require(b, "of", where);
        if (!of.is_array() || of.size() < 2)
          fail_inv(where + ".of: expected at least two names");
        VirtualBundle acc =
            resolve(get_string(of[0], where + ".of[0]"), where);
        for (std::size_t k = 1; k < of.size(); ++k) {
          const VirtualBundle& rhs = resolve(
              get_string(of[k], where + ".of[" + std::to_string(k) + "]"), where);
          acc = cons == "sum" ? direct_sum(acc, rhs) : tensor(acc, rhs);
        }
        scene.bundles.emplace(name, acc.with_label(name));
      } else {
        fail_inv(where + ".construction: unknown construction '" + cons + "'");
      }
    } catch (const domain_error& e) {
      fail_inv(where + ": " + e.what());
    }
    if (scene.bundles.at(name).rank() < 1)
      fail_inv(where + ": genuine bundle must have rank >= 1");
    scene.bundle_order.push_back(name);
  }
}

void parse_certificates(const json& root, Scene& scene) {
  auto it = root.find("certificates");
  if (it == root.end()) return;
  if (!it->is_array()) fail_inv("certificates: expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& c = (*it)[i];
    const std::string where = "certificates[" + std::to_string(i) + "]";
    if (!c.is_object()) fail_inv(where + ": expected an object");
    check_keys(c, {"subject", "status", "justification"}, where);
    SemistabilityCertificate cert;
    cert.subject = get_string(require(c, "subject", where), where + ".subject");
    scene.bundle(cert.subject);  // unknown-name check
    const std::string status =
        get_string(require(c, "status", where), where + ".status");
    if (status == "semistable") cert.status = CertStatus::declared_semistable;
    else if (status == "stable") cert.status = CertStatus::declared_stable;
    else if (status == "unknown") cert.status = CertStatus::unknown;
    else fail_inv(where + ".status: expected \"semistable\", \"stable\" or \"unknown\"");
    if (auto j = c.find("justification"); j != c.end())
      cert.justification = get_string(*j, where + ".justification");
    if (!scene.certificates.emplace(cert.subject, cert).second)
      fail_inv(where + ": duplicate certificate for '" + cert.subject + "'");
  }
}

void parse_filtrations(const json& root, Scene& scene) {
  auto it = root.find("filtrations");
  if (it == root.end()) return;
  if (!it->is_array()) fail_inv("filtrations: expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& f = (*it)[i];
    const std::string where = "filtrations[" + std::to_string(i) + "]";
    if (!f.is_object()) fail_inv(where + ": expected an object");
    check_keys(f, {"name", "ambient", "steps", "quotients", "weights"}, where);
    SceneFiltration sf;
    sf.name = get_string(require(f, "name", where), where + ".name");
    if (!names.insert(sf.name).second)
      fail_inv(where + ": duplicate filtration name '" + sf.name + "'");
    sf.ambient = get_string(require(f, "ambient", where), where + ".ambient");
    const json& sj = require(f, "steps", where);
    if (!sj.is_array() || sj.empty())
      fail_inv(where + ".steps: expected a nonempty array of names");
    for (std::size_t k = 0; k < sj.size(); ++k)
      sf.steps.push_back(get_string(sj[k], where + ".steps[" + std::to_string(k) + "]"));
    const json& qj = require(f, "quotients", where);
    if (!qj.is_array() || qj.size() != sf.steps.size())
      fail_inv(where + ".quotients: expected one name per step");
    for (std::size_t k = 0; k < qj.size(); ++k)
      sf.quotients.push_back(
          get_string(qj[k], where + ".quotients[" + std::to_string(k) + "]"));
    if (auto wj = f.find("weights"); wj != f.end()) {
      sf.weights = get_rational_vector(*wj, sf.steps.size(), where + ".weights");
    }

    Filtration fl = scene.build_filtration(sf);  // resolves names
    try {
      fl.validate();
      if (sf.weights) {
        WeightedFiltration wf{fl, *sf.weights};
        wf.validate();
      }
    } catch (const domain_error& e) {
      fail_inv(where + ": " + e.what());
    }
    const auto qs = fl.quotients();
    for (std::size_t k = 0; k < qs.size(); ++k)
      if (!(qs[k] == scene.bundle(sf.quotients[k])))
        fail_inv(where + ": Chern data of quotient " + std::to_string(k + 1) +
                 " does not match declared '" + sf.quotients[k] + "'");
    scene.filtrations.push_back(std::move(sf));
  }
}

void parse_pairings(const json& root, Scene& scene) {
  auto it = root.find("pairings");
  if (it == root.end()) return;
  if (!it->is_array()) fail_inv("pairings: expected an array");
  std::set<std::string> names;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& p = (*it)[i];
    const std::string where = "pairings[" + std::to_string(i) + "]";
    if (!p.is_object()) fail_inv(where + ": expected an object");
    check_keys(p, {"name", "towers", "partner", "symmetry"}, where);
    ScenePairing sp;
    sp.name = get_string(require(p, "name", where), where + ".name");
    if (!names.insert(sp.name).second)
      fail_inv(where + ": duplicate pairing name '" + sp.name + "'");
    const json& tj = require(p, "towers", where);
    if (!tj.is_array() || tj.empty())
      fail_inv(where + ".towers: expected a nonempty array of names");
    for (std::size_t k = 0; k < tj.size(); ++k)
      sp.towers.push_back(get_string(tj[k], where + ".towers[" + std::to_string(k) + "]"));
    const json& pj = require(p, "partner", where);
    if (!pj.is_array() || pj.size() != sp.towers.size())
      fail_inv(where + ".partner: expected one index per tower");
    for (std::size_t k = 0; k < pj.size(); ++k) {
      const long long v = get_int(pj[k], where + ".partner[" + std::to_string(k) + "]");
      if (v < 0) fail_inv(where + ".partner: indices must be nonnegative");
      sp.partner.push_back(static_cast<std::size_t>(v));
    }
    const std::string sym = get_string(require(p, "symmetry", where), where + ".symmetry");
    if (sym == "symmetric") sp.symmetry = PairingSymmetry::symmetric;
    else if (sym == "antisymmetric") sp.symmetry = PairingSymmetry::antisymmetric;
    else fail_inv(where + ".symmetry: expected \"symmetric\" or \"antisymmetric\"");

    try {
      SumObject o = scene.build_object(sp);
      (void)scene.build_pairing(sp, o);
    } catch (const domain_error& e) {
      fail_inv(where + ": " + e.what());
    }
    scene.pairings.push_back(std::move(sp));
  }
}

HilbertExpect parse_hilbert_expect(const json& e, const std::string& where) {
  check_keys(e, {"c2", "euler", "degree", "poly"}, where);
  HilbertExpect out;
  if (auto it = e.find("c2"); it != e.end()) out.c2 = get_rational(*it, where + ".c2");
  if (auto it = e.find("euler"); it != e.end())
    out.euler = get_rational(*it, where + ".euler");
  if (auto it = e.find("degree"); it != e.end())
    out.degree = get_rational(*it, where + ".degree");
  if (auto it = e.find("poly"); it != e.end()) out.poly = get_poly(*it, where + ".poly");
  return out;
}

SlopesExpect parse_slopes_expect(const json& e, const std::string& where) {
  check_keys(e, {"order", "difference", "mt", "gieseker"}, where);
  SlopesExpect out;
  if (auto it = e.find("order"); it != e.end()) out.order = get_order(*it, where + ".order");
  if (auto it = e.find("difference"); it != e.end())
    out.difference = get_poly(*it, where + ".difference");
  if (auto it = e.find("mt"); it != e.end()) out.mt = get_bool(*it, where + ".mt");
  if (auto it = e.find("gieseker"); it != e.end())
    out.gieseker = get_bool(*it, where + ".gieseker");
  return out;
}

HnExpect parse_hn_expect(const json& e, const std::string& where) {
  check_keys(e, {"certified", "reason", "slopes"}, where);
  HnExpect out;
  if (auto it = e.find("certified"); it != e.end())
    out.certified = get_bool(*it, where + ".certified");
  if (auto it = e.find("reason"); it != e.end())
    out.reason = get_string(*it, where + ".reason");
  if (auto it = e.find("slopes"); it != e.end()) {
    if (!it->is_array()) fail_inv(where + ".slopes: expected an array of polynomials");
    std::vector<UniPoly> ps;
    for (std::size_t k = 0; k < it->size(); ++k)
      ps.push_back(get_poly((*it)[k], where + ".slopes[" + std::to_string(k) + "]"));
    out.slopes = std::move(ps);
  }
  return out;
}

WeightedExpect parse_weighted_expect(const json& e, const std::string& where) {
  check_keys(e, {"value", "sign"}, where);
  WeightedExpect out;
  if (auto it = e.find("value"); it != e.end()) out.value = get_poly(*it, where + ".value");
  if (auto it = e.find("sign"); it != e.end()) out.sign = get_order(*it, where + ".sign");
  return out;
}

Def54Expect parse_def54_expect(const json& e, const std::string& where) {
  check_keys(e, {"orders", "differences"}, where);
  Def54Expect out;
  if (auto it = e.find("orders"); it != e.end()) {
    if (!it->is_array()) fail_inv(where + ".orders: expected an array");
    std::vector<std::strong_ordering> os;
    for (std::size_t k = 0; k < it->size(); ++k)
      os.push_back(get_order((*it)[k], where + ".orders[" + std::to_string(k) + "]"));
    out.orders = std::move(os);
  }
  if (auto it = e.find("differences"); it != e.end()) {
    if (!it->is_array()) fail_inv(where + ".differences: expected an array");
    std::vector<UniPoly> ps;
    for (std::size_t k = 0; k < it->size(); ++k)
      ps.push_back(get_poly((*it)[k], where + ".differences[" + std::to_string(k) + "]"));
    out.differences = std::move(ps);
  }
  return out;
}

ParabolicExpect parse_parabolic_expect(const json& e, const std::string& where) {
  check_keys(e, {"compatible", "witness"}, where);
  ParabolicExpect out;
  if (auto it = e.find("compatible"); it != e.end())
    out.compatible = get_bool(*it, where + ".compatible");
  if (auto it = e.find("witness"); it != e.end())
    out.witness = get_sub(*it, where + ".witness");
  return out;
}

void parse_checks(const json& root, Scene& scene) {
  auto it = root.find("checks");
  if (it == root.end()) return;
  if (!it->is_array()) fail_inv("checks: expected an array");
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& c = (*it)[i];
    const std::string where = "checks[" + std::to_string(i) + "]";
    if (!c.is_object()) fail_inv(where + ": expected an object");
    const std::string kind = get_string(require(c, "check", where), where + ".check");
    const json empty_expect = json::object();
    const json& e = c.contains("expect") ? c["expect"] : empty_expect;
    if (!e.is_object()) fail_inv(where + ".expect: expected an object");

    if (kind == "hilbert") {
      check_keys(c, {"check", "bundle", "expect"}, where);
      HilbertCheck hc;
      hc.bundle = get_string(require(c, "bundle", where), where + ".bundle");
      scene.bundle(hc.bundle);
      hc.expect = parse_hilbert_expect(e, where + ".expect");
      scene.checks.emplace_back(std::move(hc));
    } else if (kind == "slopes") {
      check_keys(c, {"check", "left", "right", "expect"}, where);
      SlopesCheck sc;
      sc.left = get_string(require(c, "left", where), where + ".left");
      sc.right = get_string(require(c, "right", where), where + ".right");
      scene.bundle(sc.left);
      scene.bundle(sc.right);
      sc.expect = parse_slopes_expect(e, where + ".expect");
      scene.checks.emplace_back(std::move(sc));
    } else if (kind == "hn") {
      check_keys(c, {"check", "filtration", "expect"}, where);
      HnCheck hc;
      hc.filtration = get_string(require(c, "filtration", where), where + ".filtration");
      scene.filtration(hc.filtration);
      hc.expect = parse_hn_expect(e, where + ".expect");
      scene.checks.emplace_back(std::move(hc));
    } else if (kind == "weighted") {
      check_keys(c, {"check", "filtration", "expect"}, where);
      WeightedCheck wc;
      wc.filtration = get_string(require(c, "filtration", where), where + ".filtration");
      if (!scene.filtration(wc.filtration).weights)
        fail_inv(where + ": filtration '" + wc.filtration + "' has no weights");
      wc.expect = parse_weighted_expect(e, where + ".expect");
      scene.checks.emplace_back(std::move(wc));
    } else if (kind == "def54" || kind == "parabolic") {
      const char* listkey = kind == "def54" ? "subs" : "steps";
      check_keys(c, {"check", "pairing", listkey, "expect"}, where);
      const std::string pname =
          get_string(require(c, "pairing", where), where + ".pairing");
      const ScenePairing& pd = scene.pairing(pname);
      SumObject obj = scene.build_object(pd);
      const json& lj = require(c, listkey, where);
      if (!lj.is_array())
        fail_inv(where + "." + listkey + ": expected an array of prefix vectors");
      std::vector<AdmissibleSub> subs;
      for (std::size_t k = 0; k < lj.size(); ++k) {
        AdmissibleSub s =
            get_sub(lj[k], where + "." + listkey + "[" + std::to_string(k) + "]");
        try {
          validate_sub(s, obj);
        } catch (const domain_error& ex) {
          fail_inv(where + "." + listkey + "[" + std::to_string(k) + "]: " + ex.what());
        }
        subs.push_back(std::move(s));
      }
      if (kind == "def54") {
        Def54Check dc;
        dc.pairing = pname;
        dc.subs = std::move(subs);
        dc.expect = parse_def54_expect(e, where + ".expect");
        scene.checks.emplace_back(std::move(dc));
      } else {
        for (std::size_t k = 1; k < subs.size(); ++k)
          if (!(sub_leq(subs[k - 1], subs[k])) || subs[k - 1] == subs[k])
            fail_inv(where + ".steps: steps must strictly increase");
        ParabolicCheck pc;
        pc.pairing = pname;
        pc.steps = std::move(subs);
        pc.expect = parse_parabolic_expect(e, where + ".expect");
        scene.checks.emplace_back(std::move(pc));
      }
    } else {
      fail_inv(where + ".check: unknown check kind '" + kind + "'");
    }
  }
}

}  // namespace

const VirtualBundle& Scene::bundle(const std::string& n) const {
  auto it = bundles.find(n);
  if (it == bundles.end()) fail_unknown("unknown bundle '" + n + "'");
  return it->second;
}

Tower Scene::tower_of(const std::string& n) const {
  if (auto it = towers.find(n); it != towers.end()) return it->second;
  Tower t;
  t.factors.push_back(bundle(n));
  t.label = n;
  return t;
}

const SceneFiltration& Scene::filtration(const std::string& n) const {
  for (const auto& f : filtrations)
    if (f.name == n) return f;
  fail_unknown("unknown filtration '" + n + "'");
}

const ScenePairing& Scene::pairing(const std::string& n) const {
  for (const auto& p : pairings)
    if (p.name == n) return p;
  fail_unknown("unknown pairing '" + n + "'");
}

Filtration Scene::build_filtration(const SceneFiltration& f) const {
  Filtration out{bundle(f.ambient), {}, {}};
  for (const auto& s : f.steps) out.steps.push_back(bundle(s));
  for (const auto& q : f.quotients) {
    bundle(q);
    if (auto it = certificates.find(q); it != certificates.end()) {
      out.certificates.push_back(it->second);
    } else {
      out.certificates.push_back(
          SemistabilityCertificate{q, CertStatus::unknown, ""});
    }
  }
  return out;
}

SumObject Scene::build_object(const ScenePairing& p) const {
  SumObject o;
  for (const auto& t : p.towers) o.towers.push_back(tower_of(t));
  return o;
}

PairingStructure Scene::build_pairing(const ScenePairing& p, const SumObject& o) const {
  return PairingStructure::make(p.partner, p.symmetry, o);
}

Scene parse_scene_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_at(text, e.byte);
    std::string msg = e.what();
    if (auto pos = msg.find("] "); pos != std::string::npos) msg = msg.substr(pos + 2);
    throw scene_error(scene_error::kind::parse, msg, line, col);
  }
  if (!root.is_object()) fail_inv("scene: top level must be an object");
  check_keys(root,
             {"name", "variety", "bundles", "certificates", "filtrations", "pairings",
              "checks"},
             "scene");
  if (!root.contains("variety")) fail_inv("scene: missing field 'variety'");

  auto [variety, desc] = parse_variety(root["variety"]);
  Scene scene{"scene", std::move(variety), std::move(desc)};
  if (auto it = root.find("name"); it != root.end())
    scene.name = get_string(*it, "scene.name");

  parse_bundles(root, scene);
  parse_certificates(root, scene);
  parse_filtrations(root, scene);
  parse_pairings(root, scene);
  parse_checks(root, scene);
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw scene_error(scene_error::kind::parse, "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scene_text(ss.str());
}

Scene builtin_paper_scene(long long h2) {
  PolarizedVariety x = PolarizedVariety::k3(h2);
  Scene s{"paper-k3", x, "K3 surface, H^2 = " + std::to_string(h2)};

  const VirtualBundle O = VirtualBundle::structure_sheaf(x).with_label("O");
  const VirtualBundle TX = VirtualBundle::tangent_bundle(x).with_label("TX");
  Tower tv{{TX, O}, {ExtensionKind::nonsplit}, "V"};
  const VirtualBundle V = tv.total();
  Tower tvd = dual(tv);
  tvd.label = "Vdual";
  const VirtualBundle Vd = dual(V).with_label("Vdual");
  const VirtualBundle VO = direct_sum(V, O).with_label("VO");
  const VirtualBundle VVd = direct_sum(V, Vd).with_label("VVdual");

  s.bundle_order = {"O", "TX", "V", "Vdual", "VO", "VVdual"};
  s.bundles = {{"O", O}, {"TX", TX}, {"V", V}, {"Vdual", Vd}, {"VO", VO}, {"VVdual", VVd}};
  s.towers = {{"V", tv}, {"Vdual", tvd}};

  s.certificates = {
      {"O", {"O", CertStatus::declared_stable,
             "line bundle: stable for every polarization"}},
      {"TX", {"TX", CertStatus::declared_semistable,
              "polystable of degree zero, hence Gieseker semistable"}},
      {"V", {"V", CertStatus::declared_semistable,
             "nonsplit extension of O by TX: Gieseker semistable"}},
  };

  s.filtrations = {{"hn",
                    "VVdual",
                    {"O", "VO", "VVdual"},
                    {"O", "V", "TX"},
                    std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}}};

  s.pairings = {{"orthogonal", {"V", "Vdual"}, {1, 0}, PairingSymmetry::symmetric},
                {"symplectic", {"V", "Vdual"}, {1, 0}, PairingSymmetry::antisymmetric}};

  const Rational d(h2);
  const Rational dh = d / Rational(2);
  const auto poly = [](Rational c0, Rational c2) {
    return UniPoly{std::move(c0), Rational(0), std::move(c2)};
  };
  const auto cpoly = [](Rational c0) { return UniPoly::constant(std::move(c0)); };
  using SO = std::strong_ordering;

  s.checks.emplace_back(HilbertCheck{
      "O", {Rational(0), Rational(2), Rational(0), poly(Rational(2), dh)}});
  s.checks.emplace_back(HilbertCheck{
      "TX", {Rational(24), Rational(-20), Rational(0), poly(Rational(-20), d)}});
  s.checks.emplace_back(HilbertCheck{
      "V",
      {Rational(24), Rational(-18), Rational(0), poly(Rational(-18), Rational(3) * dh)}});
  s.checks.emplace_back(HilbertCheck{
      "Vdual",
      {Rational(24), Rational(-18), Rational(0), poly(Rational(-18), Rational(3) * dh)}});
  s.checks.emplace_back(HilbertCheck{
      "VVdual",
      {Rational(48), Rational(-36), Rational(0), poly(Rational(-36), Rational(3) * d)}});
  s.checks.emplace_back(
      SlopesCheck{"O", "TX", {SO::greater, cpoly(Rational(12)), false, true}});
  s.checks.emplace_back(
      SlopesCheck{"O", "Vdual", {SO::greater, cpoly(Rational(8)), false, true}});
  s.checks.emplace_back(
      SlopesCheck{"TX", "V", {SO::less, cpoly(Rational(-4)), false, false}});
  s.checks.emplace_back(HnCheck{
      "hn",
      {true, std::nullopt,
       std::vector<UniPoly>{poly(Rational(2), dh), poly(Rational(-6), dh),
                            poly(Rational(-10), dh)}}});
  s.checks.emplace_back(WeightedCheck{"hn", {cpoly(Rational(96)), SO::greater}});

  const AdmissibleSub zero{{0, 0}};
  const AdmissibleSub sub_o{{0, 1}};
  const AdmissibleSub sub_tx{{1, 0}};
  const AdmissibleSub step2{{2, 1}};
  const AdmissibleSub full{{2, 2}};

  s.checks.emplace_back(Def54Check{
      "orthogonal",
      {zero, sub_o, sub_tx},
      {std::vector<SO>{SO::equal, SO::equal, SO::equal}, std::nullopt}});
  s.checks.emplace_back(
      ParabolicCheck{"orthogonal", {sub_o, step2, full}, {false, sub_o}});
  s.checks.emplace_back(
      Def54Check{"symplectic", {sub_o}, {std::vector<SO>{SO::equal}, std::nullopt}});
  s.checks.emplace_back(
      ParabolicCheck{"symplectic", {sub_o, step2, full}, {false, sub_o}});

  return s;
}

}  // namespace sheafstab
