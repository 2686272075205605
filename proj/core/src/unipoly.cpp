#include "sheafstab/unipoly.hpp"

#include <ostream>

#include "sheafstab/errors.hpp"

namespace sheafstab {

UniPoly::UniPoly(std::initializer_list<Rational> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  trim();
}

UniPoly::UniPoly(std::vector<Rational> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

UniPoly UniPoly::constant(Rational c) {
  UniPoly p;
  p.coeffs_.push_back(std::move(c));
  p.trim();
  return p;
}

UniPoly UniPoly::monomial(Rational coeff, std::size_t power) {
  UniPoly p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = std::move(coeff);
  p.trim();
  return p;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<int> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::leading() const {
  if (coeffs_.empty()) throw domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UniPoly& UniPoly::operator/=(const Rational& s) {
  if (s.is_zero()) throw domain_error("polynomial division by zero scalar");
  for (auto& c : coeffs_) c /= s;
  return *this;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string UniPoly::str(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const std::string mag = abs(c).str();
    if (k == 0) {
      out += mag;
      continue;
    }
    if (mag != "1") {
      const bool fraction = mag.find('/') != std::string::npos;
      out += fraction ? "(" + mag + ")" : mag;
      out += "*";
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

std::strong_ordering eventually_compare(const UniPoly& p, const UniPoly& q) {
  const UniPoly d = p - q;
  if (d.is_zero()) return std::strong_ordering::equal;
  return d.leading().sign() > 0 ? std::strong_ordering::greater
                                : std::strong_ordering::less;
}

}  // namespace sheafstab
