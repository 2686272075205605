#include "sheafstab/rational.hpp"

#include <cctype>
#include <ostream>

#include "sheafstab/errors.hpp"

namespace sheafstab {

static_assert(sizeof(long) == sizeof(long long),
              "LP64 is assumed for the integer constructors");

Rational::Rational(long long n) : v_(static_cast<long>(n)) {}

Rational::Rational(long long num, long long den)
    : v_(static_cast<long>(num), static_cast<long>(den)) {
  if (den == 0) throw domain_error("rational with zero denominator");
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view num = text;
  std::string_view den;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (!all_digits(den)) {
      throw domain_error("malformed rational \"" + std::string(text) + "\"");
    }
  }
  if (!num.empty() && num.front() == '-') num.remove_prefix(1);
  if (!all_digits(num)) {
    throw domain_error("malformed rational \"" + std::string(text) + "\"");
  }

  mpq_class v;
  if (v.set_str(std::string(text), 10) != 0) {
    throw domain_error("malformed rational \"" + std::string(text) + "\"");
  }
  if (v.get_den() == 0) {
    throw domain_error("rational with zero denominator \"" + std::string(text) + "\"");
  }
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace sheafstab
