#pragma once

#include <stdexcept>
#include <string>

namespace sheafstab {

/// Invalid input data or a violated operation precondition.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A defect inside the library itself. Drivers map this to its own exit code.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Failure while loading or validating a scene file.
class scene_error : public std::runtime_error {
 public:
  enum class kind { parse, unknown_name, cyclic_reference, invariant };

  scene_error(kind k, const std::string& message, int line = 0, int column = 0)
      : std::runtime_error(message), kind_(k), line_(line), column_(column) {}

  kind error_kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }      // 1-based; 0 when not applicable
  int column() const noexcept { return column_; }  // 1-based; 0 when not applicable

  static const char* kind_name(kind k) noexcept {
    switch (k) {
      case kind::parse: return "parse error";
      case kind::unknown_name: return "unknown name";
      case kind::cyclic_reference: return "cyclic reference";
      case kind::invariant: return "invariant violation";
    }
    return "scene error";
  }

 private:
  kind kind_;
  int line_;
  int column_;
};

}  // namespace sheafstab
