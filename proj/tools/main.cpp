#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sheafstab/errors.hpp"
#include "sheafstab/report.hpp"
#include "sheafstab/scene.hpp"
#include "sheafstab/version.hpp"

namespace {

// Exit codes: 0 all declared expectations hold, 1 an expectation failed,
// 2 scene or usage error, 3 internal invariant breach.
constexpr int kExitExpectation = 1;
constexpr int kExitScene = 2;
constexpr int kExitInternal = 3;

int run_scene(const sheafstab::Scene& scene, const std::string& emit) {
  const sheafstab::Report report = sheafstab::run_checks(scene);
  if (emit == "tap")
    std::cout << sheafstab::to_tap(report);
  else if (emit == "json")
    std::cout << sheafstab::to_json(report);
  else
    std::cout << sheafstab::to_plain(report);
  return report.all_passed() ? 0 : kExitExpectation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact characteristic-class arithmetic and sheaf-stability checks"};
  app.set_version_flag("--version", std::string("sheafstab ") + sheafstab::kVersion);
  app.require_subcommand(0, 1);

  auto* verify = app.add_subcommand("verify", "run the checks declared in a scene file");
  std::string scene_path;
  std::string verify_emit = "report";
  verify->add_option("scene", scene_path, "scene JSON file")->required();
  verify->add_option("--emit", verify_emit, "output format")
      ->check(CLI::IsMember({"report", "tap", "json"}));

  auto* paper = app.add_subcommand("paper-k3", "run the built-in K3 scenario");
  long long h2 = 2;
  std::string paper_emit = "report";
  paper->add_option("--h2", h2, "polarization degree H^2 (positive even integer)");
  paper->add_option("--emit", paper_emit, "output format")
      ->check(CLI::IsMember({"report", "tap", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitScene;
  }

  try {
    if (*verify) return run_scene(sheafstab::load_scene(scene_path), verify_emit);
    if (*paper) {
      if (h2 <= 0 || h2 % 2 != 0) {
        std::cerr << "scene error (invariant violation): --h2 must be a positive even integer\n";
        return kExitScene;
      }
      return run_scene(sheafstab::builtin_paper_scene(h2), paper_emit);
    }
    std::cerr << app.help();
    return kExitScene;
  } catch (const sheafstab::scene_error& e) {
    std::cerr << "scene error (" << sheafstab::scene_error::kind_name(e.error_kind())
              << "): " << e.what();
    if (e.line() > 0) std::cerr << " [line " << e.line() << ", column " << e.column() << "]";
    std::cerr << "\n";
    return kExitScene;
  } catch (const sheafstab::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const sheafstab::domain_error& e) {
    std::cerr << "scene error (invariant violation): " << e.what() << "\n";
    return kExitScene;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
