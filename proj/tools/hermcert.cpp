// hermcert: exact Hermite matrices from approximate roots, and certificates
// built on their signatures.

#include "hermcert/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  using namespace hermcert;
  CLI::App app{"Certified Hermite matrices from approximate roots"};
  RunConfig cfg;
  std::optional<std::string> out_path;

  std::vector<std::string> names(std::begin(kCommandNames), std::end(kCommandNames));
  app.add_option("command", cfg.command, "Stage to run")->required()->check(CLI::IsMember(names));
  app.add_option("--system", cfg.system, "System JSON {\"variables\", \"polynomials\"}");
  app.add_option("--system-b", cfg.system_b, "Second square system (filter-roots)");
  app.add_option("--roots", cfg.roots, "Roots JSON");
  app.add_option("--roots-b", cfg.roots_b, "Roots of the second square system (filter-roots)");
  app.add_option("--hermite", cfg.hermite, "Hermite JSON produced by build");
  app.add_option("--basis", cfg.basis, "Comma-separated basis monomials, e.g. \"1,x,y\"");
  app.add_option("--g", cfg.g, "Polynomial g");
  app.add_option("--center", cfg.center, "Comma-separated rational ball center");
  app.add_option("--eps2", cfg.eps2, "Squared ball radius, rational");
  app.add_option("--value", cfg.value, "Decimal or p/q value (reconstruct-rational)");
  app.add_option("--bound", cfg.bound, "Denominator bound (reconstruct-rational)");
  app.add_option("--seed", cfg.seed, "Seed for generic combinations")->capture_default_str();
  app.add_option("--retries", cfg.retries, "Squarefree retries")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--iters", cfg.iterations, "Newton iterations or filter rounds")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  app.add_option("--out", out_path, "Write JSON here instead of stdout");
  app.add_flag("--assume-smooth-bounded", cfg.assume_smooth_bounded,
               "Assert the real variety is smooth and bounded (nonneg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  CommandResult result;
  try {
    result = run_command(cfg);
  } catch (const std::exception& e) {
    result = {Json{{"error", "internal"}, {"message", e.what()}}, kExitConstruction};
  }
  const std::string text = result.output.dump(2) + "\n";
  if (out_path) {
    std::ofstream out(*out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << *out_path << "\n";
      return kExitUsage;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return result.exit_code;
}
