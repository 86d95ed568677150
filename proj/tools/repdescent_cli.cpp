#include "repdescent.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kInputError = 2;

std::string options_json(std::size_t indices, std::size_t prime, std::size_t aut_bound, std::size_t ring_bound) {
  std::string s = "{\"indices\": " + std::to_string(indices) + ", \"prime\": " + std::to_string(prime);
  if (aut_bound) s += ", \"aut_bound\": " + std::to_string(aut_bound);
  if (ring_bound) s += ", \"ring_bound\": " + std::to_string(ring_bound);
  return s + "}";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character tables, descent cocycles and twist classes for finite groups"};
  app.set_version_flag("--version", std::string(rd_version()));

  std::string verb;
  std::vector<std::string> inputs;
  std::string output;
  bool summary = false;
  bool validate_only = false;
  std::size_t indices = 4, prime = 3, aut_bound = 0, ring_bound = 0;

  app.add_option("verb", verb, "chartable | auts | extension | cocycle-check | dual | twist | gerbe-check | affine-demo")
      ->required()
      ->check(CLI::IsMember({"chartable", "auts", "extension", "cocycle-check", "dual", "twist", "gerbe-check",
                             "affine-demo"}));
  app.add_option("inputs", inputs, "Input JSON file")->required()->check(CLI::ExistingFile);
  app.add_option("-o,--output", output, "Write the JSON report here");
  app.add_flag("-s,--summary", summary, "Print the text summary instead of JSON on stdout");
  app.add_flag("--validate", validate_only, "Only check the input against the schema for the verb");
  app.add_option("--indices", indices, "Index set size when deriving a datum from an extension")
      ->check(CLI::Range(1, 8));
  app.add_option("--prime", prime, "Odd prime for the two-point example");
  app.add_option("--aut-bound", aut_bound, "Largest group order for automorphism enumeration")
      ->envname("REPDESCENT_AUT_BOUND");
  app.add_option("--ring-bound", ring_bound, "Largest ring order for homomorphism enumeration")
      ->envname("REPDESCENT_RING_BOUND");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\nRun with --help for more information.\n";
    return kInputError;
  }

  if (validate_only) {
    for (const auto& in : inputs) {
      if (rd_validate_input(in.c_str(), verb.c_str()) != RD_OK) {
        std::cerr << "error: " << rd_last_error() << '\n';
        return kInputError;
      }
    }
    std::cout << "valid\n";
    return 0;
  }

  std::vector<const char*> paths;
  for (const auto& in : inputs) paths.push_back(in.c_str());
  rd_report* report = nullptr;
  const std::string opts = options_json(indices, prime, aut_bound, ring_bound);
  if (rd_dispatch(verb.c_str(), paths.data(), paths.size(), opts.c_str(), &report) != RD_OK) {
    std::cerr << "error: " << rd_last_error() << '\n';
    return kInputError;
  }
  int rc = rd_report_exit_code(report);
  if (!output.empty() && rd_write_report(report, output.c_str(), 0) != RD_OK) {
    std::cerr << "error: " << rd_last_error() << '\n';
    rc = kInputError;
  }
  if (summary) {
    std::fputs(rd_report_summary(report), stdout);
  } else if (output.empty()) {
    std::fputs(rd_report_json(report), stdout);
  }
  rd_report_free(report);
  return rc;
}
