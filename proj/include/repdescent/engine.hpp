#pragma once

#include "repdescent/affine.hpp"
#include "repdescent/descent.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace repdescent::engine {

using json = nlohmann::json;

inline constexpr const char* kToolName = "repdescent";
inline constexpr const char* kToolVersion = "1.0.0";

const std::vector<std::string>& verbs();

struct Options {
  std::size_t indices = 4;
  std::size_t prime = 3;
  std::optional<std::size_t> aut_bound;
  std::optional<std::size_t> ring_bound;
};

/// Reads {"indices", "prime", "aut_bound", "ring_bound"}; unknown keys are an
/// input error.
Options options_from_json(const json& j);

struct Command {
  std::string verb;
  std::vector<std::string> inputs;
  Options options;
};

struct Report {
  std::string verb;
  CheckStatus status = CheckStatus::pass;
  json payload;
  json provenance;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Input problems (bad JSON, wrong shape, group or ring axiom failures) throw
/// Error; callers map those to exit code 2.
Report dispatch(const Command& cmd);

json report_to_json(const Report& r);
Report report_from_json(const json& j);
/// Fixed-width text, byte-identical for identical reports.
std::string render_summary(const Report& r);
/// 0 for pass and vacuous, 1 for fail.
int exit_code(CheckStatus s);

/// Reads and shape-checks one input for `verb`. Errors carry a JSON pointer
/// to the offending field.
json validate_input(const std::string& path, const std::string& verb);

/// Writes to a sibling temporary file, then renames over `path`.
void write_atomically(const std::string& path, const std::string& text);

// Conversions, exposed for tests.
json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const json& j, const std::string& pointer = "");
FiniteGroup group_from_json(const json& j, const std::string& pointer = "");
GroupExtension extension_from_json(const json& j, const std::string& pointer = "");
CocycleDatum datum_from_json(const json& j, const std::string& pointer = "");
json group_to_json(const FiniteGroup& g);
json datum_to_json(const CocycleDatum& d);
FiniteCommRing ring_from_json(const json& j, const std::string& pointer = "");

}  // namespace repdescent::engine
