#pragma once

// Reproduction checks driven by a fixture file of inputs and expected vectors.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ohtsuki/io.hpp"
#include "ohtsuki/word.hpp"

namespace ohtsuki {

inline constexpr std::string_view kVersion = "0.1.0";

enum class InputKind { Word, Bracket, Diagram };

InputKind parse_input_kind(std::string_view text);

/// Presentation of a textual input: canonical expansion for words and diagrams,
/// structural expansion for brackets. Diagrams default to ambient {0..m}, the
/// others to {0} plus every generator mentioned.
Presentation presentation_from_input(InputKind kind, std::string_view text,
                                     const std::optional<ComponentSet>& ambient = std::nullopt);

struct Check {
  std::string name;
  std::string anchor;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  std::string version{kVersion};
  std::uint64_t seed = 0;

  bool all_pass() const;
  Json to_json() const;
  std::string to_text() const;
};

enum class VerifyTarget { Bubble, Vanishing, Switch, All };

VerifyTarget parse_verify_target(std::string_view text);

struct VerifyOptions {
  int max_chords = 6;
  std::filesystem::path fixtures;  // empty: default fixture file
};

std::filesystem::path default_fixture_path();

VerifyReport run_verify(VerifyTarget target, const VerifyOptions& opts = {});

}  // namespace ohtsuki
