#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "layered/cases.hpp"
#include "layered/flux.hpp"
#include "layered/reconstruct.hpp"

namespace layered {

/// A resolved run: case configuration plus scheme parameters.
struct RunConfig {
  CaseConfig case_config;
  WenoParams weno;
  FluxParams flux;
  double snapshot_interval = 0.0;  // > 0 replaces the case's snapshot times
};

/// Keys accepted in config files and as --key overrides.
const std::vector<std::string>& config_keys();

using KeyValue = std::pair<std::string, std::string>;

/// Resolves built-in case defaults <- config text <- overrides. The text holds
/// one `key = value` per line; `#` starts a comment.
RunConfig parse_config_text(std::string_view text, const std::vector<KeyValue>& overrides = {});

RunConfig parse_config_file(const std::filesystem::path& path,
                            const std::vector<KeyValue>& overrides = {});

/// Renders a config back to `key = value` text (all keys).
std::string format_config(const RunConfig& config);

}  // namespace layered
