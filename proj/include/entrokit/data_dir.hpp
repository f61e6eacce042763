// Location of bundled data files (presets, baselines, corpora).

#pragma once

#include <filesystem>
#include <string>

namespace entrokit {

/// Bundled data directory: ENTROPY_INJECT_DATA_DIR when set, otherwise the
/// compiled-in default.
std::filesystem::path data_dir();

/// Reads a bundled data file. Throws std::runtime_error when missing.
std::string read_data_file(const std::string& relative_path);

}  // namespace entrokit
