#pragma once

#include <filesystem>
#include <string>

namespace citegraph {

std::string read_file(const std::filesystem::path& path);

// Writes via a temporary file in the same directory and renames into
// place, so an interrupted run never leaves a partially written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// FNV-1a fingerprint of a file's bytes, as 16 hex digits.
std::string file_fingerprint(const std::filesystem::path& path);

}  // namespace citegraph
