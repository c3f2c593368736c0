#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace symgoal {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Directory holding the shipped domain, knowledge base and config tables.
// SYMGOAL_DATA overrides the compiled-in default.
std::filesystem::path data_dir();

}  // namespace symgoal
