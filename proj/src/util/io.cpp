#include "symgoal/util/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "symgoal/errors.hpp"

#ifndef SYMGOAL_DEFAULT_DATA_DIR
#define SYMGOAL_DEFAULT_DATA_DIR "data"
#endif

namespace symgoal {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("short write to " + path.string());
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("SYMGOAL_DATA"); env && *env) return env;
  return SYMGOAL_DEFAULT_DATA_DIR;
}

}  // namespace symgoal
