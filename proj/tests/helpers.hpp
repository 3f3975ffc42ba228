#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <positroid/positroid.hpp>

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline positroid::le_diagram load_fixture(const std::string& name) {
  return positroid::parse_diagram(slurp(fixture_path(name)));
}
