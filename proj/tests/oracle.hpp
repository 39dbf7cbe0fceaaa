#pragma once

#include <fstream>
#include <string>

#include <json.hpp>

// Frozen values from tests/oracles/matrix_groups.py.
inline const nlohmann::json& oracle() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(MCKAY_TEST_DATA) + "/data/oracle.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

inline std::string golden_path(const std::string& name) { return std::string(MCKAY_TEST_DATA) + "/golden/" + name; }
