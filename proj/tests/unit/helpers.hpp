#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "fov/analysis.hpp"
#include "fov/corpus.hpp"

namespace testing_support {

inline const std::filesystem::path kDataDir = FOV_DATA_DIR;
inline const std::filesystem::path kGoldenDir = FOV_GOLDEN_DIR;

inline fov::GroupSpec builtin(const std::string& name) {
  for (auto& s : fov::builtin_corpus(720))
    if (s.name == name) return s;
  throw std::invalid_argument("no built-in group " + name);
}

inline fov::GroupAnalysis analyse(const std::string& name) { return fov::GroupAnalysis(builtin(name)); }

inline fov::GroupAnalysis analyse_file(const std::string& relative) {
  return fov::GroupAnalysis(fov::ingest_group_file(kDataDir / relative));
}

}  // namespace testing_support
