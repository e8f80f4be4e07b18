#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "empathy/corpus.hpp"

namespace fixtures {

std::string data_path(const std::string& name);
std::string read_file(const std::string& path);

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

// `n` single-annotator documents with ids doc-0000.. and one strength span each.
empathy::AnnotatedCorpus numbered_corpus(std::size_t n);

// A 300-token German review with header sections.
std::string long_review();

}  // namespace fixtures
