#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "injgen/serialize.hpp"

namespace injgen {

// A named example: objects by role plus construction parameters.
struct CorpusEntry {
  std::string name;
  std::string description;
  std::map<std::string, Json> objects;
  Json parameters = Json::object();

  AlgebraPtr algebra(const std::string& role) const;
  Bimodule bimodule(const std::string& role) const;
};

Json corpus_entry_to_json(const CorpusEntry& e);
CorpusEntry corpus_entry_from_json(const Json& j);

class Corpus {
 public:
  explicit Corpus(std::vector<CorpusEntry> entries);

  const CorpusEntry& at(const std::string& name) const;
  bool contains(const std::string& name) const;
  const std::vector<CorpusEntry>& entries() const { return entries_; }

 private:
  std::vector<CorpusEntry> entries_;
};

// The examples shipped with the library, all over F_3:
//   a2-path, a3-path        path algebras of linear quivers
//   a2-arrows, a3-arrows    arrow bimodules over the vertex algebras
//   loop-arrows             arrows 1->2, 2->1 and a loop at 1 over k^2
//   dual-numbers            k[x]/(x^2), graded by Z/2 and ungraded
//   group-z2                kZ/2 graded by Z/2
//   z4-truncated            k[x]/(x^4) graded by Z/4 with |x| = 1
//   corner-pd               kA_2 with its radical
//   theta-a3                A_3 arrows with the tensor-ring theta (k = 3)
//   twisted-z2xz2           two copies of the Z/2-graded dual numbers, t = -1
Corpus bundled_corpus();

// One <name>.json per entry plus manifest.json.
void write_corpus(const Corpus& corpus, const std::filesystem::path& dir);
Corpus load_corpus(const std::filesystem::path& dir);

}  // namespace injgen
