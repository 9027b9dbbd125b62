#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "injgen/serialize.hpp"

namespace injgen {

// Top-level key holding construction metadata; never hashed.
inline constexpr const char* kProvenanceKey = "provenance";

Json strip_provenance(const Json& j);
// Sorted-key compact dump; field elements are already canonical.
std::string canonical_dump(const Json& j);
// SHA-256 hex of the canonical dump without provenance.
std::string content_hash(const Json& j);

// {"construction", "inputs": {role: hash}, "parameters"}.
Json make_provenance(const std::string& construction, const Json& inputs, const Json& parameters = Json::object());

struct RegistryEntry {
  std::string hash;
  std::string path;  // relative to the registry root
  std::string kind;
  std::string label;
  std::vector<Json> provenance;  // every construction that produced this object
};

// Content-addressed store: <root>/objects/<hash>.json plus <root>/index.json.
class Registry {
 public:
  explicit Registry(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  // Stores the object (minus provenance) and records its provenance, if any.
  std::string put(const Json& object, const std::string& label = "");
  bool contains(const std::string& hash) const;
  const RegistryEntry& entry(const std::string& hash) const;
  // The stored object without provenance.
  Json get(const std::string& hash) const;
  std::vector<std::string> hashes() const;

  // A full hash, a unique hash prefix, or a label.
  std::string resolve(const std::string& ref) const;
  // Objects with a provenance record of `construction` that uses `hash` as an input.
  std::vector<std::string> derived_from(const std::string& hash, const std::string& construction) const;

  // Index entries without files, files without entries, and hash mismatches.
  std::vector<std::string> consistency_problems() const;

 private:
  void load();
  void save() const;
  std::filesystem::path root_;
  std::vector<RegistryEntry> entries_;  // sorted by hash
};

}  // namespace injgen
