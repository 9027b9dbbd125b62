#include "injgen/corpus.hpp"

#include <algorithm>

#include "injgen/builders.hpp"

namespace injgen {

namespace fs = std::filesystem;

AlgebraPtr CorpusEntry::algebra(const std::string& role) const {
  auto it = objects.find(role);
  if (it == objects.end()) throw InputError(name + " has no object '" + role + "'");
  return algebra_from_json(it->second);
}

Bimodule CorpusEntry::bimodule(const std::string& role) const {
  auto it = objects.find(role);
  if (it == objects.end()) throw InputError(name + " has no object '" + role + "'");
  return bimodule_from_json(it->second);
}

Json corpus_entry_to_json(const CorpusEntry& e) {
  Json objects = Json::object();
  for (const auto& [role, j] : e.objects) objects[role] = j;
  return {{"name", e.name}, {"description", e.description}, {"objects", objects}, {"parameters", e.parameters}};
}

CorpusEntry corpus_entry_from_json(const Json& j) {
  try {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    e.description = j.value("description", "");
    for (const auto& [role, o] : j.at("objects").items()) e.objects[role] = o;
    e.parameters = j.value("parameters", Json::object());
    return e;
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed corpus entry: ") + ex.what());
  }
}

Corpus::Corpus(std::vector<CorpusEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (entries_[i].name == entries_[j].name) throw InputError("duplicate corpus entry " + entries_[i].name);
}

const CorpusEntry& Corpus::at(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e;
  throw InputError("no corpus entry " + name);
}

bool Corpus::contains(const std::string& name) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.name == name; });
}

Corpus bundled_corpus() {
  Field f = Field::prime(3);
  auto z2 = FiniteAbelianGroup::cyclic(2);
  auto k2 = vertex_algebra(f, 2);
  auto k3 = vertex_algebra(f, 3);
  auto a2 = linear_quiver_algebra(f, 2);
  auto a3 = linear_quiver_algebra(f, 3);
  Bimodule arrows3 = arrow_bimodule(f, linear_quiver(3), k3);

  Quiver loop;
  loop.vertices = 2;
  loop.arrows = {{0, 1, "a", {}}, {1, 0, "b", {}}, {0, 0, "c", {}}};

  auto dual_z2 = truncated_polynomial(f, 2, z2, GroupElem{1});

  std::vector<CorpusEntry> out;
  out.push_back({"a2-path", "path algebra of 1 -> 2", {{"algebra", algebra_to_json(*a2)}}});
  out.push_back({"a3-path", "path algebra of 1 -> 2 -> 3", {{"algebra", algebra_to_json(*a3)}}});
  out.push_back({"a2-arrows",
                 "arrow bimodule of 1 -> 2 over k^2",
                 {{"base", algebra_to_json(*k2)}, {"bimodule", bimodule_to_json(arrow_bimodule(f, linear_quiver(2), k2))}}});
  out.push_back({"a3-arrows",
                 "arrow bimodule of 1 -> 2 -> 3 over k^3",
                 {{"base", algebra_to_json(*k3)}, {"bimodule", bimodule_to_json(arrows3)}},
                 {{"block_powers", 2}}});
  out.push_back({"loop-arrows",
                 "arrows 1 -> 2, 2 -> 1 and a loop at 1 over k^2; not nilpotent",
                 {{"base", algebra_to_json(*k2)}, {"bimodule", bimodule_to_json(arrow_bimodule(f, loop, k2))}}});
  out.push_back({"dual-numbers",
                 "k[x]/(x^2) with |x| = 1 in Z/2, and trivially graded",
                 {{"graded", algebra_to_json(*dual_z2)},
                  {"ungraded", algebra_to_json(*truncated_polynomial(f, 2, FiniteAbelianGroup::trivial(), GroupElem{}))}}});
  out.push_back({"group-z2", "group algebra of Z/2 graded by Z/2", {{"algebra", algebra_to_json(*group_algebra(f, z2))}}});
  out.push_back({"z4-truncated",
                 "k[x]/(x^4) with |x| = 1 in Z/4; every component is one-dimensional",
                 {{"algebra", algebra_to_json(*truncated_polynomial(f, 4, FiniteAbelianGroup::cyclic(4), GroupElem{1}))}},
                 {{"splits", {0, 1, 2}}}});
  out.push_back({"corner-pd",
                 "kA_2 with its radical as a nilpotent left perfect bimodule",
                 {{"algebra", algebra_to_json(*a2)}, {"bimodule", bimodule_to_json(ideal_bimodule(a2, {2}))}},
                 {{"pd_bound", 6}}});
  out.push_back({"theta-a3",
                 "A_3 arrows with theta from the tensor ring, truncated at k = 3",
                 {{"bimodule", bimodule_to_json(arrows3)}},
                 {{"k", 3}, {"random_tests", 10}}});
  out.push_back({"twisted-z2xz2",
                 "dual numbers over Z/2 twisted against themselves by t(1, 1) = -1",
                 {{"a", algebra_to_json(*dual_z2)}, {"b", algebra_to_json(*dual_z2)}},
                 {{"t", Json::array({Json::array({2})})}}});
  return Corpus(std::move(out));
}

void write_corpus(const Corpus& corpus, const fs::path& dir) {
  Json manifest = Json::array();
  for (const auto& e : corpus.entries()) {
    std::string file = e.name + ".json";
    write_json_file(dir / file, corpus_entry_to_json(e));
    manifest.push_back({{"name", e.name}, {"file", file}, {"description", e.description}});
  }
  write_json_file(dir / "manifest.json", {{"entries", manifest}});
}

Corpus load_corpus(const fs::path& dir) {
  Json manifest = read_json_file(dir / "manifest.json");
  std::vector<CorpusEntry> entries;
  try {
    for (const auto& m : manifest.at("entries")) {
      CorpusEntry e = corpus_entry_from_json(read_json_file(dir / m.at("file").get<std::string>()));
      if (e.name != m.at("name").get<std::string>()) throw InputError("manifest name differs for " + e.name);
      entries.push_back(std::move(e));
    }
  } catch (const Json::exception& ex) {
    throw InputError(std::string("malformed corpus manifest: ") + ex.what());
  }
  return Corpus(std::move(entries));
}

}  // namespace injgen
