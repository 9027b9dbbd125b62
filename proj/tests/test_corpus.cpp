#include <gtest/gtest.h>

#include <filesystem>

#include "injgen/corpus.hpp"
#include "injgen/registry.hpp"

using namespace injgen;
namespace fs = std::filesystem;

TEST(Corpus, ShippedFilesMatchBundled) {
  Corpus shipped = load_corpus(INJGEN_CORPUS_DIR);
  Corpus bundled = bundled_corpus();
  ASSERT_EQ(shipped.entries().size(), bundled.entries().size());
  for (const auto& e : bundled.entries()) {
    ASSERT_TRUE(shipped.contains(e.name)) << e.name;
    EXPECT_EQ(corpus_entry_to_json(shipped.at(e.name)), corpus_entry_to_json(e)) << e.name;
  }
}

TEST(Corpus, EveryObjectLoads) {
  const Corpus bundled = bundled_corpus();
  for (const auto& e : bundled.entries()) {
    for (const auto& [role, j] : e.objects) {
      if (j.contains("action_left")) {
        EXPECT_EQ(content_hash(bimodule_to_json(e.bimodule(role))), content_hash(j)) << e.name << "." << role;
      } else {
        EXPECT_EQ(content_hash(algebra_to_json(*e.algebra(role))), content_hash(j)) << e.name << "." << role;
        EXPECT_TRUE(check_algebra_axioms(*e.algebra(role)).ok()) << e.name << "." << role;
      }
    }
  }
}

TEST(Corpus, WriteThenLoad) {
  fs::path dir = fs::temp_directory_path() / "injgen-corpus-roundtrip";
  fs::remove_all(dir);
  write_corpus(bundled_corpus(), dir);
  Corpus back = load_corpus(dir);
  const Corpus bundled = bundled_corpus();
  for (const auto& e : bundled.entries())
    EXPECT_EQ(corpus_entry_to_json(back.at(e.name)), corpus_entry_to_json(e));
  fs::remove_all(dir);
}

TEST(Corpus, UnknownEntryAndMissingDir) {
  EXPECT_THROW(bundled_corpus().at("no-such-entry"), InputError);
  EXPECT_THROW(load_corpus("/nonexistent/injgen-corpus"), InputError);
}
