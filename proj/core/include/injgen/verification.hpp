#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "injgen/constructions.hpp"
#include "injgen/corpus.hpp"

namespace injgen {

// ---- Twisted tensor products of modules -----------------------------------

struct TwistedIsoRow {
  std::string label;
  IsoSearch search;
};

struct TwistedIsoReport {
  std::vector<TwistedIsoRow> additivity;  // (M (+) M') (x)t N vs (M (x)t N) (+) (M' (x)t N)
  TwistedIsoRow duality;                   // D(A (x)t B) vs DA (x)t DB
  std::vector<TwistedIsoRow> shifts;       // M(g) (x)t N(h) vs (M (x)t N)(g, h)
  bool all_found = false;
  bool all_conclusive = false;
};

// Graded isomorphism searches over the twisted tensor product of A and B.
// `ms` and `ns` are graded right modules over A and B; additivity runs over
// consecutive pairs of `ms` against each N, shifts over every group pair for
// the first M and N.
TwistedIsoReport twisted_isomorphism_check(const AlgebraPtr& a, const AlgebraPtr& b, const Bicharacter& t,
                                           const std::vector<Module>& ms, const std::vector<Module>& ns);

// ---- Verification suite ----------------------------------------------------

constexpr std::uint64_t kDefaultSeed = 20240611;

struct SuiteOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 25;  // random instances per randomized check
  std::size_t pd_cutoff = kDefaultPdCutoff;
  std::size_t nil_cutoff = kDefaultNilCutoff;
  Field field = Field::prime(3);  // for random instances; the corpus fixes its own
  std::filesystem::path scratch;   // registry location for the derivation check; temp when empty
};

enum class SuiteStatus { Pass, Fail, Inconclusive };
const char* suite_status_name(SuiteStatus s);

struct SuiteCheck {
  std::string name;
  SuiteStatus status = SuiteStatus::Pass;
  std::string summary;
  Json evidence = Json::object();
};

// covering-dimension, zero-context, covering-round-trip, covering-splits,
// tensor-formula, block-power, degeneracy, twisted-isomorphisms, corner-pd,
// cleft-vanishing, derive-soundness, tor-symmetry.
const std::vector<std::string>& suite_check_names();

// Each check seeds its own generator from the suite seed and its name, so a
// filtered run reproduces the same results. InputError for unknown names.
SuiteCheck run_check(const std::string& name, const Corpus& corpus, const SuiteOptions& opts);
// Empty `only` runs everything, in the order of suite_check_names().
std::vector<SuiteCheck> run_suite(const Corpus& corpus, const SuiteOptions& opts,
                                  const std::vector<std::string>& only = {});

Json suite_check_to_json(const SuiteCheck& c);
Json suite_to_json(const std::vector<SuiteCheck>& checks, const SuiteOptions& opts);

}  // namespace injgen
