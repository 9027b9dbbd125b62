#include "injgen/registry.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <memory>

#include <openssl/evp.h>

namespace injgen {

namespace fs = std::filesystem;

namespace {

std::string sha256_hex(const std::string& data) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace

Json strip_provenance(const Json& j) {
  Json out = j;
  if (out.is_object()) out.erase(kProvenanceKey);
  return out;
}

std::string canonical_dump(const Json& j) {
  return j.dump();
}

std::string content_hash(const Json& j) {
  return sha256_hex(canonical_dump(strip_provenance(j)));
}

Json make_provenance(const std::string& construction, const Json& inputs, const Json& parameters) {
  return {{"construction", construction}, {"inputs", inputs}, {"parameters", parameters}};
}

Registry::Registry(fs::path root) : root_(std::move(root)) {
  fs::create_directories(root_ / "objects");
  load();
}

void Registry::load() {
  entries_.clear();
  fs::path index = root_ / "index.json";
  if (!fs::exists(index)) return;
  Json j = read_json_file(index);
  try {
    for (const auto& [hash, e] : j.at("objects").items()) {
      RegistryEntry entry{hash, e.at("path").get<std::string>(), e.at("kind").get<std::string>(),
                          e.value("label", ""), {}};
      for (const auto& p : e.at("provenance")) entry.provenance.push_back(p);
      entries_.push_back(std::move(entry));
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed registry index: ") + e.what());
  }
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) { return a.hash < b.hash; });
}

void Registry::save() const {
  Json objects = Json::object();
  for (const auto& e : entries_)
    objects[e.hash] = {{"path", e.path}, {"kind", e.kind}, {"label", e.label}, {"provenance", e.provenance}};
  fs::path tmp = root_ / "index.json.tmp";
  write_json_file(tmp, {{"objects", objects}});
  fs::rename(tmp, root_ / "index.json");
}

std::string Registry::put(const Json& object, const std::string& label) {
  Json body = strip_provenance(object);
  std::string kind = object_kind_name(object_kind(body));
  std::string hash = content_hash(body);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), hash,
                             [](const RegistryEntry& e, const std::string& h) { return e.hash < h; });
  if (it == entries_.end() || it->hash != hash) {
    std::string rel = "objects/" + hash + ".json";
    write_json_file(root_ / rel, body);
    it = entries_.insert(it, RegistryEntry{hash, rel, kind, label, {}});
  }
  if (it->label.empty()) it->label = label;
  if (object.is_object() && object.contains(kProvenanceKey)) {
    const Json& p = object.at(kProvenanceKey);
    if (std::find(it->provenance.begin(), it->provenance.end(), p) == it->provenance.end())
      it->provenance.push_back(p);
  }
  save();
  return hash;
}

bool Registry::contains(const std::string& hash) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), hash,
                             [](const RegistryEntry& e, const std::string& h) { return e.hash < h; });
  return it != entries_.end() && it->hash == hash;
}

const RegistryEntry& Registry::entry(const std::string& hash) const {
  for (const auto& e : entries_)
    if (e.hash == hash) return e;
  throw InputError("unregistered object " + hash);
}

Json Registry::get(const std::string& hash) const {
  return read_json_file(root_ / entry(hash).path);
}

std::vector<std::string> Registry::hashes() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.hash);
  return out;
}

std::string Registry::resolve(const std::string& ref) const {
  std::vector<std::string> hits;
  for (const auto& e : entries_)
    if (e.hash.rfind(ref, 0) == 0 || (!ref.empty() && e.label == ref)) hits.push_back(e.hash);
  if (hits.size() == 1) return hits[0];
  if (hits.empty()) throw InputError("no registered object matches " + ref);
  throw InputError("ambiguous reference " + ref);
}

std::vector<std::string> Registry::derived_from(const std::string& hash, const std::string& construction) const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    for (const auto& p : e.provenance) {
      if (p.value("construction", "") != construction) continue;
      bool uses = false;
      for (const auto& [role, h] : p.at("inputs").items()) uses = uses || h == hash;
      if (uses) {
        out.push_back(e.hash);
        break;
      }
    }
  return out;
}

std::vector<std::string> Registry::consistency_problems() const {
  std::vector<std::string> problems;
  for (const auto& e : entries_) {
    fs::path p = root_ / e.path;
    if (!fs::exists(p)) {
      problems.push_back("missing file for " + e.hash);
      continue;
    }
    if (content_hash(read_json_file(p)) != e.hash) problems.push_back("hash mismatch for " + e.hash);
  }
  for (const auto& file : fs::directory_iterator(root_ / "objects")) {
    std::string stem = file.path().stem().string();
    if (!contains(stem)) problems.push_back("unindexed file " + file.path().filename().string());
  }
  return problems;
}

}  // namespace injgen
