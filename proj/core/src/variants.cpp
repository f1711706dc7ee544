#include <cctype>

#include "dualmark/transform_rules.hpp"

namespace dualmark {

bool VariantSet::has(Variant v) const {
  switch (v) {
    case Variant::Suffix:
      return suffix;
    case Variant::Underline:
      return underline;
    case Variant::InitialCapitalization:
      return capital;
  }
  return false;
}

void VariantSet::set(Variant v, bool on) {
  switch (v) {
    case Variant::Suffix:
      suffix = on;
      break;
    case Variant::Underline:
      underline = on;
      break;
    case Variant::InitialCapitalization:
      capital = on;
      break;
  }
}

const SuffixTable& default_suffix_table() {
  static const SuffixTable table = {"_val", "_obj", "_item", "_tmp"};
  return table;
}

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

const std::string& suffix_for(std::string_view canonical, const SuffixTable& table) {
  if (table.empty()) throw std::invalid_argument("empty suffix table");
  return table[name_hash(canonical) % table.size()];
}

std::string apply_variants(std::string_view canonical, VariantSet variants, const SuffixTable& table,
                           const std::set<std::string>* taken) {
  std::string out(canonical);
  if (variants.suffix) out += suffix_for(canonical, table);
  if (variants.underline) out += "_";
  if (variants.capital && !out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  if (taken != nullptr && out != canonical && taken->count(out) > 0) throw CollisionError(out);
  return out;
}

Stripped strip_variants(std::string_view identifier, const SuffixTable& table) {
  Stripped r{std::string(identifier), {}};
  std::string& s = r.canonical;
  if (!s.empty() && std::isupper(static_cast<unsigned char>(s[0]))) {
    s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
    r.variants.capital = true;
  }
  if (s.size() > 1 && s.back() == '_') {
    s.pop_back();
    r.variants.underline = true;
  }
  for (const std::string& suffix : table) {
    if (s.size() <= suffix.size() || s.compare(s.size() - suffix.size(), suffix.size(), suffix) != 0) {
      continue;
    }
    const std::string_view stem(s.data(), s.size() - suffix.size());
    if (suffix_for(stem, table) == suffix) {
      s.resize(stem.size());
      r.variants.suffix = true;
      break;
    }
  }
  return r;
}

}  // namespace dualmark
