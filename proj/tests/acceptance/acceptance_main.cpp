// Acceptance gate. `acceptance N` checks criterion N and prints one
// PASS/FAIL line; without arguments every criterion runs in order.
// Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dualmark/eval_harness.hpp"
#include "dualmark/parity_core.hpp"

using namespace dualmark;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot(DUALMARK_SOURCE_DIR);

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Env {
  ToolkitConfig config = load_config((kRoot / "data/config.json").string());
  Registry registry = Registry::load((kRoot / "data/registry.json").string());
  std::vector<CorpusFile> corpus = load_corpus((kRoot / "corpus/programs").string());
};

Env& env() {
  static Env e;
  return e;
}

std::string fmt(double v, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

std::string rate(const Rate& r) { return fmt(r.value()) + " (" + std::to_string(r.hits) + "/" + std::to_string(r.total) + ")"; }

Bits nibble(unsigned v, int width) {
  Bits b(width, 0);
  for (int i = 0; i < width; ++i) b[i] = (v >> (width - 1 - i)) & 1U;
  return b;
}

const std::vector<Bits> kTwoBit = {nibble(0, 2), nibble(1, 2), nibble(2, 2), nibble(3, 2)};

// ---- 1 ---------------------------------------------------------------------

// Hamming(7,4) codeword for the data nibble, parity per the usual
// p1 = d1^d2^d4, p2 = d1^d3^d4, p3 = d2^d3^d4 layout after the data bits.
Bits ham_codeword(const Bits& d) {
  return {d[0], d[1], d[2], d[3], static_cast<std::uint8_t>(d[0] ^ d[1] ^ d[3]),
          static_cast<std::uint8_t>(d[0] ^ d[2] ^ d[3]), static_cast<std::uint8_t>(d[1] ^ d[2] ^ d[3])};
}

Verdict codec() {
  int bad = 0;
  const std::map<std::string, std::pair<std::string, std::set<std::string>>> table = {
      {"00", {"0000", {"0001", "0010", "0100", "1000"}}},
      {"01", {"0101", {"0101", "0111", "1101"}}},
      {"10", {"1010", {"1010", "1011", "1110"}}},
      {"11", {"1111", {"1111"}}},
  };
  std::size_t words = 0;
  for (const auto& [m, row] : table) {
    const Bits mb = bits_from_string(m);
    bad += to_string(encode(mb, CodeId::BCH421)) != row.first;
    std::set<std::string> got;
    for (const Bits& w : valid_set(mb, CodeId::BCH421)) got.insert(to_string(w));
    bad += got != row.second;
    for (const auto& w : row.second) {
      ++words;
      const auto d = decode(bits_from_string(w), CodeId::BCH421);
      bad += !d || *d != mb;
    }
  }
  std::size_t invalid = 0;
  for (const char* w : {"0000", "0011", "0110", "1001", "1100"}) {
    invalid += !decode(bits_from_string(w), CodeId::BCH421).has_value();
  }
  bad += invalid != 5;

  // HAM74: a perfect code, so each of the 128 words sits within distance 1
  // of exactly one codeword.
  std::size_t unique = 0, corrected = 0;
  for (unsigned v = 0; v < 128; ++v) {
    const Bits w = nibble(v, 7);
    int owners = 0;
    Bits owner;
    for (unsigned d = 0; d < 16; ++d) {
      const Bits c = ham_codeword(nibble(d, 4));
      int dist = 0;
      for (int i = 0; i < 7; ++i) dist += c[i] != w[i];
      if (dist <= 1) {
        ++owners;
        owner = nibble(d, 4);
      }
    }
    const auto got = decode(w, CodeId::HAM74);
    unique += owners == 1 && got && *got == owner;
  }
  for (unsigned d = 0; d < 16; ++d) {
    const Bits msg = nibble(d, 4);
    const Bits c = encode(msg, CodeId::HAM74);
    bad += c != ham_codeword(msg);
    for (int i = 0; i < 7; ++i) {
      Bits flipped = c;
      flipped[i] ^= 1U;
      const auto got = decode(flipped, CodeId::HAM74);
      corrected += got && *got == msg;
    }
  }
  const bool pass = bad == 0 && words == 11 && unique == 128 && corrected == 112;
  return {pass, "BCH421 w=" + std::to_string(words) + "/11 invalid=" + std::to_string(invalid) +
                    "/5 mismatches=" + std::to_string(bad) + "; HAM74 unique=" + std::to_string(unique) +
                    "/128 corrected=" + std::to_string(corrected) + "/112"};
}

// ---- 2 ---------------------------------------------------------------------

Verdict solver() {
  Rng rng = Rng::derive(env().config.seed, 2);
  std::mt19937_64 gen(env().config.seed);
  std::size_t agree = 0, feasible = 0, members = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t l = 1 + gen() % 4;
    const std::size_t alpha = 1 + gen() % 4;
    const int tau = 1 + static_cast<int>(gen() % alpha);
    ParityCheckMatrix m(l, l * alpha);
    for (auto& row : m.bits)
      for (auto& b : row) b = gen() & 1U;
    Bits c(l);
    for (auto& b : c) b = gen() & 1U;
    const auto groups = consecutive_groups(l, alpha);
    const auto all = enumerate_solutions(m, c, groups, tau);
    const auto r = solve_constrained(m, c, groups, tau, rng);
    if (r.has_value() != !all.empty()) continue;
    ++agree;
    if (!r) continue;
    ++feasible;
    members += std::binary_search(all.begin(), all.end(), *r);
  }
  return {agree == 1000 && members == feasible, "feasibility agreement " + std::to_string(agree) +
                                                    "/1000, solutions in oracle set " + std::to_string(members) +
                                                    "/" + std::to_string(feasible)};
}

// ---- 3 ---------------------------------------------------------------------

Verdict message_accuracy() {
  Rate bch;
  for (const Bits& m : kTwoBit) {
    EvalOptions opt;
    opt.org = "O1";
    opt.message = m;
    opt.seed = env().config.seed;
    const auto res = evaluate(env().corpus, env().registry, env().config, opt);
    bch.hits += res.summary.msg_acc.hits;
    bch.total += res.summary.msg_acc.total;
  }

  ToolkitConfig ham = env().config;
  ham.code = CodeId::HAM74;
  std::vector<CorpusFile> long_files;
  for (const auto& f : env().corpus) {
    if (identify_anchors(parse(f.text, f.path), ham.rules, ham.suffixes).formal.size() >= 21) long_files.push_back(f);
  }
  Rate h;
  std::size_t formal_case1 = 0;
  for (unsigned v = 0; v < 16; ++v) {
    EvalOptions opt;
    opt.org = "O1";
    opt.message = nibble(v, 4);
    opt.seed = env().config.seed;
    const auto res = evaluate(long_files, env().registry, ham, opt);
    h.hits += res.summary.msg_acc.hits;
    h.total += res.summary.msg_acc.total;
    for (const auto& f : res.files) formal_case1 += f.formal_case == CapacityKind::Case1;
  }
  const bool pass = bch.total > 0 && bch.hits == bch.total && h.total > 0 && h.hits == h.total &&
                    formal_case1 == 16 * long_files.size();
  return {pass, "BCH421 MsgAcc " + rate(bch) + "; HAM74 MsgAcc " + rate(h) + " over " +
                    std::to_string(long_files.size()) + " files x 16 messages"};
}

// ---- 4 ---------------------------------------------------------------------

EvalResult plain_eval(const std::string& org, std::vector<AttackSpec> attacks = {}) {
  EvalOptions opt;
  opt.org = org;
  opt.attacks = std::move(attacks);
  opt.seed = env().config.seed;
  return evaluate(env().corpus, env().registry, env().config, opt);
}

Verdict discriminability() {
  const auto s = plain_eval("O1").summary;
  return {s.tpr_combined.value() >= 0.99 && s.fpr_strict.value() <= 0.01,
          "TPR " + rate(s.tpr_combined) + ", strict FPR " + rate(s.fpr_strict) + ", combined FPR " +
              rate(s.fpr_combined)};
}

// ---- 5 ---------------------------------------------------------------------

Verdict fidelity() {
  std::map<std::string, std::string> clean;
  for (const auto& f : env().corpus) clean[f.name] = f.text;
  const std::string tests = (kRoot / "corpus/tests").string();
  TestOutcomes before;
  try {
    before = run_python_tests(clean, tests);
  } catch (const PythonUnavailable& e) {
    return {false, std::string("python3 unavailable: ") + e.what()};
  }
  std::size_t baseline = 0, regressions = 0, checked = 0;
  for (const auto& [stem, cases] : before)
    for (const auto& [name, ok] : cases) baseline += ok;
  for (const auto& org : env().registry.orgs()) {
    const auto res = plain_eval(org.id);
    std::map<std::string, std::string> marked;
    for (const auto& f : res.files)
      if (f.embedded) marked[f.name] = f.watermarked_text;
    const auto after = run_python_tests(marked, tests);
    for (const auto& [stem, cases] : after) {
      for (const auto& [name, ok] : cases) {
        if (!before[stem][name]) continue;
        ++checked;
        regressions += !ok;
      }
    }
  }
  return {baseline > 0 && regressions == 0 && checked > 0,
          std::to_string(baseline) + " clean passes; " + std::to_string(checked - regressions) + "/" +
              std::to_string(checked) + " still pass after watermarking under " +
              std::to_string(env().registry.orgs().size()) + " orgs"};
}

// ---- 6 ---------------------------------------------------------------------

Verdict robustness() {
  const Rate rename = plain_eval("O1", {{AttackKind::VariableRename, 1.0, 0}}).summary.tpr_combined;
  const Rate refactor = plain_eval("O1", {{AttackKind::Refactor, 0.3, 0}}).summary.tpr_combined;
  const auto base = plain_eval("O1");
  std::size_t same = 0, total = 0;
  for (double intensity : {0.1, 0.5, 1.0}) {
    const auto res = plain_eval("O1", {{AttackKind::Reformat, intensity, 0}});
    for (std::size_t i = 0; i < res.files.size(); ++i) {
      const auto& a = base.files[i];
      const auto& b = res.files[i];
      ++total;
      same += a.formal_detected == b.formal_detected && a.natural_detected == b.natural_detected &&
              a.combined == b.combined && a.strict == b.strict;
    }
  }
  return {rename.value() >= 0.95 && refactor.value() >= 0.90 && same == total,
          "rename:1.0 TPR " + rate(rename) + ", refactor:0.3 TPR " + rate(refactor) + ", reformat identical " +
              std::to_string(same) + "/" + std::to_string(total)};
}

// ---- 7 ---------------------------------------------------------------------

Verdict cross_org_exclusivity() {
  const auto cells = cross_org(env().corpus, env().registry, env().config, env().config.seed);
  double worst = 1;
  std::string detail;
  for (const auto& c : cells) {
    worst = std::min(worst, c.not_attributed.value());
    detail += (detail.empty() ? "" : ", ") + c.owner + "->" + c.other + " " + fmt(c.not_attributed.value());
  }
  return {env().registry.orgs().size() == 3 && cells.size() == 6 && worst >= 0.93, "min " + fmt(worst) + " [" + detail + "]"};
}

// ---- 8 ---------------------------------------------------------------------

Verdict indistinguishability_props() {
  std::ifstream in(kRoot / "data/reference_template.py");
  std::stringstream ss;
  ss << in.rdbuf();
  const auto tmpl = parse(ss.str(), "reference_template.py");
  Rng rng = Rng::derive(env().config.seed, 8);
  const auto res = indistinguishability(tmpl, kTwoBit, 100, env().registry.at("O1"), env().config, rng);
  const double span = res.max_similarity - res.min_similarity;
  const bool a = res.mean_jsd <= 0.15, b = res.mi_sum_bits < 1.0, c = span >= 0.3;
  return {a && b && c, std::string("(a) mean JSD ") + fmt(res.mean_jsd) + (a ? " ok" : " FAIL") + " (max " +
                           fmt(res.max_jsd) + "); (b) summed MI " + fmt(res.mi_sum_bits) + " bits" +
                           (b ? " ok" : " FAIL") + "; (c) similarity " + fmt(res.min_similarity, 3) + ".." +
                           fmt(res.max_similarity, 3) + " span " + fmt(span, 3) + (c ? " ok" : " FAIL") + "; " +
                           std::to_string(res.anchors) + " anchors"};
}

// ---- 9 ---------------------------------------------------------------------

Verdict overhead() {
  // The corpus file closest to 50 lines.
  const CorpusFile* pick = nullptr;
  long best = 1L << 30;
  for (const auto& f : env().corpus) {
    const long lines = std::count(f.text.begin(), f.text.end(), '\n');
    if (std::labs(lines - 50) < best) {
      best = std::labs(lines - 50);
      pick = &f;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  Rng rng = Rng::derive(env().config.seed, 9);
  const auto program = parse(pick->text, pick->path);
  const auto ins = insert(program, kTwoBit[2], env().registry.at("O1"), env().config, rng);
  const auto rep = extract(parse(ins.program.text, pick->path), env().registry, env().config);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const long lines = std::count(pick->text.begin(), pick->text.end(), '\n');
  return {secs < 1.0 && rep.combined, pick->name + " (" + std::to_string(lines) + " lines) embed+detect " +
                                          fmt(secs * 1000, 2) + " ms, detected=" + (rep.combined ? "yes" : "no")};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Verdict()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "codec exactness", 1, codec},
    {2, "solver-oracle equivalence", 30, solver},
    {3, "round-trip message accuracy", 300, message_accuracy},
    {4, "discriminability", 120, discriminability},
    {5, "fidelity", 300, fidelity},
    {6, "robustness", 300, robustness},
    {7, "cross-org exclusivity", 300, cross_org_exclusivity},
    {8, "indistinguishability", 120, indistinguishability_props},
    {9, "overhead", 1, overhead},
};

bool run_one(const Criterion& c) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    v = c.run();
  } catch (const std::exception& e) {
    v = {false, std::string("error: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < c.budget_s;
  const bool pass = v.pass && in_time;
  std::printf("%s %d %s: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
              in_time ? "" : " over budget");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    failed += !run_one(c);
  }
  return failed;
}
