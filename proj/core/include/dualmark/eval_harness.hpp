#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualmark/watermark_engine.hpp"

namespace dualmark {

// ---- attacks ---------------------------------------------------------------

enum class AttackKind { VariableRename, Refactor, Reformat, Rewrite };

const char* attack_name(AttackKind kind);

struct AttackSpec {
  AttackKind kind = AttackKind::Reformat;
  double intensity = 0.0;
  std::uint64_t seed = 0;
};

/// "rename:1.0", "refactor:0.3", "reformat:0.5". Throws std::invalid_argument.
AttackSpec parse_attack(const std::string& text);

class UnsupportedAttack : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// VariableRename renames each function-local variable to a fresh random name
/// with probability `intensity`; Refactor toggles each formal anchor with that
/// probability; Reformat re-renders with perturbed whitespace and blank lines
/// while keeping the tree identical. Intensity 0 returns the input unchanged.
/// Rewrite is reserved for an external tool and throws UnsupportedAttack.
SubjectProgram attack(const SubjectProgram& program, const AttackSpec& spec, Rng& rng,
                      const ToolkitConfig& config = {});

// ---- corpus evaluation -----------------------------------------------------

struct CorpusFile {
  std::string name;  // file stem
  std::string path;
  std::string text;
};

class EmptyCorpus : public std::runtime_error {
 public:
  EmptyCorpus() : std::runtime_error("corpus contains no programs") {}
};

/// Every *.py file directly in `dir` except *_test.py and conftest.py,
/// sorted by name.
std::vector<CorpusFile> load_corpus(const std::string& dir);

struct FileResult {
  std::string name;
  std::string error;  // parse failure; the file is then excluded from every rate
  Bits message;
  std::size_t formal_anchors = 0;
  std::size_t natural_anchors = 0;
  CapacityKind formal_case = CapacityKind::Unwatermarkable;  // as embedded
  CapacityKind natural_case = CapacityKind::Unwatermarkable;
  bool embedded = false;
  bool clean_combined = false;
  bool clean_strict = false;
  bool formal_detected = false;  // after the attack, if any
  bool natural_detected = false;
  bool combined = false;
  bool strict = false;
  int msg_checks = 0;  // Case1 channels embedded
  int msg_hits = 0;    // ... whose recovered message matched
  std::string watermarked_text;
};

struct Rate {
  std::size_t hits = 0;
  std::size_t total = 0;
  double value() const { return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total); }
};

struct EvalSummary {
  Rate tpr_combined, tpr_strict, tpr_formal, tpr_natural;
  Rate fpr_combined, fpr_strict;
  Rate msg_acc;
  std::size_t files = 0;
  std::size_t unwatermarkable = 0;
  std::size_t errors = 0;
};

struct EvalOptions {
  std::string org;                  // embedding and detecting org
  std::vector<AttackSpec> attacks;  // applied in order to each watermarked file
  std::optional<Bits> message;      // fixed message; otherwise drawn per file
  std::uint64_t seed = 0;
};

struct EvalResult {
  std::vector<FileResult> files;
  EvalSummary summary;
};

/// Embeds, optionally attacks, and detects every file under one org; clean
/// files are checked for false positives under the same org. Per-file
/// randomness derives from (seed, file index). Throws EmptyCorpus.
EvalResult evaluate(const std::vector<CorpusFile>& corpus, const Registry& registry, const ToolkitConfig& config,
                    const EvalOptions& options);

std::string eval_csv(const EvalResult& result);
std::string eval_summary_json(const EvalResult& result, const EvalOptions& options);

/// Fraction of files watermarked by `owner` that are not attributed to
/// `other` (strict = other absent from the attribution set).
struct CrossOrgCell {
  std::string owner;
  std::string other;
  Rate not_attributed;
};

std::vector<CrossOrgCell> cross_org(const std::vector<CorpusFile>& corpus, const Registry& registry,
                                    const ToolkitConfig& config, std::uint64_t seed);

// ---- indistinguishability --------------------------------------------------

struct IndistResult {
  std::vector<Bits> messages;
  std::size_t anchors = 0;                     // anchors carrying the watermark
  std::vector<std::vector<double>> frequency;  // [message][anchor] activation rate
  std::vector<std::vector<double>> jsd;        // [pair][anchor], nats
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double mean_jsd = 0;
  double max_jsd = 0;
  /// Per anchor: state-vs-message MI for each message pair (uniform pair
  /// prior) averaged over pairs, in bits. For two equiprobable messages this
  /// equals the JSD.
  std::vector<double> mi_bits;
  double mi_sum_bits = 0;
  /// Per anchor MI against the full uniform message distribution, in bits.
  std::vector<double> mi_full_bits;
  /// [message] -> repetitions x repetitions Hamming similarity.
  std::vector<std::vector<std::vector<double>>> similarity;
  double min_similarity = 1;
  double max_similarity = 0;
};

double jsd_bernoulli(double p, double q);  // nats
double entropy_bits(const std::vector<double>& dist);

/// Embeds each message `repetitions` times into the formal channel of the
/// template. Throws InsufficientAnchors unless the template is Case1.
IndistResult indistinguishability(const SubjectProgram& tmpl, const std::vector<Bits>& messages,
                                  std::size_t repetitions, const OrganizationProfile& org,
                                  const ToolkitConfig& config, Rng& rng);

std::string similarity_csv(const std::vector<std::vector<double>>& matrix);
std::string frequency_csv(const IndistResult& result);

// ---- behavioral fidelity ---------------------------------------------------

/// stem -> test name -> passed
using TestOutcomes = std::map<std::string, std::map<std::string, bool>>;

class PythonUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Imports each program (keyed by module stem) from a scratch directory and
/// runs every test_* function of tests_dir/<stem>_test.py in one python3
/// process. Throws PythonUnavailable when the interpreter cannot be run.
TestOutcomes run_python_tests(const std::map<std::string, std::string>& programs, const std::string& tests_dir,
                              const std::string& python = "python3");

}  // namespace dualmark
