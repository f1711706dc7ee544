#include "dualmark/eval_harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "names.hpp"

namespace dualmark {

namespace fs = std::filesystem;

const char* attack_name(AttackKind kind) {
  switch (kind) {
    case AttackKind::VariableRename:
      return "rename";
    case AttackKind::Refactor:
      return "refactor";
    case AttackKind::Reformat:
      return "reformat";
    case AttackKind::Rewrite:
      return "rewrite";
  }
  return "?";
}

AttackSpec parse_attack(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  AttackSpec spec;
  if (kind == "rename") {
    spec.kind = AttackKind::VariableRename;
  } else if (kind == "refactor") {
    spec.kind = AttackKind::Refactor;
  } else if (kind == "reformat") {
    spec.kind = AttackKind::Reformat;
  } else if (kind == "rewrite") {
    spec.kind = AttackKind::Rewrite;
  } else {
    throw std::invalid_argument("unknown attack '" + kind + "' (rename, refactor, reformat)");
  }
  spec.intensity = 1.0;
  if (colon != std::string::npos) {
    std::size_t used = 0;
    const std::string num = text.substr(colon + 1);
    try {
      spec.intensity = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != num.size() || num.empty()) throw std::invalid_argument("bad attack intensity '" + num + "'");
  }
  if (spec.intensity < 0.0 || spec.intensity > 1.0) throw std::invalid_argument("attack intensity must lie in [0, 1]");
  return spec;
}

namespace {

std::string fresh_name(Rng& rng, const std::set<std::string>& taken) {
  static constexpr std::string_view kAlpha = "abcdefghijklmnopqrstuvwxyz";
  static constexpr std::string_view kAlnum = "abcdefghijklmnopqrstuvwxyz0123456789";
  for (;;) {
    std::string s(1, kAlpha[rng.below(kAlpha.size())]);
    for (int i = 0; i < 7; ++i) s.push_back(kAlnum[rng.below(kAlnum.size())]);
    if (taken.count(s) == 0 && !py::is_keyword(s) && !detail::is_reserved(s)) return s;
  }
}

SubjectProgram rename_attack(const SubjectProgram& p, double intensity, Rng& rng) {
  py::Module tree = p.tree;
  std::set<std::string> taken = identifier_universe(tree);
  bool changed = false;
  for (const std::string& name : local_variables(p.tree)) {
    if (!rng.chance(intensity)) continue;
    const std::string to = fresh_name(rng, taken);
    taken.insert(to);
    rename_variable(tree, name, to);
    changed = true;
  }
  return changed ? rebuild(tree, p.path) : p;
}

SubjectProgram refactor_attack(const SubjectProgram& p, double intensity, Rng& rng, const ToolkitConfig& config) {
  const AnchorIndex index = identify_anchors(p.tree, config.rules, config.suffixes);
  std::vector<int> states(index.formal.size(), -1);
  bool changed = false;
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (rng.chance(intensity)) {
      states[k] = 1 - index.formal[k].state;
      changed = true;
    }
  }
  if (!changed) return p;
  py::Module tree = p.tree;
  apply_formal_states(tree, index, states, config.rules);
  return rebuild(tree, p.path);
}

SubjectProgram reformat_attack(const SubjectProgram& p, double intensity, Rng& rng) {
  static const std::array<std::string, 4> kIndents = {"  ", "   ", "\t", "        "};
  py::RenderStyle style;
  if (rng.chance(intensity)) style.indent = kIndents[rng.below(kIndents.size())];
  if (rng.chance(intensity)) style.operator_pad = "";
  if (rng.chance(intensity)) style.comma_pad = "";
  if (rng.chance(intensity)) style.keep_blank_lines = false;
  std::string text = py::render_module(p.tree, style);
  try {
    SubjectProgram base = parse(text, p.path);
    if (!py::structurally_equal(base.tree, p.tree)) {
      text = render(p);
      base = parse(text, p.path);
    }
    // Blank lines and trailing spaces sprinkled between lines; rejected if
    // they land inside a multi-line string.
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
      out += line;
      if (rng.chance(intensity * 0.2)) out += "  ";
      out += '\n';
      if (rng.chance(intensity * 0.3)) out += '\n';
    }
    SubjectProgram noisy = parse(out, p.path);
    if (py::structurally_equal(noisy.tree, p.tree)) return noisy;
    return base;
  } catch (const py::ParseError&) {
    return p;
  }
}

}  // namespace

SubjectProgram attack(const SubjectProgram& program, const AttackSpec& spec, Rng& rng, const ToolkitConfig& config) {
  if (spec.kind == AttackKind::Rewrite) {
    throw UnsupportedAttack("the rewrite attack needs an external rewriting tool and is not built in");
  }
  if (spec.intensity <= 0.0) return program;
  switch (spec.kind) {
    case AttackKind::VariableRename:
      return rename_attack(program, spec.intensity, rng);
    case AttackKind::Refactor:
      return refactor_attack(program, spec.intensity, rng, config);
    case AttackKind::Reformat:
      return reformat_attack(program, spec.intensity, rng);
    case AttackKind::Rewrite:
      break;
  }
  return program;
}

// ---- corpus evaluation -----------------------------------------------------

std::vector<CorpusFile> load_corpus(const std::string& dir) {
  std::vector<CorpusFile> out;
  if (!fs::is_directory(dir)) throw std::runtime_error("not a directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".py") continue;
    const std::string stem = entry.path().stem().string();
    if (stem == "conftest" || (stem.size() > 5 && stem.ends_with("_test"))) continue;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    out.push_back(CorpusFile{stem, entry.path().string(), ss.str()});
  }
  std::sort(out.begin(), out.end(), [](const CorpusFile& a, const CorpusFile& b) { return a.name < b.name; });
  return out;
}

namespace {

Bits random_message(Rng& rng, int k) {
  Bits m(static_cast<std::size_t>(k));
  for (auto& b : m) b = static_cast<std::uint8_t>(rng.below(2));
  return m;
}

void count(Rate& r, bool hit) {
  ++r.total;
  if (hit) ++r.hits;
}

}  // namespace

EvalResult evaluate(const std::vector<CorpusFile>& corpus, const Registry& registry, const ToolkitConfig& config,
                    const EvalOptions& options) {
  if (corpus.empty()) throw EmptyCorpus();
  const OrganizationProfile& org = registry.at(options.org);
  const ExtractOptions only_org{{org.id}, false};
  const int k = code_params(config.code).k;
  if (options.message && options.message->size() != static_cast<std::size_t>(k)) {
    throw LengthMismatch(static_cast<std::size_t>(k), options.message->size());
  }

  EvalResult result;
  EvalSummary& s = result.summary;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    FileResult fr;
    fr.name = corpus[i].name;
    Rng rng = Rng::derive(options.seed, i);
    SubjectProgram program;
    try {
      program = parse(corpus[i].text, corpus[i].path);
    } catch (const py::ParseError& e) {
      fr.error = e.what();
      ++s.errors;
      result.files.push_back(std::move(fr));
      continue;
    }
    ++s.files;
    const WatermarkReport clean = extract(program, registry, config, only_org);
    fr.clean_combined = clean.combined;
    fr.clean_strict = clean.strict;
    count(s.fpr_combined, clean.combined);
    count(s.fpr_strict, clean.strict);

    fr.message = options.message ? *options.message : random_message(rng, k);
    InsertResult ins = insert(program, fr.message, org, config, rng);
    fr.formal_anchors = ins.report.formal.anchors;
    fr.natural_anchors = ins.report.natural.anchors;
    fr.formal_case = ins.report.formal.detected ? ins.report.formal.capacity.kind : CapacityKind::Unwatermarkable;
    fr.natural_case = ins.report.natural.detected ? ins.report.natural.capacity.kind : CapacityKind::Unwatermarkable;
    fr.embedded = ins.report.combined;
    if (!fr.embedded) {
      ++s.unwatermarkable;
      result.files.push_back(std::move(fr));
      continue;
    }

    SubjectProgram marked = std::move(ins.program);
    for (std::size_t a = 0; a < options.attacks.size(); ++a) {
      const AttackSpec& spec = options.attacks[a];
      Rng arng = Rng::derive(Rng::mix(options.seed ^ spec.seed) + a, i);
      marked = attack(marked, spec, arng, config);
    }
    fr.watermarked_text = marked.text;
    const WatermarkReport det = extract(marked, registry, config, only_org);
    fr.formal_detected = det.formal.detected;
    fr.natural_detected = det.natural.detected;
    fr.combined = det.combined;
    fr.strict = det.strict;
    count(s.tpr_combined, det.combined);
    count(s.tpr_strict, det.strict);
    if (ins.report.formal.detected) count(s.tpr_formal, det.formal.detected);
    if (ins.report.natural.detected) count(s.tpr_natural, det.natural.detected);
    for (Channel ch : {Channel::Formal, Channel::Natural}) {
      const ChannelReport& embedded = ins.report.channel(ch);
      if (!embedded.detected || embedded.capacity.kind != CapacityKind::Case1) continue;
      ++fr.msg_checks;
      const ChannelReport& found = det.channel(ch);
      const bool hit = found.detected && found.m && *found.m == fr.message;
      if (hit) ++fr.msg_hits;
      count(s.msg_acc, hit);
    }
    result.files.push_back(std::move(fr));
  }
  return result;
}

std::string eval_csv(const EvalResult& result) {
  std::ostringstream os;
  os << "file,message,formal_anchors,natural_anchors,formal_case,natural_case,embedded,clean_combined,clean_strict,"
        "formal_detected,natural_detected,combined,strict,msg_checks,msg_hits,error\n";
  for (const FileResult& f : result.files) {
    std::string err = f.error;
    std::replace(err.begin(), err.end(), ',', ';');
    std::replace(err.begin(), err.end(), '\n', ' ');
    os << f.name << ',' << to_string(f.message) << ',' << f.formal_anchors << ',' << f.natural_anchors << ','
       << capacity_name(f.formal_case) << ',' << capacity_name(f.natural_case) << ',' << int{f.embedded} << ','
       << int{f.clean_combined} << ',' << int{f.clean_strict} << ',' << int{f.formal_detected} << ','
       << int{f.natural_detected} << ',' << int{f.combined} << ',' << int{f.strict} << ',' << f.msg_checks << ','
       << f.msg_hits << ',' << err << '\n';
  }
  return os.str();
}

std::string eval_summary_json(const EvalResult& result, const EvalOptions& options) {
  const EvalSummary& s = result.summary;
  auto rate = [](const Rate& r) { return nlohmann::json{{"value", r.value()}, {"hits", r.hits}, {"total", r.total}}; };
  nlohmann::json attacks = nlohmann::json::array();
  for (const AttackSpec& a : options.attacks) attacks.push_back({{"kind", attack_name(a.kind)}, {"intensity", a.intensity}});
  nlohmann::json j = {{"schema", 1},
                      {"org", options.org},
                      {"seed", options.seed},
                      {"attacks", attacks},
                      {"files", s.files},
                      {"errors", s.errors},
                      {"unwatermarkable", s.unwatermarkable},
                      {"tpr_combined", rate(s.tpr_combined)},
                      {"tpr_strict", rate(s.tpr_strict)},
                      {"tpr_formal", rate(s.tpr_formal)},
                      {"tpr_natural", rate(s.tpr_natural)},
                      {"fpr_combined", rate(s.fpr_combined)},
                      {"fpr_strict", rate(s.fpr_strict)},
                      {"msg_acc", rate(s.msg_acc)}};
  return j.dump(2);
}

std::vector<CrossOrgCell> cross_org(const std::vector<CorpusFile>& corpus, const Registry& registry,
                                    const ToolkitConfig& config, std::uint64_t seed) {
  if (corpus.empty()) throw EmptyCorpus();
  std::vector<CrossOrgCell> cells;
  const auto& orgs = registry.orgs();
  for (const auto& owner : orgs) {
    for (const auto& other : orgs) {
      if (other.id != owner.id) cells.push_back(CrossOrgCell{owner.id, other.id, {}});
    }
  }
  const int k = code_params(config.code).k;
  for (std::size_t o = 0; o < orgs.size(); ++o) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      SubjectProgram program;
      try {
        program = parse(corpus[i].text, corpus[i].path);
      } catch (const py::ParseError&) {
        continue;
      }
      Rng rng = Rng::derive(seed + o, i);
      const InsertResult ins = insert(program, random_message(rng, k), orgs[o], config, rng);
      if (!ins.report.combined) continue;
      const WatermarkReport det = extract(ins.program, registry, config);
      for (CrossOrgCell& cell : cells) {
        if (cell.owner != orgs[o].id) continue;
        const bool named =
            std::find(det.attribution.begin(), det.attribution.end(), cell.other) != det.attribution.end();
        count(cell.not_attributed, !named);
      }
    }
  }
  return cells;
}

// ---- indistinguishability --------------------------------------------------

namespace {

double h_nats(double p) {
  double h = 0;
  if (p > 0) h -= p * std::log(p);
  if (p < 1) h -= (1 - p) * std::log(1 - p);
  return h;
}

}  // namespace

double jsd_bernoulli(double p, double q) {
  const double m = (p + q) / 2;
  return std::max(0.0, h_nats(m) - (h_nats(p) + h_nats(q)) / 2);
}

double entropy_bits(const std::vector<double>& dist) {
  double h = 0;
  for (double p : dist) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

IndistResult indistinguishability(const SubjectProgram& tmpl, const std::vector<Bits>& messages,
                                  std::size_t repetitions, const OrganizationProfile& org,
                                  const ToolkitConfig& config, Rng& rng) {
  const AnchorIndex base = identify_anchors(tmpl.tree, config.rules, config.suffixes);
  const CodeParams code = code_params(config.code);
  const CapacityCase cap = estimate_capacity(base.formal.size(), code, config.alpha, config.tau, org.fixed_code.size());
  if (cap.kind != CapacityKind::Case1) {
    throw InsufficientAnchors(Channel::Formal, base.formal.size(),
                              static_cast<std::size_t>(config.alpha) * static_cast<std::size_t>(code.l));
  }
  IndistResult out;
  out.messages = messages;
  const std::size_t L = cap.used();
  out.anchors = L;

  std::vector<std::vector<Bits>> samples(messages.size());
  for (std::size_t mi = 0; mi < messages.size(); ++mi) {
    std::vector<double> freq(L, 0.0);
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      const InsertResult ins = insert(tmpl, messages[mi], org, config, rng);
      const AnchorIndex after = identify_anchors(ins.program.tree, config.rules, config.suffixes);
      Bits r(L);
      for (std::size_t a = 0; a < L; ++a) {
        r[a] = static_cast<std::uint8_t>(after.formal[a].state);
        freq[a] += r[a];
      }
      samples[mi].push_back(std::move(r));
    }
    for (double& f : freq) f /= static_cast<double>(std::max<std::size_t>(repetitions, 1));
    out.frequency.push_back(std::move(freq));
  }

  out.mi_bits.assign(L, 0.0);
  double total = 0;
  std::size_t cells = 0;
  for (std::size_t a = 0; a < messages.size(); ++a) {
    for (std::size_t b = a + 1; b < messages.size(); ++b) {
      out.pairs.emplace_back(a, b);
      std::vector<double> row(L);
      for (std::size_t j = 0; j < L; ++j) {
        row[j] = jsd_bernoulli(out.frequency[a][j], out.frequency[b][j]);
        total += row[j];
        ++cells;
        out.max_jsd = std::max(out.max_jsd, row[j]);
        out.mi_bits[j] += row[j] / std::log(2.0);
      }
      out.jsd.push_back(std::move(row));
    }
  }
  out.mean_jsd = cells ? total / static_cast<double>(cells) : 0.0;
  for (double& v : out.mi_bits) {
    if (!out.pairs.empty()) v /= static_cast<double>(out.pairs.size());
    out.mi_sum_bits += v;
  }

  out.mi_full_bits.assign(L, 0.0);
  for (std::size_t j = 0; j < L && !messages.empty(); ++j) {
    double mean = 0, cond = 0;
    for (const auto& f : out.frequency) {
      mean += f[j];
      cond += entropy_bits({f[j], 1 - f[j]});
    }
    mean /= static_cast<double>(messages.size());
    cond /= static_cast<double>(messages.size());
    out.mi_full_bits[j] = std::max(0.0, entropy_bits({mean, 1 - mean}) - cond);
  }

  for (const auto& group : samples) {
    std::vector<std::vector<double>> sim(group.size(), std::vector<double>(group.size(), 1.0));
    for (std::size_t x = 0; x < group.size(); ++x) {
      for (std::size_t y = x + 1; y < group.size(); ++y) {
        std::size_t same = 0;
        for (std::size_t j = 0; j < L; ++j) same += group[x][j] == group[y][j];
        const double v = L ? static_cast<double>(same) / static_cast<double>(L) : 1.0;
        sim[x][y] = sim[y][x] = v;
        out.min_similarity = std::min(out.min_similarity, v);
        out.max_similarity = std::max(out.max_similarity, v);
      }
    }
    out.similarity.push_back(std::move(sim));
  }
  return out;
}

std::string similarity_csv(const std::vector<std::vector<double>>& matrix) {
  std::ostringstream os;
  os.precision(4);
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << '\n';
  }
  return os.str();
}

std::string frequency_csv(const IndistResult& r) {
  std::ostringstream os;
  os.precision(4);
  os << "message";
  for (std::size_t j = 0; j < r.anchors; ++j) os << ",a" << j + 1;
  os << '\n';
  for (std::size_t m = 0; m < r.frequency.size(); ++m) {
    os << to_string(r.messages[m]);
    for (double f : r.frequency[m]) os << ',' << f;
    os << '\n';
  }
  return os.str();
}

// ---- behavioral fidelity ---------------------------------------------------

namespace {

constexpr const char* kRunner = R"PY(import json, os, signal, sys
sys.dont_write_bytecode = True
prog_dir, tests_dir = sys.argv[1], sys.argv[2]
sys.path.insert(0, prog_dir)

def on_alarm(signum, frame):
    raise TimeoutError("test timed out")

signal.signal(signal.SIGALRM, on_alarm)
out = {}
for stem in sys.argv[3:]:
    results = {}
    path = os.path.join(tests_dir, stem + "_test.py")
    if os.path.exists(path):
        sys.modules.pop(stem, None)
        ns = {"__name__": stem + "_test"}
        try:
            signal.alarm(10)
            with open(path) as fh:
                exec(compile(fh.read(), path, "exec"), ns)
        except BaseException:
            results["<import>"] = False
        finally:
            signal.alarm(0)
        for name in sorted(ns):
            if name.startswith("test_") and callable(ns[name]):
                try:
                    signal.alarm(5)
                    ns[name]()
                    results[name] = True
                except BaseException:
                    results[name] = False
                finally:
                    signal.alarm(0)
    out[stem] = results
print(json.dumps(out, sort_keys=True))
)PY";

}  // namespace

TestOutcomes run_python_tests(const std::map<std::string, std::string>& programs, const std::string& tests_dir,
                              const std::string& python) {
  static std::uint64_t counter = 0;
  const fs::path dir = fs::temp_directory_path() /
                       ("dualmark-" + std::to_string(::getpid()) + "-" + std::to_string(++counter));
  fs::create_directories(dir / "programs");
  {
    std::ofstream(dir / "runner.py") << kRunner;
  }
  std::string stems;
  for (const auto& [stem, text] : programs) {
    std::ofstream(dir / "programs" / (stem + ".py")) << text;
    stems += " '" + stem + "'";
  }
  const std::string cmd = python + " '" + (dir / "runner.py").string() + "' '" + (dir / "programs").string() + "' '" +
                          fs::absolute(tests_dir).string() + "'" + stems + " 2>/dev/null";
  std::string output;
  int status = -1;
  if (FILE* pipe = ::popen(cmd.c_str(), "r")) {
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), n);
    status = ::pclose(pipe);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  if (status != 0) throw PythonUnavailable("could not run '" + python + "' (status " + std::to_string(status) + ")");
  TestOutcomes outcomes;
  try {
    const nlohmann::json j = nlohmann::json::parse(output);
    for (const auto& [stem, tests] : j.items()) {
      for (const auto& [name, ok] : tests.items()) outcomes[stem][name] = ok.get<bool>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw PythonUnavailable(std::string("unreadable test runner output: ") + e.what());
  }
  return outcomes;
}

}  // namespace dualmark
