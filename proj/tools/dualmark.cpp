// Command-line driver: embed, detect, attack, eval, org, inspect.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualmark/eval_harness.hpp"

namespace fs = std::filesystem;
using namespace dualmark;
using nlohmann::json;

namespace {

struct Common {
  std::string config_path;
  std::string registry_path;
  std::optional<std::uint64_t> seed;
};

void add_paths(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "JSON toolkit configuration");
  cmd->add_option("--registry", c.registry_path, "organization registry (overrides the config)");
}

void add_common(CLI::App* cmd, Common& c) {
  add_paths(cmd, c);
  cmd->add_option("--seed", c.seed, "random seed (overrides the config)");
}

ToolkitConfig load(const Common& c) {
  ToolkitConfig cfg;
  if (!c.config_path.empty()) cfg = load_config(c.config_path);
  if (!c.registry_path.empty()) cfg.registry_path = c.registry_path;
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

Registry load_registry(const ToolkitConfig& cfg) {
  if (cfg.registry_path.empty()) throw RegistryError("no registry given (--registry or \"registry\" in the config)");
  return Registry::load(cfg.registry_path);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// Directories expand to their programs (tests excluded), in name order.
std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> out;
  for (const std::string& in : inputs) {
    if (fs::is_directory(in)) {
      for (const CorpusFile& f : load_corpus(in)) out.emplace_back(f.path);
    } else {
      out.emplace_back(in);
    }
  }
  return out;
}

// Per-file stream keyed by the file name so results do not depend on batch order.
Rng file_rng(const ToolkitConfig& cfg, const fs::path& p) {
  return Rng::derive(cfg.seed, name_hash(p.filename().string()));
}

int cmd_embed(const Common& common, const std::vector<std::string>& inputs, const std::string& message,
              const std::string& org_id, const std::string& out_dir) {
  const ToolkitConfig cfg = load(common);
  const Registry registry = load_registry(cfg);
  const OrganizationProfile* org = registry.find(org_id);
  if (!org) {
    std::cerr << "error: unknown organization '" << org_id << "'\n";
    return 1;
  }
  Bits m;
  try {
    m = bits_from_string(message);
  } catch (const std::invalid_argument&) {
    std::cerr << "error: message must be a bitstring, got '" << message << "'\n";
    return 1;
  }
  const auto k = static_cast<std::size_t>(code_params(cfg.code).k);
  if (m.size() != k) {
    std::cerr << "error: message must have " << k << " bits for " << code_name(cfg.code) << ", got " << m.size()
              << "\n";
    return 1;
  }
  int status = 0;
  for (const fs::path& in : expand_inputs(inputs)) {
    try {
      const SubjectProgram program = parse(read_file(in), in.string());
      Rng rng = file_rng(cfg, in);
      const InsertResult res = insert(program, m, *org, cfg, rng);
      const fs::path target = fs::path(out_dir) / in.filename();
      write_file(target, res.program.text);
      write_file(fs::path(target).replace_extension(".report.json"), report_to_json(res.report) + "\n");
      std::cout << in.string() << ": formal " << capacity_name(res.report.formal.capacity.kind) << ", natural "
                << capacity_name(res.report.natural.capacity.kind) << (res.report.combined ? "" : " (unchanged)")
                << "\n";
      if (!res.report.combined && status == 0) status = 2;
    } catch (const py::ParseError& e) {
      std::cerr << "error: " << in.string() << ": parse failure: " << e.what() << "\n";
      status = 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << in.string() << ": " << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}

int cmd_detect(const Common& common, const std::vector<std::string>& inputs, const std::vector<std::string>& orgs,
               bool strict, const std::string& out_path) {
  const ToolkitConfig cfg = load(common);
  const Registry registry = load_registry(cfg);
  for (const std::string& id : orgs) registry.at(id);
  json reports = json::array();
  for (const fs::path& in : expand_inputs(inputs)) {
    try {
      const SubjectProgram program = parse(read_file(in), in.string());
      const WatermarkReport rep = extract(program, registry, cfg, ExtractOptions{orgs, strict});
      reports.push_back(json::parse(report_to_json(rep)));
    } catch (const std::exception& e) {
      reports.push_back({{"schema", 1}, {"file", in.string()}, {"error", e.what()}});
    }
  }
  const std::string text = (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
  return 0;
}

int cmd_attack(const Common& common, const std::vector<std::string>& inputs, const std::string& attack_text,
               const std::string& out_dir) {
  const ToolkitConfig cfg = load(common);
  const AttackSpec spec = parse_attack(attack_text);
  int status = 0;
  for (const fs::path& in : expand_inputs(inputs)) {
    try {
      const SubjectProgram program = parse(read_file(in), in.string());
      Rng rng = file_rng(cfg, in);
      const SubjectProgram attacked = attack(program, spec, rng, cfg);
      write_file(fs::path(out_dir) / in.filename(), attacked.text);
    } catch (const std::exception& e) {
      std::cerr << "error: " << in.string() << ": " << e.what() << "\n";
      status = 1;
    }
  }
  return status;
}

struct EvalArgs {
  std::string corpus;
  std::string org = "O1";
  std::vector<std::string> attacks;
  std::string message;
  std::string out = "eval";
  bool cross = false;
  std::string indist_template;
  std::size_t repetitions = 100;
  std::string tests_dir;
};

int cmd_eval(const Common& common, const EvalArgs& a) {
  const ToolkitConfig cfg = load(common);
  const Registry registry = load_registry(cfg);

  if (!a.indist_template.empty()) {
    const SubjectProgram tmpl = parse(read_file(a.indist_template), a.indist_template);
    const int k = code_params(cfg.code).k;
    std::vector<Bits> messages;
    for (int v = 0; v < (1 << k); ++v) {
      Bits m(static_cast<std::size_t>(k));
      for (int b = 0; b < k; ++b) m[static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((v >> (k - 1 - b)) & 1);
      messages.push_back(m);
    }
    Rng rng(cfg.seed);
    const IndistResult r = indistinguishability(tmpl, messages, a.repetitions, registry.at(a.org), cfg, rng);
    write_file(a.out + "_frequency.csv", frequency_csv(r));
    for (std::size_t i = 0; i < r.similarity.size(); ++i) {
      write_file(a.out + "_similarity_" + to_string(messages[i]) + ".csv", similarity_csv(r.similarity[i]));
    }
    json j = {{"anchors", r.anchors},           {"mean_jsd_nats", r.mean_jsd}, {"max_jsd_nats", r.max_jsd},
              {"mi_sum_bits", r.mi_sum_bits}, {"mi_per_anchor_bits", r.mi_bits},
              {"mi_full_per_anchor_bits", r.mi_full_bits}, {"min_similarity", r.min_similarity},
              {"max_similarity", r.max_similarity}};
    write_file(a.out + "_indist.json", j.dump(2) + "\n");
    std::cout << "mean JSD " << r.mean_jsd << " nats, max " << r.max_jsd << "; summed MI " << r.mi_sum_bits
              << " bits; similarity " << r.min_similarity << ".." << r.max_similarity << "\n";
    return 0;
  }

  const std::vector<CorpusFile> corpus = load_corpus(a.corpus);
  if (a.cross) {
    std::ostringstream csv;
    csv << "owner,other,not_attributed,files,rate\n";
    for (const CrossOrgCell& c : cross_org(corpus, registry, cfg, cfg.seed)) {
      csv << c.owner << ',' << c.other << ',' << c.not_attributed.hits << ',' << c.not_attributed.total << ','
          << c.not_attributed.value() << '\n';
      std::cout << "owner " << c.owner << " vs " << c.other << ": " << c.not_attributed.value() << "\n";
    }
    write_file(a.out + "_cross_org.csv", csv.str());
    return 0;
  }

  EvalOptions opts;
  opts.org = a.org;
  opts.seed = cfg.seed;
  for (const std::string& s : a.attacks) opts.attacks.push_back(parse_attack(s));
  if (!a.message.empty()) opts.message = bits_from_string(a.message);
  const EvalResult res = evaluate(corpus, registry, cfg, opts);
  write_file(a.out + ".csv", eval_csv(res));
  write_file(a.out + "_summary.json", eval_summary_json(res, opts) + "\n");
  const EvalSummary& s = res.summary;
  std::cout << "TPR " << s.tpr_combined.value() << " (strict " << s.tpr_strict.value() << "), FPR "
            << s.fpr_combined.value() << " (strict " << s.fpr_strict.value() << "), MsgAcc " << s.msg_acc.value()
            << " over " << s.files << " files\n";

  if (!a.tests_dir.empty()) {
    std::map<std::string, std::string> clean, marked;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const FileResult& f = res.files[i];
      if (!f.error.empty()) continue;
      clean[f.name] = corpus[i].text;
      marked[f.name] = f.embedded ? f.watermarked_text : corpus[i].text;
    }
    const TestOutcomes before = run_python_tests(clean, a.tests_dir);
    const TestOutcomes after = run_python_tests(marked, a.tests_dir);
    std::size_t passed_before = 0, kept = 0;
    for (const auto& [stem, tests] : before) {
      for (const auto& [name, ok] : tests) {
        if (!ok) continue;
        ++passed_before;
        const auto it = after.find(stem);
        if (it != after.end() && it->second.count(name) && it->second.at(name)) ++kept;
      }
    }
    std::cout << "fidelity: " << kept << "/" << passed_before << " passing tests still pass\n";
  }
  return 0;
}

int cmd_org(const std::string& action, const Common& common, const std::string& id, std::uint64_t seed,
            const std::string& fixed) {
  ToolkitConfig cfg = load(common);
  if (cfg.registry_path.empty()) cfg.registry_path = "registry.json";
  if (action == "list") {
    const Registry r = Registry::load(cfg.registry_path);
    for (const auto& o : r.orgs()) std::cout << o.id << " seed=" << o.seed << " fixed_code=" << to_string(o.fixed_code) << "\n";
    return 0;
  }
  if (id.empty()) throw std::invalid_argument("--id is required");
  Registry r;
  if (fs::exists(cfg.registry_path)) {
    r = Registry::load(cfg.registry_path);
  } else if (action == "add") {
    throw RegistryError("registry '" + cfg.registry_path + "' does not exist; use org init");
  }
  r.add(OrganizationProfile{id, seed, bits_from_string(fixed)});
  r.save(cfg.registry_path);
  return 0;
}

int cmd_inspect(const Common& common, const std::vector<std::string>& inputs, bool verbose) {
  const ToolkitConfig cfg = load(common);
  const CodeParams code = code_params(cfg.code);
  for (const fs::path& in : expand_inputs(inputs)) {
    try {
      const SubjectProgram program = parse(read_file(in), in.string());
      const AnchorIndex idx = identify_anchors(program.tree, cfg.rules, cfg.suffixes);
      const auto f = estimate_capacity(idx.formal.size(), code, cfg.alpha, cfg.tau, 2);
      const auto n = estimate_capacity(idx.natural.size(), code, 3, cfg.tau, 2);
      std::cout << in.string() << " formal=" << idx.formal.size() << " (" << capacity_name(f.kind)
                << ") natural=" << idx.natural.size() << " (" << capacity_name(n.kind) << ")\n";
      if (!verbose) continue;
      for (const AnchorPoint& a : idx.formal) {
        std::cout << "  R" << a.id << " line " << a.address.span.line << " state " << a.state << "\n";
      }
      for (const NaturalVariable& v : idx.variables) std::cout << "  var " << v.raw << " -> " << v.canonical << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << in.string() << ": " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual-channel source watermarking for Python programs"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> inputs;
  std::string message, org, out, attack_text;
  std::vector<std::string> orgs;
  bool all_orgs = false, strict = false;

  auto* embed = app.add_subcommand("embed", "watermark files");
  add_common(embed, common);
  embed->add_option("inputs", inputs, "files or directories")->required();
  embed->add_option("--message", message, "identity message bits")->required();
  embed->add_option("--org", org, "embedding organization")->required();
  embed->add_option("--out", out, "output directory")->required();

  auto* detect = app.add_subcommand("detect", "check files for watermarks");
  add_common(detect, common);
  detect->add_option("inputs", inputs, "files or directories")->required();
  auto* org_opt = detect->add_option("--org", orgs, "organizations to check");
  detect->add_flag("--all-orgs", all_orgs, "check every registered organization")->excludes(org_opt);
  detect->add_flag("--strict", strict, "attribute only when both channels verify");
  detect->add_option("--out", out, "write the JSON reports here instead of stdout");

  auto* atk = app.add_subcommand("attack", "apply a watermark-removal attack");
  add_common(atk, common);
  atk->add_option("inputs", inputs, "files or directories")->required();
  atk->add_option("--attack", attack_text, "kind:intensity, kind one of rename, refactor, reformat")->required();
  atk->add_option("--out", out, "output directory")->required();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "corpus metrics");
  add_common(eval, common);
  eval->add_option("corpus", ev.corpus, "directory of programs");
  eval->add_option("--org", ev.org, "embedding organization");
  eval->add_option("--attack", ev.attacks, "attack applied after embedding (repeatable)");
  eval->add_option("--message", ev.message, "fixed message; random per file otherwise");
  eval->add_option("--out", ev.out, "output prefix for CSV/JSON files");
  eval->add_flag("--cross-org", ev.cross, "cross-organization attribution rates");
  eval->add_option("--indist", ev.indist_template, "template for the indistinguishability study");
  eval->add_option("--repetitions", ev.repetitions, "embeddings per message for --indist");
  eval->add_option("--tests", ev.tests_dir, "unit tests to re-run on the watermarked corpus");

  std::string org_id, fixed = "01";
  std::uint64_t org_seed = 0;
  auto* orgcmd = app.add_subcommand("org", "manage the organization registry");
  orgcmd->require_subcommand(1);
  std::string org_action;
  for (const char* action : {"init", "add", "list"}) {
    auto* sub = orgcmd->add_subcommand(action, std::string(action) + " organizations");
    add_paths(sub, common);
    if (std::string(action) != "list") {
      sub->add_option("--id", org_id)->required();
      sub->add_option("--seed", org_seed, "matrix seed")->required();
      sub->add_option("--fixed-code", fixed, "fallback code for small programs");
    }
    sub->callback([&org_action, action] { org_action = action; });
  }

  auto* inspect = app.add_subcommand("inspect", "anchor counts and capacity cases");
  add_common(inspect, common);
  inspect->add_option("inputs", inputs, "files or directories")->required();
  bool verbose = false;
  inspect->add_flag("-v,--verbose", verbose, "list every anchor");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*embed) return cmd_embed(common, inputs, message, org, out);
    if (*detect) return cmd_detect(common, inputs, all_orgs ? std::vector<std::string>{} : orgs, strict, out);
    if (*atk) return cmd_attack(common, inputs, attack_text, out);
    if (*eval) return cmd_eval(common, ev);
    if (*orgcmd) return cmd_org(org_action, common, org_id, org_seed, fixed);
    if (*inspect) return cmd_inspect(common, inputs, verbose);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
