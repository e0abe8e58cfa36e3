// localelab: corpus generation, property reports, agreement checks, witness
// search and Hasse diagram export.
//
// Exit codes: 0 everything agrees, 1 a mathematical disagreement, 2 usage,
// input or IO error.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "localelab/canonical.hpp"
#include "localelab/constructions.hpp"
#include "localelab/io.hpp"
#include "localelab/maps.hpp"
#include "localelab/parallel.hpp"
#include "localelab/props.hpp"
#include "localelab/symbolic.hpp"

namespace fs = std::filesystem;
using namespace localelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  int max_poset_size = -1;
  int subset_quantification_bound = 12;
  std::size_t sublocale_budget = kDefaultSublocaleBudget;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  std::vector<std::string> props;
  std::string symbolic;
  std::size_t hom_samples = 0;

  PropsConfig props_config() const { return {subset_quantification_bound, sublocale_budget}; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Property> selected_properties(const RunConfig& cfg) {
  if (cfg.props.empty()) return {std::begin(kAllProperties), std::end(kAllProperties)};
  std::vector<Property> out;
  for (const std::string& name : cfg.props) {
    auto p = property_from_name(name);
    if (!p) throw UsageError("unknown property: " + name);
    out.push_back(*p);
  }
  return out;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(cfg.out, text);
  }
}

struct NamedFrame {
  std::string id;
  FrameRef frame;
  std::optional<Poset> source;
};

std::vector<NamedFrame> load_corpus(const RunConfig& cfg, const std::string& manifest_path, int default_size) {
  std::vector<NamedFrame> frames;
  if (manifest_path.empty()) {
    for (CorpusEntry& e : enumerate_corpus(cfg.max_poset_size >= 0 ? cfg.max_poset_size : default_size))
      frames.push_back({e.id, e.frame, e.source});
    return frames;
  }
  const fs::path manifest(manifest_path);
  const fs::path dir = manifest.parent_path() / "frames";
  for (const ManifestEntry& e : manifest_from_json(parse_json(read_text_file(manifest), manifest.string()),
                                                   manifest.string())) {
    const fs::path file = dir / (e.id + ".json");
    FiniteFrame frame = [&] {
      try {
        return read_frame_file(file);
      } catch (const FrameError& err) {
        throw ParseError(file.string(), err.what());
      }
    }();
    if (frame.size() != e.size) throw ParseError(e.id, "frame size differs from the manifest");
    if (canonical_hash(frame) != e.canonical_hash) throw ParseError(e.id, "canonical hash differs from the manifest");
    frames.push_back({e.id, share(std::move(frame)), e.source});
  }
  return frames;
}

int cmd_gen(const RunConfig& cfg) {
  const int m = cfg.max_poset_size >= 0 ? cfg.max_poset_size : 3;
  const fs::path out = cfg.out.empty() ? fs::path("corpus") : fs::path(cfg.out);
  const std::vector<CorpusEntry> corpus = enumerate_corpus(m);
  for (const CorpusEntry& e : corpus) {
    write_text_file(out / "frames" / (e.id + ".json"), frame_to_json(*e.frame).dump(2) + "\n");
    if (cfg.format == "dot") write_text_file(out / "frames" / (e.id + ".dot"), frame_to_dot(*e.frame, e.id));
  }
  write_text_file(out / "manifest.json", manifest_to_json(corpus).dump(2) + "\n");
  std::cout << "wrote " << corpus.size() << " frames from posets of size <= " << m << " to " << out.string() << "\n";
  return kExitOk;
}

int cmd_check_symbolic(const RunConfig& cfg) {
  auto kind = symbolic::kind_from_name(cfg.symbolic);
  if (!kind) throw UsageError("unknown symbolic frame: " + cfg.symbolic);
  const symbolic::SymbolicReport report = symbolic::classify_symbolic(*kind);
  emit(cfg, symbolic_report_to_json(report).dump(2) + "\n");
  for (const auto& f : report.facts)
    if (!f.holds) return kExitDisagreement;
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, const std::string& path) {
  if (!cfg.symbolic.empty()) return cmd_check_symbolic(cfg);
  if (path.empty()) throw UsageError("check needs a frame file or --symbolic");
  const FiniteFrame frame = read_frame_file(path);
  const std::vector<Property> props = selected_properties(cfg);
  const PropertyReport report = evaluate_properties(frame, fs::path(path).stem().string(), cfg.props_config(), props);
  if (cfg.format == "csv") {
    emit(cfg, csv_header(props) + csv_row(report, props));
  } else if (cfg.format == "json") {
    emit(cfg, report_to_json(report, frame).dump(2) + "\n");
  } else {
    throw UsageError("check supports --format json or csv");
  }
  for (const std::string& problem : report.problems()) std::cerr << "disagreement: " << problem << "\n";
  return report.consistent() ? kExitOk : kExitDisagreement;
}

struct FrameOutcome {
  PropertyReport report;
  std::vector<std::string> problems;
};

// Everything verify checks on one frame beyond the property report.
std::vector<std::string> structural_checks(const FiniteFrame& f, const RunConfig& cfg) {
  std::vector<std::string> problems;
  try {
    if (auto law = heyting_laws_check(f); !law.passed) problems.push_back("Heyting law fails: " + law.failed_law);
    const Sublocale b = booleanization(f);
    const std::vector<Element> nu = nucleus_of(f, b);
    for (Element a = 0; a < f.size(); ++a)
      if (nu[static_cast<std::size_t>(a)] != f.double_neg(a)) problems.push_back("nucleus of B_L differs from (-)**");
    try {
      const SublocaleLattice lattice = enumerate_sublocales(f, cfg.sublocale_budget);
      for (const Sublocale& s : lattice.members())
        if (is_dense(f, s) && !b.members.subset_of(s.members)) problems.push_back("B_L is not the least dense sublocale");
      if (!lattice.is_coframe()) problems.push_back("sublocale lattice is not a coframe");
    } catch (const BudgetExceeded&) {
    }
    largest_dense_ied(f, cfg.sublocale_budget);
  } catch (const SoundnessError& e) {
    problems.push_back(e.what());
  }
  return problems;
}

int cmd_verify(const RunConfig& cfg, const std::string& manifest) {
  const std::vector<NamedFrame> frames = load_corpus(cfg, manifest, 5);
  const std::vector<Property> props = selected_properties(cfg);
  const std::vector<FrameOutcome> outcomes = parallel_map<FrameOutcome>(frames.size(), [&](std::size_t i) {
    const NamedFrame& nf = frames[i];
    FrameOutcome o{{}, {}};
    try {
      o.report = evaluate_properties(*nf.frame, nf.id, cfg.props_config(), props);
      o.problems = o.report.problems();
    } catch (const SoundnessError& e) {
      o.report.frame_id = nf.id;
      o.report.size = nf.frame->size();
      o.problems.push_back(e.what());
    }
    for (std::string& p : structural_checks(*nf.frame, cfg)) o.problems.push_back(std::move(p));
    return o;
  });

  std::size_t disagreements = 0;
  std::map<Property, std::size_t> counts;
  for (const FrameOutcome& o : outcomes) {
    for (const std::string& p : o.problems) {
      std::cerr << o.report.frame_id << ": " << p << "\n";
      ++disagreements;
    }
    for (const auto& [p, v] : o.report.verdicts)
      if (v.holds) ++counts[p];
  }

  // Sampled homomorphisms: the weakly open square exists iff f is weakly open.
  std::size_t homs_checked = 0;
  if (cfg.hom_samples > 0) {
    std::vector<const NamedFrame*> small;
    for (const NamedFrame& nf : frames)
      if (nf.source && nf.source->m <= 4) small.push_back(&nf);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
    while (homs_checked < cfg.hom_samples && !small.empty()) {
      const NamedFrame& s = *small[pick(rng)];
      const NamedFrame& t = *small[pick(rng)];
      if (s.source->m == 0 && t.source->m != 0) continue;
      const FrameHom h = random_downset_hom(*s.source, s.frame, *t.source, t.frame, rng);
      if (weakly_open_square_check(h) != classify_openness(h).weakly_open) {
        std::cerr << s.id << " -> " << t.id << ": weakly open square disagrees with the skeletal flag\n";
        ++disagreements;
      }
      ++homs_checked;
    }
  }

  std::ostringstream table;
  table << "frames: " << frames.size() << "\n";
  table << "property              holds  fails\n";
  for (Property p : props) {
    std::string name(property_name(p));
    name.resize(20, ' ');
    table << name << "  " << std::setw(5) << counts[p] << "  " << std::setw(5) << frames.size() - counts[p] << "\n";
  }
  if (std::find(props.begin(), props.end(), Property::kEd) != props.end() &&
      std::find(props.begin(), props.end(), Property::kIed) != props.end() &&
      std::find(props.begin(), props.end(), Property::kIdm) != props.end())
    table << "finite collapse: #ed = " << counts[Property::kEd] << ", #ied = " << counts[Property::kIed]
          << ", #idm = " << counts[Property::kIdm] << "\n";
  if (homs_checked > 0) table << "sampled homomorphisms: " << homs_checked << "\n";
  table << "disagreements: " << disagreements << "\n";
  std::cout << table.str();

  if (!cfg.out.empty()) {
    if (cfg.format == "csv") {
      std::string csv = csv_header(props);
      for (const FrameOutcome& o : outcomes)
        if (!o.report.verdicts.empty()) csv += csv_row(o.report, props);
      write_text_file(cfg.out, csv);
    } else {
      Json all = Json::array();
      for (std::size_t i = 0; i < outcomes.size(); ++i)
        if (!outcomes[i].report.verdicts.empty()) all.push_back(report_to_json(outcomes[i].report, *frames[i].frame));
      write_text_file(cfg.out, all.dump(2) + "\n");
    }
  }
  return disagreements == 0 ? kExitOk : kExitDisagreement;
}

int cmd_witness(const RunConfig& cfg, const std::string& holds_name, const std::string& fails_name) {
  const auto holds = property_from_name(holds_name);
  const auto fails = property_from_name(fails_name);
  // Position in Boolean ⇒ IDM ⇒ IED ⇒ ED; ⊥-scattered sits beside IDM.
  const std::map<Property, int> chain{{Property::kBoolean, 0}, {Property::kIdm, 1}, {Property::kIed, 2}, {Property::kEd, 3}};
  const bool in_chain = holds && fails && chain.contains(*holds) && chain.contains(*fails) && chain.at(*holds) > chain.at(*fails);
  const bool beside = holds && fails && *fails == Property::kBotScattered && (*holds == Property::kIed || *holds == Property::kEd);
  if (!in_chain && !beside) throw UsageError("not a strict implication of the chain: " + holds_name + " => " + fails_name);

  const int m = cfg.max_poset_size >= 0 ? cfg.max_poset_size : 4;
  Json out;
  out["holds"] = holds_name;
  out["fails"] = fails_name;
  Json finite = Json::array();
  for (const CorpusEntry& e : enumerate_corpus(m)) {
    PropertyEvaluator ev(*e.frame, cfg.props_config());
    if (ev.evaluate(*holds).holds && !ev.evaluate(*fails).holds) {
      Json w;
      w["frame-id"] = e.id;
      w["frame"] = frame_to_json(*e.frame);
      if (auto witness = ev.evaluate(*fails).witness) w["witness"] = witness_to_json(*e.frame, *witness);
      finite.push_back(std::move(w));
    }
  }
  out["finite"] = finite;
  if (finite.empty()) out["finite-note"] = "no finite witness exists up to poset size " + std::to_string(m);

  if (auto s = symbolic::separation(*holds, *fails)) {
    out["symbolic"] = separation_to_json(*s);
  } else {
    Json found = nullptr;
    for (symbolic::Kind k : {symbolic::Kind::kOmegaChain, symbolic::Kind::kCofinite, symbolic::Kind::kInterval}) {
      const auto r = symbolic::classify_symbolic(k);
      if (r.holds(*holds) && !r.holds(*fails)) {
        symbolic::Separation sep{*holds, *fails, k, r.find(*fails)->certificate, ""};
        found = separation_to_json(sep);
        break;
      }
    }
    out["symbolic"] = found;
  }
  emit(cfg, out.dump(2) + "\n");
  return kExitOk;
}

int cmd_export(const RunConfig& cfg, const std::string& path, bool lattice) {
  const FiniteFrame frame = read_frame_file(path);
  const std::string name = fs::path(path).stem().string();
  if (cfg.format == "json") {
    if (lattice) {
      Json list = Json::array();
      for (const Sublocale& s : enumerate_sublocales(frame, cfg.sublocale_budget).members())
        list.push_back(sublocale_to_json(name, s));
      emit(cfg, list.dump(2) + "\n");
    } else {
      emit(cfg, frame_to_json(frame).dump(2) + "\n");
    }
  } else if (cfg.format == "dot") {
    emit(cfg, lattice ? sublocale_lattice_to_dot(frame, enumerate_sublocales(frame, cfg.sublocale_budget), name)
                      : frame_to_dot(frame, name));
  } else {
    throw UsageError("export supports --format dot or json");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localelab: frames, sublocales and De Morgan properties"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.sublocale_budget, "Sublocale enumeration budget")->check(CLI::PositiveNumber);
    sub->add_option("--subset-bound", cfg.subset_quantification_bound,
                    "Families over domains up to this size are enumerated subset by subset")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--out", cfg.out, "Output file (directory for gen)");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--props", cfg.props, "Comma separated property names")->delimiter(',');
    sub->add_option("--max-poset-size", cfg.max_poset_size, "Largest poset size in the corpus")
        ->check(CLI::Range(0, kMaxCorpusPosetSize));
  };

  std::string frame_path;
  std::string manifest;
  std::string holds;
  std::string fails;
  bool lattice = false;

  CLI::App* gen = app.add_subcommand("gen", "Write the corpus frames and manifest");
  add_common(gen);
  CLI::App* check = app.add_subcommand("check", "Property report for one frame");
  add_common(check);
  check->add_option("frame", frame_path, "Frame JSON file");
  check->add_option("--symbolic", cfg.symbolic, "cofinite, omega-chain or interval")
      ->check(CLI::IsMember({"cofinite", "omega-chain", "interval"}));
  CLI::App* verify = app.add_subcommand("verify", "Check every characterization and fact on a corpus");
  add_common(verify);
  verify->add_option("manifest", manifest, "Corpus manifest (default: generate in memory)");
  verify->add_option("--homs", cfg.hom_samples, "Random homomorphisms to check");
  CLI::App* witness = app.add_subcommand("witness", "Frames separating two properties");
  add_common(witness);
  witness->add_option("holds", holds, "Property that holds")->required();
  witness->add_option("fails", fails, "Property that fails")->required();
  CLI::App* exp = app.add_subcommand("export", "Export a frame or its sublocale lattice");
  add_common(exp);
  exp->add_option("frame", frame_path, "Frame JSON file")->required();
  exp->add_flag("--sublocales", lattice, "Export the sublocale lattice instead of the frame");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*check) return cmd_check(cfg, frame_path);
    if (*verify) return cmd_verify(cfg, manifest);
    if (*witness) return cmd_witness(cfg, holds, fails);
    if (*exp) {
      if (cfg.format == "json" && exp->count("--format") == 0) cfg.format = "dot";
      return cmd_export(cfg, frame_path, lattice);
    }
  } catch (const SoundnessError& e) {
    std::cerr << "disagreement: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
