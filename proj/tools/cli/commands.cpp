#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>

#include <json.hpp>

#include "topomani/error.hpp"
#include "topomani/graph.hpp"
#include "topomani/invariants.hpp"
#include "topomani/isomorphism.hpp"
#include "topomani/moves.hpp"
#include "topomani/pipeline.hpp"
#include "topomani/random.hpp"
#include "topomani/represent.hpp"
#include "topomani/subdivision.hpp"
#include "topomani/surgery.hpp"

namespace topomani::cli {

namespace {

using nlohmann::ordered_json;

std::string jsonl(const std::vector<ordered_json>& rows) {
  std::string out;
  for (const auto& row : rows) out += row.dump() + "\n";
  return out;
}

std::vector<Vertex> vertices_of(const Simplex& s) { return s.to_vector(); }

void report(const std::optional<std::string>& path, const std::string& json) {
  if (path) {
    write_text(*path, json + "\n");
  } else {
    std::cerr << json << "\n";
  }
}

// ---------------------------------------------------------------------------

Command validate_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("validate", "Check that every record is a manifold with a correct label");
  return {sub, [&g] {
            const auto records = read_records(g.input, false);
            std::size_t invalid = 0;
            for (const auto& r : records) {
              std::string problem;
              SimplicialComplex c;
              try {
                c = r.complex();
                if (!is_combinatorial_manifold(c)) problem = "not a combinatorial manifold";
              } catch (const Error& e) {
                problem = e.what();
              }
              if (problem.empty() && r.dimension == 2 && label_2d(c) != r.label) {
                problem = "label " + r.label + " but triangulates " + label_2d(c);
              }
              if (problem.empty() && g.max_vertices && c.vertex_count() > *g.max_vertices) {
                problem = std::to_string(c.vertex_count()) + " vertices exceeds cap";
              }
              if (!problem.empty()) {
                ++invalid;
                std::cerr << r.id << ": " << problem << "\n";
              }
            }
            ordered_json j;
            j["records"] = records.size();
            j["invalid"] = invalid;
            write_text(g.output, j.dump() + "\n");
            return invalid == 0 ? 0 : 1;
          }};
}

Command invariants_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("invariants", "f-vector, Euler characteristic, orientability, GF(2) Betti numbers");
  return {sub, [&g] {
            std::vector<ordered_json> rows;
            for (const auto& r : read_records(g.input, !g.no_validate)) {
              const auto c = r.complex();
              const auto s = summarize(c);
              ordered_json j;
              j["id"] = r.id;
              j["dimension"] = c.dimension();
              j["f_vector"] = s.f_vector.counts;
              j["euler_characteristic"] = s.euler_characteristic;
              j["orientable"] = s.orientable;
              j["betti_gf2"] = s.betti_gf2;
              j["class"] = c.dimension() == 2 ? ordered_json(label_2d(c)) : ordered_json(nullptr);
              rows.push_back(std::move(j));
            }
            write_text(g.output, jsonl(rows));
            return 0;
          }};
}

Command classify_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("classify", "Surface class of each 2D record");
  return {sub, [&g] {
            std::vector<ordered_json> rows;
            bool all_match = true;
            for (const auto& r : read_records(g.input, !g.no_validate)) {
              const auto cls = classify_surface(r.complex());
              ordered_json j;
              j["id"] = r.id;
              j["class"] = cls.canonical_name;
              j["orientable"] = cls.orientable;
              j["euler_characteristic"] = cls.euler_characteristic();
              j["label"] = r.label;
              j["match"] = cls.canonical_name == r.label;
              all_match &= cls.canonical_name == r.label;
              rows.push_back(std::move(j));
            }
            write_text(g.output, jsonl(rows));
            return all_match ? 0 : 1;
          }};
}

Command walk_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("pachner-walk", "Random Pachner walks from every input record");
  struct Opts {
    std::optional<std::size_t> steps;
    std::size_t count = 1;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--steps", o->steps, "Moves per walk (default: 2 x facet count)");
  sub->add_option("--count", o->count, "Walks per input record")->check(CLI::PositiveNumber);
  return {sub, [&g, o] {
            std::vector<DatasetRecord> out;
            for (const auto& r : read_records(g.input, !g.no_validate)) {
              const auto c = r.complex();
              const auto steps = o->steps.value_or(2 * c.facets().size());
              for (std::size_t k = 0; k < o->count; ++k) {
                const std::string id = r.id + ":w" + std::to_string(k);
                const auto seed = derive_seed(g.seed, id, "pachner-walk");
                const auto walk = random_pachner_walk(c, steps, vertex_cap(g, c.dimension()), seed);
                const auto label = c.dimension() == 2 ? label_2d(walk.complex) : r.label;
                auto rec = DatasetRecord::from_complex(id, walk.complex, label,
                                                       Provenance{ProvenanceKind::kPachner, r.id, seed});
                rec.split = r.split;
                out.push_back(std::move(rec));
              }
            }
            write_records(g.output, out);
            return 0;
          }};
}

Command consum_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("consum", "Connected sum of each input surface with one from --with");
  auto with = std::make_shared<std::string>();
  sub->add_option("--with", *with, "JSONL of right-hand surfaces, paired cyclically")->required();
  return {sub, [&g, with] {
            const auto left = read_records(g.input, !g.no_validate);
            const auto right = read_records(*with, !g.no_validate);
            if (right.empty()) throw UsageError("--with file has no records");
            std::vector<DatasetRecord> out;
            for (std::size_t i = 0; i < left.size(); ++i) {
              const auto& a = left[i];
              const auto& b = right[i % right.size()];
              const std::string id = a.id + "#" + b.id;
              const auto seed = derive_seed(g.seed, id, "connected-sum");
              Rng rng(seed);
              const auto ca = a.complex(), cb = b.complex();
              const auto t1 = ca.facets()[uniform_index(rng, ca.facets().size())];
              const auto t2 = cb.facets()[uniform_index(rng, cb.facets().size())];
              const auto sum = connected_sum(ca, cb, t1, t2);
              out.push_back(DatasetRecord::from_complex(id, sum, label_2d(sum),
                                                        Provenance{ProvenanceKind::kConnectedSum, a.id, seed}));
            }
            write_records(g.output, out);
            return 0;
          }};
}

Command subdivide_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("subdivide", "Apply a subdivision scheme to every record");
  auto scheme = std::make_shared<std::string>();
  sub->add_option("--scheme", *scheme, "stellar | graded-N | top-P | barycentric")->required();
  return {sub, [&g, scheme] {
            const auto parsed = SubdivisionScheme::parse(*scheme);
            if (!parsed) throw UsageError("unknown scheme '" + *scheme + "'");
            parsed->validate();
            const auto name = parsed->name();
            std::vector<DatasetRecord> out;
            for (const auto& r : read_records(g.input, !g.no_validate)) {
              const auto seed = derive_seed(g.seed, r.id, name);
              auto rec = DatasetRecord::from_complex(r.id + "@" + name, subdivide(r.complex(), *parsed, seed),
                                                     r.label, Provenance{ProvenanceKind::kSubdivision, r.id, seed});
              rec.split = r.split;
              out.push_back(std::move(rec));
            }
            write_records(g.output, out);
            return 0;
          }};
}

Command dedup_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("dedup", "Remove isomorphic duplicates (f-vector, WL hash, exact check)");
  struct Opts {
    std::size_t max_group = kDefaultMaxGroup;
    std::optional<std::string> report;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--max-group", o->max_group, "Largest WL-collision subset checked exactly")
      ->check(CLI::PositiveNumber);
  sub->add_option("--report", o->report, "Write the stage report here instead of stderr");
  return {sub, [&g, o] {
            const auto records = read_records(g.input, !g.no_validate);
            const auto result = deduplicate(records, o->max_group, g.jobs);
            write_records(g.output, result.kept);
            report(o->report, result.report.to_json());
            return 0;
          }};
}

Command balance_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("balance", "Grow every class to its target by Pachner walks and dedup");
  struct Opts {
    std::size_t target = BalanceConfig{}.target;
    std::vector<std::string> classes;
    std::size_t rounds = BalanceConfig{}.rounds;
    std::size_t max_group = kDefaultMaxGroup;
    double steps_factor = BalanceConfig{}.steps_factor;
    std::optional<std::string> report;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--target", o->target, "Per-class target")->check(CLI::PositiveNumber);
  sub->add_option("--class", o->classes, "LABEL=N target; surface classes absent from the input are built")
      ->allow_extra_args(false);
  sub->add_option("--rounds", o->rounds, "Generation/dedup alternations")->check(CLI::PositiveNumber);
  sub->add_option("--max-group", o->max_group, "Dedup subset cap")->check(CLI::PositiveNumber);
  sub->add_option("--steps-factor", o->steps_factor, "Walk length as a multiple of the parent's facet count");
  sub->add_option("--report", o->report, "Write the balancing report here instead of stderr");
  return {sub, [&g, o] {
            const auto seeds = read_records(g.input, !g.no_validate);
            BalanceConfig config;
            config.target = o->target;
            config.rounds = o->rounds;
            config.max_group = o->max_group;
            config.steps_factor = o->steps_factor;
            config.jobs = g.jobs;
            config.max_vertices = vertex_cap(g, seeds.empty() ? 2 : seeds.front().dimension);
            for (const auto& spec : o->classes) {
              const auto eq = spec.rfind('=');
              if (eq == std::string::npos || eq == 0) throw UsageError("--class expects LABEL=N, got " + spec);
              std::size_t n = 0;
              try {
                n = std::stoul(spec.substr(eq + 1));
              } catch (const std::exception&) {
                throw UsageError("--class expects LABEL=N, got " + spec);
              }
              config.class_targets[spec.substr(0, eq)] = n;
            }
            const auto result = balance_dataset(seeds, config, g.seed);
            write_records(g.output, result.records);
            report(o->report, result.report_json());
            if (!result.target_reached()) {
              for (const auto& [label, missing] : result.shortfall) {
                std::cerr << "target unreachable: " << label << " short by " << missing << "\n";
              }
            }
            return 0;
          }};
}

Command variants_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("variants", "Subdivided evaluation sets, one JSONL file per scheme");
  struct Opts {
    std::string dir;
    std::size_t per_class = kDefaultEvalPerClass;
    std::vector<std::string> schemes;
    bool no_graded = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--output-dir", o->dir, "Directory for <scheme>.jsonl files")->required();
  sub->add_option("--per-class", o->per_class, "Records per class and scheme")->check(CLI::PositiveNumber);
  sub->add_option("--scheme", o->schemes, "Scheme name (repeatable; default: full grid)");
  sub->add_flag("--no-graded", o->no_graded, "Leave graded-16..20 out of the default grid");
  return {sub, [&g, o] {
            std::vector<SubdivisionScheme> which;
            for (const auto& name : o->schemes) {
              const auto s = SubdivisionScheme::parse(name);
              if (!s) throw UsageError("unknown scheme '" + name + "'");
              which.push_back(*s);
            }
            if (which.empty()) which = default_variant_grid(!o->no_graded);
            const auto records = read_records(g.input, !g.no_validate);
            const auto sets = make_eval_variants(records, which, o->per_class, g.seed, g.jobs);
            std::filesystem::create_directories(o->dir);
            std::vector<ordered_json> rows;
            for (const auto& set : sets) {
              const auto path = std::filesystem::path(o->dir) / (set.name + ".jsonl");
              write_records(path.string(), set.records);
              ordered_json j;
              j["variant"] = set.name;
              j["records"] = set.records.size();
              j["path"] = path.string();
              rows.push_back(std::move(j));
            }
            write_text(g.output, jsonl(rows));
            return 0;
          }};
}

Command split_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("split", "Tag records train/val/test");
  struct Opts {
    std::vector<double> ratios{0.6, 0.2, 0.2};
    bool stratify = false;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--ratios", o->ratios, "train,val,test fractions")->delimiter(',')->expected(3);
  sub->add_flag("--stratify", o->stratify, "Round split sizes per class");
  return {sub, [&g, o] {
            const auto records = read_records(g.input, !g.no_validate);
            const SplitRatios ratios{o->ratios[0], o->ratios[1], o->ratios[2]};
            write_records(g.output, split_dataset(records, ratios, g.seed, o->stratify));
            return 0;
          }};
}

Command ec_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("ec-baseline", "Euler-characteristic majority baseline, balanced accuracy");
  struct Opts {
    std::optional<std::string> eval;
    std::string mode = "chi+orient";
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--eval", o->eval, "Evaluation records (default: the test split of the input)");
  sub->add_option("--ec-mode", o->mode, "Bucket key")->check(CLI::IsMember({"chi", "chi+orient"}));
  return {sub, [&g, o] {
            const auto records = read_records(g.input, !g.no_validate);
            std::vector<DatasetRecord> train, eval;
            if (o->eval) {
              train = records;
              eval = read_records(*o->eval, !g.no_validate);
            } else {
              for (const auto& r : records) {
                if (r.split == Split::kTrain) train.push_back(r);
                if (r.split == Split::kTest) eval.push_back(r);
              }
              if (train.empty() && eval.empty()) throw UsageError("input has no split tags; run split or pass --eval");
            }
            const auto mode = o->mode == "chi" ? EcMode::kChi : EcMode::kChiOrientability;
            ordered_json j;
            j["mode"] = o->mode;
            j["train"] = train.size();
            j["eval"] = eval.size();
            j["balanced_accuracy"] = ec_baseline(train, eval, mode);
            write_text(g.output, j.dump() + "\n");
            return 0;
          }};
}

Command export_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("export-graph", "Graph representation with node features, one JSON line per record");
  struct Opts {
    std::string repr = "skeleton";
    std::string encode = "r";
    bool directed = false;
    std::size_t feature_dim = kDefaultRandomFeatureDim;
    std::size_t rwpe_steps = kDefaultRwpeSteps;
  };
  auto o = std::make_shared<Opts>();
  sub->add_option("--repr", o->repr, "Representation")
      ->check(CLI::IsMember({"skeleton", "dual", "hasse", "incidence"}));
  sub->add_option("--encode", o->encode, "Node features")->check(CLI::IsMember({"r", "d", "rwpe", "mc"}));
  sub->add_flag("--directed", o->directed, "Keep Hasse edges directed (simplex to face)");
  sub->add_option("--feature-dim", o->feature_dim, "Width of random features")->check(CLI::PositiveNumber);
  sub->add_option("--rwpe-steps", o->rwpe_steps, "Random-walk steps")->check(CLI::PositiveNumber);
  return {sub, [&g, o] {
            if (o->directed && o->repr != "hasse") throw UsageError("--directed only applies to --repr hasse");
            const auto kind = *parse_encoding_kind(o->encode);
            std::vector<ordered_json> rows;
            for (const auto& r : read_records(g.input, !g.no_validate)) {
              const auto c = r.complex();
              RepresentationGraph graph;
              if (o->repr == "skeleton") graph = skeleton_graph(c);
              else if (o->repr == "dual") graph = dual_graph(c);
              else if (o->repr == "hasse") graph = hasse_diagram(c, o->directed);
              else graph = incidence_graph(c);

              FeatureMatrix features;
              switch (kind) {
                case EncodingKind::kRandom:
                  features = encode_random(graph, o->feature_dim, derive_seed(g.seed, r.id, "encode-random"));
                  break;
                case EncodingKind::kDegree: features = encode_degree(graph); break;
                case EncodingKind::kRwpe: features = encode_rwpe(graph, o->rwpe_steps); break;
                case EncodingKind::kMomentCurve: features = encode_moment_curve(graph, c.dimension()); break;
              }

              ordered_json j;
              j["id"] = r.id;
              j["label"] = r.label;
              j["split"] = r.split ? ordered_json(to_string(*r.split)) : ordered_json(nullptr);
              j["representation"] = to_string(graph.kind);
              j["directed"] = graph.directed;
              auto nodes = ordered_json::array();
              for (const auto& n : graph.nodes) {
                ordered_json node;
                node["role"] = to_string(n.role);
                node["dimension"] = n.dimension();
                node["simplex"] = vertices_of(n.simplex);
                nodes.push_back(std::move(node));
              }
              j["nodes"] = std::move(nodes);
              auto edges = ordered_json::array();
              for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
              j["edges"] = std::move(edges);
              j["encoding"] = to_string(kind);
              auto rows_json = ordered_json::array();
              for (std::size_t i = 0; i < features.rows; ++i) rows_json.push_back(features.row(i));
              j["features"] = std::move(rows_json);
              rows.push_back(std::move(j));
            }
            write_text(g.output, jsonl(rows));
            return 0;
          }};
}

Command stats_cmd(CLI::App& app, const GlobalOptions& g) {
  auto* sub = app.add_subcommand("stats", "Class, split, provenance and size summary");
  return {sub, [&g] {
            const auto records = read_records(g.input, !g.no_validate);
            std::map<std::string, std::size_t> classes, splits, provenance, dims;
            std::size_t vmin = 0, vmax = 0, vsum = 0;
            for (const auto& r : records) {
              ++classes[r.label];
              ++splits[r.split ? std::string(to_string(*r.split)) : "none"];
              ++provenance[std::string(to_string(r.provenance.kind))];
              ++dims[std::to_string(r.dimension)];
              const auto n = r.complex().vertex_count();
              vmin = vsum == 0 ? n : std::min(vmin, n);
              vmax = std::max(vmax, n);
              vsum += n;
            }
            ordered_json j;
            j["records"] = records.size();
            j["dimensions"] = dims;
            j["classes"] = classes;
            j["splits"] = splits;
            j["provenance"] = provenance;
            j["vertices"] = {{"min", vmin},
                             {"max", vmax},
                             {"mean", records.empty() ? 0.0 : static_cast<double>(vsum) / records.size()}};
            write_text(g.output, j.dump() + "\n");
            return 0;
          }};
}

}  // namespace

std::vector<Command> register_commands(CLI::App& app, const GlobalOptions& global) {
  return {validate_cmd(app, global), invariants_cmd(app, global), classify_cmd(app, global),
          walk_cmd(app, global),     consum_cmd(app, global),     subdivide_cmd(app, global),
          dedup_cmd(app, global),    balance_cmd(app, global),    variants_cmd(app, global),
          split_cmd(app, global),    ec_cmd(app, global),         export_cmd(app, global),
          stats_cmd(app, global)};
}

}  // namespace topomani::cli
