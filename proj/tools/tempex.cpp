// Command-line entry point: synth, train, predict, evaluate, solve, stats.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "tempex/data_io.hpp"
#include "tempex/eval.hpp"
#include "tempex/inference.hpp"
#include "tempex/learning.hpp"

namespace {

using namespace tempex;
using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Configuration files: `key = value` lines, `#` comments, unknown keys are
// rejected. Command-line flags override file values.

std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto begin = s.find_first_not_of(" \t\r");
    const auto end = s.find_last_not_of(" \t\r");
    return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
  };
  while (std::getline(is, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": expected `key = value`");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error(path + " line " + std::to_string(line_no) +
                               ": empty key");
    kv[key] = value;
  }
  return kv;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::runtime_error("config key `" + key + "`: expected a boolean, got `" +
                           value + "`");
}

struct RunConfig {
  TrainConfig train;
  SynthConfig synth;
  std::string mode = "structured";
  std::string metric = "exclude-none";
};

void apply_config(RunConfig& config, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    try {
      if (key == "c") config.train.c = std::stod(value);
      else if (key == "c_event") config.train.c_event = std::stod(value);
      else if (key == "event_weight") config.train.event_weight = std::stod(value);
      else if (key == "t_event") config.train.t_event = std::stod(value);
      else if (key == "gold_epochs") config.train.gold_epochs = std::stoi(value);
      else if (key == "total_epochs") config.train.total_epochs = std::stoi(value);
      else if (key == "stage2_epochs") config.train.stage2_epochs = std::stoi(value);
      else if (key == "learning_rate") config.train.learning_rate = std::stod(value);
      else if (key == "decay") config.train.decay = std::stod(value);
      else if (key == "decay_every") config.train.decay_every = std::stoi(value);
      else if (key == "momentum") config.train.momentum = std::stod(value);
      else if (key == "l2") config.train.l2 = std::stod(value);
      else if (key == "dropout") config.train.dropout = std::stod(value);
      else if (key == "seed") {
        config.train.seed = std::stoull(value);
        config.synth.seed = config.train.seed;
      } else if (key == "scorer_kind") config.train.scorer_kind = value;
      else if (key == "hidden_dim") config.train.hidden_dim = std::stoi(value);
      else if (key == "window") config.train.window = std::stoi(value);
      else if (key == "embedding_dim") {
        config.train.embedding_dim = std::stoi(value);
        config.synth.embedding_dim = config.train.embedding_dim;
      } else if (key == "shared_encoder")
        config.train.shared_encoder = parse_bool(key, value);
      else if (key == "pos_filter") config.train.pos_filter = parse_bool(key, value);
      else if (key.rfind("class_weight.", 0) == 0)
        config.train.class_weights[relation_label_from_string(
            key.substr(std::string("class_weight.").size()))] = std::stod(value);
      else if (key == "mode") config.mode = value;
      else if (key == "metric") config.metric = value;
      else if (key == "documents") config.synth.documents = std::stoi(value);
      else if (key == "sentences_per_doc") config.synth.sentences_per_doc = std::stoi(value);
      else if (key == "tokens_per_sentence")
        config.synth.tokens_per_sentence = std::stoi(value);
      else if (key == "event_rate") config.synth.event_rate = std::stod(value);
      else if (key == "vague_rate") config.synth.vague_rate = std::stod(value);
      else if (key == "noise") config.synth.noise = std::stod(value);
      else throw std::runtime_error("config: unknown key `" + key + "`");
    } catch (const std::invalid_argument&) {
      throw std::runtime_error("config key `" + key + "`: cannot parse value `" +
                               value + "`");
    }
  }
}

// Presets seeded from the published hyper-parameters of the two corpora.
void apply_profile(RunConfig& config, const std::string& profile) {
  if (profile == "tbdense") {
    config.train.learning_rate = 0.0005;
    config.train.decay = 0.1;
    config.train.momentum = 0.2;
    config.train.c_event = 0.1;
    config.train.t_event = 0.49;
    config.train.event_weight = 6.0;
    config.metric = "exclude-none";
  } else if (profile == "matres") {
    config.train.learning_rate = 0.001;
    config.train.decay = 0.1;
    config.train.momentum = 0.1;
    config.train.c_event = 5.0;
    config.train.t_event = 0.4;
    config.train.event_weight = 15.0;
    config.metric = "exclude-none-vague";
  } else {
    throw std::runtime_error("unknown profile: " + profile +
                             " (expected tbdense or matres)");
  }
}

std::set<RelationLabel> metric_exclusions(const std::string& metric) {
  if (metric == "exclude-none") return {RelationLabel::NONE};
  if (metric == "exclude-none-vague")
    return {RelationLabel::NONE, RelationLabel::VAGUE};
  throw std::runtime_error("unknown metric profile: " + metric);
}

// ---------------------------------------------------------------------------
// Predictions file: one JSON object per document with every candidate key.

json assignment_to_json(const std::string& doc_id, const JointAssignment& assignment) {
  json j;
  j["doc_id"] = doc_id;
  j["events"] = json::array();
  for (const auto& [k, label] : assignment.events)
    j["events"].push_back({{"index", k}, {"label", to_string(label)}});
  j["relations"] = json::array();
  for (const auto& [key, label] : assignment.relations)
    j["relations"].push_back(
        {{"src", key.first}, {"tgt", key.second}, {"label", to_string(label)}});
  return j;
}

std::vector<std::pair<std::string, JointAssignment>> read_predictions(
    const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open predictions file: " + path);
  std::vector<std::pair<std::string, JointAssignment>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      JointAssignment a;
      for (const json& e : j.at("events"))
        a.events[e.at("index").get<int>()] =
            event_label_from_string(e.at("label").get<std::string>());
      for (const json& r : j.at("relations"))
        a.relations[{r.at("src").get<int>(), r.at("tgt").get<int>()}] =
            relation_label_from_string(r.at("label").get<std::string>());
      out.push_back({j.at("doc_id").get<std::string>(), std::move(a)});
    } catch (const std::exception& e) {
      throw std::runtime_error("predictions line " + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// solve: offline inference over a plain-text score file.
//   EVENTS n PAIRS m
//   k s_nonevent s_event                   (n lines)
//   i j s_before s_after s_includes s_is_included s_simultaneous s_vague s_none

std::pair<ScoreTable, CandidateSet> read_score_file(std::istream& is) {
  std::string word;
  int n_events = 0, n_pairs = 0;
  std::string events_kw, pairs_kw;
  if (!(is >> events_kw >> n_events >> pairs_kw >> n_pairs) || events_kw != "EVENTS" ||
      pairs_kw != "PAIRS")
    throw std::runtime_error("score file: expected header `EVENTS n PAIRS m`");
  ScoreTable scores;
  CandidateSet candidates;
  for (int row = 0; row < n_events; ++row) {
    int k;
    double s0, s1;
    if (!(is >> k >> s0 >> s1))
      throw std::runtime_error("score file: bad event line " + std::to_string(row + 1));
    if (scores.event_scores.count(k))
      throw std::runtime_error("score file: duplicate event candidate " +
                               std::to_string(k));
    scores.event_scores[k] = {s0, s1};
  }
  for (int row = 0; row < n_pairs; ++row) {
    int i, j;
    std::array<double, kNumRelationLabels> s{};
    if (!(is >> i >> j))
      throw std::runtime_error("score file: bad pair line " + std::to_string(row + 1));
    for (int r = 0; r < kNumRelationLabels; ++r)
      if (!(is >> s[r]))
        throw std::runtime_error("score file: bad pair line " + std::to_string(row + 1));
    if (scores.relation_scores.count({i, j}))
      throw std::runtime_error("score file: duplicate pair");
    scores.relation_scores[{i, j}] = s;
  }
  for (const auto& [k, s] : scores.event_scores) candidates.event_candidates.push_back(k);
  for (const auto& [key, s] : scores.relation_scores)
    candidates.relation_candidates.push_back(key);
  return {std::move(scores), std::move(candidates)};
}

// ---------------------------------------------------------------------------

std::optional<std::map<std::pair<std::string, int>, Vector>> maybe_load_embeddings(
    const std::string& path) {
  if (path.empty()) return std::nullopt;
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open embedding file: " + path);
  int dim = 0;
  return load_embedding_file(is, &dim);
}

int cmd_train(const RunConfig& run, const std::string& corpus_path,
              const std::string& embeddings_path, const std::string& out_path,
              const std::string& log_path) {
  std::vector<std::string> warnings;
  const std::vector<Document> corpus = load_corpus_file(corpus_path, &warnings);
  for (const std::string& w : warnings) std::cerr << "warning: " << w << '\n';

  TrainConfig config = run.train;
  if (run.mode == "single") {
    config.shared_encoder = false;
    config.gold_epochs = config.total_epochs;
  } else if (run.mode == "multi") {
    config.shared_encoder = true;
    config.gold_epochs = config.total_epochs;
  } else if (run.mode == "pipeline" || run.mode == "structured") {
    config.shared_encoder = true;
  } else {
    throw std::runtime_error("unknown mode: " + run.mode);
  }

  Model model = Model::create(corpus, config, maybe_load_embeddings(embeddings_path));

  std::ostringstream log;
  const auto stage1 = train_stage1(model, corpus, config);
  for (const auto& e : stage1)
    log << "stage1 epoch " << e.epoch << " event_loss " << e.event_loss
        << " relation_loss " << e.relation_loss << " pairs " << e.relation_pairs
        << " none_pairs " << e.none_pairs << " fp_events " << e.false_positive_events
        << (e.used_predicted_events ? " [predicted]" : " [gold]") << '\n';
  if (run.mode == "structured") {
    const auto stage2 = train_stage2(model, corpus, config);
    for (const auto& e : stage2)
      log << "stage2 epoch " << e.epoch << " ssvm_loss " << e.ssvm_loss
          << " active_hinges " << e.active_hinges << '\n';
  }

  model.save(out_path);
  std::cout << log.str();
  if (!log_path.empty()) {
    std::ofstream os(log_path);
    if (!os) throw std::runtime_error("cannot open log file: " + log_path);
    os << log.str();
  }
  std::cout << "checkpoint written to " << out_path << '\n';
  return 0;
}

InferenceMode parse_constraints(const std::string& value) {
  if (value == "none") return InferenceMode::LOCAL;
  if (value == "consistency") return InferenceMode::CONSISTENCY;
  if (value == "full") return InferenceMode::FULL;
  throw std::runtime_error("unknown constraint set: " + value +
                           " (expected none, consistency, or full)");
}

int cmd_predict(const std::string& checkpoint_path, const std::string& corpus_path,
                const std::string& embeddings_path, const std::string& out_path,
                const std::string& constraints, int jobs) {
  Model model = Model::load(checkpoint_path);
  if (model.frozen_embeddings()) {
    auto frozen = maybe_load_embeddings(embeddings_path);
    if (!frozen)
      throw std::runtime_error(
          "checkpoint uses frozen embeddings; pass --embeddings");
    model.attach_frozen_embeddings(std::move(*frozen));
  }
  const std::vector<Document> corpus = load_corpus_file(corpus_path);
  const InferenceMode mode = parse_constraints(constraints);

  std::vector<std::string> lines(corpus.size());
  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t d = begin; d < end; ++d) {
      const JointAssignment pred = predict(model, corpus[d], model.config(), mode);
      lines[d] = assignment_to_json(corpus[d].doc_id, pred).dump();
    }
  };
  const int n_jobs = std::max(1, jobs);
  if (n_jobs == 1 || corpus.size() < 2) {
    worker(0, corpus.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (corpus.size() + n_jobs - 1) / n_jobs;
    for (std::size_t begin = 0; begin < corpus.size(); begin += chunk)
      pool.emplace_back(worker, begin, std::min(begin + chunk, corpus.size()));
    for (std::thread& t : pool) t.join();
  }

  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot open output file: " + out_path);
  for (const std::string& line : lines) os << line << '\n';
  std::cout << "predictions for " << corpus.size() << " documents written to "
            << out_path << '\n';
  return 0;
}

int cmd_evaluate(const std::string& gold_path, const std::string& pred_path,
                 const std::string& metric, const std::string& json_out) {
  const std::vector<Document> gold_corpus = load_corpus_file(gold_path);
  const auto predictions = read_predictions(pred_path);
  std::map<std::string, const JointAssignment*> by_id;
  for (const auto& [doc_id, assignment] : predictions) {
    if (!by_id.emplace(doc_id, &assignment).second)
      throw std::runtime_error("predictions contain duplicate doc_id " + doc_id);
  }

  ConfusionMatrix cm;
  std::set<std::string> seen;
  for (const Document& doc : gold_corpus) {
    auto it = by_id.find(doc.doc_id);
    if (it == by_id.end())
      throw std::runtime_error("no prediction for document " + doc.doc_id);
    seen.insert(doc.doc_id);
    const JointAssignment& pred_in = *it->second;

    // Score over the union of predicted and gold keys; keys one side lacks
    // default to NON_EVENT / NONE, so missed gold pairs still count.
    JointAssignment gold, pred;
    std::set<int> event_keys;
    for (const auto& [k, label] : pred_in.events) {
      if (k < 0 || k >= static_cast<int>(doc.tokens.size()))
        throw std::runtime_error("document " + doc.doc_id +
                                 ": predicted event index out of range");
      event_keys.insert(k);
    }
    for (int k : doc.gold_events) event_keys.insert(k);
    for (int k : event_keys) {
      auto pe = pred_in.events.find(k);
      pred.events[k] = pe == pred_in.events.end() ? EventLabel::NON_EVENT : pe->second;
      gold.events[k] =
          doc.is_gold_event(k) ? EventLabel::EVENT : EventLabel::NON_EVENT;
    }
    std::set<PairKey> pair_keys;
    for (const auto& [key, label] : pred_in.relations) {
      if (key.first >= key.second || key.second >= static_cast<int>(doc.tokens.size()))
        throw std::runtime_error("document " + doc.doc_id +
                                 ": predicted pair key out of range");
      pair_keys.insert(key);
    }
    for (const auto& [key, label] : doc.gold_relations) pair_keys.insert(key);
    for (const PairKey& key : pair_keys) {
      auto pr = pred_in.relations.find(key);
      pred.relations[key] =
          pr == pred_in.relations.end() ? RelationLabel::NONE : pr->second;
      gold.relations[key] = doc.gold_relation(key.first, key.second);
    }
    accumulate(gold, pred, cm);
  }
  if (seen.size() != by_id.size())
    throw std::runtime_error("predictions contain documents missing from the gold corpus");

  const std::set<RelationLabel> excluded = metric_exclusions(metric);
  std::cout << render_report(cm, excluded);

  if (!json_out.empty()) {
    const MicroScores rel = micro_prf(cm, excluded);
    const MicroScores ev = event_prf(cm);
    json j;
    j["metric"] = metric;
    j["relation"] = {{"precision", rel.precision}, {"recall", rel.recall},
                     {"f1", rel.f1},               {"correct", rel.correct},
                     {"predicted", rel.predicted}, {"gold", rel.gold},
                     {"undefined", rel.undefined}};
    j["event"] = {{"precision", ev.precision},
                  {"recall", ev.recall},
                  {"f1", ev.f1},
                  {"undefined", ev.undefined}};
    j["per_label"] = json::array();
    for (const LabelScores& s : per_label_report(cm)) {
      json row;
      row["label"] = to_string(s.label);
      row["absent"] = s.absent;
      if (!s.absent) {
        row["precision"] = s.precision;
        row["recall"] = s.recall;
        row["f1"] = s.f1;
      }
      j["per_label"].push_back(row);
    }
    std::ofstream os(json_out);
    if (!os) throw std::runtime_error("cannot open json output: " + json_out);
    os << j.dump(2) << '\n';
  }
  return 0;
}

int cmd_solve(const std::string& scores_path, double c_event) {
  std::ifstream is(scores_path);
  if (!is) throw std::runtime_error("cannot open score file: " + scores_path);
  auto [scores, candidates] = read_score_file(is);
  const ILPInstance instance = build_ilp(scores, candidates, c_event);
  const JointAssignment assignment = solve_exact(instance);
  std::cout << std::setprecision(12);
  for (const auto& [k, label] : assignment.events)
    std::cout << k << ' ' << to_string(label) << '\n';
  for (const auto& [key, label] : assignment.relations)
    std::cout << key.first << ' ' << key.second << ' ' << to_string(label) << '\n';
  std::cout << "objective " << objective_value(instance, assignment) << '\n';
  return 0;
}

int cmd_stats(const std::vector<std::string>& corpus_paths,
              const std::vector<std::string>& names) {
  std::vector<std::pair<std::string, DatasetStats>> splits;
  for (std::size_t i = 0; i < corpus_paths.size(); ++i) {
    const std::string name = i < names.size()
                                 ? names[i]
                                 : "split" + std::to_string(i + 1);
    splits.push_back({name, dataset_stats(load_corpus_file(corpus_paths[i]))});
  }
  std::cout << render_stats(splits);
  return 0;
}

int cmd_synth(const SynthConfig& config, const std::string& out_path,
              const std::string& embeddings_out) {
  const SynthCorpus synth = generate_synthetic(config);
  save_corpus_file(out_path, synth.documents);
  if (!embeddings_out.empty()) {
    std::ofstream os(embeddings_out);
    if (!os) throw std::runtime_error("cannot open embedding output: " + embeddings_out);
    save_embedding_file(os, synth.embeddings, config.embedding_dim);
  }
  std::cout << "wrote " << synth.documents.size() << " documents to " << out_path;
  if (!embeddings_out.empty()) std::cout << " (embeddings: " << embeddings_out << ")";
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint event and temporal-relation extraction with exact ILP inference"};
  app.require_subcommand(1);

  std::string config_path, profile;
  app.add_option("--config", config_path, "key = value configuration file")
      ->expected(1);
  app.add_option("--profile", profile, "named preset: tbdense or matres");

  RunConfig run;

  // train
  auto* train = app.add_subcommand("train", "two-stage training");
  std::string train_corpus, train_embeddings, train_out = "model.json", train_log;
  std::string mode_flag, seed_flag;
  train->add_option("--corpus", train_corpus, "training corpus (jsonl)")->required();
  train->add_option("--embeddings", train_embeddings,
                    "frozen per-token embedding file");
  train->add_option("--out", train_out, "checkpoint path");
  train->add_option("--log", train_log, "per-epoch metrics log");
  train->add_option("--mode", mode_flag, "single | multi | pipeline | structured");
  train->add_option("--seed", seed_flag, "random seed override");

  // predict
  auto* predict_cmd = app.add_subcommand("predict", "joint prediction");
  std::string pred_checkpoint, pred_corpus, pred_embeddings, pred_out = "predictions.jsonl";
  std::string constraints = "full";
  int jobs = 1;
  predict_cmd->add_option("--checkpoint", pred_checkpoint, "model checkpoint")->required();
  predict_cmd->add_option("--corpus", pred_corpus, "input corpus (jsonl)")->required();
  predict_cmd->add_option("--embeddings", pred_embeddings, "frozen embedding file");
  predict_cmd->add_option("--out", pred_out, "predictions output (jsonl)");
  predict_cmd->add_option("--constraints", constraints, "none | consistency | full");
  predict_cmd->add_option("--jobs", jobs, "parallel documents (ordered output)");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score predictions against gold");
  std::string eval_gold, eval_pred, metric_flag, eval_json;
  evaluate->add_option("--gold", eval_gold, "gold corpus (jsonl)")->required();
  evaluate->add_option("--pred", eval_pred, "predictions (jsonl)")->required();
  evaluate->add_option("--metric", metric_flag,
                       "exclude-none | exclude-none-vague");
  evaluate->add_option("--json", eval_json, "machine-readable report path");

  // solve
  auto* solve = app.add_subcommand("solve", "MAP inference over a score file");
  std::string solve_scores;
  double solve_c_event = 1.0;
  solve->add_option("--scores", solve_scores, "score file")->required();
  solve->add_option("--c-event", solve_c_event, "event coefficient weight");

  // stats
  auto* stats = app.add_subcommand("stats", "dataset statistics");
  std::vector<std::string> stats_corpora, stats_names;
  stats->add_option("--corpus", stats_corpora, "corpus file (repeatable)")->required();
  stats->add_option("--name", stats_names, "split name (repeatable)");

  // synth
  auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
  std::string synth_out = "synthetic.jsonl", synth_emb;
  synth->add_option("--out", synth_out, "corpus output path");
  synth->add_option("--embeddings-out", synth_emb, "embedding file output path");
  std::string synth_seed;
  int synth_docs = -1, synth_sents = -1, synth_tokens = -1, synth_dim = -1;
  double synth_event_rate = -1, synth_vague_rate = -1, synth_noise = -1;
  synth->add_option("--seed", synth_seed, "random seed");
  synth->add_option("--documents", synth_docs, "number of documents");
  synth->add_option("--sentences", synth_sents, "sentences per document");
  synth->add_option("--tokens", synth_tokens, "tokens per sentence");
  synth->add_option("--event-rate", synth_event_rate, "event probability per token");
  synth->add_option("--vague-rate", synth_vague_rate, "VAGUE re-label probability");
  synth->add_option("--noise", synth_noise, "embedding corruption sigma");
  synth->add_option("--dim", synth_dim, "embedding dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!profile.empty()) apply_profile(run, profile);
    if (!config_path.empty()) apply_config(run, parse_config_file(config_path));

    if (*train) {
      if (!mode_flag.empty()) run.mode = mode_flag;
      if (!seed_flag.empty()) run.train.seed = std::stoull(seed_flag);
      return cmd_train(run, train_corpus, train_embeddings, train_out, train_log);
    }
    if (*predict_cmd)
      return cmd_predict(pred_checkpoint, pred_corpus, pred_embeddings, pred_out,
                         constraints, jobs);
    if (*evaluate) {
      if (!metric_flag.empty()) run.metric = metric_flag;
      return cmd_evaluate(eval_gold, eval_pred, run.metric, eval_json);
    }
    if (*solve) return cmd_solve(solve_scores, solve_c_event);
    if (*stats) return cmd_stats(stats_corpora, stats_names);
    if (*synth) {
      if (!synth_seed.empty()) run.synth.seed = std::stoull(synth_seed);
      if (synth_docs >= 0) run.synth.documents = synth_docs;
      if (synth_sents >= 0) run.synth.sentences_per_doc = synth_sents;
      if (synth_tokens >= 0) run.synth.tokens_per_sentence = synth_tokens;
      if (synth_dim >= 0) run.synth.embedding_dim = synth_dim;
      if (synth_event_rate >= 0) run.synth.event_rate = synth_event_rate;
      if (synth_vague_rate >= 0) run.synth.vague_rate = synth_vague_rate;
      if (synth_noise >= 0) run.synth.noise = synth_noise;
      return cmd_synth(run.synth, synth_out, synth_emb);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
