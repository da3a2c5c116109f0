#include "tempex/learning.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace tempex {

namespace {

using json = nlohmann::ordered_json;

Vector one_hot(int size, int index) {
  Vector v = Vector::Zero(size);
  v[index] = 1.0;
  return v;
}

}  // namespace

double TrainConfig::lr_at(int epoch) const {
  return learning_rate * std::pow(decay, epoch / decay_every);
}

void TrainConfig::validate() const {
  if (c <= 0) throw std::invalid_argument("c must be positive");
  if (c_event <= 0) throw std::invalid_argument("c_event must be positive");
  if (event_weight <= 0) throw std::invalid_argument("event_weight must be positive");
  if (t_event < 0 || t_event > 1)
    throw std::invalid_argument("t_event must lie in [0, 1]");
  if (learning_rate <= 0) throw std::invalid_argument("learning_rate must be positive");
  if (decay <= 0) throw std::invalid_argument("decay must be positive");
  if (decay_every <= 0) throw std::invalid_argument("decay_every must be positive");
  if (momentum < 0 || momentum >= 1)
    throw std::invalid_argument("momentum must lie in [0, 1)");
  if (l2 < 0) throw std::invalid_argument("l2 must be nonnegative");
  if (gold_epochs < 0 || total_epochs < 0 || stage2_epochs < 0)
    throw std::invalid_argument("epoch counts must be nonnegative");
  if (hidden_dim <= 0 || embedding_dim <= 0 || window < 0)
    throw std::invalid_argument("model dimensions must be positive");
  for (const auto& [label, weight] : class_weights)
    if (weight <= 0) throw std::invalid_argument("class weights must be positive");
}

Model Model::create(
    const std::vector<Document>& corpus, const TrainConfig& config,
    const std::optional<std::map<std::pair<std::string, int>, Vector>>& frozen) {
  config.validate();
  Model model;
  model.config_ = config;

  if (config.pos_filter) {
    std::set<std::string> tags;
    for (const Document& doc : corpus)
      for (int k : doc.gold_events) tags.insert(doc.tokens.at(k).pos);
    model.whitelist_ = PosWhitelist::from_tags(std::move(tags));
  } else {
    model.whitelist_ = PosWhitelist::everything();
  }

  int dim = config.embedding_dim;
  if (frozen && !frozen->empty()) dim = static_cast<int>(frozen->begin()->second.size());
  model.feature_config_ = make_feature_config(corpus, config.window, dim);
  model.config_.embedding_dim = dim;

  if (frozen) {
    model.frozen_mode_ = true;
    model.event_table_ = std::make_shared<EmbeddingTable>(*frozen, dim);
    model.relation_table_ = model.event_table_;
  } else {
    std::vector<std::string> words;
    for (const Document& doc : corpus)
      for (const Token& t : doc.tokens) words.push_back(t.text);
    model.event_table_ = std::make_shared<EmbeddingTable>(words, dim, config.seed + 11);
    model.relation_table_ = config.shared_encoder
                                ? model.event_table_
                                : std::make_shared<EmbeddingTable>(*model.event_table_);
  }
  model.event_encoder_ =
      std::make_unique<FeatureEncoder>(model.feature_config_, model.event_table_);
  model.relation_encoder_ =
      std::make_unique<FeatureEncoder>(model.feature_config_, model.relation_table_);

  model.event_scorer_ =
      make_scorer(config.scorer_kind, model.feature_config_.event_feature_dim(),
                  config.hidden_dim, kNumEventLabels, config.seed + 21);
  model.relation_scorer_ =
      make_scorer(config.scorer_kind, model.feature_config_.relation_feature_dim(),
                  config.hidden_dim, kNumRelationLabels, config.seed + 22);
  return model;
}

Vector Model::flatten_params() const {
  std::vector<Vector> parts;
  parts.push_back(event_scorer_->flatten());
  parts.push_back(relation_scorer_->flatten());
  if (!frozen_mode_) {
    parts.push_back(event_table_->flatten());
    if (relation_table_ != event_table_) parts.push_back(relation_table_->flatten());
  }
  Eigen::Index total = 0;
  for (const Vector& p : parts) total += p.size();
  Vector flat(total);
  Eigen::Index at = 0;
  for (const Vector& p : parts) {
    flat.segment(at, p.size()) = p;
    at += p.size();
  }
  return flat;
}

void Model::unflatten_params(const Vector& flat) {
  Eigen::Index at = 0;
  auto take = [&](Eigen::Index n) {
    if (at + n > flat.size())
      throw std::invalid_argument("parameter vector too short for model");
    Vector part = flat.segment(at, n);
    at += n;
    return part;
  };
  event_scorer_->unflatten(take(event_scorer_->flatten().size()));
  relation_scorer_->unflatten(take(relation_scorer_->flatten().size()));
  if (!frozen_mode_) {
    event_table_->unflatten(take(event_table_->flatten().size()));
    if (relation_table_ != event_table_)
      relation_table_->unflatten(take(relation_table_->flatten().size()));
  }
  if (at != flat.size())
    throw std::invalid_argument("parameter vector too long for model");
}

ScoreTable Model::score_document(const Document& doc,
                                 const CandidateSet& candidates) const {
  if (!has_embeddings())
    throw std::runtime_error("model has no embeddings attached");
  return build_score_table(doc, candidates, *event_encoder_, *event_scorer_,
                           *relation_encoder_, *relation_scorer_);
}

double Model::event_probability(const Document& doc, int k) const {
  const Vector s = event_scorer_->score(event_encoder_->event_features(doc, k));
  return softmax(s)[1];
}

Vector softmax(const Vector& scores) {
  const double m = scores.maxCoeff();
  Vector e = (scores.array() - m).exp();
  return e / e.sum();
}

double cross_entropy_loss(const Vector& scores, int gold, double class_weight) {
  const double m = scores.maxCoeff();
  const double lse = m + std::log((scores.array() - m).exp().sum());
  return -class_weight * (scores[gold] - lse);
}

namespace {

// Per-step gradient buffers and momentum state for all trainable groups.
struct GradBuffer {
  Vector event_scorer;
  Vector relation_scorer;
  EmbeddingGrad event_table;
  EmbeddingGrad relation_table;  // used only with separate trainable tables
  bool any = false;

  void reset(const Model& model) {
    event_scorer = Vector::Zero(model.event_scorer().flatten().size());
    relation_scorer = Vector::Zero(model.relation_scorer().flatten().size());
    event_table.clear();
    relation_table.clear();
    any = false;
  }
};

struct ModelAccessors {
  std::shared_ptr<EmbeddingTable> event_table;
  std::shared_ptr<EmbeddingTable> relation_table;
};

}  // namespace

// Grants the trainer access to the embedding tables without widening the
// public surface.
struct ModelAccess {
  static ModelAccessors tables(Model& model) {
    return {model.event_table_, model.relation_table_};
  }
};

namespace {

struct SgdState {
  Vector v_event_scorer, v_relation_scorer, v_event_table, v_relation_table;

  void init(Model& model) {
    v_event_scorer = Vector::Zero(model.event_scorer().flatten().size());
    v_relation_scorer = Vector::Zero(model.relation_scorer().flatten().size());
    auto tables = ModelAccess::tables(model);
    if (!model.frozen_embeddings()) {
      v_event_table = Vector::Zero(tables.event_table->flatten().size());
      if (tables.relation_table != tables.event_table)
        v_relation_table = Vector::Zero(tables.relation_table->flatten().size());
    }
  }
};

void momentum_update(Vector& params, const Vector& grad, Vector& velocity, double lr,
                     double momentum, double l2) {
  Vector g = grad;
  if (l2 > 0) g += 2.0 * l2 * params;
  velocity = momentum * velocity - lr * g;
  params += velocity;
}

void table_update(EmbeddingTable& table, const EmbeddingGrad& sparse, Vector& velocity,
                  double lr, double momentum, double l2) {
  Vector params = table.flatten();
  Vector grad = Vector::Zero(params.size());
  const int dim = table.dim();
  for (const auto& [row, g] : sparse)
    grad.segment(static_cast<Eigen::Index>(row) * dim, dim) += g;
  momentum_update(params, grad, velocity, lr, momentum, l2);
  table.unflatten(params);
}

void apply_step(Model& model, GradBuffer& grads, SgdState& state, double lr,
                double momentum, double l2) {
  Vector p = model.event_scorer().flatten();
  momentum_update(p, grads.event_scorer, state.v_event_scorer, lr, momentum, l2);
  model.event_scorer().unflatten(p);

  p = model.relation_scorer().flatten();
  momentum_update(p, grads.relation_scorer, state.v_relation_scorer, lr, momentum, l2);
  model.relation_scorer().unflatten(p);

  if (!model.frozen_embeddings()) {
    auto tables = ModelAccess::tables(model);
    table_update(*tables.event_table, grads.event_table, state.v_event_table, lr,
                 momentum, l2);
    if (tables.relation_table != tables.event_table)
      table_update(*tables.relation_table, grads.relation_table,
                   state.v_relation_table, lr, momentum, l2);
  }
}

// Sparse embedding-gradient sink for one scorer path: with a shared encoder
// both paths accumulate into the event table's buffer.
EmbeddingGrad& table_sink(Model& model, GradBuffer& grads, bool relation_path) {
  auto tables = ModelAccess::tables(model);
  if (relation_path && tables.relation_table != tables.event_table)
    return grads.relation_table;
  return grads.event_table;
}

struct RelationBatch {
  std::vector<std::pair<PairKey, RelationLabel>> pairs;
  long none_pairs = 0;
  long false_positive_events = 0;
};

RelationBatch relation_training_pairs(const Model& model, const Document& doc,
                                      const CandidateSet& candidates,
                                      bool use_predicted) {
  RelationBatch batch;
  std::set<int> endpoints;
  if (use_predicted) {
    for (int k : candidates.event_candidates) {
      const Vector s =
          model.event_scorer().score(model.event_encoder().event_features(doc, k));
      if (s[1] > s[0]) {
        endpoints.insert(k);
        if (!doc.is_gold_event(k)) ++batch.false_positive_events;
      }
    }
  } else {
    for (int k : candidates.event_candidates)
      if (doc.is_gold_event(k)) endpoints.insert(k);
  }
  for (const PairKey& key : candidates.relation_candidates) {
    if (!endpoints.count(key.first) || !endpoints.count(key.second)) continue;
    const RelationLabel gold = doc.gold_relation(key.first, key.second);
    if (gold == RelationLabel::NONE) ++batch.none_pairs;
    batch.pairs.push_back({key, gold});
  }
  return batch;
}

}  // namespace

std::vector<Stage1EpochLog> train_stage1(Model& model,
                                         const std::vector<Document>& corpus,
                                         const TrainConfig& config) {
  if (corpus.empty())
    throw std::invalid_argument("train_stage1: corpus must be nonempty");
  config.validate();

  SgdState state;
  state.init(model);
  GradBuffer grads;
  std::vector<Stage1EpochLog> logs;

  for (int epoch = 0; epoch < config.total_epochs; ++epoch) {
    const bool use_predicted = epoch >= config.gold_epochs;
    const double lr = config.lr_at(epoch);
    Stage1EpochLog log;
    log.epoch = epoch;
    log.used_predicted_events = use_predicted;
    long event_count = 0;

    for (const Document& doc : corpus) {
      const CandidateSet candidates = generate_candidates(doc, model.whitelist());
      if (candidates.empty()) continue;
      grads.reset(model);

      for (int k : candidates.event_candidates) {
        const Vector features = model.event_encoder().event_features(doc, k);
        const Vector s = model.event_scorer().score(features);
        const int gold = doc.is_gold_event(k) ? 1 : 0;
        log.event_loss += cross_entropy_loss(s, gold, config.event_weight);
        ++event_count;
        const Vector upstream =
            config.event_weight * (softmax(s) - one_hot(kNumEventLabels, gold));
        Vector feature_grad;
        grads.event_scorer +=
            model.event_scorer().gradient(features, upstream, &feature_grad);
        model.event_encoder().backprop_event(doc, k, feature_grad,
                                             table_sink(model, grads, false));
      }

      const RelationBatch batch =
          relation_training_pairs(model, doc, candidates, use_predicted);
      log.relation_pairs += static_cast<long>(batch.pairs.size());
      log.none_pairs += batch.none_pairs;
      log.false_positive_events += batch.false_positive_events;
      for (const auto& [key, gold] : batch.pairs) {
        const Vector features =
            model.relation_encoder().relation_features(doc, key.first, key.second);
        const Vector s = model.relation_scorer().score(features);
        const double weight = config.class_weight(gold);
        log.relation_loss += cross_entropy_loss(s, static_cast<int>(gold), weight);
        const Vector upstream =
            weight * (softmax(s) - one_hot(kNumRelationLabels, static_cast<int>(gold)));
        Vector feature_grad;
        grads.relation_scorer +=
            model.relation_scorer().gradient(features, upstream, &feature_grad);
        model.relation_encoder().backprop_relation(doc, key.first, key.second,
                                                   feature_grad,
                                                   table_sink(model, grads, true));
      }

      apply_step(model, grads, state, lr, config.momentum, config.l2);
    }

    if (event_count > 0) log.event_loss /= event_count;
    if (log.relation_pairs > 0) log.relation_loss /= log.relation_pairs;
    logs.push_back(log);
  }
  return logs;
}

namespace {

// Candidates surviving the t_event threshold; the dropped tokens and their
// pairs are fixed NON_EVENT / NONE outside the ILP.
struct Filtered {
  CandidateSet full;
  CandidateSet kept;
};

Filtered filter_candidates(const Model& model, const Document& doc, double t_event) {
  Filtered f;
  f.full = generate_candidates(doc, model.whitelist());
  if (t_event <= 0.0) {
    f.kept = f.full;
    return f;
  }
  std::set<int> kept_tokens;
  for (int k : f.full.event_candidates)
    if (model.event_probability(doc, k) >= t_event) {
      kept_tokens.insert(k);
      f.kept.event_candidates.push_back(k);
    }
  for (const PairKey& key : f.full.relation_candidates)
    if (kept_tokens.count(key.first) && kept_tokens.count(key.second))
      f.kept.relation_candidates.push_back(key);
  return f;
}

}  // namespace

SsvmInstanceLoss ssvm_instance_loss(const Model& model, const Document& doc,
                                    const TrainConfig& config) {
  SsvmInstanceLoss out;
  const Filtered filtered = filter_candidates(model, doc, config.t_event);
  out.candidates = filtered.kept;
  out.m = static_cast<int>(filtered.kept.size());
  if (out.m == 0) return out;

  out.gold = gold_assignment(doc, filtered.kept);
  const ScoreTable scores = model.score_document(doc, filtered.kept);
  const ILPInstance instance =
      build_ilp(scores, filtered.kept, config.c_event, out.gold);
  out.violator = solve_exact(instance);

  double event_diff = 0.0, relation_diff = 0.0;
  for (int k : filtered.kept.event_candidates) {
    const auto& s = scores.event_scores.at(k);
    event_diff += s[static_cast<int>(out.violator.events.at(k))] -
                  s[static_cast<int>(out.gold.events.at(k))];
  }
  for (const PairKey& key : filtered.kept.relation_candidates) {
    const auto& s = scores.relation_scores.at(key);
    relation_diff += s[static_cast<int>(out.violator.relations.at(key))] -
                     s[static_cast<int>(out.gold.relations.at(key))];
  }
  out.hinge = hamming_distance(out.gold, out.violator) + relation_diff +
              config.c_event * event_diff;
  out.loss = (config.c / out.m) * std::max(0.0, out.hinge);
  return out;
}

std::vector<Stage2EpochLog> train_stage2(Model& model,
                                         const std::vector<Document>& corpus,
                                         const TrainConfig& config) {
  if (corpus.empty())
    throw std::invalid_argument("train_stage2: corpus must be nonempty");
  config.validate();

  SgdState state;
  state.init(model);
  GradBuffer grads;
  std::vector<Stage2EpochLog> logs;

  for (int epoch = 0; epoch < config.stage2_epochs; ++epoch) {
    const double lr = config.lr_at(epoch);
    Stage2EpochLog log;
    log.epoch = epoch;

    for (const Document& doc : corpus) {
      const SsvmInstanceLoss inst = ssvm_instance_loss(model, doc, config);
      log.ssvm_loss += inst.loss;
      grads.reset(model);

      if (inst.hinge > 0.0 && inst.m > 0) {
        ++log.active_hinges;
        const double scale = config.c / inst.m;
        for (int k : inst.candidates.event_candidates) {
          const EventLabel predicted = inst.violator.events.at(k);
          const EventLabel gold = inst.gold.events.at(k);
          if (predicted == gold) continue;
          const Vector features = model.event_encoder().event_features(doc, k);
          const Vector upstream =
              scale * config.c_event *
              (one_hot(kNumEventLabels, static_cast<int>(predicted)) -
               one_hot(kNumEventLabels, static_cast<int>(gold)));
          Vector feature_grad;
          grads.event_scorer +=
              model.event_scorer().gradient(features, upstream, &feature_grad);
          model.event_encoder().backprop_event(doc, k, feature_grad,
                                               table_sink(model, grads, false));
        }
        for (const PairKey& key : inst.candidates.relation_candidates) {
          const RelationLabel predicted = inst.violator.relations.at(key);
          const RelationLabel gold = inst.gold.relations.at(key);
          if (predicted == gold) continue;
          const Vector features =
              model.relation_encoder().relation_features(doc, key.first, key.second);
          const Vector upstream =
              scale * (one_hot(kNumRelationLabels, static_cast<int>(predicted)) -
                       one_hot(kNumRelationLabels, static_cast<int>(gold)));
          Vector feature_grad;
          grads.relation_scorer +=
              model.relation_scorer().gradient(features, upstream, &feature_grad);
          model.relation_encoder().backprop_relation(doc, key.first, key.second,
                                                     feature_grad,
                                                     table_sink(model, grads, true));
        }
      }
      // With a zero hinge only the regularizer moves the parameters.
      apply_step(model, grads, state, lr, config.momentum, config.l2);
    }

    log.ssvm_loss /= static_cast<double>(corpus.size());
    logs.push_back(log);
  }
  return logs;
}

JointAssignment predict(const Model& model, const Document& doc,
                        const TrainConfig& config, InferenceMode mode) {
  const Filtered filtered = filter_candidates(model, doc, config.t_event);
  JointAssignment solved;
  if (!filtered.kept.empty()) {
    const ScoreTable scores = model.score_document(doc, filtered.kept);
    switch (mode) {
      case InferenceMode::LOCAL:
        solved = pipeline_map(scores, filtered.kept);
        break;
      case InferenceMode::CONSISTENCY:
        solved = solve_exact(build_ilp(scores, filtered.kept, config.c_event,
                                       std::nullopt, false));
        break;
      case InferenceMode::FULL:
        solved = solve_exact(build_ilp(scores, filtered.kept, config.c_event));
        break;
    }
  }
  JointAssignment out;
  for (int k : filtered.full.event_candidates) {
    auto it = solved.events.find(k);
    out.events[k] = it == solved.events.end() ? EventLabel::NON_EVENT : it->second;
  }
  for (const PairKey& key : filtered.full.relation_candidates) {
    auto it = solved.relations.find(key);
    out.relations[key] =
        it == solved.relations.end() ? RelationLabel::NONE : it->second;
  }
  return out;
}

namespace {

json config_to_json(const TrainConfig& config) {
  json j;
  j["c"] = config.c;
  j["c_event"] = config.c_event;
  json weights = json::object();
  for (const auto& [label, weight] : config.class_weights)
    weights[to_string(label)] = weight;
  j["class_weights"] = weights;
  j["event_weight"] = config.event_weight;
  j["t_event"] = config.t_event;
  j["gold_epochs"] = config.gold_epochs;
  j["total_epochs"] = config.total_epochs;
  j["stage2_epochs"] = config.stage2_epochs;
  j["learning_rate"] = config.learning_rate;
  j["decay"] = config.decay;
  j["decay_every"] = config.decay_every;
  j["momentum"] = config.momentum;
  j["l2"] = config.l2;
  j["seed"] = config.seed;
  j["dropout"] = config.dropout;
  j["scorer_kind"] = config.scorer_kind;
  j["hidden_dim"] = config.hidden_dim;
  j["window"] = config.window;
  j["embedding_dim"] = config.embedding_dim;
  j["shared_encoder"] = config.shared_encoder;
  j["pos_filter"] = config.pos_filter;
  return j;
}

TrainConfig config_from_json(const json& j) {
  TrainConfig config;
  config.c = j.at("c").get<double>();
  config.c_event = j.at("c_event").get<double>();
  for (const auto& [name, weight] : j.at("class_weights").items())
    config.class_weights[relation_label_from_string(name)] = weight.get<double>();
  config.event_weight = j.at("event_weight").get<double>();
  config.t_event = j.at("t_event").get<double>();
  config.gold_epochs = j.at("gold_epochs").get<int>();
  config.total_epochs = j.at("total_epochs").get<int>();
  config.stage2_epochs = j.at("stage2_epochs").get<int>();
  config.learning_rate = j.at("learning_rate").get<double>();
  config.decay = j.at("decay").get<double>();
  config.decay_every = j.at("decay_every").get<int>();
  config.momentum = j.at("momentum").get<double>();
  config.l2 = j.at("l2").get<double>();
  config.seed = j.at("seed").get<std::uint64_t>();
  config.dropout = j.at("dropout").get<double>();
  config.scorer_kind = j.at("scorer_kind").get<std::string>();
  config.hidden_dim = j.at("hidden_dim").get<int>();
  config.window = j.at("window").get<int>();
  config.embedding_dim = j.at("embedding_dim").get<int>();
  config.shared_encoder = j.at("shared_encoder").get<bool>();
  config.pos_filter = j.at("pos_filter").get<bool>();
  return config;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Vector vector_from_json(const json& arr) {
  Vector v(arr.size());
  Eigen::Index i = 0;
  for (const json& x : arr) v[i++] = x.get<double>();
  return v;
}

json scorer_to_json(const Scorer& scorer) {
  json j;
  j["kind"] = scorer.kind();
  j["input_dim"] = scorer.input_dim();
  j["output_dim"] = scorer.output_dim();
  if (const auto* mlp = dynamic_cast<const MLPScorer*>(&scorer))
    j["hidden_dim"] = mlp->hidden_dim();
  j["params"] = vector_to_json(scorer.flatten());
  return j;
}

std::unique_ptr<Scorer> scorer_from_json(const json& j, std::uint64_t seed) {
  auto scorer = make_scorer(j.at("kind").get<std::string>(),
                            j.at("input_dim").get<int>(), j.value("hidden_dim", 1),
                            j.at("output_dim").get<int>(), seed);
  scorer->unflatten(vector_from_json(j.at("params")));
  return scorer;
}

}  // namespace

void Model::save(const std::string& path) const {
  json j;
  j["format"] = "tempex-checkpoint";
  j["version"] = 1;
  j["config"] = config_to_json(config_);
  j["whitelist"] = {{"all", whitelist_.all},
                    {"tags", std::vector<std::string>(whitelist_.tags.begin(),
                                                      whitelist_.tags.end())}};
  j["features"] = {{"window", feature_config_.window},
                   {"embedding_dim", feature_config_.embedding_dim},
                   {"pos_vocab", feature_config_.pos_vocab.categories()},
                   {"tense_vocab", feature_config_.tense_vocab.categories()},
                   {"polarity_vocab", feature_config_.polarity_vocab.categories()}};
  j["event_scorer"] = scorer_to_json(*event_scorer_);
  j["relation_scorer"] = scorer_to_json(*relation_scorer_);
  json emb;
  emb["mode"] = frozen_mode_ ? "frozen" : "trainable";
  emb["shared"] = relation_table_ == event_table_;
  if (!frozen_mode_) {
    emb["words"] = event_table_->words();
    json rows = json::array();
    for (int r = 0; r < event_table_->num_rows(); ++r)
      rows.push_back(vector_to_json(event_table_->row(r)));
    emb["event_rows"] = rows;
    if (relation_table_ != event_table_) {
      json rrows = json::array();
      for (int r = 0; r < relation_table_->num_rows(); ++r)
        rrows.push_back(vector_to_json(relation_table_->row(r)));
      emb["relation_rows"] = rrows;
    }
  }
  j["embeddings"] = emb;

  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open checkpoint for writing: " + path);
  os << j.dump(2) << '\n';
}

Model Model::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open checkpoint: " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("checkpoint " + path + ": " + e.what());
  }
  if (j.value("format", std::string()) != "tempex-checkpoint")
    throw std::runtime_error("checkpoint " + path + ": unrecognized format");
  if (j.at("version").get<int>() != 1)
    throw std::runtime_error("checkpoint " + path + ": unsupported version");

  Model model;
  model.config_ = config_from_json(j.at("config"));
  const json& wl = j.at("whitelist");
  model.whitelist_.all = wl.at("all").get<bool>();
  for (const json& tag : wl.at("tags"))
    model.whitelist_.tags.insert(tag.get<std::string>());

  const json& f = j.at("features");
  model.feature_config_.window = f.at("window").get<int>();
  model.feature_config_.embedding_dim = f.at("embedding_dim").get<int>();
  model.feature_config_.pos_vocab = Vocab(f.at("pos_vocab").get<std::vector<std::string>>());
  model.feature_config_.tense_vocab =
      Vocab(f.at("tense_vocab").get<std::vector<std::string>>());
  model.feature_config_.polarity_vocab =
      Vocab(f.at("polarity_vocab").get<std::vector<std::string>>());

  model.event_scorer_ = scorer_from_json(j.at("event_scorer"), model.config_.seed + 21);
  model.relation_scorer_ =
      scorer_from_json(j.at("relation_scorer"), model.config_.seed + 22);

  const json& emb = j.at("embeddings");
  model.frozen_mode_ = emb.at("mode").get<std::string>() == "frozen";
  if (!model.frozen_mode_) {
    const auto words = emb.at("words").get<std::vector<std::string>>();
    const int dim = model.feature_config_.embedding_dim;
    std::vector<Vector> rows;
    for (const json& row : emb.at("event_rows")) rows.push_back(vector_from_json(row));
    model.event_table_ = std::make_shared<EmbeddingTable>(
        EmbeddingTable::from_rows(words, dim, std::move(rows)));
    if (emb.at("shared").get<bool>()) {
      model.relation_table_ = model.event_table_;
    } else {
      std::vector<Vector> rrows;
      for (const json& row : emb.at("relation_rows"))
        rrows.push_back(vector_from_json(row));
      model.relation_table_ = std::make_shared<EmbeddingTable>(
          EmbeddingTable::from_rows(words, dim, std::move(rrows)));
    }
    model.event_encoder_ =
        std::make_unique<FeatureEncoder>(model.feature_config_, model.event_table_);
    model.relation_encoder_ =
        std::make_unique<FeatureEncoder>(model.feature_config_, model.relation_table_);
  }
  return model;
}

void Model::attach_frozen_embeddings(
    std::map<std::pair<std::string, int>, Vector> vectors) {
  if (!frozen_mode_)
    throw std::runtime_error("model does not use frozen embeddings");
  event_table_ = std::make_shared<EmbeddingTable>(std::move(vectors),
                                                  feature_config_.embedding_dim);
  relation_table_ = event_table_;
  event_encoder_ =
      std::make_unique<FeatureEncoder>(feature_config_, event_table_);
  relation_encoder_ =
      std::make_unique<FeatureEncoder>(feature_config_, relation_table_);
}

}  // namespace tempex
