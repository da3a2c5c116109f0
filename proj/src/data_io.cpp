#include "tempex/data_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tempex/algebra.hpp"

namespace tempex {

namespace {

using json = nlohmann::ordered_json;

const std::vector<std::string> kDocFields = {"doc_id", "tokens", "events", "relations"};
const std::vector<std::string> kTokenFields = {"text", "pos", "sentence", "tense",
                                               "polarity"};
const std::vector<std::string> kRelationFields = {"src", "tgt", "label"};

void warn_unknown(const json& object, const std::vector<std::string>& known,
                  int line_no, const std::string& where,
                  std::vector<std::string>* warnings) {
  for (const auto& [key, value] : object.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      const std::string msg = "line " + std::to_string(line_no) +
                              ": ignoring unknown field `" + key + "` in " + where;
      if (warnings) warnings->push_back(msg);
    }
  }
}

Document parse_document(const json& j, int line_no, std::vector<std::string>* warnings) {
  warn_unknown(j, kDocFields, line_no, "document", warnings);
  Document doc;
  doc.doc_id = j.at("doc_id").get<std::string>();
  int index = 0;
  for (const json& tj : j.at("tokens")) {
    warn_unknown(tj, kTokenFields, line_no, "token", warnings);
    Token t;
    t.index = index++;
    t.text = tj.at("text").get<std::string>();
    t.pos = tj.value("pos", std::string());
    t.sentence = tj.value("sentence", 0);
    t.tense = tj.value("tense", std::string());
    t.polarity = tj.value("polarity", std::string());
    doc.tokens.push_back(std::move(t));
  }
  if (j.contains("events"))
    for (const json& e : j.at("events")) doc.gold_events.insert(e.get<int>());
  if (j.contains("relations"))
    for (const json& rj : j.at("relations")) {
      warn_unknown(rj, kRelationFields, line_no, "relation", warnings);
      const int src = rj.at("src").get<int>();
      const int tgt = rj.at("tgt").get<int>();
      doc.gold_relations[{src, tgt}] =
          relation_label_from_string(rj.at("label").get<std::string>());
    }
  return doc;
}

}  // namespace

std::vector<Document> load_corpus(std::istream& is, std::vector<std::string>* warnings) {
  std::vector<Document> corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      Document doc = parse_document(j, line_no, warnings);
      validate_document(doc);
      corpus.push_back(std::move(doc));
    } catch (const std::exception& e) {
      throw std::runtime_error("corpus line " + std::to_string(line_no) + ": " +
                               e.what());
    }
  }
  return corpus;
}

std::vector<Document> load_corpus_file(const std::string& path,
                                       std::vector<std::string>* warnings) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open corpus file: " + path);
  return load_corpus(is, warnings);
}

void save_corpus(std::ostream& os, const std::vector<Document>& corpus) {
  for (const Document& doc : corpus) {
    json j;
    j["doc_id"] = doc.doc_id;
    j["tokens"] = json::array();
    for (const Token& t : doc.tokens) {
      json tj;
      tj["text"] = t.text;
      tj["pos"] = t.pos;
      tj["sentence"] = t.sentence;
      tj["tense"] = t.tense;
      tj["polarity"] = t.polarity;
      j["tokens"].push_back(std::move(tj));
    }
    j["events"] = json::array();
    for (int k : doc.gold_events) j["events"].push_back(k);
    j["relations"] = json::array();
    for (const auto& [key, label] : doc.gold_relations) {
      json rj;
      rj["src"] = key.first;
      rj["tgt"] = key.second;
      rj["label"] = to_string(label);
      j["relations"].push_back(std::move(rj));
    }
    os << j.dump() << '\n';
  }
}

void save_corpus_file(const std::string& path, const std::vector<Document>& corpus) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open corpus file for writing: " + path);
  save_corpus(os, corpus);
}

DatasetStats dataset_stats(const std::vector<Document>& corpus) {
  DatasetStats stats;
  stats.documents = static_cast<int>(corpus.size());
  for (const Document& doc : corpus) {
    stats.tokens += static_cast<int>(doc.tokens.size());
    stats.gold_events += static_cast<int>(doc.gold_events.size());
    stats.relation_pairs += static_cast<int>(doc.gold_relations.size());
    for (const auto& [key, label] : doc.gold_relations)
      ++stats.label_counts[static_cast<int>(label)];
  }
  return stats;
}

std::string render_stats(
    const std::vector<std::pair<std::string, DatasetStats>>& splits) {
  std::ostringstream os;
  os << std::left << std::setw(14) << "";
  for (const auto& [name, stats] : splits) os << std::right << std::setw(12) << name;
  os << '\n';
  auto row = [&](const std::string& label, auto getter) {
    os << std::left << std::setw(14) << label;
    for (const auto& [name, stats] : splits)
      os << std::right << std::setw(12) << getter(stats);
    os << '\n';
  };
  row("documents", [](const DatasetStats& s) { return s.documents; });
  row("tokens", [](const DatasetStats& s) { return s.tokens; });
  row("events", [](const DatasetStats& s) { return s.gold_events; });
  row("pairs", [](const DatasetStats& s) { return s.relation_pairs; });
  for (int r = 0; r < kNumRelationLabels; ++r)
    row(to_string(static_cast<RelationLabel>(r)),
        [r](const DatasetStats& s) { return s.label_counts[r]; });
  return os.str();
}

namespace {

RelationLabel interval_relation(int s1, int e1, int s2, int e2) {
  if (e1 < s2) return RelationLabel::BEFORE;
  if (e2 < s1) return RelationLabel::AFTER;
  if (s1 < s2 && e2 < e1) return RelationLabel::INCLUDES;
  if (s2 < s1 && e1 < e2) return RelationLabel::IS_INCLUDED;
  if (s1 == s2 && e1 == e2) return RelationLabel::SIMULTANEOUS;
  return RelationLabel::VAGUE;  // partial overlap: order underdetermined
}

// Intervals are drawn from a laminar family (a binary containment tree with
// gaps), so any two are strictly nested, disjoint, or identical and every
// pair realizes a definite relation. Root spans [0, 120]; each node splits
// into two children strictly inside it, which keeps depth-3 nodes nonempty.
constexpr int kIntervalSpan = 120;

std::pair<int, int> laminar_interval(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const double roll = u01(rng);
  const int depth = roll < 0.05 ? 0 : (roll < 0.20 ? 1 : (roll < 0.60 ? 2 : 3));
  int lo = 0, hi = kIntervalSpan;
  for (int level = 0; level < depth; ++level) {
    const int mid = (lo + hi) / 2;
    if (u01(rng) < 0.5)
      hi = mid - 1;
    else
      lo = mid + 1;
    ++lo;
    --hi;
  }
  return {lo, hi};
}

}  // namespace

SynthCorpus generate_synthetic(const SynthConfig& config) {
  if (config.event_rate < 0 || config.event_rate > 1 || config.vague_rate < 0 ||
      config.vague_rate > 1)
    throw std::invalid_argument("synthetic rates must lie in [0, 1]");
  if (config.noise < 0) throw std::invalid_argument("noise must be nonnegative");
  if (config.embedding_dim < 3)
    throw std::invalid_argument("synthetic embeddings need at least 3 dimensions");

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> tense_dist(0, 2);
  std::normal_distribution<double> filler(0.0, 0.1);
  std::normal_distribution<double> corruption(0.0, 1.0);
  const std::vector<std::string> kFillerWords = {"the", "a",  "on", "and",
                                                 "to",  "of", "it", "was"};
  const std::vector<std::string> kFillerPos = {"DT", "IN", "JJ", "RB"};

  SynthCorpus out;
  const CompositionTable& table = composition_table();

  int id_width = 1;
  for (int n = config.documents - 1; n >= 10; n /= 10) ++id_width;

  for (int d = 0; d < config.documents; ++d) {
    std::ostringstream id;
    id << "synth-" << std::setfill('0') << std::setw(id_width) << d;
    Document doc;
    doc.doc_id = id.str();

    std::map<int, std::pair<int, int>> intervals;
    int index = 0;
    for (int s = 0; s < config.sentences_per_doc; ++s) {
      for (int t = 0; t < config.tokens_per_sentence; ++t, ++index) {
        Token tok;
        tok.index = index;
        tok.sentence = s;
        if (u01(rng) < config.event_rate) {
          const auto [start, end] = laminar_interval(rng);
          intervals[index] = {start, end};
          doc.gold_events.insert(index);
          tok.text = "ev" + std::to_string(start) + "x" + std::to_string(end);
          tok.pos = u01(rng) < 0.6 ? "VB" : "NN";
          tok.tense = start <= 40 ? "PAST" : (start <= 80 ? "PRESENT" : "FUTURE");
          if (u01(rng) < 0.1)
            tok.tense =
                std::vector<std::string>{"PAST", "PRESENT", "FUTURE"}[tense_dist(rng)];
          tok.polarity = u01(rng) < 0.85 ? "POS" : "NEG";
        } else {
          tok.text = kFillerWords[static_cast<std::size_t>(u01(rng) * kFillerWords.size()) %
                                  kFillerWords.size()];
          tok.pos = u01(rng) < 0.1
                        ? "NN"
                        : kFillerPos[static_cast<std::size_t>(u01(rng) * kFillerPos.size()) %
                                     kFillerPos.size()];
        }
        doc.tokens.push_back(std::move(tok));
      }
    }

    // Dense annotation: every event pair in the same or a neighboring
    // sentence gets the label its intervals realize.
    for (auto it = intervals.begin(); it != intervals.end(); ++it)
      for (auto jt = std::next(it); jt != intervals.end(); ++jt) {
        const int i = it->first, j = jt->first;
        if (doc.tokens[j].sentence - doc.tokens[i].sentence > 1) continue;
        doc.gold_relations[{i, j}] =
            interval_relation(it->second.first, it->second.second,
                              jt->second.first, jt->second.second);
      }

    // Plant VAGUE by relabeling, but only where every triple that reads this
    // pair as its composed slot still admits VAGUE. Inputs turning VAGUE can
    // only loosen constraints, so a single forward pass preserves validity.
    for (auto& [key, label] : doc.gold_relations) {
      if (label == RelationLabel::VAGUE) continue;
      if (u01(rng) >= config.vague_rate) continue;
      const auto [i, j] = key;
      bool safe = true;
      for (int m = i + 1; m < j && safe; ++m) {
        auto im = doc.gold_relations.find({i, m});
        auto mj = doc.gold_relations.find({m, j});
        if (im == doc.gold_relations.end() || mj == doc.gold_relations.end()) continue;
        safe = table.contains(im->second, mj->second, RelationLabel::VAGUE);
      }
      if (safe) label = RelationLabel::VAGUE;
    }

    // Embeddings: dimension 0 flags eventness, 1 and 2 carry the scaled
    // interval endpoints, the rest is filler; every dimension then receives
    // noise-scaled corruption.
    for (const Token& tok : doc.tokens) {
      Vector v(config.embedding_dim);
      auto interval = intervals.find(tok.index);
      if (interval != intervals.end()) {
        v[0] = 1.0;
        v[1] = static_cast<double>(interval->second.first) / kIntervalSpan;
        v[2] = static_cast<double>(interval->second.second) / kIntervalSpan;
      } else {
        v[0] = -1.0;
        v[1] = u01(rng);
        v[2] = u01(rng);
      }
      for (int dim = 3; dim < config.embedding_dim; ++dim) v[dim] = filler(rng);
      for (int dim = 0; dim < config.embedding_dim; ++dim)
        v[dim] += config.noise * corruption(rng);
      out.embeddings[{doc.doc_id, tok.index}] = std::move(v);
    }

    out.documents.push_back(std::move(doc));
  }
  return out;
}

}  // namespace tempex
