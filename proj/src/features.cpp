#include "tempex/features.hpp"

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tempex {

Vocab::Vocab(const std::vector<std::string>& categories) {
  std::set<std::string> unique(categories.begin(), categories.end());
  categories_.assign(unique.begin(), unique.end());
  for (std::size_t i = 0; i < categories_.size(); ++i)
    index_[categories_[i]] = static_cast<int>(i);
}

int Vocab::index_of(const std::string& category) const {
  auto it = index_.find(category);
  return it == index_.end() ? static_cast<int>(categories_.size()) : it->second;
}

EmbeddingTable::EmbeddingTable(const std::vector<std::string>& words, int dim,
                               std::uint64_t seed)
    : dim_(dim), trainable_(true) {
  std::set<std::string> unique(words.begin(), words.end());
  words_.assign(unique.begin(), unique.end());
  for (std::size_t i = 0; i < words_.size(); ++i)
    word_row_[words_[i]] = static_cast<int>(i);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> init(-0.1, 0.1);
  rows_.resize(words_.size() + 1);  // trailing row serves unknown words
  for (Vector& row : rows_) {
    row.resize(dim_);
    for (int d = 0; d < dim_; ++d) row[d] = init(rng);
  }
}

EmbeddingTable::EmbeddingTable(std::map<std::pair<std::string, int>, Vector> frozen,
                               int dim)
    : dim_(dim), trainable_(false), frozen_(std::move(frozen)) {
  for (const auto& [key, vec] : frozen_)
    if (vec.size() != dim_)
      throw std::invalid_argument("embedding for " + key.first + ":" +
                                  std::to_string(key.second) +
                                  " has wrong dimension");
}

EmbeddingTable EmbeddingTable::from_rows(std::vector<std::string> words, int dim,
                                         std::vector<Vector> rows) {
  if (rows.size() != words.size() + 1)
    throw std::invalid_argument("embedding rows must be word count + 1");
  EmbeddingTable table(words, dim, 0);
  if (table.words_ != words)
    throw std::invalid_argument("embedding words must be sorted and unique");
  table.rows_ = std::move(rows);
  for (const Vector& row : table.rows_)
    if (row.size() != dim) throw std::invalid_argument("embedding row dimension");
  return table;
}

const Vector& EmbeddingTable::lookup(const Document& doc, int token_index) const {
  if (trainable_) {
    auto it = word_row_.find(doc.tokens.at(token_index).text);
    return rows_[it == word_row_.end() ? rows_.size() - 1 : it->second];
  }
  auto it = frozen_.find({doc.doc_id, token_index});
  if (it == frozen_.end())
    throw std::runtime_error("no embedding for " + doc.doc_id + ":" +
                             std::to_string(token_index));
  return it->second;
}

int EmbeddingTable::row_of(const Document& doc, int token_index) const {
  if (!trainable_) return -1;
  auto it = word_row_.find(doc.tokens.at(token_index).text);
  return it == word_row_.end() ? static_cast<int>(rows_.size()) - 1 : it->second;
}

Vector EmbeddingTable::flatten() const {
  if (!trainable_) return Vector();
  Vector flat(static_cast<Eigen::Index>(rows_.size()) * dim_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    flat.segment(static_cast<Eigen::Index>(r) * dim_, dim_) = rows_[r];
  return flat;
}

void EmbeddingTable::unflatten(const Vector& flat) {
  if (!trainable_) {
    if (flat.size() != 0)
      throw std::invalid_argument("frozen embeddings take no parameters");
    return;
  }
  if (flat.size() != static_cast<Eigen::Index>(rows_.size()) * dim_)
    throw std::invalid_argument("embedding parameter size mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    rows_[r] = flat.segment(static_cast<Eigen::Index>(r) * dim_, dim_);
}

bool EmbeddingTable::operator==(const EmbeddingTable& other) const {
  if (trainable_ != other.trainable_ || dim_ != other.dim_) return false;
  if (trainable_) {
    if (words_ != other.words_ || rows_.size() != other.rows_.size()) return false;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r] != other.rows_[r]) return false;
    return true;
  }
  if (frozen_.size() != other.frozen_.size()) return false;
  auto jt = other.frozen_.begin();
  for (auto it = frozen_.begin(); it != frozen_.end(); ++it, ++jt)
    if (it->first != jt->first || it->second != jt->second) return false;
  return true;
}

int FeatureConfig::event_feature_dim() const {
  return embedding_dim + (window > 0 ? embedding_dim : 0) + pos_vocab.size();
}

int FeatureConfig::relation_feature_dim() const {
  return 2 * event_feature_dim() + 1 + kNumDistanceBuckets +
         tense_vocab.size() * tense_vocab.size() +
         polarity_vocab.size() * polarity_vocab.size();
}

FeatureConfig make_feature_config(const std::vector<Document>& corpus, int window,
                                  int embedding_dim) {
  std::vector<std::string> pos, tense, polarity;
  for (const Document& doc : corpus)
    for (const Token& t : doc.tokens) {
      pos.push_back(t.pos);
      tense.push_back(t.tense);
      polarity.push_back(t.polarity);
    }
  FeatureConfig config;
  config.window = window;
  config.embedding_dim = embedding_dim;
  config.pos_vocab = Vocab(pos);
  config.tense_vocab = Vocab(tense);
  config.polarity_vocab = Vocab(polarity);
  return config;
}

int distance_bucket(int distance) {
  if (distance <= 1) return 0;
  if (distance == 2) return 1;
  if (distance == 3) return 2;
  if (distance == 4) return 3;
  if (distance <= 9) return 4;
  return 5;
}

FeatureEncoder::FeatureEncoder(FeatureConfig config,
                               std::shared_ptr<EmbeddingTable> embeddings)
    : config_(std::move(config)), embeddings_(std::move(embeddings)) {
  if (embeddings_->dim() != config_.embedding_dim)
    throw std::invalid_argument("embedding table dimension differs from config");
}

Vector FeatureEncoder::event_features(const Document& doc, int k) const {
  const int d = config_.embedding_dim;
  const int w = config_.window;
  Vector out = Vector::Zero(config_.event_feature_dim());
  out.head(d) = embeddings_->lookup(doc, k);
  if (w > 0) {
    // Mean over the 2w neighbors; positions past either edge count as zero.
    Vector context = Vector::Zero(d);
    for (int off = -w; off <= w; ++off) {
      if (off == 0) continue;
      const int pos = k + off;
      if (pos >= 0 && pos < static_cast<int>(doc.tokens.size()))
        context += embeddings_->lookup(doc, pos);
    }
    out.segment(d, d) = context / (2.0 * w);
  }
  const int pos_base = d + (w > 0 ? d : 0);
  out[pos_base + config_.pos_vocab.index_of(doc.tokens.at(k).pos)] = 1.0;
  return out;
}

Vector FeatureEncoder::relation_features(const Document& doc, int i, int j) const {
  if (i >= j) throw std::invalid_argument("relation features require i < j");
  const int ev_dim = config_.event_feature_dim();
  Vector out = Vector::Zero(config_.relation_feature_dim());
  out.head(ev_dim) = event_features(doc, i);
  out.segment(ev_dim, ev_dim) = event_features(doc, j);
  int base = 2 * ev_dim;
  out[base] = static_cast<double>(j - i);
  base += 1;
  out[base + distance_bucket(j - i)] = 1.0;
  base += kNumDistanceBuckets;
  const int nt = config_.tense_vocab.size();
  out[base + config_.tense_vocab.index_of(doc.tokens.at(i).tense) * nt +
      config_.tense_vocab.index_of(doc.tokens.at(j).tense)] = 1.0;
  base += nt * nt;
  const int np = config_.polarity_vocab.size();
  out[base + config_.polarity_vocab.index_of(doc.tokens.at(i).polarity) * np +
      config_.polarity_vocab.index_of(doc.tokens.at(j).polarity)] = 1.0;
  return out;
}

void FeatureEncoder::accumulate_event_block(const Document& doc, int k,
                                            const Vector& grad_block,
                                            EmbeddingGrad& grad) const {
  const int d = config_.embedding_dim;
  const int w = config_.window;
  auto add = [&](int token, const Vector& g) {
    const int row = embeddings_->row_of(doc, token);
    auto [it, inserted] = grad.try_emplace(row, Vector::Zero(d));
    it->second += g;
  };
  add(k, grad_block.head(d));
  if (w > 0) {
    const Vector context_grad = grad_block.segment(d, d) / (2.0 * w);
    for (int off = -w; off <= w; ++off) {
      if (off == 0) continue;
      const int pos = k + off;
      if (pos >= 0 && pos < static_cast<int>(doc.tokens.size()))
        add(pos, context_grad);
    }
  }
}

void FeatureEncoder::backprop_event(const Document& doc, int k,
                                    const Vector& feature_grad,
                                    EmbeddingGrad& grad) const {
  if (!embeddings_->trainable()) return;
  accumulate_event_block(doc, k, feature_grad, grad);
}

void FeatureEncoder::backprop_relation(const Document& doc, int i, int j,
                                       const Vector& feature_grad,
                                       EmbeddingGrad& grad) const {
  if (!embeddings_->trainable()) return;
  const int ev_dim = config_.event_feature_dim();
  accumulate_event_block(doc, i, feature_grad.head(ev_dim), grad);
  accumulate_event_block(doc, j, feature_grad.segment(ev_dim, ev_dim), grad);
}

std::map<std::pair<std::string, int>, Vector> load_embedding_file(std::istream& is,
                                                                  int* dim_out) {
  std::string line;
  int line_no = 0;
  if (!std::getline(is, line))
    throw std::runtime_error("embedding file: empty (missing D=<dim> header)");
  ++line_no;
  if (line.rfind("D=", 0) != 0)
    throw std::runtime_error("embedding file line 1: expected D=<dim> header");
  const int dim = std::stoi(line.substr(2));
  if (dim <= 0) throw std::runtime_error("embedding file: dimension must be positive");

  std::map<std::pair<std::string, int>, Vector> out;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string doc_id;
    int index = 0;
    if (!(ls >> doc_id >> index))
      throw std::runtime_error("embedding file line " + std::to_string(line_no) +
                               ": expected `<doc_id> <token_index> ...`");
    Vector vec(dim);
    for (int d = 0; d < dim; ++d)
      if (!(ls >> vec[d]))
        throw std::runtime_error("embedding file line " + std::to_string(line_no) +
                                 ": expected " + std::to_string(dim) + " values");
    out[{doc_id, index}] = std::move(vec);
  }
  if (dim_out) *dim_out = dim;
  return out;
}

void save_embedding_file(std::ostream& os,
                         const std::map<std::pair<std::string, int>, Vector>& vectors,
                         int dim) {
  os << "D=" << dim << '\n';
  os << std::setprecision(17);
  for (const auto& [key, vec] : vectors) {
    os << key.first << ' ' << key.second;
    for (int d = 0; d < vec.size(); ++d) os << ' ' << vec[d];
    os << '\n';
  }
}

}  // namespace tempex
