#include "symgoal/text/text.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "symgoal/errors.hpp"
#include "symgoal/simd/kernels.hpp"

namespace symgoal::text {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char raw : text) {
    const auto c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else if (std::isalnum(c) || c >= 0x80) {
      current.push_back(static_cast<char>(std::tolower(c)));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

TextVocabulary TextVocabulary::build(const std::vector<std::vector<std::string>>& corpus) {
  TextVocabulary vocabulary;
  for (const auto& tokens : corpus) {
    for (const auto& token : tokens) vocabulary.add(token);
  }
  return vocabulary;
}

void TextVocabulary::add(const std::string& token) {
  if (index_.emplace(token, tokens_.size()).second) tokens_.push_back(token);
}

long TextVocabulary::index_of(std::string_view token) const {
  auto it = index_.find(token);
  return it == index_.end() ? -1 : static_cast<long>(it->second);
}

Embedding embed(const std::vector<std::string>& tokens, const TextVocabulary& vocabulary) {
  Embedding v(vocabulary.size(), 0.0);
  for (const auto& token : tokens) {
    const long i = vocabulary.index_of(token);
    if (i >= 0) v[static_cast<std::size_t>(i)] += 1.0;
  }
  return v;
}

double cosine_similarity(const Embedding& u, const Embedding& v, const StsConfig& cfg) {
  if (u.size() != v.size()) throw DimensionMismatch(u.size(), v.size());
  if (!(cfg.epsilon > 0.0)) throw DomainError("epsilon must be positive");
  const double uv = simd::dot(u, v);
  const double uu = simd::dot(u, u);
  const double vv = simd::dot(v, v);
  return uv / std::max(std::sqrt(uu) * std::sqrt(vv), cfg.epsilon);
}

double sts_loss(const std::vector<StsExample>& batch, const StsConfig& cfg) {
  if (batch.empty()) throw EmptyBatch();
  double total = 0.0;
  for (const auto& ex : batch) {
    if (std::find(kStsScores.begin(), kStsScores.end(), ex.gold) == kStsScores.end()) {
      throw DomainError("sts gold score must be 5.0, 3.3 or 1.7, got " + std::to_string(ex.gold));
    }
    const double diff = cosine_similarity(ex.explicit_embedding, ex.implicit_embedding, cfg) - ex.gold / kStsScale;
    total += diff * diff;
  }
  return total / static_cast<double>(batch.size());
}

}  // namespace symgoal::text
