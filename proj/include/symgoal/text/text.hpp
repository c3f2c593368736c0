#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace symgoal::text {

// Lowercases, drops punctuation (apostrophes included, so "I'm" -> "im") and
// splits on whitespace. Stopwords are kept.
std::vector<std::string> tokenize(std::string_view text);

// Token -> dimension index, in first-seen order over the training corpus.
class TextVocabulary {
 public:
  TextVocabulary() = default;
  static TextVocabulary build(const std::vector<std::vector<std::string>>& corpus);

  void add(const std::string& token);
  // -1 when out of vocabulary.
  long index_of(std::string_view token) const;
  std::size_t size() const { return tokens_.size(); }
  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

using Embedding = std::vector<double>;

// Term-count vector; out-of-vocabulary tokens are dropped.
Embedding embed(const std::vector<std::string>& tokens, const TextVocabulary& vocabulary);

struct StsConfig {
  double epsilon = 1e-8;
};

// u.v / max(|u| |v|, epsilon). Throws DimensionMismatch.
double cosine_similarity(const Embedding& u, const Embedding& v, const StsConfig& cfg = {});

inline constexpr std::array<double, 3> kStsScores = {5.0, 3.3, 1.7};
inline constexpr double kStsScale = 5.0;

struct StsExample {
  Embedding explicit_embedding;
  Embedding implicit_embedding;
  double gold = 5.0;
};

// Mean of (cosine - gold / 5)^2. Throws EmptyBatch on an empty batch and
// DomainError for gold scores outside {5.0, 3.3, 1.7}.
double sts_loss(const std::vector<StsExample>& batch, const StsConfig& cfg = {});

}  // namespace symgoal::text
