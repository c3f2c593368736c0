#include <algorithm>

#include "json.hpp"
#include "symgoal/errors.hpp"
#include "symgoal/goal/predictor.hpp"
#include "symgoal/text/text.hpp"
#include "symgoal/util/io.hpp"

namespace symgoal::goal {

PredictorLexicon PredictorLexicon::from_json(std::string_view text) {
  PredictorLexicon lex;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& [name, words] : doc.at("verbs").items()) {
      lex.verbs[parse_action(name)] = words.get<std::vector<std::string>>();
    }
    for (const auto& node : doc.at("intents")) {
      auto pattern = text::tokenize(node.at("pattern").get<std::string>());
      if (pattern.empty()) throw SchemaError("empty intent pattern");
      lex.intents.push_back({std::move(pattern), parse_action(node.at("action").get<std::string>())});
    }
    if (doc.contains("synonyms")) {
      for (const auto& [category, words] : doc.at("synonyms").items()) {
        lex.synonyms[category] = words.get<std::vector<std::string>>();
      }
    }
    if (doc.contains("stopwords")) lex.stopwords = doc.at("stopwords").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("lexicon: ") + e.what());
  }
  for (Action a : kAllActions) {
    if (lex.verbs[a].empty()) throw SchemaError("lexicon has no verb for " + std::string(to_string(a)));
  }
  return lex;
}

PredictorLexicon PredictorLexicon::load(const std::filesystem::path& path) { return from_json(read_file(path)); }

bool PredictorLexicon::is_stopword(std::string_view token) const {
  return std::find(stopwords.begin(), stopwords.end(), token) != stopwords.end();
}

std::optional<Action> PredictorLexicon::verb_action(std::string_view token) const {
  for (const auto& [action, words] : verbs) {
    if (std::find(words.begin(), words.end(), token) != words.end()) return action;
  }
  return std::nullopt;
}

}  // namespace symgoal::goal
