#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "symgoal/errors.hpp"
#include "symgoal/goal/predictor.hpp"
#include "symgoal/text/text.hpp"

namespace symgoal::goal {
namespace {

// Minimum evidence before a learned association counts as a mention.
constexpr std::uint64_t kMentionMinCount = 5;
constexpr double kMentionMinScore = 0.5;
constexpr std::size_t kSubstringMinLength = 3;

bool contains_sequence(const std::vector<std::string>& tokens, const std::vector<std::string>& pattern) {
  if (pattern.size() > tokens.size()) return false;
  for (std::size_t i = 0; i + pattern.size() <= tokens.size(); ++i) {
    if (std::equal(pattern.begin(), pattern.end(), tokens.begin() + static_cast<long>(i))) return true;
  }
  return false;
}

}  // namespace

LexicalPredictor::LexicalPredictor(PredictorLexicon lexicon, CooccurrenceTable table, const scene::KnowledgeBase& kb,
                                   const GoalTable& goals)
    : lexicon_(std::move(lexicon)), table_(std::move(table)), kb_(&kb), goals_(&goals) {}

std::vector<std::string> LexicalPredictor::mentions(const std::vector<std::string>& tokens) const {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    std::string found;
    for (const auto& entry : kb_->entries()) {
      const auto syn = lexicon_.synonyms.find(entry.category);
      const bool listed = syn != lexicon_.synonyms.end() &&
                          std::find(syn->second.begin(), syn->second.end(), token) != syn->second.end();
      if (token == entry.category || listed) {
        found = entry.category;
        break;
      }
    }
    if (found.empty() && token.size() >= kSubstringMinLength && !lexicon_.is_stopword(token)) {
      for (const auto& entry : kb_->entries()) {
        if (entry.category.size() >= kSubstringMinLength && token.find(entry.category) != std::string::npos &&
            entry.category.size() > found.size()) {
          found = entry.category;
        }
      }
    }
    if (found.empty() && !lexicon_.is_stopword(token) && !lexicon_.verb_action(token) &&
        table_.token_total(token) >= kMentionMinCount) {
      double best = kMentionMinScore;
      for (const auto& entry : kb_->entries()) {
        for (const char* role : {"subject:", "object:"}) {
          const double s = table_.score(token, role + entry.category);
          if (s > best) {
            best = s;
            found = entry.category;
          }
        }
      }
    }
    if (!found.empty()) out.push_back(found);
  }
  return out;
}

Action LexicalPredictor::resolve_action(const std::vector<std::string>& tokens, std::string_view instruction) const {
  for (const auto& token : tokens) {
    if (auto a = lexicon_.verb_action(token)) return *a;
  }
  for (const auto& intent : lexicon_.intents) {
    if (contains_sequence(tokens, intent.pattern)) return intent.action;
  }
  std::set<std::string> known;
  for (const auto& token : tokens) {
    if (!lexicon_.is_stopword(token) && table_.knows(token)) known.insert(token);
  }
  if (known.empty()) throw UnresolvableAction(std::string(instruction));
  Action best = kAllActions.front();
  double best_score = -std::numeric_limits<double>::infinity();
  for (Action a : kAllActions) {
    const std::string label = "action:" + std::string(to_string(a));
    double s = 0.0;
    for (const auto& token : known) s += std::log(table_.score(token, label));
    if (s > best_score) {
      best_score = s;
      best = a;
    }
  }
  return best;
}

std::string LexicalPredictor::fill_role(Action action, bool subject_role, const std::vector<std::string>& mentions,
                                        const std::vector<std::string>& tokens, const scene::SceneGraph& scene,
                                        const std::string& exclude) const {
  auto fits = [&](const std::string& c) {
    if (c == exclude) return false;
    return subject_role ? goals_->fits_subject(*kb_, action, c) : goals_->fits_object(*kb_, action, c);
  };
  for (const auto& c : mentions) {
    if (fits(c)) return scene.has_category(c) ? c : std::string(kUnknown);
  }

  // Unnamed: take it from the scene. Candidates in left-to-right order of
  // their leftmost box.
  std::vector<std::pair<double, std::string>> candidates;
  for (const auto& object : scene.objects) {
    if (!fits(object.category)) continue;
    auto it = std::find_if(candidates.begin(), candidates.end(),
                           [&](const auto& c) { return c.second == object.category; });
    if (it == candidates.end()) {
      candidates.emplace_back(object.bbox.center_x(), object.category);
    } else {
      it->first = std::min(it->first, object.bbox.center_x());
    }
  }
  if (candidates.empty()) return std::string(kUnknown);
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  if (candidates.size() == 1) return candidates.front().second;

  const std::string prefix = subject_role ? "subject:" : "object:";
  std::string best = candidates.front().second;
  double best_score = -std::numeric_limits<double>::infinity();
  for (const auto& [x, category] : candidates) {
    double s = 0.0;
    for (const auto& token : tokens) {
      if (!lexicon_.is_stopword(token) && table_.knows(token)) s += std::log(table_.score(token, prefix + category));
    }
    if (s > best_score) {
      best_score = s;
      best = category;
    }
  }
  return best;
}

GoalTriple LexicalPredictor::predict(std::string_view instruction, const scene::SceneGraph& scene) const {
  const auto tokens = text::tokenize(instruction);
  if (tokens.empty()) throw EmptyInstruction();
  GoalTriple goal;
  goal.action = resolve_action(tokens, instruction);
  const auto named = mentions(tokens);

  goal.subject = fill_role(goal.action, true, named, tokens, scene, "");
  // A subject named in the text but missing from the scene still rules its
  // category out as the object.
  std::string subject_category = goal.subject;
  if (goal.subject == kUnknown) {
    for (const auto& c : named) {
      if (goals_->fits_subject(*kb_, goal.action, c)) {
        subject_category = c;
        break;
      }
    }
  }
  goal.object = fill_role(goal.action, false, named, tokens, scene, subject_category);
  return goal;
}

}  // namespace symgoal::goal
