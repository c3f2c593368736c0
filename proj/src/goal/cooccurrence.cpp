#include <set>
#include <sstream>

#include "symgoal/errors.hpp"
#include "symgoal/goal/predictor.hpp"
#include "symgoal/text/text.hpp"

namespace symgoal::goal {
namespace {

constexpr std::string_view kHeader = "symgoal-cooc v1";

std::string kind_of(std::string_view label) { return std::string(label.substr(0, label.find(':'))); }

}  // namespace

void CooccurrenceTable::add(const std::string& token, const std::string& label, std::uint64_t n) {
  auto& row = counts_[token];
  auto it = row.find(label);
  if (it == row.end()) {
    row.emplace(label, n);
  } else {
    it->second += n;
  }
  totals_[token] += n;
  if (labels_.insert(label).second) ++kind_sizes_[kind_of(label)];
}

std::uint64_t CooccurrenceTable::count(std::string_view token, std::string_view label) const {
  auto row = counts_.find(token);
  if (row == counts_.end()) return 0;
  auto it = row->second.find(label);
  return it == row->second.end() ? 0 : it->second;
}

std::uint64_t CooccurrenceTable::token_total(std::string_view token) const {
  auto it = totals_.find(token);
  return it == totals_.end() ? 0 : it->second;
}

double CooccurrenceTable::score(std::string_view token, std::string_view label) const {
  auto kind = kind_sizes_.find(kind_of(label));
  const double labels = kind == kind_sizes_.end() ? 1.0 : static_cast<double>(kind->second);
  return (static_cast<double>(count(token, label)) + kSmoothing) /
         (static_cast<double>(token_total(token)) + kSmoothing * labels);
}

std::string CooccurrenceTable::serialize() const {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const auto& [token, labels] : counts_) {
    for (const auto& [label, n] : labels) out << token << '\t' << label << '\t' << n << '\n';
  }
  return out.str();
}

CooccurrenceTable CooccurrenceTable::deserialize(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw SchemaError("co-occurrence table: bad header");
  CooccurrenceTable table;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto a = line.find('\t');
    const auto b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos) throw SchemaError("co-occurrence table: malformed line " + std::to_string(line_no));
    std::uint64_t n = 0;
    try {
      n = std::stoull(line.substr(b + 1));
    } catch (const std::exception&) {
      throw SchemaError("co-occurrence table: bad count on line " + std::to_string(line_no));
    }
    table.add(line.substr(0, a), line.substr(a + 1, b - a - 1), n);
  }
  return table;
}

CooccurrenceTable train_cooccurrence(const std::vector<text::GoalRecord>& records, const PredictorLexicon& lexicon) {
  if (records.empty()) throw EmptyDataset();
  // Counting into ordered maps keeps the result independent of record order.
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  for (const auto& record : records) {
    std::set<std::string> tokens;
    for (auto& t : text::tokenize(record.instruction)) {
      if (!lexicon.is_stopword(t)) tokens.insert(std::move(t));
    }
    std::vector<std::string> labels = {"action:" + std::string(to_string(record.gold.action))};
    if (record.gold.subject != kUnknown) labels.push_back("subject:" + record.gold.subject);
    if (record.gold.object != kUnknown) labels.push_back("object:" + record.gold.object);
    for (const auto& t : tokens) {
      for (const auto& l : labels) ++counts[{t, l}];
    }
  }
  CooccurrenceTable table;
  for (const auto& [key, n] : counts) table.add(key.first, key.second, n);
  return table;
}

}  // namespace symgoal::goal
