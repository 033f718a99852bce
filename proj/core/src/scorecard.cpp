#include "logknee/scorecard.hpp"

#include <json.hpp>

#include <optional>
#include <utility>

#include "logknee/errors.hpp"

namespace logknee {

namespace {

bool in_range(double v) { return v >= 1.0 && v <= 10.0; }

// Candidate object substrings: from each '{', the prefix where the
// brace balance (outside string literals) first returns to zero.
std::optional<std::string_view> balanced_object(std::string_view text, std::size_t start) {
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (in_string) {
      if (escaped)
        escaped = false;
      else if (c == '\\')
        escaped = true;
      else if (c == '"')
        in_string = false;
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return text.substr(start, i - start + 1);
    }
  }
  return std::nullopt;
}

}  // namespace

ScoreCard ScoreCard::from_dimensions(double completeness, double bottlenecks, double improvements,
                                     std::string judge_model_id) {
  ScoreCard card;
  card.completeness = completeness;
  card.bottlenecks = bottlenecks;
  card.improvements = improvements;
  card.overall = (completeness + bottlenecks + improvements) / 3.0;
  card.judge_model_id = std::move(judge_model_id);
  return card;
}

ScoreCard parse_scorecard(std::string_view text) {
  for (std::size_t pos = text.find('{'); pos != std::string_view::npos;
       pos = text.find('{', pos + 1)) {
    auto candidate = balanced_object(text, pos);
    if (!candidate) break;  // no balanced close ahead of this point
    nlohmann::json parsed = nlohmann::json::parse(*candidate, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object()) continue;
    if (!parsed.contains("completeness") || !parsed.contains("bottlenecks") ||
        !parsed.contains("improvements"))
      continue;
    const auto numeric = [&](const char* key) -> std::optional<double> {
      const auto& v = parsed.at(key);
      if (!v.is_number()) return std::nullopt;
      return v.get<double>();
    };
    auto c = numeric("completeness"), b = numeric("bottlenecks"), i = numeric("improvements");
    if (!c || !b || !i) continue;
    if (!in_range(*c) || !in_range(*b) || !in_range(*i))
      throw OutOfRangeScoreError("score outside [1,10] in verdict object: " +
                                 std::string(*candidate));
    return ScoreCard::from_dimensions(*c, *b, *i);
  }
  throw UnparseableVerdictError("no well-formed score object in judge output");
}

std::string render_scorecard(const ScoreCard& card) {
  nlohmann::json object{
      {"completeness", card.completeness},
      {"bottlenecks", card.bottlenecks},
      {"improvements", card.improvements},
  };
  return object.dump();
}

}  // namespace logknee
