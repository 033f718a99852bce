#include "logknee/mock_backends.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "logknee/errors.hpp"
#include "logknee/model_text.hpp"
#include "logknee/scorecard.hpp"

namespace logknee {

namespace {

std::string section_between(const std::string& text, const std::string& begin_marker,
                            const std::string& end_marker) {
  std::size_t begin = text.find(begin_marker);
  if (begin == std::string::npos) return {};
  begin += begin_marker.size();
  std::size_t end = text.find(end_marker, begin);
  if (end == std::string::npos) return {};
  return text.substr(begin, end - begin);
}

std::string joined_prompt(const std::vector<ChatMessage>& messages) {
  std::string prompt;
  for (const auto& message : messages) {
    prompt += message.content;
    prompt += '\n';
  }
  return prompt;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::set<std::string> word_tokens(const std::string& text) {
  std::set<std::string> tokens;
  std::string current;
  for (char c : text) {
    if (is_word_char(c)) {
      current += c;
    } else if (!current.empty()) {
      tokens.insert(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.insert(std::move(current));
  return tokens;
}

bool mentions(const std::set<std::string>& tokens, const std::string& text,
              const std::string& label) {
  if (std::all_of(label.begin(), label.end(), is_word_char)) return tokens.count(label) > 0;
  return text.find(label) != std::string::npos;
}

// Largest activity frequency listed in a STATS section; empty when the
// section is absent.
std::string busiest_activity(const std::string& body) {
  std::istringstream lines(body);
  std::string line, best;
  std::uint64_t best_count = 0;
  while (std::getline(lines, line)) {
    if (!line.starts_with("  freq ")) continue;
    std::size_t colon = line.rfind(": ");
    if (colon == std::string::npos) continue;
    std::string activity = line.substr(7, colon - 7);
    std::uint64_t count = std::strtoull(line.c_str() + colon + 2, nullptr, 10);
    if (count > best_count) {
      best_count = count;
      best = std::move(activity);
    }
  }
  return best;
}

class TemplateExplainer : public ChatBackend {
 public:
  explicit TemplateExplainer(std::uint64_t seed) : seed_(seed) {}

  std::string send(const std::vector<ChatMessage>& messages, const DecodingParams&) override {
    const std::string prompt = joined_prompt(messages);
    std::string model = section_between(prompt, "=== PROCESS MODEL ===", "=== END PROCESS MODEL ===");
    if (model.empty()) model = prompt;  // raw model text without the prompt frame
    const std::vector<std::string> activities = transition_labels_of_body(model);

    std::string out = "Description: The process consists of ";
    if (activities.empty()) {
      out += "no visible activities; every step of the model is silent.";
    } else {
      out += std::to_string(activities.size()) + " activities: ";
      for (std::size_t i = 0; i < activities.size(); ++i) {
        if (i) out += i + 1 == activities.size() ? " and " : ", ";
        out += activities[i];
      }
      out += ". Cases flow through these activities following the control flow of the model, "
             "starting at the source place and completing at the sink place.";
    }
    out += "\n\nBottlenecks: ";
    const std::string busiest = busiest_activity(model);
    if (!busiest.empty()) {
      out += "The busiest step is " + busiest +
             ", which handles the largest share of events and is the most likely queueing point.";
    } else {
      out += "No frequency information is available, so no single step stands out as a "
             "queueing point.";
    }
    out += "\n\nImprovements: Balance the load across the listed activities, add capacity at "
           "the busiest step, and eliminate rework cycles where the model shows loops.";
    return out;
  }

  std::string model_id() const override { return "mock-template-explainer"; }
  bool supports_concurrency() const override { return true; }

 private:
  std::uint64_t seed_;  // reserved for seed-dependent wording variation
};

class CoverageJudge : public ChatBackend {
 public:
  explicit CoverageJudge(std::uint64_t seed) : seed_(seed) {}

  std::string send(const std::vector<ChatMessage>& messages, const DecodingParams&) override {
    const std::string prompt = joined_prompt(messages);
    const std::string reference =
        section_between(prompt, "=== REFERENCE MODEL ===", "=== END REFERENCE MODEL ===");
    const std::string explanation =
        section_between(prompt, "=== EXPLANATION ===", "=== END EXPLANATION ===");

    const std::vector<std::string> reference_activities = transition_labels_of_body(reference);
    const std::set<std::string> tokens = word_tokens(explanation);

    std::size_t covered = 0;
    for (const auto& activity : reference_activities)
      if (mentions(tokens, explanation, activity)) ++covered;

    const double completeness =
        reference_activities.empty()
            ? 10.0
            : 1.0 + 9.0 * static_cast<double>(covered) /
                        static_cast<double>(reference_activities.size());
    const double bottlenecks = tokens.count("Bottlenecks") ? 10.0 : 1.0;
    const double improvements = tokens.count("Improvements") ? 10.0 : 1.0;

    return render_scorecard(ScoreCard::from_dimensions(completeness, bottlenecks, improvements));
  }

  std::string model_id() const override { return "mock-coverage-judge"; }
  bool supports_concurrency() const override { return true; }

 private:
  std::uint64_t seed_;
};

}  // namespace

MockBackends mock_backends(std::uint64_t seed) {
  MockBackends backends;
  backends.template_explainer = std::make_unique<TemplateExplainer>(seed);
  backends.coverage_judge = std::make_unique<CoverageJudge>(seed);
  return backends;
}

ScriptedBackend::ScriptedBackend(std::vector<std::string> responses, std::string model_id)
    : responses_(std::move(responses)), model_id_(std::move(model_id)) {}

std::string ScriptedBackend::send(const std::vector<ChatMessage>&, const DecodingParams&) {
  if (responses_.empty()) throw BackendUnavailableError("scripted backend exhausted");
  std::string response = responses_[static_cast<std::size_t>(calls_) % responses_.size()];
  ++calls_;
  return response;
}

}  // namespace logknee
