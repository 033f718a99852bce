#include "logknee/explain.hpp"

#include <cctype>
#include <stdexcept>

#include "logknee/errors.hpp"
#include "logknee/prompts.hpp"

namespace logknee {

namespace {

bool blank(const std::string& text) {
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Explanation generate_explanation(ChatBackend& backend, const ModelText& model_text,
                                 const DecodingParams& decoding, std::uint64_t k, int run_index) {
  if (model_text.body.empty())
    throw std::invalid_argument("model text is empty; nothing to explain");

  const std::string prompt = build_generation_prompt(model_text.body);
  std::string completion = backend.send({{"user", prompt}}, decoding);
  if (blank(completion)) throw EmptyCompletionError("backend returned an empty explanation");

  Explanation explanation;
  explanation.text = std::move(completion);
  explanation.k = k;
  explanation.run_index = run_index;
  explanation.generator_model_id = backend.model_id();
  return explanation;
}

ScoreCard judge_explanation(ChatBackend& backend, const Explanation& explanation,
                            const ModelText& reference, const DecodingParams& decoding) {
  const std::string prompt = build_judge_prompt(reference.body, explanation.text);
  std::string last_error;
  for (int attempt = 1; attempt <= kJudgeAttempts; ++attempt) {
    std::string verdict = backend.send({{"user", prompt}}, decoding);
    try {
      ScoreCard card = parse_scorecard(verdict);
      card.judge_model_id = backend.model_id();
      return card;
    } catch (const UnparseableVerdictError& e) {
      last_error = e.what();
    }
  }
  throw UnparseableVerdictError("judge produced no parseable verdict in " +
                                std::to_string(kJudgeAttempts) + " attempts: " + last_error);
}

}  // namespace logknee
