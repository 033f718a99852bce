#pragma once

#include <cstdint>
#include <string>

#include "logknee/chat_backend.hpp"
#include "logknee/model_text.hpp"
#include "logknee/scorecard.hpp"

namespace logknee {

// A generated explanation with its provenance.
struct Explanation {
  std::string text;  // non-empty
  std::uint64_t k = 0;
  int run_index = 1;
  std::string generator_model_id;
};

// Prompts the backend to explain the model in the three-part structure
// (description, bottlenecks, improvements) and returns its text
// verbatim. Throws std::invalid_argument on empty model text (no call
// is issued), EmptyCompletionError on blank output, and lets backend
// errors propagate.
Explanation generate_explanation(ChatBackend& backend, const ModelText& model_text,
                                 const DecodingParams& decoding, std::uint64_t k = 0,
                                 int run_index = 1);

// Scores the explanation against the serialization of the FULL model.
// The prompt embeds the rubric, the reference model text and the
// explanation, and demands one machine-readable score object. Retries
// up to kJudgeAttempts times on UnparseableVerdictError before giving
// up with the same error.
inline constexpr int kJudgeAttempts = 3;

ScoreCard judge_explanation(ChatBackend& backend, const Explanation& explanation,
                            const ModelText& reference, const DecodingParams& decoding);

}  // namespace logknee
