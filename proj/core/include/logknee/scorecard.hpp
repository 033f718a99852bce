#pragma once

#include <string>
#include <string_view>

namespace logknee {

// The three rubric scores, each in [1,10], and their exact arithmetic
// mean. Display rounding happens only at the reporting layer.
struct ScoreCard {
  double completeness = 0;
  double bottlenecks = 0;
  double improvements = 0;
  double overall = 0;
  std::string judge_model_id;

  static ScoreCard from_dimensions(double completeness, double bottlenecks, double improvements,
                                   std::string judge_model_id = {});
};

// Extracts the first well-formed JSON object carrying the three numeric
// fields from raw judge output, tolerating surrounding prose. Throws
// UnparseableVerdictError when no such object exists and
// OutOfRangeScoreError when a field lies outside [1,10].
ScoreCard parse_scorecard(std::string_view text);

// The canonical JSON rendering; parse_scorecard(render_scorecard(sc))
// is the identity on the three dimensions.
std::string render_scorecard(const ScoreCard& card);

}  // namespace logknee
