#include "logknee/prompts.hpp"

#include "prompt_templates.inc"

namespace logknee {

std::string_view generate_prompt_template() { return embedded::kGeneratePrompt; }
std::string_view judge_prompt_template() { return embedded::kJudgePrompt; }
std::string_view judge_rubric() { return embedded::kJudgeRubric; }

std::string fill_template(std::string_view tmpl,
                          const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    std::size_t open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    out.append(tmpl.substr(pos, open - pos));
    std::size_t close = tmpl.find('}', open);
    bool replaced = false;
    if (close != std::string_view::npos) {
      auto it = values.find(std::string(tmpl.substr(open + 1, close - open - 1)));
      if (it != values.end()) {
        out.append(it->second);
        pos = close + 1;
        replaced = true;
      }
    }
    if (!replaced) {
      out.push_back('{');
      pos = open + 1;
    }
  }
  return out;
}

std::string build_generation_prompt(const std::string& model_text) {
  return fill_template(generate_prompt_template(), {{"model_text", model_text}});
}

std::string build_judge_prompt(const std::string& reference_model_text,
                               const std::string& explanation_text) {
  return fill_template(judge_prompt_template(), {
                                                    {"rubric", std::string(judge_rubric())},
                                                    {"model_text", reference_model_text},
                                                    {"explanation", explanation_text},
                                                });
}

}  // namespace logknee
