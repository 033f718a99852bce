#pragma once

#include <map>
#include <string>
#include <string_view>

namespace logknee {

// The versioned prompt templates (core/prompts/*.txt, embedded at build
// time). Placeholders use {name} syntax; unknown braces pass through
// untouched, so literal JSON in a template survives.
std::string_view generate_prompt_template();
std::string_view judge_prompt_template();
std::string_view judge_rubric();

std::string fill_template(std::string_view tmpl,
                          const std::map<std::string, std::string>& values);

// Fully assembled prompts.
std::string build_generation_prompt(const std::string& model_text);
std::string build_judge_prompt(const std::string& reference_model_text,
                               const std::string& explanation_text);

}  // namespace logknee
