/* Copyright 2026 The ZSBA Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zsba {

enum class TaskKind { kClassification, kSegmentation };

const char* to_string(TaskKind kind);

struct CategorySpec {
  std::string name;
  std::size_t index = 0;

  bool operator==(const CategorySpec&) const = default;
};

inline constexpr std::string_view kDefaultPromptTemplate = "a photo of {}";

// Segmentation labels are stored in 8 bits with 255 reserved as "unlabeled".
inline constexpr std::size_t kMaxSegmentationCategories = 255;

// A named attribute-extraction task and its ordered category vocabulary.
// Category indices are positions in `categories`; predictions and ground
// truth labels refer to them, so file order is significant.
struct TaskSpec {
  std::string task_id;
  TaskKind kind = TaskKind::kClassification;
  std::string prompt_template{kDefaultPromptTemplate};
  std::vector<CategorySpec> categories;

  std::size_t size() const { return categories.size(); }
  // Throws kValidation when no category has this name.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const TaskSpec&) const = default;
};

// Throws kValidation naming the first violated invariant.
void validate_task(const TaskSpec& task);

// Builds a validated task from plain category names.
TaskSpec make_task(std::string task_id, TaskKind kind,
                   std::string prompt_template,
                   const std::vector<std::string>& category_names);

// Parses the task-file JSON document. `source` labels diagnostics.
// Throws kParse (with line/column or field path) or kValidation.
std::vector<TaskSpec> parse_tasks(std::string_view json_text,
                                  std::string_view source = "<memory>");
std::vector<TaskSpec> load_tasks(const std::filesystem::path& path);

std::string serialize_tasks(std::span<const TaskSpec> tasks);

// Throws kValidation if the id is not present.
const TaskSpec& find_task(std::span<const TaskSpec> tasks,
                          std::string_view task_id);

// Substitutes the category name for the single "{}" in the template.
std::string render_prompt(const TaskSpec& task, const CategorySpec& category);

TaskKind route_task(const TaskSpec& task);

// $ZSBA_DATA_DIR if set, else the presets directory of the source tree.
std::filesystem::path preset_directory();

// An existing path is returned unchanged; otherwise `name` is looked up as
// <preset_directory>/<name>.json. Throws kIo if neither exists.
std::filesystem::path resolve_task_file(std::string_view name);

}  // namespace zsba
