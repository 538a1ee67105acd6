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

#include "zsba/vocabulary.hpp"

#include <cstdlib>
#include <set>

#include <json.hpp>

#include "io_util.hpp"
#include "zsba/error.hpp"

namespace zsba {
namespace {

using nlohmann::json;

std::size_t count_placeholders(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t pos = text.find("{}"); pos != std::string_view::npos;
       pos = text.find("{}", pos + 2)) {
    ++count;
  }
  return count;
}

[[noreturn]] void field_error(std::string_view source, const std::string& path,
                              const std::string& what) {
  throw Error(ErrorKind::kParse,
              std::string(source) + ": " + path + ": " + what);
}

const json& require(const json& obj, const char* key, std::string_view source,
                    const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) field_error(source, path, std::string("missing \"") + key + "\"");
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           std::string_view source, const std::string& path) {
  const json& v = require(obj, key, source, path);
  if (!v.is_string()) field_error(source, path + "." + key, "expected string");
  return v.get<std::string>();
}

TaskKind parse_kind(const std::string& text, std::string_view source,
                    const std::string& path) {
  if (text == "classification") return TaskKind::kClassification;
  if (text == "segmentation") return TaskKind::kSegmentation;
  field_error(source, path,
              "expected \"classification\" or \"segmentation\", got \"" + text + "\"");
}

}  // namespace

const char* to_string(TaskKind kind) {
  return kind == TaskKind::kClassification ? "classification" : "segmentation";
}

std::size_t TaskSpec::index_of(std::string_view name) const {
  for (const CategorySpec& c : categories) {
    if (c.name == name) return c.index;
  }
  throw Error(ErrorKind::kValidation, "task \"" + task_id +
                                          "\" has no category \"" +
                                          std::string(name) + "\"");
}

void validate_task(const TaskSpec& task) {
  const std::string who = "task \"" + task.task_id + "\": ";
  if (task.task_id.empty()) {
    throw Error(ErrorKind::kValidation, "task_id must be non-empty");
  }
  if (count_placeholders(task.prompt_template) != 1) {
    throw Error(ErrorKind::kValidation,
                who + "prompt_template must contain exactly one \"{}\"");
  }
  const std::size_t minimum = task.kind == TaskKind::kClassification ? 2 : 1;
  if (task.categories.size() < minimum) {
    throw Error(ErrorKind::kValidation,
                who + std::to_string(minimum) + " or more categories required for " +
                    to_string(task.kind));
  }
  if (task.kind == TaskKind::kSegmentation &&
      task.categories.size() > kMaxSegmentationCategories) {
    throw Error(ErrorKind::kValidation,
                who + "segmentation tasks support at most 255 categories");
  }
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < task.categories.size(); ++i) {
    const CategorySpec& c = task.categories[i];
    if (c.index != i) {
      throw Error(ErrorKind::kValidation,
                  who + "category \"" + c.name + "\" has index " +
                      std::to_string(c.index) + ", expected " + std::to_string(i));
    }
    if (c.name.empty()) {
      throw Error(ErrorKind::kValidation, who + "category names must be non-empty");
    }
    if (c.name.find("{}") != std::string::npos) {
      throw Error(ErrorKind::kValidation,
                  who + "category \"" + c.name + "\" contains \"{}\"");
    }
    if (!seen.insert(c.name).second) {
      throw Error(ErrorKind::kValidation,
                  who + "duplicate category name \"" + c.name + "\"");
    }
  }
}

TaskSpec make_task(std::string task_id, TaskKind kind,
                   std::string prompt_template,
                   const std::vector<std::string>& category_names) {
  TaskSpec task;
  task.task_id = std::move(task_id);
  task.kind = kind;
  task.prompt_template = std::move(prompt_template);
  for (std::size_t i = 0; i < category_names.size(); ++i) {
    task.categories.push_back({category_names[i], i});
  }
  validate_task(task);
  return task;
}

std::vector<TaskSpec> parse_tasks(std::string_view json_text,
                                  std::string_view source) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse,
                std::string(source) + ": " +
                    detail::describe_offset(json_text, e.byte == 0 ? 0 : e.byte - 1) +
                    ": malformed JSON");
  }
  if (!doc.is_object()) field_error(source, "$", "expected an object");
  const json& tasks = require(doc, "tasks", source, "$");
  if (!tasks.is_array()) field_error(source, "$.tasks", "expected an array");

  std::vector<TaskSpec> out;
  std::set<std::string> ids;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    const std::string path = "$.tasks[" + std::to_string(t) + "]";
    const json& entry = tasks[t];
    if (!entry.is_object()) field_error(source, path, "expected an object");

    TaskSpec task;
    task.task_id = require_string(entry, "task_id", source, path);
    task.kind = parse_kind(require_string(entry, "task_kind", source, path),
                           source, path + ".task_kind");
    if (entry.contains("prompt_template")) {
      task.prompt_template = require_string(entry, "prompt_template", source, path);
    }
    const json& cats = require(entry, "categories", source, path);
    if (!cats.is_array()) field_error(source, path + ".categories", "expected an array");
    for (std::size_t c = 0; c < cats.size(); ++c) {
      if (!cats[c].is_string()) {
        field_error(source, path + ".categories[" + std::to_string(c) + "]",
                    "expected string");
      }
      task.categories.push_back({cats[c].get<std::string>(), c});
    }
    try {
      validate_task(task);
    } catch (const Error& e) {
      throw Error(ErrorKind::kValidation, std::string(source) + ": " + path +
                                              ": " + e.message());
    }
    if (!ids.insert(task.task_id).second) {
      throw Error(ErrorKind::kValidation, std::string(source) + ": " + path +
                                              ": duplicate task_id \"" +
                                              task.task_id + "\"");
    }
    out.push_back(std::move(task));
  }
  return out;
}

std::vector<TaskSpec> load_tasks(const std::filesystem::path& path) {
  return parse_tasks(detail::read_file(path), path.string());
}

std::string serialize_tasks(std::span<const TaskSpec> tasks) {
  json list = json::array();
  for (const TaskSpec& task : tasks) {
    json cats = json::array();
    for (const CategorySpec& c : task.categories) cats.push_back(c.name);
    list.push_back({{"task_id", task.task_id},
                    {"task_kind", to_string(task.kind)},
                    {"prompt_template", task.prompt_template},
                    {"categories", std::move(cats)}});
  }
  return json{{"tasks", std::move(list)}}.dump(2) + "\n";
}

const TaskSpec& find_task(std::span<const TaskSpec> tasks,
                          std::string_view task_id) {
  for (const TaskSpec& task : tasks) {
    if (task.task_id == task_id) return task;
  }
  throw Error(ErrorKind::kValidation,
              "no task with id \"" + std::string(task_id) + "\"");
}

std::string render_prompt(const TaskSpec& task, const CategorySpec& category) {
  if (category.index >= task.size() ||
      task.categories[category.index].name != category.name) {
    throw Error(ErrorKind::kPrecondition, "category \"" + category.name +
                                              "\" does not belong to task \"" +
                                              task.task_id + "\"");
  }
  const std::size_t pos = task.prompt_template.find("{}");
  if (pos == std::string::npos) {
    throw Error(ErrorKind::kPrecondition, "prompt_template has no \"{}\"");
  }
  std::string prompt = task.prompt_template;
  prompt.replace(pos, 2, category.name);
  return prompt;
}

TaskKind route_task(const TaskSpec& task) { return task.kind; }

std::filesystem::path preset_directory() {
  if (const char* env = std::getenv("ZSBA_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ZSBA_DEFAULT_DATA_DIR;
}

std::filesystem::path resolve_task_file(std::string_view name) {
  std::filesystem::path direct(name);
  if (std::filesystem::exists(direct)) return direct;
  std::filesystem::path preset = preset_directory() / (std::string(name) + ".json");
  if (std::filesystem::exists(preset)) return preset;
  throw Error(ErrorKind::kIo, "task file \"" + std::string(name) +
                                  "\" not found (also looked for " +
                                  preset.string() + ")");
}

}  // namespace zsba
