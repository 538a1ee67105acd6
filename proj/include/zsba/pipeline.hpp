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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "zsba/error.hpp"
#include "zsba/mask_set.hpp"

namespace zsba {

// Process exit status of every command.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,       // bad or missing arguments
  kExitFormat = 2,      // I/O or file-format error
  kExitValidation = 3,  // inputs readable but inconsistent
  kExitPartial = 4,     // run finished with per-sample failures
};

ExitCode exit_code_for(ErrorKind kind);

struct RunConfig {
  // Task file path, or the name of a preset under preset_directory().
  std::string tasks;
  // May be empty when the task file holds a single task.
  std::string task_id;
  std::filesystem::path embeddings;
  // Segmentation: <masks_dir>/<image_id>.json per sample.
  std::filesystem::path masks_dir;
  std::filesystem::path manifest;
  std::filesystem::path out;
  OverlapPolicy overlap = OverlapPolicy::kStrict;
  bool ignore_unlabeled = false;
  bool overlay = false;
  int workers = 1;
};

// Writes <out>/results.jsonl, <out>/failures.jsonl (when samples failed) and
// <out>/report.json (when the manifest has ground truth); prints the report
// table to `out`. Diagnostics go to `err`.
int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

// Writes <out>/<image_id>.pgm per image, <out>/<image_id>.ppm with
// `overlay`, <out>/results.jsonl with per-mask labels and scores, plus
// failures.jsonl / report.json as for classify.
int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err);

// Prints a PASS/FAIL checklist; returns kExitSuccess iff every check passed.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);

// Re-renders a saved report.json as a table.
int cmd_report(const std::filesystem::path& report_path, std::ostream& out,
               std::ostream& err);

}  // namespace zsba
