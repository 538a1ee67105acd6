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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zsba/pipeline.hpp"

namespace {

void add_run_options(CLI::App& cmd, zsba::RunConfig& config, bool segmentation) {
  cmd.add_option("--tasks", config.tasks, "Task file, or the name of a shipped preset");
  cmd.add_option("--task-id", config.task_id, "Task to run (optional for single-task files)");
  cmd.add_option("--embeddings", config.embeddings, "ZSBA embedding file");
  cmd.add_option("--manifest", config.manifest, "Dataset manifest JSON");
  cmd.add_option("--workers", config.workers, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  if (segmentation) {
    cmd.add_option("--masks-dir", config.masks_dir, "Directory of <image_id>.json mask files");
    auto* strict = cmd.add_flag("--strict", "Reject overlapping masks (default)");
    auto* lenient = cmd.add_flag_callback(
        "--lenient", [&config] { config.overlap = zsba::OverlapPolicy::kLenient; },
        "Give contested pixels to the larger mask");
    strict->excludes(lenient);
    lenient->excludes(strict);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-shot building attribute extraction"};
  app.require_subcommand(1);

  zsba::RunConfig config;
  std::string report_path;

  auto* classify = app.add_subcommand("classify", "Zero-shot image classification");
  add_run_options(*classify, config, false);
  classify->add_option("--out", config.out, "Output directory");

  auto* segment = app.add_subcommand("segment", "Zero-shot semantic segmentation");
  add_run_options(*segment, config, true);
  segment->add_option("--out", config.out, "Output directory");
  segment->add_flag("--ignore-unlabeled", config.ignore_unlabeled,
                    "Leave pixels no mask covers out of the IoU counts");
  segment->add_flag("--overlay", config.overlay, "Also write a color PPM per image");

  auto* validate = app.add_subcommand("validate", "Check inputs before a run");
  add_run_options(*validate, config, true);

  auto* report = app.add_subcommand("report", "Re-render a saved report.json");
  report->add_option("report", report_path, "Path to report.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return zsba::kExitUsage;
  }

  if (*classify) return zsba::cmd_classify(config, std::cout, std::cerr);
  if (*segment) return zsba::cmd_segment(config, std::cout, std::cerr);
  if (*validate) return zsba::cmd_validate(config, std::cout, std::cerr);
  return zsba::cmd_report(report_path, std::cout, std::cerr);
}
