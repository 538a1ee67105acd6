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

#include "zsba/pipeline.hpp"

#include <omp.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "io_util.hpp"
#include "zsba/classify.hpp"
#include "zsba/embedding_store.hpp"
#include "zsba/manifest.hpp"
#include "zsba/metrics.hpp"
#include "zsba/netpbm.hpp"
#include "zsba/segment.hpp"
#include "zsba/vocabulary.hpp"

namespace zsba {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_flag(bool present, const char* flag) {
  if (!present) throw UsageError(std::string("missing required flag ") + flag);
}

TaskSpec select_task(const std::vector<TaskSpec>& tasks, const std::string& task_id) {
  if (!task_id.empty()) return find_task(tasks, task_id);
  if (tasks.size() == 1) return tasks.front();
  throw UsageError("task file holds " + std::to_string(tasks.size()) +
                   " tasks; pass --task-id");
}

TaskSpec load_selected_task(const RunConfig& config) {
  return select_task(load_tasks(resolve_task_file(config.tasks)), config.task_id);
}

void require_kind(const TaskSpec& task, TaskKind kind, const char* command) {
  if (route_task(task) != kind) {
    throw UsageError("task \"" + task.task_id + "\" is a " + to_string(task.kind) +
                     " task; use the " +
                     (task.kind == TaskKind::kClassification ? "classify" : "segment") +
                     " command instead of " + command);
  }
}

void prepare_output_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw Error(ErrorKind::kIo, "cannot create output directory " + dir.string());
  }
  for (const char* stale : {"results.jsonl", "failures.jsonl", "report.json"}) {
    fs::remove(dir / stale, ec);
  }
}

std::string failures_jsonl(const std::vector<SampleFailure>& failures) {
  std::string text;
  for (const SampleFailure& f : failures) {
    ordered_json j;
    j["image_id"] = f.image_id;
    j["error"] = to_string(f.kind);
    j["message"] = f.message;
    text += j.dump() + "\n";
  }
  return text;
}

void report_failures(const std::vector<SampleFailure>& failures, const fs::path& dir,
                     std::ostream& err) {
  if (failures.empty()) return;
  for (const SampleFailure& f : failures) {
    err << "sample \"" << f.image_id << "\" failed: " << f.message << "\n";
  }
  detail::write_file(dir / "failures.jsonl", failures_jsonl(failures));
}

void emit_report(const EvalReport& report, const fs::path& dir, std::ostream& out) {
  detail::write_file(dir / "report.json", report_to_json(report));
  out << report_to_table(report);
}

// Runs `body`, mapping library and usage errors onto exit codes.
template <typename Body>
int run_guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFormat;
  }
}

struct SegmentJob {
  const ManifestSample* sample = nullptr;
  MaskSet masks;
  std::optional<SegmentationMap> truth;
  MaskScores scores;
  SegmentationMap predicted;
  std::optional<SampleFailure> failure;
};

void fail_job(SegmentJob& job, const Error& e) {
  job.failure = SampleFailure{job.sample->image_id, e.kind(), e.message()};
}

}  // namespace

ExitCode exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
    case ErrorKind::kParse:
    case ErrorKind::kBadMagic:
    case ErrorKind::kBadVersion:
    case ErrorKind::kTruncatedFile:
    case ErrorKind::kTrailingData:
    case ErrorKind::kDuplicateKey:
    case ErrorKind::kRleLengthMismatch:
      return kExitFormat;
    default:
      return kExitValidation;
  }
}

int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    require_flag(!config.tasks.empty(), "--tasks");
    require_flag(!config.embeddings.empty(), "--embeddings");
    require_flag(!config.manifest.empty(), "--manifest");
    require_flag(!config.out.empty(), "--out");

    const TaskSpec task = load_selected_task(config);
    require_kind(task, TaskKind::kClassification, "classify");
    const EmbeddingStore store = load_embeddings(config.embeddings);
    const DatasetManifest manifest = load_manifest(config.manifest, task);

    const BatchOutcome batch = classify_batch(manifest, task, store, config.workers);

    prepare_output_dir(config.out);
    std::string lines;
    for (const ClassificationResult& r : batch.results) lines += to_json_line(r) + "\n";
    detail::write_file(config.out / "results.jsonl", lines);
    report_failures(batch.failures, config.out, err);

    if (manifest.any_ground_truth()) {
      try {
        emit_report(classification_report(batch.results, manifest, task), config.out, out);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kEmptyDataset) throw;
        err << "no report: " << e.message() << "\n";
      }
    }
    return batch.failures.empty() ? kExitSuccess : kExitPartial;
  });
}

int cmd_segment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    require_flag(!config.tasks.empty(), "--tasks");
    require_flag(!config.embeddings.empty(), "--embeddings");
    require_flag(!config.manifest.empty(), "--manifest");
    require_flag(!config.masks_dir.empty(), "--masks-dir");
    require_flag(!config.out.empty(), "--out");

    const TaskSpec task = load_selected_task(config);
    require_kind(task, TaskKind::kSegmentation, "segment");
    const EmbeddingStore store = load_embeddings(config.embeddings);
    const DatasetManifest manifest = load_manifest(config.manifest, task);
    // An unexported prompt fails the whole run, not each image.
    category_embeddings(task, store);

    // File reads stay on this thread.
    std::vector<SegmentJob> jobs(manifest.samples.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      SegmentJob& job = jobs[i];
      job.sample = &manifest.samples[i];
      try {
        std::vector<std::string> warnings;
        job.masks = load_masks(config.masks_dir / (job.sample->image_id + ".json"),
                               config.overlap, &warnings);
        for (const std::string& w : warnings) {
          err << "warning: \"" << job.sample->image_id << "\": " << w << "\n";
        }
        if (job.sample->gt_map) job.truth = read_pgm(*job.sample->gt_map);
      } catch (const Error& e) {
        fail_job(job, e);
      }
    }

    const auto n = static_cast<std::ptrdiff_t>(jobs.size());
    const int threads = config.workers > 0 ? config.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      SegmentJob& job = jobs[static_cast<std::size_t>(i)];
      if (job.failure) continue;
      try {
        job.scores = score_masks(job.sample->image_id, job.masks, task, store, 1);
        job.predicted = compose_segmentation(job.masks, job.scores, 1);
        if (job.truth && (job.truth->width != job.predicted.width ||
                          job.truth->height != job.predicted.height)) {
          throw Error(ErrorKind::kShapeMismatch,
                      "ground-truth map does not match the mask set dimensions");
        }
      } catch (const Error& e) {
        fail_job(job, e);
      }
    }

    prepare_output_dir(config.out);
    std::vector<SampleFailure> failures;
    std::vector<SegmentationMap> predicted;
    std::vector<SegmentationMap> truth;
    std::string lines;
    for (const SegmentJob& job : jobs) {
      if (job.failure) {
        failures.push_back(*job.failure);
        continue;
      }
      const std::string& id = job.sample->image_id;
      const fs::path pgm = config.out / (id + ".pgm");
      fs::create_directories(pgm.parent_path());
      write_pgm(job.predicted, pgm);
      if (config.overlay) write_ppm(colorize(job.predicted), config.out / (id + ".ppm"));

      ordered_json j;
      j["image_id"] = id;
      j["task_id"] = task.task_id;
      j["map"] = id + ".pgm";
      ordered_json masks = ordered_json::array();
      for (std::size_t m = 0; m < job.masks.masks.size(); ++m) {
        ordered_json entry;
        entry["mask_id"] = job.masks.masks[m].id;
        entry["predicted_index"] = job.scores.labels[m];
        entry["predicted_name"] = task.categories[job.scores.labels[m]].name;
        entry["scores"] = job.scores.rows[m];
        masks.push_back(std::move(entry));
      }
      j["masks"] = std::move(masks);
      lines += j.dump() + "\n";

      if (job.truth) {
        predicted.push_back(job.predicted);
        truth.push_back(*job.truth);
      }
    }
    detail::write_file(config.out / "results.jsonl", lines);
    report_failures(failures, config.out, err);

    if (!truth.empty()) {
      const UnlabeledPolicy policy = config.ignore_unlabeled
                                         ? UnlabeledPolicy::kIgnore
                                         : UnlabeledPolicy::kCountAsMiss;
      try {
        emit_report(segmentation_report(predicted, truth, task, policy, config.workers),
                    config.out, out);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kEmptyDataset) throw;
        err << "no report: " << e.message() << "\n";
      }
    }
    return failures.empty() ? kExitSuccess : kExitPartial;
  });
}

namespace {

class Checklist {
 public:
  explicit Checklist(std::ostream& out) : out_(out) {}

  void pass(const std::string& label) { out_ << "[PASS] " << label << "\n"; }
  void fail(const std::string& label, const std::string& detail) {
    out_ << "[FAIL] " << label << ": " << detail << "\n";
    ++failures_;
  }
  // Runs `check`; an Error becomes a failed item. Returns whether it passed.
  template <typename Check>
  bool item(const std::string& label, Check&& check) {
    try {
      check();
      pass(label);
      return true;
    } catch (const Error& e) {
      fail(label, e.what());
      return false;
    } catch (const UsageError& e) {
      fail(label, e.what());
      return false;
    }
  }
  int failures() const { return failures_; }

 private:
  std::ostream& out_;
  int failures_ = 0;
};

// A key that resolves to a usable (non-zero, finite) vector.
std::optional<std::string> usable(const EmbeddingStore& store, const std::string& key) {
  const Embedding* e = store.find(key);
  if (e == nullptr) return std::string("MissingKey");
  try {
    l2_normalize(*e);
  } catch (const Error& err) {
    return std::string(to_string(err.kind()));
  }
  return std::nullopt;
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  (void)err;
  Checklist checks(out);

  std::optional<TaskSpec> task;
  checks.item("task file " + config.tasks, [&] {
    require_flag(!config.tasks.empty(), "--tasks");
    task = load_selected_task(config);
  });

  std::optional<EmbeddingStore> store;
  checks.item("embeddings file " + config.embeddings.string(), [&] {
    require_flag(!config.embeddings.empty(), "--embeddings");
    store = load_embeddings(config.embeddings);
  });

  if (task && store) {
    std::size_t missing = 0;
    for (const CategorySpec& c : task->categories) {
      const std::string key = text_key(render_prompt(*task, c));
      if (auto problem = usable(*store, key)) {
        checks.fail("prompt embedding", "\"" + key + "\" (" + *problem + ")");
        ++missing;
      }
    }
    if (missing == 0) {
      checks.pass("prompt embeddings (" + std::to_string(task->size()) + " categories)");
    }
  }

  std::optional<DatasetManifest> manifest;
  if (task) {
    checks.item("manifest " + config.manifest.string(), [&] {
      require_flag(!config.manifest.empty(), "--manifest");
      manifest = load_manifest(config.manifest, *task);
    });
  }

  if (task && store && manifest) {
    if (task->kind == TaskKind::kClassification) {
      std::size_t bad = 0;
      for (const ManifestSample& s : manifest->samples) {
        const std::string key = image_key(s.image_id);
        if (auto problem = usable(*store, key)) {
          checks.fail("image embedding", "\"" + key + "\" (" + *problem + ")");
          ++bad;
        }
      }
      if (bad == 0) {
        checks.pass("image embeddings (" + std::to_string(manifest->samples.size()) +
                    " samples)");
      }
    } else if (config.masks_dir.empty()) {
      checks.fail("mask files", "missing required flag --masks-dir");
    } else {
      std::size_t bad = 0;
      for (const ManifestSample& s : manifest->samples) {
        const fs::path mask_path = config.masks_dir / (s.image_id + ".json");
        MaskSet masks;
        try {
          masks = load_masks(mask_path, config.overlap);
        } catch (const Error& e) {
          checks.fail("mask file " + mask_path.string(), e.what());
          ++bad;
          continue;
        }
        for (const BinaryMask& m : masks.masks) {
          const std::string key = image_key(s.image_id, m.id);
          if (auto problem = usable(*store, key)) {
            checks.fail("masked-image embedding",
                        "\"" + key + "\" in " + mask_path.string() + " (" + *problem + ")");
            ++bad;
          }
        }
        if (s.gt_map) {
          try {
            const SegmentationMap gt = read_pgm(*s.gt_map);
            if (gt.width != masks.width || gt.height != masks.height) {
              throw Error(ErrorKind::kShapeMismatch,
                          "ground truth is " + std::to_string(gt.width) + "x" +
                              std::to_string(gt.height) + ", masks are " +
                              std::to_string(masks.width) + "x" +
                              std::to_string(masks.height));
            }
            for (std::uint8_t label : gt.labels) {
              if (label != kUnlabeled && label >= task->size()) {
                throw Error(ErrorKind::kValidation,
                            "label " + std::to_string(label) + " is not a category");
              }
            }
          } catch (const Error& e) {
            checks.fail("ground-truth map " + s.gt_map->string(), e.what());
            ++bad;
          }
        }
      }
      if (bad == 0) {
        checks.pass("masks and masked-image embeddings (" +
                    std::to_string(manifest->samples.size()) + " images)");
      }
    }
  }

  out << (checks.failures() == 0 ? "all checks passed\n"
                                 : std::to_string(checks.failures()) + " check(s) failed\n");
  return checks.failures() == 0 ? kExitSuccess : kExitValidation;
}

int cmd_report(const fs::path& report_path, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    require_flag(!report_path.empty(), "report path");
    out << report_to_table(report_from_json(detail::read_file(report_path)));
    return kExitSuccess;
  });
}

}  // namespace zsba
