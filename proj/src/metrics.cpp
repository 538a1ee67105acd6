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

#include "zsba/metrics.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "zsba/error.hpp"

namespace zsba {
namespace {

using nlohmann::ordered_json;

double percent(std::uint64_t num, std::uint64_t den) {
  return 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

std::vector<std::string> names_of(const TaskSpec& task) {
  std::vector<std::string> names;
  for (const CategorySpec& c : task.categories) names.push_back(c.name);
  return names;
}

std::string fixed1(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

const char* kind_name(ReportKind kind) {
  return kind == ReportKind::kClassification ? "classification" : "segmentation";
}

}  // namespace

EvalReport report_from_confusion(ReportKind kind, std::string task_id,
                                 const std::vector<std::string>& class_names,
                                 const ConfusionMatrix& confusion) {
  if (class_names.size() != confusion.num_classes()) {
    throw Error(ErrorKind::kShapeMismatch,
                std::to_string(class_names.size()) + " class names for a " +
                    std::to_string(confusion.num_classes()) + "-class matrix");
  }
  if (confusion.total() == 0) {
    throw Error(ErrorKind::kEmptyDataset, "no labeled samples to evaluate");
  }

  EvalReport report;
  report.kind = kind;
  report.task_id = std::move(task_id);
  report.confusion = confusion;

  double sum = 0.0;
  std::size_t present = 0;
  for (std::size_t k = 0; k < confusion.num_classes(); ++k) {
    ClassMetric metric{class_names[k], confusion.truth_total(k), std::nullopt};
    const std::uint64_t tp = confusion.true_positives(k);
    if (kind == ReportKind::kClassification) {
      if (metric.count > 0) metric.value = percent(tp, metric.count);
    } else {
      // IoU is defined whenever the class occurs in the truth or the prediction.
      const std::uint64_t uni = tp + confusion.false_positives(k) + confusion.false_negatives(k);
      if (uni > 0) metric.value = percent(tp, uni);
    }
    if (metric.value) {
      sum += *metric.value;
      ++present;
    }
    report.per_class.push_back(std::move(metric));
  }
  report.micro_average = percent(confusion.correct(), confusion.total());
  const double mean = sum / static_cast<double>(present);
  if (kind == ReportKind::kClassification) {
    report.macro_average = mean;
  } else {
    report.mean_iou = mean;
  }
  return report;
}

EvalReport classification_report(std::span<const ClassificationResult> results,
                                 const DatasetManifest& manifest,
                                 const TaskSpec& task) {
  ConfusionMatrix confusion(task.size());
  for (const ClassificationResult& r : results) {
    const ManifestSample* sample = manifest.find(r.image_id);
    if (sample == nullptr) {
      throw Error(ErrorKind::kUnknownSample,
                  "result for \"" + r.image_id + "\" has no manifest entry");
    }
    if (!sample->ground_truth) continue;
    confusion.add(*sample->ground_truth, r.predicted_index);
  }
  return report_from_confusion(ReportKind::kClassification, task.task_id,
                               names_of(task), confusion);
}

ConfusionMatrix segmentation_confusion(std::span<const SegmentationMap> predicted,
                                       std::span<const SegmentationMap> truth,
                                       std::size_t num_classes,
                                       UnlabeledPolicy policy, int workers) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                std::to_string(predicted.size()) + " predicted maps vs " +
                    std::to_string(truth.size()) + " ground-truth maps");
  }
  ConfusionMatrix confusion(num_classes);
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i].width != truth[i].width || predicted[i].height != truth[i].height) {
      throw Error(ErrorKind::kShapeMismatch,
                  "pair " + std::to_string(i) + ": predicted " +
                      std::to_string(predicted[i].width) + "x" +
                      std::to_string(predicted[i].height) + " vs ground truth " +
                      std::to_string(truth[i].width) + "x" +
                      std::to_string(truth[i].height));
    }
    par::accumulate_confusion(truth[i].labels, predicted[i].labels, policy, confusion,
                              workers);
  }
  return confusion;
}

EvalReport segmentation_report(std::span<const SegmentationMap> predicted,
                               std::span<const SegmentationMap> truth,
                               const TaskSpec& task, UnlabeledPolicy policy,
                               int workers) {
  return report_from_confusion(
      ReportKind::kSegmentation, task.task_id, names_of(task),
      segmentation_confusion(predicted, truth, task.size(), policy, workers));
}

EvalReport merge_reports(const EvalReport& a, const EvalReport& b) {
  if (a.kind != b.kind || a.task_id != b.task_id ||
      a.per_class.size() != b.per_class.size()) {
    throw Error(ErrorKind::kShapeMismatch, "reports describe different evaluations");
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < a.per_class.size(); ++k) {
    if (a.per_class[k].name != b.per_class[k].name) {
      throw Error(ErrorKind::kShapeMismatch, "class lists differ at " + std::to_string(k));
    }
    names.push_back(a.per_class[k].name);
  }
  return report_from_confusion(a.kind, a.task_id, names, a.confusion + b.confusion);
}

std::string report_to_table(const EvalReport& report) {
  const bool cls = report.kind == ReportKind::kClassification;
  const std::string name_head = cls ? "Accuracy (%)" : "IoU (%)";
  const std::string count_head = cls ? "# Images" : "# Pixels";
  const std::string value_head = "Ours";

  std::vector<std::pair<std::string, std::string>> footer;
  if (cls) {
    footer.emplace_back("Micro-Average", fixed1(report.micro_average));
    footer.emplace_back("Macro-Average", fixed1(report.macro_average.value_or(0.0)));
  } else {
    footer.emplace_back("Mean", fixed1(report.mean_iou.value_or(0.0)));
  }

  std::size_t name_w = name_head.size();
  std::size_t count_w = count_head.size();
  std::size_t value_w = value_head.size();
  for (const ClassMetric& m : report.per_class) {
    name_w = std::max(name_w, m.name.size());
    count_w = std::max(count_w, std::to_string(m.count).size());
    value_w = std::max(value_w, m.value ? fixed1(*m.value).size() : std::size_t{1});
  }
  for (const auto& [label, value] : footer) {
    name_w = std::max(name_w, label.size());
    value_w = std::max(value_w, value.size());
  }

  auto row = [&](const std::string& a, const std::string& b, const std::string& c) {
    std::string line = a + std::string(name_w - a.size(), ' ');
    line += " | " + std::string(count_w - b.size(), ' ') + b;
    line += " | " + std::string(value_w - c.size(), ' ') + c;
    return line + "\n";
  };
  const std::string rule(name_w + count_w + value_w + 6, '-');

  std::string out = row(name_head, count_head, value_head) + rule + "\n";
  for (const ClassMetric& m : report.per_class) {
    out += row(m.name, std::to_string(m.count), m.value ? fixed1(*m.value) : "-");
  }
  out += rule + "\n";
  for (const auto& [label, value] : footer) out += row(label, "", value);
  return out;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json j;
  j["kind"] = kind_name(report.kind);
  j["task_id"] = report.task_id;
  ordered_json classes = ordered_json::array();
  for (const ClassMetric& m : report.per_class) {
    ordered_json c;
    c["name"] = m.name;
    c["count"] = m.count;
    c["value"] = m.value ? ordered_json(*m.value) : ordered_json(nullptr);
    classes.push_back(std::move(c));
  }
  j["per_class"] = std::move(classes);
  j["micro_average"] = report.micro_average;
  if (report.macro_average) j["macro_average"] = *report.macro_average;
  if (report.mean_iou) j["mean_iou"] = *report.mean_iou;

  const std::size_t n = report.confusion.num_classes();
  ordered_json rows = ordered_json::array();
  for (std::size_t t = 0; t < n; ++t) {
    ordered_json r = ordered_json::array();
    for (std::size_t p = 0; p <= n; ++p) r.push_back(report.confusion.count(t, p));
    rows.push_back(std::move(r));
  }
  j["confusion"] = {{"num_classes", n}, {"counts", std::move(rows)}};
  return j.dump(2) + "\n";
}

EvalReport report_from_json(std::string_view json_text) {
  try {
    const ordered_json j = ordered_json::parse(json_text);
    EvalReport report;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "classification") {
      report.kind = ReportKind::kClassification;
    } else if (kind == "segmentation") {
      report.kind = ReportKind::kSegmentation;
    } else {
      throw Error(ErrorKind::kParse, "unknown report kind \"" + kind + "\"");
    }
    report.task_id = j.at("task_id").get<std::string>();
    for (const auto& c : j.at("per_class")) {
      ClassMetric m{c.at("name").get<std::string>(), c.at("count").get<std::uint64_t>(),
                    std::nullopt};
      if (!c.at("value").is_null()) m.value = c.at("value").get<double>();
      report.per_class.push_back(std::move(m));
    }
    report.micro_average = j.at("micro_average").get<double>();
    if (j.contains("macro_average")) report.macro_average = j["macro_average"].get<double>();
    if (j.contains("mean_iou")) report.mean_iou = j["mean_iou"].get<double>();

    const auto& conf = j.at("confusion");
    const auto n = conf.at("num_classes").get<std::size_t>();
    report.confusion = ConfusionMatrix(n);
    const auto& rows = conf.at("counts");
    if (rows.size() != n) throw Error(ErrorKind::kParse, "confusion row count");
    for (std::size_t t = 0; t < n; ++t) {
      if (rows[t].size() != n + 1) throw Error(ErrorKind::kParse, "confusion column count");
      for (std::size_t p = 0; p <= n; ++p) {
        report.confusion.add(t, p, rows[t][p].get<std::uint64_t>());
      }
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("report JSON: ") + e.what());
  }
}

}  // namespace zsba
