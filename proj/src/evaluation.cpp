#include "presspose/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "presspose/errors.hpp"

namespace presspose::eval {

std::vector<double> default_thresholds() {
  std::vector<double> t;
  for (int i = 1; i <= 100; ++i) t.push_back(i / 100.0);
  return t;
}

double torso_length(const KeypointSet& gt) {
  const int ls = index_of(Part::kLShoulder);
  const int rh = index_of(Part::kRHip);
  if (!gt.visible[ls] || !gt.visible[rh]) {
    throw ReferenceUnavailableError("torso reference unavailable: l_shoulder or r_hip not visible");
  }
  return (gt.points[ls] - gt.points[rh]).norm();
}

PckResult pck(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
              const std::vector<double>& thresholds) {
  if (pred.size() != gt.size()) throw ShapeError("pck: prediction and ground-truth counts differ");
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) throw ConfigError("pck: thresholds must be ascending");
  PckResult r;
  for (int k = 0; k < kPartCount; ++k) {
    r.curves[k].part = k;
    r.curves[k].thresholds = thresholds;
    r.curves[k].true_positives.assign(thresholds.size(), 0);
  }
  for (std::size_t f = 0; f < gt.size(); ++f) {
    double torso = 0.0;
    try {
      torso = torso_length(gt[f]);
    } catch (const ReferenceUnavailableError&) {
      r.excluded.push_back(gt[f].frame);
      continue;
    }
    if (!(torso > 0.0)) {
      r.degenerate.push_back(gt[f].frame);
      continue;
    }
    ++r.frames_used;
    for (int k = 0; k < kPartCount; ++k) {
      if (!gt[f].visible[k]) continue;
      auto& c = r.curves[k];
      ++c.visible_count;
      if (!pred[f].visible[k]) continue;
      const double err = (pred[f].points[k] - gt[f].points[k]).norm();
      for (std::size_t i = 0; i < thresholds.size(); ++i)
        if (err < thresholds[i] * torso) ++c.true_positives[i];
    }
  }
  for (auto& c : r.curves) {
    c.no_instances = c.visible_count == 0;
    c.detection_rate.resize(thresholds.size());
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      c.detection_rate[i] = c.no_instances ? 0.0 : static_cast<double>(c.true_positives[i]) / c.visible_count;
    }
  }
  return r;
}

double auc(const PCKCurve& curve) {
  if (curve.detection_rate.empty()) return 0.0;
  double sum = 0.0;
  for (double v : curve.detection_rate) sum += v;
  return 100.0 * sum / static_cast<double>(curve.detection_rate.size());
}

double average_auc(const PckResult& result) {
  double sum = 0.0;
  int n = 0;
  for (const auto& c : result.curves) {
    if (c.no_instances) continue;
    sum += auc(c);
    ++n;
  }
  return n == 0 ? 0.0 : sum / n;
}

PolishFn polish_stage(polish::PolishNetParams<float> params) {
  auto shared = std::make_shared<const polish::PolishNetParams<float>>(std::move(params));
  return [shared](const ColorImage& image) { return polish::forward_eval(*shared, image); };
}

targets::DecodedPose predict(const pose::PoseAdapter<float>& adapter, const ColorImage& image, const PolishFn& polish,
                             double threshold) {
  const auto maps = adapter.infer(polish ? polish(image) : image);
  auto decoded = targets::decode_keypoints(maps.heatmaps, threshold);
  decoded.keypoints = decoded.keypoints.scaled(1.0 / adapter.output_scale());
  return decoded;
}

std::vector<ColormapScore> colormap_benchmark(const pose::PoseAdapter<float>& adapter,
                                              const std::vector<data::LabeledFrame>& frames,
                                              const std::vector<data::Colormap>& maps, ImageSize working,
                                              double threshold) {
  std::vector<KeypointSet> gt;
  for (const auto& f : frames) gt.push_back(f.keypoints);
  std::vector<ColormapScore> table;
  for (const auto& map : maps) {
    std::vector<KeypointSet> pred;
    for (const auto& f : frames) {
      auto p = predict(adapter, data::colorize(f.pressure, map, working), {}, threshold).keypoints;
      p.frame = f.frame();
      pred.push_back(p);
    }
    table.push_back({map.name, average_auc(pck(pred, gt))});
  }
  std::stable_sort(table.begin(), table.end(),
                   [](const ColormapScore& a, const ColormapScore& b) { return a.average_auc > b.average_auc; });
  return table;
}

std::pair<double, double> mean_std(const std::vector<double>& values) {
  if (values.empty()) return {0.0, 0.0};
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  if (values.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size() - 1))};
}

EvalReport evaluate_variants(const std::vector<Variant>& variants, const std::vector<data::Sample>& dataset,
                             const split::SplitPlan& plan, double threshold) {
  if (plan.folds.empty()) throw ConfigError("evaluate: split plan has no folds");
  EvalReport report;
  report.thresholds = default_thresholds();
  report.metadata = {{"split", plan.to_json()},
                     {"thresholds", "0.01..1.00 step 0.01, times torso length (l_shoulder to r_hip), strict <"},
                     {"auc", "mean detection rate over the threshold grid, times 100"},
                     {"peak_threshold", threshold}};
  for (const auto& v : variants) {
    if (v.adapter == nullptr) throw ConfigError("evaluate: variant " + v.label + " has no adapter");
    if (v.polish.size() > 1 && v.polish.size() != plan.folds.size()) {
      throw ConfigError("evaluate: variant " + v.label + " needs one polish stage per fold");
    }
    VariantReport vr;
    vr.label = v.label;
    vr.adapter = v.adapter->name();
    vr.checkpoint = v.checkpoint;
    vr.polished = !v.polish.empty();
    std::vector<KeypointSet> all_pred;
    std::vector<KeypointSet> all_gt;
    for (std::size_t f = 0; f < plan.folds.size(); ++f) {
      const PolishFn* stage = v.polish.empty() ? nullptr : &v.polish[v.polish.size() == 1 ? 0 : f];
      std::vector<KeypointSet> pred;
      std::vector<KeypointSet> gt;
      for (const auto& s : dataset) {
        if (s.frame.subject_id != plan.folds[f].test_subject) continue;
        auto p = predict(*v.adapter, s.image, stage ? *stage : PolishFn{}, threshold).keypoints;
        p.frame = s.frame;
        pred.push_back(p);
        KeypointSet g = s.keypoints;
        g.frame = s.frame;
        gt.push_back(g);
      }
      const PckResult r = pck(pred, gt, report.thresholds);
      FoldResult fr;
      fr.test_subject = plan.folds[f].test_subject;
      fr.frames = gt.size();
      fr.excluded = r.excluded;
      fr.excluded.insert(fr.excluded.end(), r.degenerate.begin(), r.degenerate.end());
      for (int k = 0; k < kPartCount; ++k) {
        fr.auc[k] = auc(r.curves[k]);
        fr.has_instances[k] = !r.curves[k].no_instances;
      }
      fr.average = average_auc(r);
      vr.folds.push_back(std::move(fr));
      all_pred.insert(all_pred.end(), pred.begin(), pred.end());
      all_gt.insert(all_gt.end(), gt.begin(), gt.end());
    }
    vr.pooled = pck(all_pred, all_gt, report.thresholds);
    for (int k = 0; k < kPartCount; ++k) {
      std::vector<double> per_fold;
      for (const auto& fr : vr.folds)
        if (fr.has_instances[k]) per_fold.push_back(fr.auc[k]);
      std::tie(vr.auc_mean[k], vr.auc_std[k]) = mean_std(per_fold);
    }
    std::vector<double> averages;
    for (const auto& fr : vr.folds) averages.push_back(fr.average);
    std::tie(vr.average_mean, vr.average_std) = mean_std(averages);
    report.variants.push_back(std::move(vr));
  }
  return report;
}

namespace {

std::vector<PolishFn> stages(const std::vector<polish::PolishNetParams<float>>& params) {
  std::vector<PolishFn> out;
  for (const auto& p : params) out.push_back(polish_stage(p));
  return out;
}

}  // namespace

EvalReport evaluate_pipeline(const std::vector<polish::PolishNetParams<float>>& polish,
                             const pose::PoseAdapter<float>& adapter, const std::vector<data::Sample>& dataset,
                             const split::SplitPlan& plan, double threshold) {
  std::vector<Variant> variants{{"adapter-only", &adapter, {}, ""}};
  if (!polish.empty()) variants.push_back({"polish+adapter", &adapter, stages(polish), ""});
  return evaluate_variants(variants, dataset, plan, threshold);
}

EvalReport compare_adapters(const std::vector<polish::PolishNetParams<float>>& polish_first,
                            const pose::PoseAdapter<float>& first,
                            const std::vector<polish::PolishNetParams<float>>& polish_second,
                            const pose::PoseAdapter<float>& second, const std::vector<data::Sample>& dataset,
                            const split::SplitPlan& plan, double threshold) {
  if (polish_first.empty() || polish_second.empty()) throw ConfigError("compare_adapters: polish parameters required");
  return evaluate_variants({{"adapter-only", &first, {}, ""},
                            {"polish+adapter", &first, stages(polish_first), ""},
                            {"second-adapter-only", &second, {}, ""},
                            {"polish+second-adapter", &second, stages(polish_second), ""}},
                           dataset, plan, threshold);
}

std::string format_number(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s[0] == '-' ? 1 : 0);
  return s;
}

std::string report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "variant,adapter,polished,part,auc_mean,auc_std,folds,visible_count\n";
  for (const auto& v : report.variants) {
    for (int k = 0; k < kPartCount; ++k) {
      std::size_t folds = 0;
      for (const auto& f : v.folds) folds += f.has_instances[k] ? 1 : 0;
      out << v.label << ',' << v.adapter << ',' << (v.polished ? 1 : 0) << ',' << part_name(k) << ','
          << format_number(v.auc_mean[k]) << ',' << format_number(v.auc_std[k]) << ',' << folds << ','
          << v.pooled.curves[k].visible_count << '\n';
    }
    out << v.label << ',' << v.adapter << ',' << (v.polished ? 1 : 0) << ",average," << format_number(v.average_mean)
        << ',' << format_number(v.average_std) << ',' << v.folds.size() << ",\n";
  }
  return out.str();
}

std::string report_fold_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "variant,fold,test_subject,frames,excluded,part,auc\n";
  for (const auto& v : report.variants) {
    for (std::size_t f = 0; f < v.folds.size(); ++f) {
      const auto& fr = v.folds[f];
      for (int k = 0; k < kPartCount; ++k) {
        out << v.label << ',' << f << ',' << fr.test_subject << ',' << fr.frames << ',' << fr.excluded.size() << ','
            << part_name(k) << ',' << (fr.has_instances[k] ? format_number(fr.auc[k]) : "") << '\n';
      }
    }
  }
  return out.str();
}

std::string report_markdown(const EvalReport& report) {
  std::ostringstream out;
  out << "# Pose evaluation\n\n";
  out << "PCK thresholds 0.01 to 1.00 in steps of 0.01, times the torso length (left shoulder to right hip), "
         "strict inequality. AUC is the mean detection rate over that grid times 100. Numbers are comparable "
         "only within this toolkit.\n\n";
  out << "## Summary\n\n| Model | Adapter | Average AUC |\n|---|---|---|\n";
  for (const auto& v : report.variants) {
    out << "| " << v.label << " | " << v.adapter << " | " << format_number(v.average_mean, 1) << " ± "
        << format_number(v.average_std, 1) << " |\n";
  }
  constexpr int kGroup = kPartCount / 2;
  auto cells = [&](const VariantReport& v, int first) {
    std::string s = "| AUC |";
    for (int k = first; k < first + kGroup; ++k) {
      s += " " + format_number(v.auc_mean[k], 1) + " ± " + format_number(v.auc_std[k], 1) + " |";
    }
    return s + "\n";
  };
  for (const auto& v : report.variants) {
    out << "\n## " << v.label << " (" << v.adapter << ")\n\n|  |";
    for (int k = 0; k < kGroup; ++k) out << ' ' << part_name(k) << " |";
    out << "\n|---|";
    for (int k = 0; k < kGroup; ++k) out << "---|";
    out << '\n' << cells(v, 0) << "|  |";
    for (int k = kGroup; k < kPartCount; ++k) out << " **" << part_name(k) << "** |";
    out << '\n' << cells(v, kGroup);
    std::size_t excluded = 0;
    for (const auto& f : v.folds) excluded += f.excluded.size();
    out << "\nFolds: " << v.folds.size() << ". Frames excluded for missing torso reference: " << excluded << ".\n";
  }
  return out.str();
}

std::string report_plot_data(const EvalReport& report) {
  std::ostringstream out;
  out << "variant,part,threshold,rate\n";
  for (const auto& v : report.variants) {
    for (int k = 0; k < kPartCount; ++k) {
      const auto& c = v.pooled.curves[k];
      for (std::size_t i = 0; i < c.thresholds.size(); ++i) {
        out << v.label << ',' << part_name(k) << ',' << format_number(c.thresholds[i], 2) << ','
            << format_number(c.detection_rate[i]) << '\n';
      }
    }
  }
  return out.str();
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw IOError("cannot write " + path.string());
}

}  // namespace

std::vector<std::filesystem::path> emit_report(const EvalReport& report, const std::filesystem::path& dir,
                                               const std::vector<ReportFormat>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IOError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (auto f : formats) {
    switch (f) {
      case ReportFormat::kCsv:
        write_text(dir / "report.csv", report_csv(report));
        write_text(dir / "folds.csv", report_fold_csv(report));
        written.push_back(dir / "report.csv");
        written.push_back(dir / "folds.csv");
        break;
      case ReportFormat::kMarkdown:
        write_text(dir / "report.md", report_markdown(report));
        written.push_back(dir / "report.md");
        break;
      case ReportFormat::kPlotData:
        write_text(dir / "pck_curves.csv", report_plot_data(report));
        written.push_back(dir / "pck_curves.csv");
        break;
    }
  }
  return written;
}

}  // namespace presspose::eval
