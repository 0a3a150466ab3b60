#pragma once

// Brute-force reference implementations and random fixtures shared by the
// unit tests and the acceptance binary. Everything here is written for
// clarity, with plain loops and no shared code with the library internals.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "presspose/annotation.hpp"
#include "presspose/dataset.hpp"
#include "presspose/evaluation.hpp"
#include "presspose/pressure.hpp"
#include "presspose/skeleton.hpp"
#include "presspose/synthetic.hpp"
#include "presspose/tensor.hpp"

namespace presspose::testkit {

// ---- fixtures ----

inline data::PressureSequence random_sequence(std::mt19937_64& rng, int frames, bool integer_values,
                                              int subject = 1, int posture = 1) {
  data::PressureSequence seq;
  seq.meta = {subject, posture, 1.0};
  std::uniform_real_distribution<float> real(0.0f, 100.0f);
  std::uniform_int_distribution<int> whole(0, 100);
  for (int t = 0; t < frames; ++t) {
    data::PressureFrame f;
    f.timestamp_index = t;
    for (int i = 0; i < data::kSensorCount; ++i) {
      f.values.data()[i] = integer_values ? static_cast<float>(whole(rng)) : real(rng);
    }
    seq.frames.push_back(f);
  }
  return seq;
}

inline KeypointSet random_keypoints(std::mt19937_64& rng, ImageSize size, double visible_probability = 0.8,
                                    bool integer = false) {
  KeypointSet ks;
  std::uniform_real_distribution<double> ux(0.0, size.width - 1.0);
  std::uniform_real_distribution<double> uy(0.0, size.height - 1.0);
  std::bernoulli_distribution vis(visible_probability);
  for (int k = 0; k < kPartCount; ++k) {
    double x = ux(rng);
    double y = uy(rng);
    if (integer) {
      x = std::round(x);
      y = std::round(y);
    }
    ks.points[k] = Eigen::Vector2d(x, y);
    ks.visible[k] = vis(rng);
  }
  return ks;
}

/// Colorized synthetic samples: `subjects` sequences of `frames` frames.
inline std::vector<data::Sample> synthetic_samples(ImageSize working, int subjects, int frames,
                                                   const std::string& colormap = "viridis") {
  std::vector<data::Sample> out;
  data::SyntheticOptions opt;
  opt.frames = frames;
  opt.working = working;
  for (int s = 1; s <= subjects; ++s) {
    const auto synth = data::make_synthetic_sequence(s, s, opt);
    for (std::size_t i = 0; i < synth.sequence.frames.size(); ++i) {
      out.push_back({synth.keypoints[i].frame,
                     data::colorize(synth.sequence.frames[i], data::find_colormap(colormap), working),
                     synth.keypoints[i]});
    }
  }
  return out;
}

// ---- oracles ----

inline data::PressureSequence median_oracle(const data::PressureSequence& seq) {
  const int n = static_cast<int>(seq.frames.size());
  data::PressureSequence out = seq;
  auto clampi = [](int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); };
  for (int t = 0; t < n; ++t) {
    for (int y = 0; y < data::kGridHeight; ++y) {
      for (int x = 0; x < data::kGridWidth; ++x) {
        std::vector<float> window;
        for (int dt = -1; dt <= 1; ++dt)
          for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx)
              window.push_back(seq.frames[clampi(t + dt, n - 1)].values(clampi(y + dy, data::kGridHeight - 1),
                                                                         clampi(x + dx, data::kGridWidth - 1)));
        std::sort(window.begin(), window.end());
        out.frames[t].values(y, x) = window[13];
      }
    }
  }
  return out;
}

/// Sum over visible channels, rows and columns of (a - b)^2.
inline double sse_oracle(const FeatureMap<double>& a, const FeatureMap<double>& b, const std::vector<bool>& mask) {
  double s = 0.0;
  for (int c = 0; c < a.channels(); ++c) {
    if (!mask[c]) continue;
    for (int y = 0; y < a.height; ++y)
      for (int x = 0; x < a.width; ++x) {
        const double d = a(c, y, x) - b(c, y, x);
        s += d * d;
      }
  }
  return s;
}

inline double gaussian_oracle(double x, double y, const Eigen::Vector2d& p, double sigma) {
  const double d2 = (x - p.x()) * (x - p.x()) + (y - p.y()) * (y - p.y());
  return std::exp(-d2 / (2.0 * sigma * sigma));
}

/// Unit direction inside the limb rectangle, zero outside. Membership uses
/// the projection onto the segment and the squared perpendicular distance,
/// both scaled by |b - a|^2 so integer fixtures are decided exactly.
inline Eigen::Vector2d paf_oracle(double x, double y, const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                                  double width) {
  const double dx = b.x() - a.x();
  const double dy = b.y() - a.y();
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return Eigen::Vector2d::Zero();
  const double proj = (x - a.x()) * dx + (y - a.y()) * dy;
  const double cross = (x - a.x()) * dy - (y - a.y()) * dx;
  if (proj < 0.0 || proj > len2 || cross * cross > width * width * len2) return Eigen::Vector2d::Zero();
  return Eigen::Vector2d(dx, dy) / std::sqrt(len2);
}

struct PckOracle {
  std::array<std::vector<std::size_t>, kPartCount> hits;
  std::array<std::size_t, kPartCount> visible{};
};

inline PckOracle pck_oracle(const std::vector<KeypointSet>& pred, const std::vector<KeypointSet>& gt,
                            const std::vector<double>& thresholds) {
  PckOracle o;
  for (auto& h : o.hits) h.assign(thresholds.size(), 0);
  const int ls = index_of(Part::kLShoulder);
  const int rh = index_of(Part::kRHip);
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (!gt[i].visible[ls] || !gt[i].visible[rh]) continue;
    const double dx = gt[i].points[ls].x() - gt[i].points[rh].x();
    const double dy = gt[i].points[ls].y() - gt[i].points[rh].y();
    const double torso = std::sqrt(dx * dx + dy * dy);
    if (torso == 0.0) continue;
    for (int k = 0; k < kPartCount; ++k) {
      if (!gt[i].visible[k]) continue;
      ++o.visible[k];
      if (!pred[i].visible[k]) continue;
      const double ex = pred[i].points[k].x() - gt[i].points[k].x();
      const double ey = pred[i].points[k].y() - gt[i].points[k].y();
      const double dist = std::sqrt(ex * ex + ey * ey);
      for (std::size_t t = 0; t < thresholds.size(); ++t)
        if (dist < thresholds[t] * torso) ++o.hits[k][t];
    }
  }
  return o;
}

inline double auc_oracle(const std::vector<std::size_t>& hits, std::size_t visible) {
  if (visible == 0) return 0.0;
  double s = 0.0;
  for (std::size_t h : hits) s += static_cast<double>(h) / static_cast<double>(visible);
  return 100.0 * s / static_cast<double>(hits.size());
}

/// Source timestamp chosen for every frame lacking a manual label, found by
/// comparing each frame against every manual frame.
inline std::map<int, int> propagation_oracle(const data::PressureSequence& seq, const std::vector<int>& manual) {
  std::map<int, int> out;
  for (const auto& f : seq.frames) {
    if (std::find(manual.begin(), manual.end(), f.timestamp_index) != manual.end()) continue;
    double best = std::numeric_limits<double>::infinity();
    int source = -1;
    for (const auto& g : seq.frames) {
      if (std::find(manual.begin(), manual.end(), g.timestamp_index) == manual.end()) continue;
      double sse = 0.0;
      for (int y = 0; y < data::kGridHeight; ++y)
        for (int x = 0; x < data::kGridWidth; ++x) {
          const double d = static_cast<double>(f.values(y, x)) - static_cast<double>(g.values(y, x));
          sse += d * d;
        }
      if (sse < best || (sse == best && g.timestamp_index < source)) {
        best = sse;
        source = g.timestamp_index;
      }
    }
    out[f.timestamp_index] = source;
  }
  return out;
}

/// Direct nested-loop valid convolution (cross-correlation), no padding.
template <typename Scalar>
FeatureMap<Scalar> conv_oracle(const FeatureMap<Scalar>& in, const Planes<Scalar>& weight, const Vector<Scalar>& bias,
                               int k) {
  const int out_c = static_cast<int>(weight.rows());
  FeatureMap<Scalar> out(out_c, in.height - k + 1, in.width - k + 1);
  for (int o = 0; o < out_c; ++o)
    for (int y = 0; y < out.height; ++y)
      for (int x = 0; x < out.width; ++x) {
        Scalar s = bias.size() ? bias[o] : Scalar(0);
        for (int c = 0; c < in.channels(); ++c)
          for (int ky = 0; ky < k; ++ky)
            for (int kx = 0; kx < k; ++kx) s += weight(o, (c * k + ky) * k + kx) * in(c, y + ky, x + kx);
        out(o, y, x) = s;
      }
  return out;
}

/// Transposed convolution by scattering each input pixel's kernel.
template <typename Scalar>
FeatureMap<Scalar> deconv_oracle(const FeatureMap<Scalar>& in, const Planes<Scalar>& weight, const Vector<Scalar>& bias,
                                 int k) {
  const int out_c = static_cast<int>(weight.cols()) / (k * k);
  FeatureMap<Scalar> out(out_c, in.height + k - 1, in.width + k - 1);
  for (int c = 0; c < in.channels(); ++c)
    for (int y = 0; y < in.height; ++y)
      for (int x = 0; x < in.width; ++x)
        for (int o = 0; o < out_c; ++o)
          for (int ky = 0; ky < k; ++ky)
            for (int kx = 0; kx < k; ++kx) out(o, y + ky, x + kx) += weight(c, (o * k + ky) * k + kx) * in(c, y, x);
  for (int o = 0; o < out_c; ++o)
    for (int i = 0; i < out.pixels(); ++i) out.data(o, i) += bias.size() ? bias[o] : Scalar(0);
  return out;
}

}  // namespace presspose::testkit
