#pragma once

// Dense building blocks shared by PolishNet and the pose adapters. Every
// forward has a matching backward that returns the input gradient and
// accumulates parameter gradients.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

#include "presspose/tensor.hpp"

namespace presspose::nn {

/// Convolution kernel bank.
///
/// Regular convolution stores `weight` as out x (in * k * k); transposed
/// convolution stores it as in x (out * k * k). Both match the usual
/// [first, second, k, k] row-major layout of the respective operator.
template <typename Scalar>
struct ConvWeights {
  int kernel = 3;
  Planes<Scalar> weight;
  Vector<Scalar> bias;

  void set_zero() {
    weight.setZero();
    bias.setZero();
  }
};

template <typename Scalar>
ConvWeights<Scalar> zeros_like(const ConvWeights<Scalar>& w) {
  ConvWeights<Scalar> z;
  z.kernel = w.kernel;
  z.weight = Planes<Scalar>::Zero(w.weight.rows(), w.weight.cols());
  z.bias = Vector<Scalar>::Zero(w.bias.size());
  return z;
}

/// Unfolds every k x k window (zero padded by `pad`) into one column.
template <typename Scalar>
Planes<Scalar> im2col(const FeatureMap<Scalar>& in, int k, int pad) {
  const int out_h = in.height + 2 * pad - k + 1;
  const int out_w = in.width + 2 * pad - k + 1;
  const int channels = in.channels();
  Planes<Scalar> cols = Planes<Scalar>::Zero(static_cast<Eigen::Index>(channels) * k * k, out_h * out_w);
  for (int c = 0; c < channels; ++c) {
    const Scalar* src = in.data.row(c).data();
    for (int ky = 0; ky < k; ++ky) {
      for (int kx = 0; kx < k; ++kx) {
        Scalar* dst = cols.row((c * k + ky) * k + kx).data();
        const int x_lo = std::max(0, pad - kx);
        const int x_hi = std::min(out_w, in.width + pad - kx);
        for (int oy = 0; oy < out_h; ++oy) {
          const int iy = oy + ky - pad;
          if (iy < 0 || iy >= in.height) continue;
          const Scalar* row = src + static_cast<std::ptrdiff_t>(iy) * in.width + (kx - pad);
          Scalar* out = dst + static_cast<std::ptrdiff_t>(oy) * out_w;
          for (int ox = x_lo; ox < x_hi; ++ox) out[ox] = row[ox];
        }
      }
    }
  }
  return cols;
}

/// Adjoint of im2col: scatters columns back onto a channels x h x w volume.
template <typename Scalar>
FeatureMap<Scalar> col2im(const Planes<Scalar>& cols, int channels, int h, int w, int k, int pad) {
  const int out_h = h + 2 * pad - k + 1;
  const int out_w = w + 2 * pad - k + 1;
  FeatureMap<Scalar> img(channels, h, w);
  for (int c = 0; c < channels; ++c) {
    Scalar* dst = img.data.row(c).data();
    for (int ky = 0; ky < k; ++ky) {
      for (int kx = 0; kx < k; ++kx) {
        const Scalar* src = cols.row((c * k + ky) * k + kx).data();
        const int x_lo = std::max(0, pad - kx);
        const int x_hi = std::min(out_w, w + pad - kx);
        for (int oy = 0; oy < out_h; ++oy) {
          const int iy = oy + ky - pad;
          if (iy < 0 || iy >= h) continue;
          Scalar* row = dst + static_cast<std::ptrdiff_t>(iy) * w + (kx - pad);
          const Scalar* in = src + static_cast<std::ptrdiff_t>(oy) * out_w;
          for (int ox = x_lo; ox < x_hi; ++ox) row[ox] += in[ox];
        }
      }
    }
  }
  return img;
}

template <typename Scalar>
FeatureMap<Scalar> conv2d(const FeatureMap<Scalar>& in, const ConvWeights<Scalar>& w, int pad) {
  const int k = w.kernel;
  if (w.weight.cols() != static_cast<Eigen::Index>(in.channels()) * k * k) {
    throw ShapeError("conv2d: input has " + std::to_string(in.channels()) + " channels, kernel expects " +
                     std::to_string(w.weight.cols() / (k * k)));
  }
  FeatureMap<Scalar> out;
  out.height = in.height + 2 * pad - k + 1;
  out.width = in.width + 2 * pad - k + 1;
  if (out.height <= 0 || out.width <= 0) throw ShapeError("conv2d: input smaller than kernel");
  out.data.noalias() = w.weight * im2col(in, k, pad);
  if (w.bias.size() > 0) out.data.colwise() += w.bias;
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> conv2d_backward(const FeatureMap<Scalar>& in, const ConvWeights<Scalar>& w, int pad,
                                   const FeatureMap<Scalar>& grad_out, ConvWeights<Scalar>* grad_w) {
  const int k = w.kernel;
  if (grad_w != nullptr) {
    grad_w->weight.noalias() += grad_out.data * im2col(in, k, pad).transpose();
    if (grad_w->bias.size() > 0) grad_w->bias += grad_out.data.rowwise().sum();
  }
  Planes<Scalar> grad_cols = w.weight.transpose() * grad_out.data;
  return col2im(grad_cols, in.channels(), in.height, in.width, k, pad);
}

/// Transposed convolution with "full" sizing: out = in + k - 1.
template <typename Scalar>
FeatureMap<Scalar> deconv2d(const FeatureMap<Scalar>& in, const ConvWeights<Scalar>& w) {
  const int k = w.kernel;
  if (w.weight.rows() != in.channels()) {
    throw ShapeError("deconv2d: input has " + std::to_string(in.channels()) + " channels, kernel expects " +
                     std::to_string(w.weight.rows()));
  }
  const int out_channels = static_cast<int>(w.weight.cols()) / (k * k);
  Planes<Scalar> cols = w.weight.transpose() * in.data;
  FeatureMap<Scalar> out = col2im(cols, out_channels, in.height + k - 1, in.width + k - 1, k, 0);
  if (w.bias.size() > 0) out.data.colwise() += w.bias;
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> deconv2d_backward(const FeatureMap<Scalar>& in, const ConvWeights<Scalar>& w,
                                     const FeatureMap<Scalar>& grad_out, ConvWeights<Scalar>* grad_w) {
  const int k = w.kernel;
  Planes<Scalar> grad_cols = im2col(grad_out, k, 0);
  if (grad_w != nullptr) {
    grad_w->weight.noalias() += in.data * grad_cols.transpose();
    if (grad_w->bias.size() > 0) grad_w->bias += grad_out.data.rowwise().sum();
  }
  FeatureMap<Scalar> grad_in;
  grad_in.height = in.height;
  grad_in.width = in.width;
  grad_in.data.noalias() = w.weight * grad_cols;
  return grad_in;
}

/// Per-channel normalization state. `scale` and `shift` are trainable.
template <typename Scalar>
struct NormState {
  Vector<Scalar> scale;
  Vector<Scalar> shift;
  Vector<Scalar> running_mean;
  Vector<Scalar> running_var;

  static NormState identity(int channels) {
    return {Vector<Scalar>::Ones(channels), Vector<Scalar>::Zero(channels), Vector<Scalar>::Zero(channels),
            Vector<Scalar>::Ones(channels)};
  }
};

template <typename Scalar>
struct NormCache {
  Batch<Scalar> normalized;
  Vector<Scalar> inv_std;
  Vector<Scalar> batch_mean;
  Vector<Scalar> batch_var;  // biased
  Eigen::Index count = 0;
};

/// Normalizes with statistics pooled over the whole batch and all pixels.
template <typename Scalar>
Batch<Scalar> batch_norm_train(const Batch<Scalar>& in, const NormState<Scalar>& state, Scalar eps,
                               NormCache<Scalar>* cache) {
  const int channels = in.front().channels();
  Vector<Scalar> mean = Vector<Scalar>::Zero(channels);
  Eigen::Index count = 0;
  for (const auto& m : in) {
    mean += m.data.rowwise().sum();
    count += m.pixels();
  }
  mean /= static_cast<Scalar>(count);
  Vector<Scalar> var = Vector<Scalar>::Zero(channels);
  for (const auto& m : in) var += (m.data.colwise() - mean).array().square().matrix().rowwise().sum();
  var /= static_cast<Scalar>(count);
  const Vector<Scalar> inv_std = (var.array() + eps).rsqrt().matrix();

  Batch<Scalar> out;
  out.reserve(in.size());
  Batch<Scalar> normalized;
  normalized.reserve(in.size());
  for (const auto& m : in) {
    FeatureMap<Scalar> xhat = m;
    xhat.data = ((m.data.colwise() - mean).array().colwise() * inv_std.array()).matrix();
    FeatureMap<Scalar> y = xhat;
    y.data = ((xhat.data.array().colwise() * state.scale.array()).colwise() + state.shift.array()).matrix();
    out.push_back(std::move(y));
    normalized.push_back(std::move(xhat));
  }
  if (cache != nullptr) {
    cache->normalized = std::move(normalized);
    cache->inv_std = inv_std;
    cache->batch_mean = mean;
    cache->batch_var = var;
    cache->count = count;
  }
  return out;
}

/// Blends batch statistics into the running estimates (unbiased variance).
template <typename Scalar>
void update_running_stats(NormState<Scalar>& state, const NormCache<Scalar>& cache, Scalar momentum) {
  const Scalar n = static_cast<Scalar>(cache.count);
  const Scalar unbias = cache.count > 1 ? n / (n - 1) : Scalar(1);
  state.running_mean = momentum * state.running_mean + (1 - momentum) * cache.batch_mean;
  state.running_var = momentum * state.running_var + (1 - momentum) * unbias * cache.batch_var;
}

template <typename Scalar>
Batch<Scalar> batch_norm_backward(const Batch<Scalar>& grad_out, const NormState<Scalar>& state,
                                  const NormCache<Scalar>& cache, Vector<Scalar>* grad_scale,
                                  Vector<Scalar>* grad_shift) {
  const int channels = static_cast<int>(state.scale.size());
  Vector<Scalar> sum_dy = Vector<Scalar>::Zero(channels);
  Vector<Scalar> sum_dy_xhat = Vector<Scalar>::Zero(channels);
  for (std::size_t i = 0; i < grad_out.size(); ++i) {
    sum_dy += grad_out[i].data.rowwise().sum();
    sum_dy_xhat += grad_out[i].data.cwiseProduct(cache.normalized[i].data).rowwise().sum();
  }
  if (grad_scale != nullptr) *grad_scale += sum_dy_xhat;
  if (grad_shift != nullptr) *grad_shift += sum_dy;

  const Scalar n = static_cast<Scalar>(cache.count);
  // dx = scale * inv_std / n * (n dy - sum(dy) - xhat sum(dy xhat))
  const Vector<Scalar> coeff = (state.scale.array() * cache.inv_std.array() / n).matrix();
  Batch<Scalar> grad_in;
  grad_in.reserve(grad_out.size());
  for (std::size_t i = 0; i < grad_out.size(); ++i) {
    FeatureMap<Scalar> g = grad_out[i];
    auto centered = ((n * grad_out[i].data).colwise() - sum_dy).array() -
                    (cache.normalized[i].data.array().colwise() * sum_dy_xhat.array());
    g.data = (centered.colwise() * coeff.array()).matrix();
    grad_in.push_back(std::move(g));
  }
  return grad_in;
}

template <typename Scalar>
FeatureMap<Scalar> batch_norm_eval(const FeatureMap<Scalar>& in, const NormState<Scalar>& state, Scalar eps) {
  const Vector<Scalar> inv_std = (state.running_var.array() + eps).rsqrt().matrix();
  const Vector<Scalar> gain = state.scale.cwiseProduct(inv_std);
  const Vector<Scalar> offset = state.shift - gain.cwiseProduct(state.running_mean);
  FeatureMap<Scalar> out = in;
  out.data = ((in.data.array().colwise() * gain.array()).colwise() + offset.array()).matrix();
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> leaky_relu(const FeatureMap<Scalar>& in, Scalar slope) {
  FeatureMap<Scalar> out = in;
  out.data = in.data.unaryExpr([slope](Scalar v) { return v > 0 ? v : slope * v; });
  return out;
}

/// Gradient through leaky ReLU, given the pre-activation input.
template <typename Scalar>
FeatureMap<Scalar> leaky_relu_backward(const FeatureMap<Scalar>& pre, const FeatureMap<Scalar>& grad_out,
                                       Scalar slope) {
  FeatureMap<Scalar> g = grad_out;
  g.data = grad_out.data.binaryExpr(pre.data, [slope](Scalar d, Scalar v) { return v > 0 ? d : slope * d; });
  return g;
}

template <typename Scalar>
FeatureMap<Scalar> sigmoid(const FeatureMap<Scalar>& in) {
  FeatureMap<Scalar> out = in;
  out.data = in.data.unaryExpr([](Scalar v) { return Scalar(1) / (Scalar(1) + std::exp(-v)); });
  return out;
}

/// Gradient through the logistic function, given its output.
template <typename Scalar>
FeatureMap<Scalar> sigmoid_backward(const FeatureMap<Scalar>& out, const FeatureMap<Scalar>& grad_out) {
  FeatureMap<Scalar> g = grad_out;
  g.data = grad_out.data.cwiseProduct(out.data.cwiseProduct((Scalar(1) - out.data.array()).matrix()));
  return g;
}

template <typename Scalar>
FeatureMap<Scalar> relu(const FeatureMap<Scalar>& in) {
  return leaky_relu(in, Scalar(0));
}

template <typename Scalar>
FeatureMap<Scalar> relu_backward(const FeatureMap<Scalar>& pre, const FeatureMap<Scalar>& grad_out) {
  return leaky_relu_backward(pre, grad_out, Scalar(0));
}

/// Non-overlapping `size` x `size` average pooling; trailing rows/columns are dropped.
template <typename Scalar>
FeatureMap<Scalar> avg_pool(const FeatureMap<Scalar>& in, int size) {
  FeatureMap<Scalar> out(in.channels(), in.height / size, in.width / size);
  const Scalar norm = Scalar(1) / static_cast<Scalar>(size * size);
  for (int c = 0; c < in.channels(); ++c)
    for (int y = 0; y < out.height; ++y)
      for (int x = 0; x < out.width; ++x) {
        Scalar s = 0;
        for (int dy = 0; dy < size; ++dy)
          for (int dx = 0; dx < size; ++dx) s += in(c, y * size + dy, x * size + dx);
        out(c, y, x) = s * norm;
      }
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> avg_pool_backward(const FeatureMap<Scalar>& in, const FeatureMap<Scalar>& grad_out, int size) {
  FeatureMap<Scalar> g(in.channels(), in.height, in.width);
  const Scalar norm = Scalar(1) / static_cast<Scalar>(size * size);
  for (int c = 0; c < in.channels(); ++c)
    for (int y = 0; y < grad_out.height; ++y)
      for (int x = 0; x < grad_out.width; ++x)
        for (int dy = 0; dy < size; ++dy)
          for (int dx = 0; dx < size; ++dx) g(c, y * size + dy, x * size + dx) = grad_out(c, y, x) * norm;
  return g;
}

/// Non-overlapping max pooling; ties resolve to the first element in scan order.
template <typename Scalar>
FeatureMap<Scalar> max_pool(const FeatureMap<Scalar>& in, int size) {
  FeatureMap<Scalar> out(in.channels(), in.height / size, in.width / size);
  for (int c = 0; c < in.channels(); ++c)
    for (int y = 0; y < out.height; ++y)
      for (int x = 0; x < out.width; ++x) {
        Scalar best = -std::numeric_limits<Scalar>::infinity();
        for (int dy = 0; dy < size; ++dy)
          for (int dx = 0; dx < size; ++dx) best = std::max(best, in(c, y * size + dy, x * size + dx));
        out(c, y, x) = best;
      }
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> max_pool_backward(const FeatureMap<Scalar>& in, const FeatureMap<Scalar>& grad_out, int size) {
  FeatureMap<Scalar> g(in.channels(), in.height, in.width);
  for (int c = 0; c < in.channels(); ++c)
    for (int y = 0; y < grad_out.height; ++y)
      for (int x = 0; x < grad_out.width; ++x) {
        int by = y * size, bx = x * size;
        for (int dy = 0; dy < size; ++dy)
          for (int dx = 0; dx < size; ++dx)
            if (in(c, y * size + dy, x * size + dx) > in(c, by, bx)) {
              by = y * size + dy;
              bx = x * size + dx;
            }
        g(c, by, bx) += grad_out(c, y, x);
      }
  return g;
}

/// Stacks volumes of equal spatial size along the channel axis.
template <typename Scalar>
FeatureMap<Scalar> concat_channels(const std::vector<const FeatureMap<Scalar>*>& parts) {
  int channels = 0;
  for (const auto* p : parts) channels += p->channels();
  FeatureMap<Scalar> out(channels, parts.front()->height, parts.front()->width);
  int row = 0;
  for (const auto* p : parts) {
    if (p->height != out.height || p->width != out.width) throw ShapeError("concat_channels: spatial size mismatch");
    out.data.middleRows(row, p->channels()) = p->data;
    row += p->channels();
  }
  return out;
}

template <typename Scalar>
FeatureMap<Scalar> slice_channels(const FeatureMap<Scalar>& in, int first, int count) {
  FeatureMap<Scalar> out;
  out.height = in.height;
  out.width = in.width;
  out.data = in.data.middleRows(first, count);
  return out;
}

}  // namespace presspose::nn
