#pragma once

// Small dense containers used at the library surface. Heavy linear algebra
// stays behind the solver implementation.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "xbar/types.hpp"

namespace xbar {

/// Row-major dense matrix of doubles.
class Mat {
public:
    Mat() = default;
    Mat(Index rows, Index cols, double fill = 0.0)
        : rows_(rows), cols_(cols), d_(static_cast<size_t>(rows * cols), fill) {
        if (rows < 0 || cols < 0) throw InputError("negative matrix dims");
    }
    static Mat from_rows(const std::vector<std::vector<double>>& rows);

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    Index size() const { return rows_ * cols_; }
    bool empty() const { return d_.empty(); }

    double& operator()(Index i, Index j) { return d_[static_cast<size_t>(i * cols_ + j)]; }
    double operator()(Index i, Index j) const { return d_[static_cast<size_t>(i * cols_ + j)]; }

    std::span<double> data() { return d_; }
    std::span<const double> data() const { return d_; }
    std::span<const double> row(Index i) const {
        return {d_.data() + i * cols_, static_cast<size_t>(cols_)};
    }

    double min() const { return *std::min_element(d_.begin(), d_.end()); }
    double max() const { return *std::max_element(d_.begin(), d_.end()); }
    bool all_finite() const {
        return std::all_of(d_.begin(), d_.end(), [](double v) { return std::isfinite(v); });
    }

    bool operator==(const Mat&) const = default;

private:
    Index rows_ = 0, cols_ = 0;
    std::vector<double> d_;
};

/// Device conductances of one crossbar, siemens, all entries >= 0.
using ConductanceMatrix = Mat;

/// y = v * g for an ideal crossbar (pure vector-matrix product).
std::vector<double> matvec(std::span<const double> v, const Mat& g);

/// Activation volume, laid out [y][x][channel], values expected in [0,1].
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(Index h, Index w, Index c, double fill = 0.0)
        : h_(h), w_(w), c_(c), d_(static_cast<size_t>(h * w * c), fill) {
        if (h < 0 || w < 0 || c < 0) throw InputError("negative tensor dims");
    }

    Index height() const { return h_; }
    Index width() const { return w_; }
    Index channels() const { return c_; }
    Index size() const { return h_ * w_ * c_; }

    double& operator()(Index y, Index x, Index c) {
        return d_[static_cast<size_t>((y * w_ + x) * c_ + c)];
    }
    double operator()(Index y, Index x, Index c) const {
        return d_[static_cast<size_t>((y * w_ + x) * c_ + c)];
    }

    std::span<double> data() { return d_; }
    std::span<const double> data() const { return d_; }
    bool operator==(const Tensor3&) const = default;

private:
    Index h_ = 0, w_ = 0, c_ = 0;
    std::vector<double> d_;
};

/// Convolution kernel [kh][kw][cin][cout].
class Kernel4 {
public:
    Kernel4() = default;
    Kernel4(Index kh, Index kw, Index cin, Index cout, double fill = 0.0)
        : kh_(kh), kw_(kw), cin_(cin), cout_(cout),
          d_(static_cast<size_t>(kh * kw * cin * cout), fill) {
        if (kh < 1 || kw < 1 || cin < 1 || cout < 1) throw InputError("kernel dims must be positive");
    }

    Index kh() const { return kh_; }
    Index kw() const { return kw_; }
    Index cin() const { return cin_; }
    Index cout() const { return cout_; }
    Index size() const { return kh_ * kw_ * cin_ * cout_; }

    double& operator()(Index r, Index q, Index c, Index t) {
        return d_[static_cast<size_t>(((r * kw_ + q) * cin_ + c) * cout_ + t)];
    }
    double operator()(Index r, Index q, Index c, Index t) const {
        return d_[static_cast<size_t>(((r * kw_ + q) * cin_ + c) * cout_ + t)];
    }

    std::span<double> data() { return d_; }
    std::span<const double> data() const { return d_; }
    bool operator==(const Kernel4&) const = default;

private:
    Index kh_ = 0, kw_ = 0, cin_ = 0, cout_ = 0;
    std::vector<double> d_;
};

}  // namespace xbar
