#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "cddgan/common.hpp"
#include "cddgan/rng.hpp"

namespace cddgan {

// Dense row-major tensor. Shape convention for network activations is
// NCHW; volumes are {D,H,W}; slices {H,W}.
template <class T>
struct Tensor {
    std::vector<int64_t> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<int64_t> s) : shape(std::move(s)), data(size_t(count(shape)), T(0)) {}
    Tensor(std::vector<int64_t> s, T fill) : shape(std::move(s)), data(size_t(count(shape)), fill) {}

    static int64_t count(const std::vector<int64_t>& s) {
        int64_t n = 1;
        for (int64_t d : s) n *= d;
        return n;
    }

    int64_t numel() const { return int64_t(data.size()); }
    int ndim() const { return int(shape.size()); }
    int64_t dim(int i) const { return shape[size_t(i)]; }
    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    T& operator[](int64_t i) { return data[size_t(i)]; }
    const T& operator[](int64_t i) const { return data[size_t(i)]; }

    // 2D/3D/4D accessors; no bounds checks in hot paths.
    T& at(int64_t a, int64_t b) { return data[size_t(a * shape[1] + b)]; }
    const T& at(int64_t a, int64_t b) const { return data[size_t(a * shape[1] + b)]; }
    T& at(int64_t a, int64_t b, int64_t c) { return data[size_t((a * shape[1] + b) * shape[2] + c)]; }
    const T& at(int64_t a, int64_t b, int64_t c) const { return data[size_t((a * shape[1] + b) * shape[2] + c)]; }
    T& at(int64_t a, int64_t b, int64_t c, int64_t d) {
        return data[size_t(((a * shape[1] + b) * shape[2] + c) * shape[3] + d)];
    }
    const T& at(int64_t a, int64_t b, int64_t c, int64_t d) const {
        return data[size_t(((a * shape[1] + b) * shape[2] + c) * shape[3] + d)];
    }

    void fill(T v) { std::fill(data.begin(), data.end(), v); }

    Tensor reshaped(std::vector<int64_t> s) const {
        check(count(s) == numel(), "reshape: element count mismatch");
        Tensor out;
        out.shape = std::move(s);
        out.data = data;
        return out;
    }

    template <class U>
    Tensor<U> cast() const {
        Tensor<U> out;
        out.shape = shape;
        out.data.resize(data.size());
        for (size_t i = 0; i < data.size(); ++i) out.data[i] = U(data[i]);
        return out;
    }

    static Tensor zeros(std::vector<int64_t> s) { return Tensor(std::move(s)); }

    static Tensor full(std::vector<int64_t> s, T v) { return Tensor(std::move(s), v); }

    static Tensor uniform(std::vector<int64_t> s, Rng& rng, T lo, T hi) {
        Tensor out(std::move(s));
        for (auto& v : out.data) v = T(rng.uniform(double(lo), double(hi)));
        return out;
    }

    static Tensor randn(std::vector<int64_t> s, Rng& rng, T stddev = T(1)) {
        Tensor out(std::move(s));
        for (auto& v : out.data) v = T(rng.normal() * double(stddev));
        return out;
    }
};

template <class T>
bool all_finite(const Tensor<T>& t) {
    for (const T& v : t.data)
        if (!std::isfinite(double(v))) return false;
    return true;
}

template <class T>
uint64_t tensor_hash(const Tensor<T>& t) {
    uint64_t h = fnv1a64(t.shape.data(), t.shape.size() * sizeof(int64_t));
    return fnv1a64(t.data.data(), t.data.size() * sizeof(T), h);
}

} // namespace cddgan
