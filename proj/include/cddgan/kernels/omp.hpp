#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

// OpenMP kernels. Work is split over independent output elements (single
// writer per element) and the per-element accumulation order matches the
// reference kernels, so results are reproducible for any thread count.

namespace cddgan::kern::omp {

template <class T>
void conv2d_fwd(const T* in, int N, int Ci, int H, int W,
                const T* w, int Co, int KH, int KW,
                const T* bias, int stride, int pad,
                T* out, int Ho, int Wo) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int co = 0; co < Co; ++co)
            for (int ho = 0; ho < Ho; ++ho) {
                T* orow = out + ((int64_t(n) * Co + co) * Ho + ho) * Wo;
                T b = bias ? bias[co] : T(0);
                for (int wo = 0; wo < Wo; ++wo) orow[wo] = b;
                for (int ci = 0; ci < Ci; ++ci)
                    for (int kh = 0; kh < KH; ++kh) {
                        int ih = ho * stride - pad + kh;
                        if (ih < 0 || ih >= H) continue;
                        const T* irow = in + ((int64_t(n) * Ci + ci) * H + ih) * W;
                        const T* wrow = w + ((int64_t(co) * Ci + ci) * KH + kh) * KW;
                        for (int kw = 0; kw < KW; ++kw) {
                            T a = wrow[kw];
                            int off = kw - pad;
                            for (int wo = 0; wo < Wo; ++wo) {
                                int iw = wo * stride + off;
                                if (iw < 0 || iw >= W) continue;
                                orow[wo] += a * irow[iw];
                            }
                        }
                    }
            }
}

template <class T>
void conv2d_bwd_in(const T* gout, int N, int Co, int Ho, int Wo,
                   const T* w, int Ci, int KH, int KW,
                   int stride, int pad,
                   T* gin, int H, int W) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int ci = 0; ci < Ci; ++ci)
            for (int h = 0; h < H; ++h) {
                T* grow = gin + ((int64_t(n) * Ci + ci) * H + h) * W;
                for (int x = 0; x < W; ++x) grow[x] = 0;
                for (int co = 0; co < Co; ++co)
                    for (int kh = 0; kh < KH; ++kh) {
                        int t = h + pad - kh;
                        if (t < 0 || t % stride != 0) continue;
                        int ho = t / stride;
                        if (ho >= Ho) continue;
                        const T* gorow = gout + ((int64_t(n) * Co + co) * Ho + ho) * Wo;
                        const T* wrow = w + ((int64_t(co) * Ci + ci) * KH + kh) * KW;
                        for (int kw = 0; kw < KW; ++kw) {
                            T a = wrow[kw];
                            for (int wo = 0; wo < Wo; ++wo) {
                                int x = wo * stride - pad + kw;
                                if (x < 0 || x >= W) continue;
                                grow[x] += a * gorow[wo];
                            }
                        }
                    }
            }
}

template <class T>
void conv2d_bwd_w(const T* gout, int N, int Co, int Ho, int Wo,
                  const T* in, int Ci, int H, int W,
                  int stride, int pad, int KH, int KW,
                  T* gw) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int co = 0; co < Co; ++co)
        for (int ci = 0; ci < Ci; ++ci)
            for (int kh = 0; kh < KH; ++kh)
                for (int kw = 0; kw < KW; ++kw) {
                    T acc = 0;
                    for (int n = 0; n < N; ++n)
                        for (int ho = 0; ho < Ho; ++ho) {
                            int ih = ho * stride - pad + kh;
                            if (ih < 0 || ih >= H) continue;
                            const T* gorow = gout + ((int64_t(n) * Co + co) * Ho + ho) * Wo;
                            const T* irow = in + ((int64_t(n) * Ci + ci) * H + ih) * W;
                            for (int wo = 0; wo < Wo; ++wo) {
                                int iw = wo * stride - pad + kw;
                                if (iw < 0 || iw >= W) continue;
                                acc += gorow[wo] * irow[iw];
                            }
                        }
                    gw[((int64_t(co) * Ci + ci) * KH + kh) * KW + kw] = acc;
                }
}

template <class T>
void conv2d_bwd_b(const T* gout, int N, int Co, int Ho, int Wo, T* gb) {
#pragma omp parallel for schedule(static)
    for (int co = 0; co < Co; ++co) {
        T acc = 0;
        for (int n = 0; n < N; ++n) {
            const T* p = gout + (int64_t(n) * Co + co) * Ho * Wo;
            for (int i = 0; i < Ho * Wo; ++i) acc += p[i];
        }
        gb[co] = acc;
    }
}

template <class T>
void convt2d_fwd(const T* in, int N, int Ci, int H, int W,
                 const T* w, int Co, int KH, int KW,
                 const T* bias, int stride, int pad,
                 T* out, int Ho, int Wo) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int co = 0; co < Co; ++co)
            for (int y = 0; y < Ho; ++y) {
                T* orow = out + ((int64_t(n) * Co + co) * Ho + y) * Wo;
                T b = bias ? bias[co] : T(0);
                for (int x = 0; x < Wo; ++x) orow[x] = b;
                for (int ci = 0; ci < Ci; ++ci)
                    for (int ky = 0; ky < KH; ++ky) {
                        int t = y + pad - ky;
                        if (t < 0 || t % stride != 0) continue;
                        int h = t / stride;
                        if (h >= H) continue;
                        const T* irow = in + ((int64_t(n) * Ci + ci) * H + h) * W;
                        const T* wrow = w + ((int64_t(ci) * Co + co) * KH + ky) * KW;
                        for (int kx = 0; kx < KW; ++kx) {
                            T a = wrow[kx];
                            for (int x = 0; x < Wo; ++x) {
                                int u = x + pad - kx;
                                if (u < 0 || u % stride != 0) continue;
                                int ww = u / stride;
                                if (ww >= W) continue;
                                orow[x] += a * irow[ww];
                            }
                        }
                    }
            }
}

template <class T>
void convt2d_bwd_in(const T* gout, int N, int Co, int Ho, int Wo,
                    const T* w, int Ci, int KH, int KW,
                    int stride, int pad,
                    T* gin, int H, int W) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int ci = 0; ci < Ci; ++ci)
            for (int h = 0; h < H; ++h) {
                T* grow = gin + ((int64_t(n) * Ci + ci) * H + h) * W;
                for (int x = 0; x < W; ++x) grow[x] = 0;
                for (int co = 0; co < Co; ++co)
                    for (int ky = 0; ky < KH; ++ky) {
                        int y = h * stride - pad + ky;
                        if (y < 0 || y >= Ho) continue;
                        const T* gorow = gout + ((int64_t(n) * Co + co) * Ho + y) * Wo;
                        const T* wrow = w + ((int64_t(ci) * Co + co) * KH + ky) * KW;
                        for (int kx = 0; kx < KW; ++kx) {
                            T a = wrow[kx];
                            for (int ww = 0; ww < W; ++ww) {
                                int x = ww * stride - pad + kx;
                                if (x < 0 || x >= Wo) continue;
                                grow[ww] += a * gorow[x];
                            }
                        }
                    }
            }
}

template <class T>
void convt2d_bwd_w(const T* gout, int N, int Co, int Ho, int Wo,
                   const T* in, int Ci, int H, int W,
                   int stride, int pad, int KH, int KW,
                   T* gw) {
#pragma omp parallel for collapse(3) schedule(static)
    for (int ci = 0; ci < Ci; ++ci)
        for (int co = 0; co < Co; ++co)
            for (int ky = 0; ky < KH; ++ky)
                for (int kx = 0; kx < KW; ++kx) {
                    T acc = 0;
                    for (int n = 0; n < N; ++n)
                        for (int h = 0; h < H; ++h) {
                            int y = h * stride - pad + ky;
                            if (y < 0 || y >= Ho) continue;
                            const T* irow = in + ((int64_t(n) * Ci + ci) * H + h) * W;
                            const T* gorow = gout + ((int64_t(n) * Co + co) * Ho + y) * Wo;
                            for (int ww = 0; ww < W; ++ww) {
                                int x = ww * stride - pad + kx;
                                if (x < 0 || x >= Wo) continue;
                                acc += irow[ww] * gorow[x];
                            }
                        }
                    gw[((int64_t(ci) * Co + co) * KH + ky) * KW + kx] = acc;
                }
}

template <class T>
void matmul(const T* A, const T* B, T* C, int M, int N, int K, bool transA, bool transB) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < M; ++i) {
        T* crow = C + int64_t(i) * N;
        if (!transA && !transB) {
            for (int j = 0; j < N; ++j) crow[j] = 0;
            for (int k = 0; k < K; ++k) {
                T a = A[int64_t(i) * K + k];
                const T* brow = B + int64_t(k) * N;
                for (int j = 0; j < N; ++j) crow[j] += a * brow[j];
            }
        } else if (!transA && transB) {
            for (int j = 0; j < N; ++j) {
                const T* arow = A + int64_t(i) * K;
                const T* brow = B + int64_t(j) * K;
                T acc = 0;
                for (int k = 0; k < K; ++k) acc += arow[k] * brow[k];
                crow[j] = acc;
            }
        } else if (transA && !transB) {
            for (int j = 0; j < N; ++j) crow[j] = 0;
            for (int k = 0; k < K; ++k) {
                T a = A[int64_t(k) * M + i];
                const T* brow = B + int64_t(k) * N;
                for (int j = 0; j < N; ++j) crow[j] += a * brow[j];
            }
        } else {
            for (int j = 0; j < N; ++j) {
                T acc = 0;
                for (int k = 0; k < K; ++k) acc += A[int64_t(k) * M + i] * B[int64_t(j) * K + k];
                crow[j] = acc;
            }
        }
    }
}

template <class T>
void maxpool2_fwd(const T* in, int N, int C, int H, int W, T* out, int32_t* argmax) {
    int Ho = H / 2, Wo = W / 2;
#pragma omp parallel for collapse(2) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int c = 0; c < C; ++c) {
            const T* p = in + (int64_t(n) * C + c) * H * W;
            T* q = out + (int64_t(n) * C + c) * Ho * Wo;
            int32_t* am = argmax + (int64_t(n) * C + c) * Ho * Wo;
            for (int ho = 0; ho < Ho; ++ho)
                for (int wo = 0; wo < Wo; ++wo) {
                    int h0 = 2 * ho, w0 = 2 * wo;
                    int best = h0 * W + w0;
                    T bv = p[best];
                    for (int dh = 0; dh < 2; ++dh)
                        for (int dw = 0; dw < 2; ++dw) {
                            int idx = (h0 + dh) * W + (w0 + dw);
                            if (p[idx] > bv) {
                                bv = p[idx];
                                best = idx;
                            }
                        }
                    q[ho * Wo + wo] = bv;
                    am[ho * Wo + wo] = best;
                }
        }
}

template <class T>
void maxpool2_bwd(const T* gout, const int32_t* argmax, int N, int C, int H, int W, T* gin) {
    int Ho = H / 2, Wo = W / 2;
#pragma omp parallel for collapse(2) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int c = 0; c < C; ++c) {
            const T* g = gout + (int64_t(n) * C + c) * Ho * Wo;
            const int32_t* am = argmax + (int64_t(n) * C + c) * Ho * Wo;
            T* gi = gin + (int64_t(n) * C + c) * H * W;
            for (int i = 0; i < H * W; ++i) gi[i] = 0;
            for (int i = 0; i < Ho * Wo; ++i) gi[am[i]] += g[i];
        }
}

template <class T>
void instnorm_fwd(const T* in, int N, int C, int H, int W,
                  const T* gamma, const T* beta, T eps,
                  T* out, T* save_mean, T* save_istd) {
    int64_t HW = int64_t(H) * W;
#pragma omp parallel for collapse(2) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int c = 0; c < C; ++c) {
            const T* p = in + (int64_t(n) * C + c) * HW;
            T* q = out + (int64_t(n) * C + c) * HW;
            T mean = 0;
            for (int64_t i = 0; i < HW; ++i) mean += p[i];
            mean /= T(HW);
            T var = 0;
            for (int64_t i = 0; i < HW; ++i) {
                T d = p[i] - mean;
                var += d * d;
            }
            var /= T(HW);
            T istd = T(1) / std::sqrt(var + eps);
            save_mean[n * C + c] = mean;
            save_istd[n * C + c] = istd;
            for (int64_t i = 0; i < HW; ++i) q[i] = gamma[c] * (p[i] - mean) * istd + beta[c];
        }
}

template <class T>
void instnorm_bwd(const T* gout, const T* in, int N, int C, int H, int W,
                  const T* gamma, const T* save_mean, const T* save_istd,
                  T* gin, T* ggamma, T* gbeta) {
    int64_t HW = int64_t(H) * W;
    // Channel-parameter gradients sum over n in fixed order per channel.
#pragma omp parallel for schedule(static)
    for (int c = 0; c < C; ++c) {
        T gg = 0, gb = 0;
        for (int n = 0; n < N; ++n) {
            const T* g = gout + (int64_t(n) * C + c) * HW;
            const T* p = in + (int64_t(n) * C + c) * HW;
            T mean = save_mean[n * C + c], istd = save_istd[n * C + c];
            for (int64_t i = 0; i < HW; ++i) {
                gg += g[i] * (p[i] - mean) * istd;
                gb += g[i];
            }
        }
        ggamma[c] = gg;
        gbeta[c] = gb;
    }
#pragma omp parallel for collapse(2) schedule(static)
    for (int n = 0; n < N; ++n)
        for (int c = 0; c < C; ++c) {
            const T* g = gout + (int64_t(n) * C + c) * HW;
            const T* p = in + (int64_t(n) * C + c) * HW;
            T* gi = gin + (int64_t(n) * C + c) * HW;
            T mean = save_mean[n * C + c], istd = save_istd[n * C + c];
            T sum_g = 0, sum_gx = 0;
            for (int64_t i = 0; i < HW; ++i) {
                T xh = (p[i] - mean) * istd;
                sum_g += g[i];
                sum_gx += g[i] * xh;
            }
            T scale = gamma[c] * istd / T(HW);
            for (int64_t i = 0; i < HW; ++i) {
                T xh = (p[i] - mean) * istd;
                gi[i] = scale * (T(HW) * g[i] - sum_g - xh * sum_gx);
            }
        }
}

template <class T>
void resize_bilinear(const T* in, int H, int W, T* out, int OH, int OW) {
    double sy = double(H) / OH, sx = double(W) / OW;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < OH; ++y)
        for (int x = 0; x < OW; ++x) {
            double fy = (y + 0.5) * sy - 0.5;
            double fx = (x + 0.5) * sx - 0.5;
            int y0 = int(std::floor(fy)), x0 = int(std::floor(fx));
            double wy = fy - y0, wx = fx - x0;
            int y0c = std::clamp(y0, 0, H - 1), y1c = std::clamp(y0 + 1, 0, H - 1);
            int x0c = std::clamp(x0, 0, W - 1), x1c = std::clamp(x0 + 1, 0, W - 1);
            double v = (1 - wy) * ((1 - wx) * in[int64_t(y0c) * W + x0c] + wx * in[int64_t(y0c) * W + x1c]) +
                       wy * ((1 - wx) * in[int64_t(y1c) * W + x0c] + wx * in[int64_t(y1c) * W + x1c]);
            out[int64_t(y) * OW + x] = T(v);
        }
}

template <class T>
void resize_nearest(const T* in, int H, int W, T* out, int OH, int OW) {
    double sy = double(H) / OH, sx = double(W) / OW;
#pragma omp parallel for schedule(static)
    for (int y = 0; y < OH; ++y)
        for (int x = 0; x < OW; ++x) {
            int sy0 = std::clamp(int((y + 0.5) * sy), 0, H - 1);
            int sx0 = std::clamp(int((x + 0.5) * sx), 0, W - 1);
            out[int64_t(y) * OW + x] = in[int64_t(sy0) * W + sx0];
        }
}

template <class T>
void warp_bilinear(const T* in, int H, int W, const T* dy, const T* dx, T* out) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            double fy = y + double(dy[int64_t(y) * W + x]);
            double fx = x + double(dx[int64_t(y) * W + x]);
            int y0 = int(std::floor(fy)), x0 = int(std::floor(fx));
            double wy = fy - y0, wx = fx - x0;
            int y0c = std::clamp(y0, 0, H - 1), y1c = std::clamp(y0 + 1, 0, H - 1);
            int x0c = std::clamp(x0, 0, W - 1), x1c = std::clamp(x0 + 1, 0, W - 1);
            double v = (1 - wy) * ((1 - wx) * in[int64_t(y0c) * W + x0c] + wx * in[int64_t(y0c) * W + x1c]) +
                       wy * ((1 - wx) * in[int64_t(y1c) * W + x0c] + wx * in[int64_t(y1c) * W + x1c]);
            out[int64_t(y) * W + x] = T(v);
        }
}

template <class T>
void warp_nearest(const T* in, int H, int W, const float* dy, const float* dx, T* out) {
#pragma omp parallel for schedule(static)
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            int sy = std::clamp(int(std::lround(y + double(dy[int64_t(y) * W + x]))), 0, H - 1);
            int sx = std::clamp(int(std::lround(x + double(dx[int64_t(y) * W + x]))), 0, W - 1);
            out[int64_t(y) * W + x] = in[int64_t(sy) * W + sx];
        }
}

} // namespace cddgan::kern::omp
