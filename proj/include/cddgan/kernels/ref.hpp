#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

// Reference kernels: straightforward per-element loops, no threading.
// These are the correctness baseline the OpenMP kernels are tested against.
// Accumulation order per output element (ci, kh, kw / k) is the contract
// both backends follow, so results are expected to match bit for bit.

namespace cddgan::kern::ref {

template <class T>
void conv2d_fwd(const T* in, int N, int Ci, int H, int W,
                const T* w, int Co, int KH, int KW,
                const T* bias, int stride, int pad,
                T* out, int Ho, int Wo) {
    for (int n = 0; n < N; ++n)
        for (int co = 0; co < Co; ++co)
            for (int ho = 0; ho < Ho; ++ho)
                for (int wo = 0; wo < Wo; ++wo) {
                    T acc = bias ? bias[co] : T(0);
                    for (int ci = 0; ci < Ci; ++ci)
                        for (int kh = 0; kh < KH; ++kh) {
                            int ih = ho * stride - pad + kh;
                            if (ih < 0 || ih >= H) continue;
                            for (int kw = 0; kw < KW; ++kw) {
                                int iw = wo * stride - pad + kw;
                                if (iw < 0 || iw >= W) continue;
                                acc += in[((int64_t(n) * Ci + ci) * H + ih) * W + iw] *
                                       w[((int64_t(co) * Ci + ci) * KH + kh) * KW + kw];
                            }
                        }
                    out[((int64_t(n) * Co + co) * Ho + ho) * Wo + wo] = acc;
                }
}

template <class T>
void conv2d_bwd_in(const T* gout, int N, int Co, int Ho, int Wo,
                   const T* w, int Ci, int KH, int KW,
                   int stride, int pad,
                   T* gin, int H, int W) {
    for (int n = 0; n < N; ++n)
        for (int ci = 0; ci < Ci; ++ci)
            for (int h = 0; h < H; ++h)
                for (int x = 0; x < W; ++x) {
                    T acc = 0;
                    for (int co = 0; co < Co; ++co)
                        for (int kh = 0; kh < KH; ++kh) {
                            int t = h + pad - kh;
                            if (t < 0 || t % stride != 0) continue;
                            int ho = t / stride;
                            if (ho >= Ho) continue;
                            for (int kw = 0; kw < KW; ++kw) {
                                int u = x + pad - kw;
                                if (u < 0 || u % stride != 0) continue;
                                int wo = u / stride;
                                if (wo >= Wo) continue;
                                acc += gout[((int64_t(n) * Co + co) * Ho + ho) * Wo + wo] *
                                       w[((int64_t(co) * Ci + ci) * KH + kh) * KW + kw];
                            }
                        }
                    gin[((int64_t(n) * Ci + ci) * H + h) * W + x] = acc;
                }
}

template <class T>
void conv2d_bwd_w(const T* gout, int N, int Co, int Ho, int Wo,
                  const T* in, int Ci, int H, int W,
                  int stride, int pad, int KH, int KW,
                  T* gw) {
    for (int co = 0; co < Co; ++co)
        for (int ci = 0; ci < Ci; ++ci)
            for (int kh = 0; kh < KH; ++kh)
                for (int kw = 0; kw < KW; ++kw) {
                    T acc = 0;
                    for (int n = 0; n < N; ++n)
                        for (int ho = 0; ho < Ho; ++ho) {
                            int ih = ho * stride - pad + kh;
                            if (ih < 0 || ih >= H) continue;
                            for (int wo = 0; wo < Wo; ++wo) {
                                int iw = wo * stride - pad + kw;
                                if (iw < 0 || iw >= W) continue;
                                acc += gout[((int64_t(n) * Co + co) * Ho + ho) * Wo + wo] *
                                       in[((int64_t(n) * Ci + ci) * H + ih) * W + iw];
                            }
                        }
                    gw[((int64_t(co) * Ci + ci) * KH + kh) * KW + kw] = acc;
                }
}

template <class T>
void conv2d_bwd_b(const T* gout, int N, int Co, int Ho, int Wo, T* gb) {
    for (int co = 0; co < Co; ++co) {
        T acc = 0;
        for (int n = 0; n < N; ++n)
            for (int i = 0; i < Ho * Wo; ++i)
                acc += gout[(int64_t(n) * Co + co) * Ho * Wo + i];
        gb[co] = acc;
    }
}

// Transposed convolution, weight layout [Ci, Co, KH, KW].
// Ho = (H - 1) * stride - 2 * pad + KH.
template <class T>
void convt2d_fwd(const T* in, int N, int Ci, int H, int W,
                 const T* w, int Co, int KH, int KW,
                 const T* bias, int stride, int pad,
                 T* out, int Ho, int Wo) {
    for (int n = 0; n < N; ++n)
        for (int co = 0; co < Co; ++co)
            for (int y = 0; y < Ho; ++y)
                for (int x = 0; x < Wo; ++x) {
                    T acc = bias ? bias[co] : T(0);
                    for (int ci = 0; ci < Ci; ++ci)
                        for (int ky = 0; ky < KH; ++ky) {
                            int t = y + pad - ky;
                            if (t < 0 || t % stride != 0) continue;
                            int h = t / stride;
                            if (h >= H) continue;
                            for (int kx = 0; kx < KW; ++kx) {
                                int u = x + pad - kx;
                                if (u < 0 || u % stride != 0) continue;
                                int ww = u / stride;
                                if (ww >= W) continue;
                                acc += in[((int64_t(n) * Ci + ci) * H + h) * W + ww] *
                                       w[((int64_t(ci) * Co + co) * KH + ky) * KW + kx];
                            }
                        }
                    out[((int64_t(n) * Co + co) * Ho + y) * Wo + x] = acc;
                }
}

template <class T>
void convt2d_bwd_in(const T* gout, int N, int Co, int Ho, int Wo,
                    const T* w, int Ci, int KH, int KW,
                    int stride, int pad,
                    T* gin, int H, int W) {
    for (int n = 0; n < N; ++n)
        for (int ci = 0; ci < Ci; ++ci)
            for (int h = 0; h < H; ++h)
                for (int x = 0; x < W; ++x) {
                    T acc = 0;
                    for (int co = 0; co < Co; ++co)
                        for (int ky = 0; ky < KH; ++ky) {
                            int y = h * stride - pad + ky;
                            if (y < 0 || y >= Ho) continue;
                            for (int kx = 0; kx < KW; ++kx) {
                                int u = x * stride - pad + kx;
                                if (u < 0 || u >= Wo) continue;
                                acc += gout[((int64_t(n) * Co + co) * Ho + y) * Wo + u] *
                                       w[((int64_t(ci) * Co + co) * KH + ky) * KW + kx];
                            }
                        }
                    gin[((int64_t(n) * Ci + ci) * H + h) * W + x] = acc;
                }
}

template <class T>
void convt2d_bwd_w(const T* gout, int N, int Co, int Ho, int Wo,
                   const T* in, int Ci, int H, int W,
                   int stride, int pad, int KH, int KW,
                   T* gw) {
    for (int ci = 0; ci < Ci; ++ci)
        for (int co = 0; co < Co; ++co)
            for (int ky = 0; ky < KH; ++ky)
                for (int kx = 0; kx < KW; ++kx) {
                    T acc = 0;
                    for (int n = 0; n < N; ++n)
                        for (int h = 0; h < H; ++h) {
                            int y = h * stride - pad + ky;
                            if (y < 0 || y >= Ho) continue;
                            for (int ww = 0; ww < W; ++ww) {
                                int x = ww * stride - pad + kx;
                                if (x < 0 || x >= Wo) continue;
                                acc += in[((int64_t(n) * Ci + ci) * H + h) * W + ww] *
                                       gout[((int64_t(n) * Co + co) * Ho + y) * Wo + x];
                            }
                        }
                    gw[((int64_t(ci) * Co + co) * KH + ky) * KW + kx] = acc;
                }
}

// C[M,N] = op(A) * op(B); A is MxK (or KxM when transA), B is KxN (or NxK).
template <class T>
void matmul(const T* A, const T* B, T* C, int M, int N, int K, bool transA, bool transB) {
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < N; ++j) {
            T acc = 0;
            for (int k = 0; k < K; ++k) {
                T a = transA ? A[int64_t(k) * M + i] : A[int64_t(i) * K + k];
                T b = transB ? B[int64_t(j) * K + k] : B[int64_t(k) * N + j];
                acc += a * b;
            }
            C[int64_t(i) * N + j] = acc;
        }
}

template <class T>
void maxpool2_fwd(const T* in, int N, int C, int H, int W, T* out, int32_t* argmax) {
    int Ho = H / 2, Wo = W / 2;
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
    for (int64_t i = 0; i < int64_t(N) * C * H * W; ++i) gin[i] = 0;
    for (int n = 0; n < N; ++n)
        for (int c = 0; c < C; ++c) {
            const T* g = gout + (int64_t(n) * C + c) * Ho * Wo;
            const int32_t* am = argmax + (int64_t(n) * C + c) * Ho * Wo;
            T* gi = gin + (int64_t(n) * C + c) * H * W;
            for (int i = 0; i < Ho * Wo; ++i) gi[am[i]] += g[i];
        }
}

template <class T>
void instnorm_fwd(const T* in, int N, int C, int H, int W,
                  const T* gamma, const T* beta, T eps,
                  T* out, T* save_mean, T* save_istd) {
    int64_t HW = int64_t(H) * W;
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
    for (int c = 0; c < C; ++c) {
        ggamma[c] = 0;
        gbeta[c] = 0;
    }
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
            ggamma[c] += sum_gx;
            gbeta[c] += sum_g;
            T scale = gamma[c] * istd / T(HW);
            for (int64_t i = 0; i < HW; ++i) {
                T xh = (p[i] - mean) * istd;
                gi[i] = scale * (T(HW) * g[i] - sum_g - xh * sum_gx);
            }
        }
}

// Half-pixel-convention bilinear resize; exact identity when sizes match.
template <class T>
void resize_bilinear(const T* in, int H, int W, T* out, int OH, int OW) {
    double sy = double(H) / OH, sx = double(W) / OW;
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
    for (int y = 0; y < OH; ++y)
        for (int x = 0; x < OW; ++x) {
            int sy0 = std::clamp(int((y + 0.5) * sy), 0, H - 1);
            int sx0 = std::clamp(int((x + 0.5) * sx), 0, W - 1);
            out[int64_t(y) * OW + x] = in[int64_t(sy0) * W + sx0];
        }
}

// Backward warp: out(y,x) = in(y + dy(y,x), x + dx(y,x)), replicate border.
template <class T>
void warp_bilinear(const T* in, int H, int W, const T* dy, const T* dx, T* out) {
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
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x) {
            int sy = std::clamp(int(std::lround(y + double(dy[int64_t(y) * W + x]))), 0, H - 1);
            int sx = std::clamp(int(std::lround(x + double(dx[int64_t(y) * W + x]))), 0, W - 1);
            out[int64_t(y) * W + x] = in[int64_t(sy) * W + sx];
        }
}

} // namespace cddgan::kern::ref
