// AVX2 variants of the reduction kernels. This translation unit is compiled
// with -mavx2 and must only be entered after the runtime CPU check passes.

#include "risopt/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace risopt::kernels::avx2 {

bool supported() { return __builtin_cpu_supports("avx2"); }

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

}  // namespace

double sum(std::span<const double> x) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x.data() + i));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

double dot(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  std::size_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_loadu_pd(x.data() + i);
    const __m256d b = _mm256_loadu_pd(y.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(a, b));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i] * y[i];
  return r;
}

double weighted_sumsq(std::span<const double> w, std::span<const double> p) {
  const std::size_t n = w.size();
  std::size_t i = 0;
  __m256d acc = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const __m256d wi = _mm256_loadu_pd(w.data() + i);
    const __m256d pi = _mm256_loadu_pd(p.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(wi, _mm256_mul_pd(pi, pi)));
  }
  double r = hsum(acc);
  for (; i < n; ++i) r += w[i] * p[i] * p[i];
  return r;
}

SecularSums secular_sums(std::span<const double> s, std::span<const double> b,
                         std::span<const double> d, double eta) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  const __m256d veta = _mm256_set1_pd(eta);
  __m256d acc2 = _mm256_setzero_pd();
  __m256d acc3 = _mm256_setzero_pd();
  for (; i + 4 <= n; i += 4) {
    const __m256d si = _mm256_loadu_pd(s.data() + i);
    const __m256d bi = _mm256_loadu_pd(b.data() + i);
    const __m256d di = _mm256_loadu_pd(d.data() + i);
    const __m256d den = _mm256_add_pd(bi, _mm256_mul_pd(veta, di));
    const __m256d q = _mm256_div_pd(si, _mm256_mul_pd(den, den));
    acc2 = _mm256_add_pd(acc2, q);
    acc3 = _mm256_add_pd(acc3, _mm256_div_pd(_mm256_mul_pd(q, di), den));
  }
  double p2 = hsum(acc2), p3 = hsum(acc3);
  for (; i < n; ++i) {
    const double den = b[i] + eta * d[i];
    const double q = s[i] / (den * den);
    p2 += q;
    p3 += q * d[i] / den;
  }
  return {p2, p3};
}

}  // namespace risopt::kernels::avx2

#endif  // x86-64
