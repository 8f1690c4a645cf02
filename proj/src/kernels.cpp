#include "risopt/kernels.hpp"

#include <cstdlib>

namespace risopt::kernels {

namespace scalar {

double sum(std::span<const double> x) {
  double acc = 0.0;
  for (double v : x) acc += v;
  return acc;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

double weighted_sumsq(std::span<const double> w, std::span<const double> p) {
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * p[i] * p[i];
  return acc;
}

SecularSums secular_sums(std::span<const double> s, std::span<const double> b,
                         std::span<const double> d, double eta) {
  double p2 = 0.0, p3 = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double den = b[i] + eta * d[i];
    const double q = s[i] / (den * den);
    p2 += q;
    p3 += q * d[i] / den;
  }
  return {p2, p3};
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
bool supported();
double sum(std::span<const double> x);
double dot(std::span<const double> x, std::span<const double> y);
double weighted_sumsq(std::span<const double> w, std::span<const double> p);
SecularSums secular_sums(std::span<const double> s, std::span<const double> b,
                         std::span<const double> d, double eta);
}  // namespace avx2
#endif

namespace {

struct Table {
  double (*sum)(std::span<const double>);
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*weighted_sumsq)(std::span<const double>, std::span<const double>);
  SecularSums (*secular_sums)(std::span<const double>, std::span<const double>,
                              std::span<const double>, double);
  std::string_view name;
};

constexpr Table kScalar{scalar::sum, scalar::dot, scalar::weighted_sumsq,
                        scalar::secular_sums, "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2{avx2::sum, avx2::dot, avx2::weighted_sumsq,
                      avx2::secular_sums, "avx2"};
#endif

const Table* pick(std::string_view name) {
  if (name == "scalar") return &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
  if (name == "avx2" && avx2::supported()) return &kAvx2;
#endif
  return nullptr;
}

const Table* detect() {
  if (const char* env = std::getenv("RIS_OPT_KERNELS")) {
    if (const Table* t = pick(env)) return t;
  }
#if defined(__x86_64__) || defined(_M_X64)
  if (avx2::supported()) return &kAvx2;
#endif
  return &kScalar;
}

const Table* g_table = detect();

}  // namespace

double sum(std::span<const double> x) { return g_table->sum(x); }

double dot(std::span<const double> x, std::span<const double> y) {
  return g_table->dot(x, y);
}

double weighted_sumsq(std::span<const double> w, std::span<const double> p) {
  return g_table->weighted_sumsq(w, p);
}

SecularSums secular_sums(std::span<const double> s, std::span<const double> b,
                         std::span<const double> d, double eta) {
  return g_table->secular_sums(s, b, d, eta);
}

std::string_view active_backend() { return g_table->name; }

bool set_backend(std::string_view name) {
  if (const Table* t = pick(name)) {
    g_table = t;
    return true;
  }
  return false;
}

}  // namespace risopt::kernels
