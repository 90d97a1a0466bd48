#include "ifscore/kernels.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

#include "kernels_tables.hpp"

// Scalar reference lane. The AVX2 lane mirrors these functions operation
// for operation (explicit std::fma here <-> _mm256_fmadd_pd there), so the
// two lanes produce identical elementwise results. This file is compiled
// with -ffp-contract=off to keep the compiler from fusing anything else.

namespace ifscore::kernels {

namespace t = tables;

double exp_e(double x) {
  if (x > t::EXP_HI) return std::numeric_limits<double>::infinity();
  if (x < t::EXP_LO) return 0.0;
  const double px = std::floor(t::EXP_LOG2E * x + 0.5);
  const auto n = static_cast<std::int64_t>(px);
  x = std::fma(-px, t::EXP_C1, x);
  x = std::fma(-px, t::EXP_C2, x);
  const double xx = x * x;
  double p = std::fma(t::EXP_P0, xx, t::EXP_P1);
  p = std::fma(p, xx, t::EXP_P2);
  p = x * p;
  double q = std::fma(t::EXP_Q0, xx, t::EXP_Q1);
  q = std::fma(q, xx, t::EXP_Q2);
  q = std::fma(q, xx, t::EXP_Q3);
  double r = p / (q - p);
  r = 1.0 + 2.0 * r;
  const auto scale_bits = static_cast<std::uint64_t>(n + 1023) << 52;
  return r * std::bit_cast<double>(scale_bits);
}

double log_e(double x) {
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x < 0.0) return std::numeric_limits<double>::quiet_NaN();
  if (std::isinf(x)) return x;
  // Subnormals are clamped to the smallest normal; likelihood code floors
  // probabilities well above that anyway.
  if (x < std::numeric_limits<double>::min()) x = std::numeric_limits<double>::min();
  const auto bits = std::bit_cast<std::uint64_t>(x);
  const auto eraw = static_cast<double>((bits >> 52) & 0x7FFull);
  double e = eraw - 1022.0;
  double m = std::bit_cast<double>((bits & 0x800FFFFFFFFFFFFFull) | 0x3FE0000000000000ull);
  if (m < t::LOG_SQRTH) {
    e -= 1.0;
    m = m + m - 1.0;
  } else {
    m = m - 1.0;
  }
  const double z = m * m;
  double p = std::fma(t::LOG_P0, m, t::LOG_P1);
  p = std::fma(p, m, t::LOG_P2);
  p = std::fma(p, m, t::LOG_P3);
  p = std::fma(p, m, t::LOG_P4);
  p = std::fma(p, m, t::LOG_P5);
  double q = m + t::LOG_Q0;
  q = std::fma(q, m, t::LOG_Q1);
  q = std::fma(q, m, t::LOG_Q2);
  q = std::fma(q, m, t::LOG_Q3);
  q = std::fma(q, m, t::LOG_Q4);
  double y = m * (z * p / q);
  y = std::fma(e, t::LOG_ELO, y);
  y = std::fma(-0.5, z, y);
  double r = m + y;
  r = std::fma(e, t::LOG_EHI, r);
  return r;
}

double expit_e(double x) {
  const double ex = exp_e(-std::fabs(x));
  const double denom = 1.0 + ex;
  return x >= 0.0 ? 1.0 / denom : ex / denom;
}

double softplus_e(double x) {
  const double ex = exp_e(-std::fabs(x));
  const double l = log_e(1.0 + ex);
  return std::fmax(x, 0.0) + l;
}

namespace {

// Cody's three-range erfc; each element takes exactly one range's formula,
// matching the blend selection in the AVX2 lane.
double erfc_branch1(double x) {
  const double z = x * x;
  double num = t::ERF_A4 * z;
  double den = z;
  num = (num + t::ERF_A0) * z;
  den = (den + t::ERF_B0) * z;
  num = (num + t::ERF_A1) * z;
  den = (den + t::ERF_B1) * z;
  num = (num + t::ERF_A2) * z;
  den = (den + t::ERF_B2) * z;
  const double erf = x * (num + t::ERF_A3) / (den + t::ERF_B3);
  return 1.0 - erf;
}

double erfc_branch2(double x) {
  double num = t::ERF_C8 * x;
  double den = x;
  const double c[7] = {t::ERF_C0, t::ERF_C1, t::ERF_C2, t::ERF_C3,
                       t::ERF_C4, t::ERF_C5, t::ERF_C6};
  const double d[7] = {t::ERF_D0, t::ERF_D1, t::ERF_D2, t::ERF_D3,
                       t::ERF_D4, t::ERF_D5, t::ERF_D6};
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * x;
    den = (den + d[i]) * x;
  }
  const double rat = (num + t::ERF_C7) / (den + t::ERF_D7);
  const double ysq = std::trunc(x * 16.0) / 16.0;
  const double del = (x - ysq) * (x + ysq);
  double r = exp_e(-ysq * ysq) * exp_e(-del);
  return r * rat;
}

double erfc_branch3(double x) {
  if (x >= t::ERF_XBIG) return 0.0;
  const double z = 1.0 / (x * x);
  double num = t::ERF_P5 * z;
  double den = z;
  const double p[4] = {t::ERF_P0, t::ERF_P1, t::ERF_P2, t::ERF_P3};
  const double q[4] = {t::ERF_Q0, t::ERF_Q1, t::ERF_Q2, t::ERF_Q3};
  for (int i = 0; i < 4; ++i) {
    num = (num + p[i]) * z;
    den = (den + q[i]) * z;
  }
  double rat = z * (num + t::ERF_P4) / (den + t::ERF_Q4);
  rat = (t::ERF_RSQRTPI - rat) / x;
  const double ysq = std::trunc(x * 16.0) / 16.0;
  const double del = (x - ysq) * (x + ysq);
  double r = exp_e(-ysq * ysq) * exp_e(-del);
  return r * rat;
}

}  // namespace

double erfc_e(double u) {
  const double x = std::fabs(u);
  double r;
  if (x <= t::ERF_THRESH1) {
    r = erfc_branch1(x);
  } else if (x <= t::ERF_THRESH2) {
    r = erfc_branch2(x);
  } else {
    r = erfc_branch3(x);
  }
  return u < 0.0 ? 2.0 - r : r;
}

double normal_cdf_e(double x) { return 0.5 * erfc_e(-x * t::INV_SQRT2); }

namespace {

void exp_v_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = exp_e(x[i]);
}
void log_v_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = log_e(x[i]);
}
void expit_v_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = expit_e(x[i]);
}
void softplus_v_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = softplus_e(x[i]);
}
void normal_cdf_v_scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = normal_cdf_e(x[i]);
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc = std::fma(x[i], y[i], acc);
  return acc;
}

double sum_scalar(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

void weighted_power_sums_scalar(const double* v, const double* w, std::size_t n,
                                int kmax, double* out) {
  double acc[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t i = 0; i < n; ++i) {
    double p = v[i];
    for (int k = 0; k < kmax; ++k) {
      acc[k] = std::fma(w[i], p, acc[k]);
      p *= v[i];
    }
  }
  for (int k = 0; k < kmax; ++k) out[k] = acc[k];
}

}  // namespace

const Kernels& scalar() {
  static const Kernels k = {
      "scalar",          exp_v_scalar, log_v_scalar,
      expit_v_scalar,    softplus_v_scalar, normal_cdf_v_scalar,
      dot_scalar,        sum_scalar,   weighted_power_sums_scalar,
  };
  return k;
}

}  // namespace ifscore::kernels
