#include <immintrin.h>

#include <cmath>
#include <cstdint>
#include <limits>

#include "ifscore/kernels.hpp"
#include "kernels_tables.hpp"

// AVX2 lane. Mirrors the scalar reference lane operation for operation;
// see kernels_scalar.cpp. Tails of the array loops fall back to the scalar
// element functions, which compute the same values.

namespace ifscore::kernels {

namespace t = tables;

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);              // (a0+a2, a1+a3)
  __m128d sh = _mm_unpackhi_pd(s, s);
  return _mm_cvtsd_f64(_mm_add_sd(s, sh));     // (a0+a2)+(a1+a3)
}

inline __m256d exp_pd(__m256d x) {
  const __m256d hi = _mm256_set1_pd(t::EXP_HI);
  const __m256d lo = _mm256_set1_pd(t::EXP_LO);
  const __m256d mask_hi = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
  const __m256d mask_lo = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  __m256d xc = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  const __m256d px = _mm256_floor_pd(
      _mm256_add_pd(_mm256_mul_pd(xc, _mm256_set1_pd(t::EXP_LOG2E)),
                    _mm256_set1_pd(0.5)));
  const __m128i n32 = _mm256_cvtpd_epi32(px);
  const __m256i n64 = _mm256_cvtepi32_epi64(n32);

  xc = _mm256_fnmadd_pd(px, _mm256_set1_pd(t::EXP_C1), xc);
  xc = _mm256_fnmadd_pd(px, _mm256_set1_pd(t::EXP_C2), xc);
  const __m256d xx = _mm256_mul_pd(xc, xc);
  __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(t::EXP_P0), xx, _mm256_set1_pd(t::EXP_P1));
  p = _mm256_fmadd_pd(p, xx, _mm256_set1_pd(t::EXP_P2));
  p = _mm256_mul_pd(xc, p);
  __m256d q = _mm256_fmadd_pd(_mm256_set1_pd(t::EXP_Q0), xx, _mm256_set1_pd(t::EXP_Q1));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(t::EXP_Q2));
  q = _mm256_fmadd_pd(q, xx, _mm256_set1_pd(t::EXP_Q3));
  __m256d r = _mm256_div_pd(p, _mm256_sub_pd(q, p));
  r = _mm256_add_pd(_mm256_set1_pd(1.0), _mm256_mul_pd(_mm256_set1_pd(2.0), r));

  const __m256i sbits =
      _mm256_slli_epi64(_mm256_add_epi64(n64, _mm256_set1_epi64x(1023)), 52);
  r = _mm256_mul_pd(r, _mm256_castsi256_pd(sbits));

  r = _mm256_blendv_pd(r, _mm256_set1_pd(std::numeric_limits<double>::infinity()), mask_hi);
  r = _mm256_blendv_pd(r, _mm256_setzero_pd(), mask_lo);
  return r;
}

inline __m256d log_pd(__m256d x) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d mask_zero = _mm256_cmp_pd(x, zero, _CMP_EQ_OQ);
  const __m256d mask_neg = _mm256_cmp_pd(x, zero, _CMP_LT_OQ);
  const __m256d mask_inf =
      _mm256_cmp_pd(x, _mm256_set1_pd(std::numeric_limits<double>::infinity()), _CMP_EQ_OQ);

  __m256d xc = _mm256_max_pd(x, _mm256_set1_pd(std::numeric_limits<double>::min()));
  const __m256i bits = _mm256_castpd_si256(xc);
  const __m256i eraw = _mm256_and_si256(_mm256_srli_epi64(bits, 52),
                                        _mm256_set1_epi64x(0x7FF));
  // int64 -> double for small nonnegative values
  const __m256d emag = _mm256_castsi256_pd(
      _mm256_or_si256(eraw, _mm256_set1_epi64x(0x4330000000000000LL)));
  __m256d e = _mm256_sub_pd(_mm256_sub_pd(emag, _mm256_set1_pd(4503599627370496.0)),
                            _mm256_set1_pd(1022.0));
  __m256d m = _mm256_castsi256_pd(_mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x800FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FE0000000000000LL)));

  const __m256d mask_small = _mm256_cmp_pd(m, _mm256_set1_pd(t::LOG_SQRTH), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(mask_small, one));
  const __m256d m2 = _mm256_sub_pd(_mm256_add_pd(m, m), one);
  const __m256d m1 = _mm256_sub_pd(m, one);
  m = _mm256_blendv_pd(m1, m2, mask_small);

  const __m256d z = _mm256_mul_pd(m, m);
  __m256d p = _mm256_fmadd_pd(_mm256_set1_pd(t::LOG_P0), m, _mm256_set1_pd(t::LOG_P1));
  p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(t::LOG_P2));
  p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(t::LOG_P3));
  p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(t::LOG_P4));
  p = _mm256_fmadd_pd(p, m, _mm256_set1_pd(t::LOG_P5));
  __m256d q = _mm256_add_pd(m, _mm256_set1_pd(t::LOG_Q0));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(t::LOG_Q1));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(t::LOG_Q2));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(t::LOG_Q3));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(t::LOG_Q4));

  __m256d y = _mm256_mul_pd(m, _mm256_div_pd(_mm256_mul_pd(z, p), q));
  y = _mm256_fmadd_pd(e, _mm256_set1_pd(t::LOG_ELO), y);
  y = _mm256_fmadd_pd(_mm256_set1_pd(-0.5), z, y);
  __m256d r = _mm256_add_pd(m, y);
  r = _mm256_fmadd_pd(e, _mm256_set1_pd(t::LOG_EHI), r);

  r = _mm256_blendv_pd(r, _mm256_set1_pd(-std::numeric_limits<double>::infinity()), mask_zero);
  r = _mm256_blendv_pd(r, _mm256_set1_pd(std::numeric_limits<double>::quiet_NaN()), mask_neg);
  r = _mm256_blendv_pd(r, _mm256_set1_pd(std::numeric_limits<double>::infinity()), mask_inf);
  return r;
}

inline __m256d abs_pd(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

inline __m256d expit_pd(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d ex = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), abs_pd(x)));
  const __m256d denom = _mm256_add_pd(one, ex);
  const __m256d pos = _mm256_div_pd(one, denom);
  const __m256d neg = _mm256_div_pd(ex, denom);
  const __m256d mask = _mm256_cmp_pd(x, _mm256_setzero_pd(), _CMP_GE_OQ);
  return _mm256_blendv_pd(neg, pos, mask);
}

inline __m256d softplus_pd(__m256d x) {
  const __m256d ex = exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), abs_pd(x)));
  const __m256d l = log_pd(_mm256_add_pd(_mm256_set1_pd(1.0), ex));
  return _mm256_add_pd(_mm256_max_pd(x, _mm256_setzero_pd()), l);
}

inline __m256d erfc_pd(__m256d u) {
  const __m256d x = abs_pd(u);
  const __m256d one = _mm256_set1_pd(1.0);

  // branch 1: |x| <= 0.46875
  __m256d r1;
  {
    const __m256d z = _mm256_mul_pd(x, x);
    __m256d num = _mm256_mul_pd(_mm256_set1_pd(t::ERF_A4), z);
    __m256d den = z;
    const double a[3] = {t::ERF_A0, t::ERF_A1, t::ERF_A2};
    const double b[3] = {t::ERF_B0, t::ERF_B1, t::ERF_B2};
    for (int i = 0; i < 3; ++i) {
      num = _mm256_mul_pd(_mm256_add_pd(num, _mm256_set1_pd(a[i])), z);
      den = _mm256_mul_pd(_mm256_add_pd(den, _mm256_set1_pd(b[i])), z);
    }
    const __m256d erf = _mm256_div_pd(
        _mm256_mul_pd(x, _mm256_add_pd(num, _mm256_set1_pd(t::ERF_A3))),
        _mm256_add_pd(den, _mm256_set1_pd(t::ERF_B3)));
    r1 = _mm256_sub_pd(one, erf);
  }

  // shared exp factors for branches 2 and 3
  const __m256d ysq = _mm256_div_pd(
      _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(16.0)),
                      _MM_FROUND_TO_ZERO | _MM_FROUND_NO_EXC),
      _mm256_set1_pd(16.0));
  const __m256d del = _mm256_mul_pd(_mm256_sub_pd(x, ysq), _mm256_add_pd(x, ysq));
  const __m256d efac = _mm256_mul_pd(
      exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(ysq, ysq))),
      exp_pd(_mm256_sub_pd(_mm256_setzero_pd(), del)));

  // branch 2: 0.46875 < x <= 4
  __m256d r2;
  {
    __m256d num = _mm256_mul_pd(_mm256_set1_pd(t::ERF_C8), x);
    __m256d den = x;
    const double c[7] = {t::ERF_C0, t::ERF_C1, t::ERF_C2, t::ERF_C3,
                         t::ERF_C4, t::ERF_C5, t::ERF_C6};
    const double d[7] = {t::ERF_D0, t::ERF_D1, t::ERF_D2, t::ERF_D3,
                         t::ERF_D4, t::ERF_D5, t::ERF_D6};
    for (int i = 0; i < 7; ++i) {
      num = _mm256_mul_pd(_mm256_add_pd(num, _mm256_set1_pd(c[i])), x);
      den = _mm256_mul_pd(_mm256_add_pd(den, _mm256_set1_pd(d[i])), x);
    }
    const __m256d rat = _mm256_div_pd(_mm256_add_pd(num, _mm256_set1_pd(t::ERF_C7)),
                                      _mm256_add_pd(den, _mm256_set1_pd(t::ERF_D7)));
    r2 = _mm256_mul_pd(efac, rat);
  }

  // branch 3: x > 4
  __m256d r3;
  {
    const __m256d z = _mm256_div_pd(one, _mm256_mul_pd(x, x));
    __m256d num = _mm256_mul_pd(_mm256_set1_pd(t::ERF_P5), z);
    __m256d den = z;
    const double p[4] = {t::ERF_P0, t::ERF_P1, t::ERF_P2, t::ERF_P3};
    const double q[4] = {t::ERF_Q0, t::ERF_Q1, t::ERF_Q2, t::ERF_Q3};
    for (int i = 0; i < 4; ++i) {
      num = _mm256_mul_pd(_mm256_add_pd(num, _mm256_set1_pd(p[i])), z);
      den = _mm256_mul_pd(_mm256_add_pd(den, _mm256_set1_pd(q[i])), z);
    }
    __m256d rat = _mm256_div_pd(
        _mm256_mul_pd(z, _mm256_add_pd(num, _mm256_set1_pd(t::ERF_P4))),
        _mm256_add_pd(den, _mm256_set1_pd(t::ERF_Q4)));
    rat = _mm256_div_pd(_mm256_sub_pd(_mm256_set1_pd(t::ERF_RSQRTPI), rat), x);
    r3 = _mm256_mul_pd(efac, rat);
    r3 = _mm256_blendv_pd(r3, _mm256_setzero_pd(),
                          _mm256_cmp_pd(x, _mm256_set1_pd(t::ERF_XBIG), _CMP_GE_OQ));
  }

  __m256d r = _mm256_blendv_pd(
      r3, r2, _mm256_cmp_pd(x, _mm256_set1_pd(t::ERF_THRESH2), _CMP_LE_OQ));
  r = _mm256_blendv_pd(
      r, r1, _mm256_cmp_pd(x, _mm256_set1_pd(t::ERF_THRESH1), _CMP_LE_OQ));
  const __m256d mask_neg = _mm256_cmp_pd(u, _mm256_setzero_pd(), _CMP_LT_OQ);
  return _mm256_blendv_pd(r, _mm256_sub_pd(_mm256_set1_pd(2.0), r), mask_neg);
}

inline __m256d normal_cdf_pd(__m256d x) {
  const __m256d arg =
      _mm256_mul_pd(_mm256_sub_pd(_mm256_setzero_pd(), x), _mm256_set1_pd(t::INV_SQRT2));
  return _mm256_mul_pd(_mm256_set1_pd(0.5), erfc_pd(arg));
}

template <__m256d (*F)(__m256d), double (*FE)(double)>
void map_v(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(out + i, F(_mm256_loadu_pd(x + i)));
  for (; i < n; ++i) out[i] = FE(x[i]);
}

void exp_v_avx2(const double* x, double* out, std::size_t n) {
  map_v<exp_pd, exp_e>(x, out, n);
}
void log_v_avx2(const double* x, double* out, std::size_t n) {
  map_v<log_pd, log_e>(x, out, n);
}
void expit_v_avx2(const double* x, double* out, std::size_t n) {
  map_v<expit_pd, expit_e>(x, out, n);
}
void softplus_v_avx2(const double* x, double* out, std::size_t n) {
  map_v<softplus_pd, softplus_e>(x, out, n);
}
void normal_cdf_v_avx2(const double* x, double* out, std::size_t n) {
  map_v<normal_cdf_pd, normal_cdf_e>(x, out, n);
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double r = hsum(acc);
  for (; i < n; ++i) r = std::fma(x[i], y[i], r);
  return r;
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  double r = hsum(acc);
  for (; i < n; ++i) r += x[i];
  return r;
}

void weighted_power_sums_avx2(const double* v, const double* w, std::size_t n,
                              int kmax, double* out) {
  __m256d acc[8];
  for (int k = 0; k < kmax; ++k) acc[k] = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vv = _mm256_loadu_pd(v + i);
    const __m256d ww = _mm256_loadu_pd(w + i);
    __m256d p = vv;
    for (int k = 0; k < kmax; ++k) {
      acc[k] = _mm256_fmadd_pd(ww, p, acc[k]);
      p = _mm256_mul_pd(p, vv);
    }
  }
  for (int k = 0; k < kmax; ++k) out[k] = hsum(acc[k]);
  for (; i < n; ++i) {
    double p = v[i];
    for (int k = 0; k < kmax; ++k) {
      out[k] = std::fma(w[i], p, out[k]);
      p *= v[i];
    }
  }
}

}  // namespace

const Kernels& avx2() {
  static const Kernels k = {
      "avx2",          exp_v_avx2, log_v_avx2,
      expit_v_avx2,    softplus_v_avx2, normal_cdf_v_avx2,
      dot_avx2,        sum_avx2,   weighted_power_sums_avx2,
  };
  return k;
}

}  // namespace ifscore::kernels
