#pragma once

#include <cstddef>

namespace ifscore::kernels {

// Function table for the data-parallel inner loops (quadrature sums, link
// function evaluations, weighted moment reductions). Two lanes exist: a
// scalar reference lane and an AVX2 lane. Elementwise kernels run the
// same algorithm in both lanes (Cephes exp/log, Cody erfc) with explicit
// fused multiply-adds, so the lanes agree bit-for-bit elementwise; the
// reductions differ only in accumulation order.
struct Kernels {
  const char* name;

  void (*exp_v)(const double* x, double* out, std::size_t n);
  void (*log_v)(const double* x, double* out, std::size_t n);
  void (*expit_v)(const double* x, double* out, std::size_t n);
  void (*softplus_v)(const double* x, double* out, std::size_t n);  // log(1+e^x)
  void (*normal_cdf_v)(const double* x, double* out, std::size_t n);

  double (*dot)(const double* x, const double* y, std::size_t n);
  double (*sum)(const double* x, std::size_t n);
  // out[k-1] = sum_i w[i] * v[i]^k for k = 1..kmax (kmax <= 8)
  void (*weighted_power_sums)(const double* v, const double* w, std::size_t n,
                              int kmax, double* out);
};

const Kernels& scalar();
#ifdef IFSCORE_HAVE_AVX2_LANE
const Kernels& avx2();
#endif

// Lane detected once at first use (AVX2 when the CPU supports avx2+fma),
// overridable with IFSCORE_KERNEL=scalar|avx2.
const Kernels& active();

// Scalar element ops, shared by higher-level code that needs single values.
// These are the reference implementations the vector lanes must match.
double exp_e(double x);
double log_e(double x);
double expit_e(double x);
double softplus_e(double x);
double erfc_e(double x);
double normal_cdf_e(double x);

}  // namespace ifscore::kernels
