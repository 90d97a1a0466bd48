#pragma once

// Coefficient tables shared by the scalar and AVX2 kernel lanes.
// exp/log follow Cephes (Moshier, netlib); erfc follows Cody's rational
// Chebyshev approximations (ACM TOMS 715). Both lanes must evaluate these
// in the same operation order so their elementwise results are identical.

namespace ifscore::kernels::tables {

// ---- exp (Cephes exp.c) ----
inline constexpr double EXP_LOG2E = 1.4426950408889634073599;
inline constexpr double EXP_C1 = 6.93145751953125e-1;
inline constexpr double EXP_C2 = 1.42860682030941723212e-6;
inline constexpr double EXP_P0 = 1.26177193074810590878e-4;
inline constexpr double EXP_P1 = 3.02994407707441961300e-2;
inline constexpr double EXP_P2 = 9.99999999999999999910e-1;
inline constexpr double EXP_Q0 = 3.00198505138664455042e-6;
inline constexpr double EXP_Q1 = 2.52448340349684104192e-3;
inline constexpr double EXP_Q2 = 2.27265548208155028766e-1;
inline constexpr double EXP_Q3 = 2.00000000000000000005e0;
// Clamp keeps the 2^n scaling in single-shift range.
inline constexpr double EXP_HI = 708.0;
inline constexpr double EXP_LO = -708.0;

// ---- log (Cephes log.c) ----
inline constexpr double LOG_SQRTH = 0.70710678118654752440;
inline constexpr double LOG_P0 = 1.01875663804580931796e-4;
inline constexpr double LOG_P1 = 4.97494994976747001425e-1;
inline constexpr double LOG_P2 = 4.70579119878881725854e0;
inline constexpr double LOG_P3 = 1.44989225341610930846e1;
inline constexpr double LOG_P4 = 1.79368678507819816313e1;
inline constexpr double LOG_P5 = 7.70838733755885391666e0;
inline constexpr double LOG_Q0 = 1.12873587189167450590e1;
inline constexpr double LOG_Q1 = 4.52279145837532221105e1;
inline constexpr double LOG_Q2 = 8.29875266912776603211e1;
inline constexpr double LOG_Q3 = 7.11544750618563894466e1;
inline constexpr double LOG_Q4 = 2.31251620126765340583e1;
inline constexpr double LOG_EHI = 0.693359375;
inline constexpr double LOG_ELO = -2.121944400546905827679e-4;

// ---- erfc (Cody) ----
inline constexpr double ERF_A0 = 3.16112374387056560e0;
inline constexpr double ERF_A1 = 1.13864154151050156e2;
inline constexpr double ERF_A2 = 3.77485237685302021e2;
inline constexpr double ERF_A3 = 3.20937758913846947e3;
inline constexpr double ERF_A4 = 1.85777706184603153e-1;
inline constexpr double ERF_B0 = 2.36012909523441209e1;
inline constexpr double ERF_B1 = 2.44024637934444173e2;
inline constexpr double ERF_B2 = 1.28261652607737228e3;
inline constexpr double ERF_B3 = 2.84423683343917062e3;

inline constexpr double ERF_C0 = 5.64188496988670089e-1;
inline constexpr double ERF_C1 = 8.88314979438837594e0;
inline constexpr double ERF_C2 = 6.61191906371416295e1;
inline constexpr double ERF_C3 = 2.98635138197400131e2;
inline constexpr double ERF_C4 = 8.81952221241769090e2;
inline constexpr double ERF_C5 = 1.71204761263407058e3;
inline constexpr double ERF_C6 = 2.05107837782607147e3;
inline constexpr double ERF_C7 = 1.23033935479799725e3;
inline constexpr double ERF_C8 = 2.15311535474403846e-8;
inline constexpr double ERF_D0 = 1.57449261107098347e1;
inline constexpr double ERF_D1 = 1.17693950891312499e2;
inline constexpr double ERF_D2 = 5.37181101862009858e2;
inline constexpr double ERF_D3 = 1.62138957456669019e3;
inline constexpr double ERF_D4 = 3.29079923573345963e3;
inline constexpr double ERF_D5 = 4.36261909014324716e3;
inline constexpr double ERF_D6 = 3.43936767414372164e3;
inline constexpr double ERF_D7 = 1.23033935480374942e3;

inline constexpr double ERF_P0 = 3.05326634961232344e-1;
inline constexpr double ERF_P1 = 3.60344899949804439e-1;
inline constexpr double ERF_P2 = 1.25781726111229246e-1;
inline constexpr double ERF_P3 = 1.60837851487422766e-2;
inline constexpr double ERF_P4 = 6.58749161529837803e-4;
inline constexpr double ERF_P5 = 1.63153871373020978e-2;
inline constexpr double ERF_Q0 = 2.56852019228982242e0;
inline constexpr double ERF_Q1 = 1.87295284992346047e0;
inline constexpr double ERF_Q2 = 5.27905102951428412e-1;
inline constexpr double ERF_Q3 = 6.05183413124413191e-2;
inline constexpr double ERF_Q4 = 2.33520497626869185e-3;

inline constexpr double ERF_THRESH1 = 0.46875;
inline constexpr double ERF_THRESH2 = 4.0;
inline constexpr double ERF_XBIG = 26.543;
inline constexpr double ERF_RSQRTPI = 5.6418958354775628695e-1;  // 1/sqrt(pi)

inline constexpr double INV_SQRT2 = 0.70710678118654752440;

}  // namespace ifscore::kernels::tables
