// Generated by generate_golden.py; do not edit.
#pragma once

#include <complex>

namespace golden {

// Gamma(1.5+0.5i)
inline constexpr std::complex<double> gamma_1p5_0p5i{0.79073891412786500537, 0.027425085413882388704};
// zeta(1/2)
inline constexpr std::complex<double> zeta_0p5{-1.4603545088095868129, 0.0};
// zeta(0.7-3i)
inline constexpr std::complex<double> zeta_0p7_m3i{0.57125187243516474642, 0.092322873907149788113};
// s(s - 1)/2 pi^{-s/2} Gamma(s/2) zeta(s) at 0.3+2i
inline constexpr std::complex<double> xi_0p3_2i{0.45344861882575758074, -0.0084367380614749771123};
// Gamma(0.7+0.2i, 1.5) by quadrature
inline constexpr std::complex<double> inc_gamma_upper_0p7_0p2i_1p5{0.17088377381201731605, 0.028312772567358142655};
// 1F1(0.8; 1.8; 5)
inline constexpr std::complex<double> hyp1f1_0p8_5{24.905845224657773841, 0.0};
// 2F1(1.5, 1.5; 3; 0.9)
inline constexpr std::complex<double> hyp2f1_1p5_0p9{3.9382516352944442278, 0.0};
// Li_3(e^{2 pi i 0.3})
inline constexpr std::complex<double> li3_0p3{-0.3809567221426909191, 0.86817574704839496491};
// Li_2(e^{2 pi i 0.3})
inline constexpr std::complex<double> li2_0p3{-0.42768285738053887348, 0.78481578019775081898};
// Delta(0.2+1.1i)
inline constexpr std::complex<double> delta_0p2_1p1{0.00032693014362571332681, 0.00093335153134984983342};
// tau^{-12} Delta(-1/tau) at 0.2+1.1i
inline constexpr std::complex<double> delta_slash_S_0p2_1p1{0.00032693014362571332681, 0.00093335153134984983342};
// J(i)
inline constexpr std::complex<double> J_i{984.0, 0.0};
// J(e^{2 pi i/3})
inline constexpr std::complex<double> J_rho{-744.0, -1.1766295956435403421e-118};
// J(0.3+i)
inline constexpr std::complex<double> J_0p3_1p0{-335.11065992110548833, -206.74080725698951945};
// J(0.27+1.31i)
inline constexpr std::complex<double> J_0p27_1p31{-478.72778883665692695, -3674.2538087096186964};
// J(-0.41+0.35i), unreduced
inline constexpr std::complex<double> J_m0p41_0p35{-1722.5698708620937887, -978.44826737081790409};
// E2hat(-1/tau) tau^{-2} at 0.3+0.9i
inline constexpr std::complex<double> e2hat_0p3_0p9{-0.034361874398797345802, -0.079377823737855503377};
// E4(0.1+0.7i)
inline constexpr std::complex<double> e4_0p1_0p7{3.4848134137808314512, 2.05788658994422603};
// H_z(tau), z=0.13+1.3i, tau=0.37+0.9i
inline constexpr std::complex<double> Hz_0p13_1p3__0p37_0p9{-0.08529498573311242138, 0.011679249208497111837};
// E2hat(0.37+0.9i)
inline constexpr std::complex<double> E2hat_0p37_0p9{-0.0034715306457379121082, -0.060363199175359760967};
// E_0(1.5; i), Fourier expansion
inline constexpr std::complex<double> E0_1p5_i{3.7575682396383099801, 0.0};
// E_0(1.5; 0.2+1.3i)
inline constexpr std::complex<double> E0_1p5_0p2_1p3{3.8835732840219448089, 0.0};
// t^{-w-1} coefficient of E_2(w; it), w = 1.5
inline constexpr std::complex<double> E2_growth_coeff_1p5{-0.83502305987478689741, 0.0};
// -24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> le2_1p5{5.1520521772791541613, 0.0};
// -24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> le2_2p5{-1.129847682606937745, 0.0};
// -24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> le2_1p5_0p7i{1.4176970851281651962, -0.60660303308548024782};
// -24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> le2_m0p5{1.129847682606937745, 0.0};
// -24 (2pi)^{-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> le2_1p4{5.7262304443268452079, 0.0};
// L_z(s) by independent quadrature
inline constexpr std::complex<double> Lz_0p27_1p31__1p4{-0.29904315862915078304, 30.273689174549417276};
// L_z(s) by independent quadrature
inline constexpr std::complex<double> Lz_0p27_1p31__1p4_0p3i{13.897238897905486711, 19.247041807556617017};
// L_z(s) by independent quadrature
inline constexpr std::complex<double> Lz_m0p41_0p87__1p5_0p3i{10.481416114027648702, 17.813023841443887733};
// L_z(s) by independent quadrature
inline constexpr std::complex<double> Lz_0p13_2p2__0p7_1p1i{3.9987705449063249899, -8.0043516080697412555};
// int_1^inf (H_z(it) - 1) t^{1/2} dt
inline constexpr std::complex<double> Jint_inf_0p3_1p5__1p5{-0.57106424291849021278, -0.2323107790739547357};
// -24i (2pi)^{1-s} Gamma(s) zeta(s) zeta(s-1)
inline constexpr std::complex<double> limit_target_1p5{0.0, 32.371298542102979563};
// C_{1,1.5}(0.3)
inline constexpr std::complex<double> C1_1p5_0p3{-1.2566370614359172954, 0.0};

}  // namespace golden
