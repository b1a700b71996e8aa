// Test-only oracles, independent of the library's evaluation paths, plus
// frozen reference digits (50-digit mpmath evaluations, rounded to double).
#pragma once

#include <cmath>
#include <functional>

namespace oracles {

// psi(x) from its defining series -gamma + sum_{n>=0} (x-1)/((n+1)(n+x)),
// summed directly with the exact remainder psi(N+x) - psi(N+1) expanded at
// the remote argument (plain log plus two reciprocal corrections). This
// never shifts the argument or touches the Stirling machinery the library
// uses.
inline double digamma(double x) {
    constexpr double gamma = 0.57721566490153286060651209008240243;
    const long N = 4000000;
    double sum = 0.0, comp = 0.0;
    for (long n = N - 1; n >= 0; --n) {  // ascending magnitude
        const double t = (x - 1.0) / ((n + 1.0) * (n + x));
        const double y = t - comp;
        const double s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    const double zn = N + x, z1 = N + 1.0;
    const double tail = std::log(zn / z1) - 0.5 / zn + 0.5 / z1 -
                        1.0 / (12.0 * zn * zn) + 1.0 / (12.0 * z1 * z1);
    return -gamma + sum + tail;
}

// Richardson-refined central difference of a function, h and 2h stencils.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-5) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 2.0 * h) - f(x - 2.0 * h)) / (4.0 * h);
    return (4.0 * d1 - d2) / 3.0;
}

// Composite Simpson on [a, b].
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double h = (b - a) / (2.0 * panels);
    double acc = f(a) + f(b);
    for (int i = 1; i < 2 * panels; ++i) acc += f(a + i * h) * ((i & 1) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// Frozen reference digits.
namespace ref {
constexpr double gamma = 0.5772156649015328606065121;
constexpr double ln2 = 0.6931471805599453094172321;
constexpr double zeta2 = 1.6449340668482264364724152;
constexpr double zeta3 = 1.2020569031595942853997382;
constexpr double M = 1.2577468869443696300098998;
constexpr double M1 = 0.8606201928531383640434949;
constexpr double M_minus_ln2 = 0.5645997063844243205926677;
constexpr double remark1_value = 0.7885305659115089610603;

constexpr double psi_half = -1.9635100260214234794409763;
constexpr double psi_32 = 0.0364899739785765205590237;   // psi(1.5)
constexpr double lngamma_half = 0.5723649429247000870717137;
constexpr double zeta_prime_2 = -0.9375482543158437537025741;
constexpr double zeta_prime_3 = -0.1981262428856368533306818;
constexpr double zeta_prime_5 = -0.0285737805094629500803898;

constexpr double ein_1 = 0.7965995992970531342836759;
constexpr double ein_half = 0.4438420791177483629360759;
constexpr double ein_2 = 1.3192633561695392895909840;
constexpr double ein_10 = 2.8798049148645082299487810;
constexpr double ein_15 = 3.2852658851900218480810000;  // 3.285265885190021848081
constexpr double ein_50 = 4.4892386703296789192252670;
constexpr double ein_100 = 5.1823858508896242286420000;  // 5.182385850889624228642
constexpr double ein_m5 = -37.998621778467544219884150;

constexpr double s50 = 8.8817842039660327984462457861e-16;  // 30-digit oracle value
constexpr double zmo_60 = 8.6736173801199337283420673290e-19;

constexpr double eq6_value = 0.3745712213867482664486710;   // zeta2 - gamma - ln2
constexpr double eq7_value = 1.0677184019466935758659030;   // zeta2 - gamma
constexpr double eq12_value = 0.9152969123097046064961594;  // zeta2 + gamma - 2 + ln2
constexpr double prop1_m2 = 0.2214385818443160755363385;    // (zeta2 - zeta3)/2
constexpr double two_zeta3 = 2.4041138063191885707994760;

constexpr double psi_0001 = -1000.5755719318103004710000;
constexpr double psi_01 = -10.4237549404110767951700;
constexpr double psi_73 = 1.9178203356379860983680;
constexpr double psi_1234 = 4.8113737751162773728880;
constexpr double psi_1e6 = 13.8155100579641907707700;
constexpr double lngamma_0001 = 6.9071788853838536825120;
constexpr double lngamma_037 = 0.8769468194848792899249;
constexpr double lngamma_55 = 3.9578139676187162938770;
constexpr double lngamma_123456 = 469.6055471299294687301000;
constexpr double lngamma_1e6 = 12815504.5691476116599800;
constexpr double hz_15_05 = 4.7765379475548332485770;    // zeta(1.5, 0.5)
constexpr double hz_3_2 = 0.2020569031595942853997;      // zeta(3, 2)
constexpr double hz_5_10 = 3.041379867647027643765e-5;   // zeta(5, 10)
constexpr double hz_10_05 = 1024.0174503557579013000;    // zeta(10, 0.5)
constexpr double hz_25_37 = 0.1147581421474172366999;    // zeta(2.5, 3.7)
constexpr double laguerre_5_25 = 1.0325520833333333333;  // L_5(2.5)
constexpr double laguerre_12_73 = 3.8889265438759228726; // L_12(7.3)
constexpr double b5 = 2.8600379260241707515820;          // inner binomial sums
constexpr double b20 = 4.1749552431589691830610;
constexpr double b40 = 4.8557587037661674398190;
constexpr double eq10_at_half = 0.6949906271859902658866;
constexpr double thm2_37_m29 = 3.6372808474658846374000;   // lhs at a=3.7, x=-2.9
constexpr double eq13_1_15 = 2.6576430959809102782000;     // lhs at a=1, x=1.5
constexpr double thm3_skew_3_05 = 0.2094194798616493837100;
constexpr double lemma3_skew_2_05 = 0.3581818474044558875500;
constexpr double prop2_p2 = 1.8007550560052829914970;
constexpr double prop2_p3 = 0.9594064225940089832378;
} // namespace ref

} // namespace oracles
