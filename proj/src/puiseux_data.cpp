#include "tangency/minima_atlas.hpp"

#include <cmath>
#include <numbers>

// Closed forms of the tabulated series coefficients, evaluated in double
// precision. Exponents e mean a term c * d^(-e).

namespace tangency {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<SeriesEntry> make_table() {
    const std::string dup = "verbatim copy of the C1I rows; not used for seeding";
    return {
        {"C0I", "xi1", {{
            {0.0, -1, "-1"},
            {1.0, 2, "2"},
            {2.0, -4 + 8/pi, "-4 + 8/pi"},
            {2.5, 4.0/3.0 + 16/pi, "4/3 + 16/pi"},
            {3.0, -28/pi - 8/std::pow(pi, 2) + pi + 4, "-28/pi - 8/pi**2 + pi + 4"},
            {3.5, -(160.0/3.0)/pi - 154.0/15.0 - 2.0/3.0*pi + 64/std::pow(pi, 2), "-160/(3*pi) - 154/15 - 2*pi/3 + 64/pi**2"},
            {4.0, -192/std::pow(pi, 3) - 1.0/2.0*std::pow(pi, 2) + pi + 20.0/3.0 + (232.0/3.0)/pi + 248/std::pow(pi, 2), "-192/pi**3 - pi**2/2 + pi + 20/3 + 232/(3*pi) + 248/pi**2"},
        }}, ""},
        {"C0I", "xi2", {{
            {1.0, 2, "2"},
            {2.0, -2 + 4/pi, "-2 + 4/pi"},
            {2.5, 8/pi, "8/pi"},
            {3.0, -12/pi - 8/std::pow(pi, 2) + 4, "-12/pi - 8/pi**2 + 4"},
            {3.5, -(92.0/3.0)/pi - 4.0/3.0 + 16/std::pow(pi, 2), "-92/(3*pi) - 4/3 + 16/pi**2"},
            {4.0, -pi - 80/std::pow(pi, 3) + (68.0/3.0)/pi + 128/std::pow(pi, 2), "-pi - 80/pi**3 + 68/(3*pi) + 128/pi**2"},
        }}, ""},
        {"C1I", "xi1", {{
            {0.0, -1, "-1"},
            {1.0, 2, "2"},
            {2.0, -4 + 16/pi, "-4 + 16/pi"},
            {2.5, (1.0/3.0)*(-96*std::pow(pi, 2) - 16*std::pow(pi, 3) - 448 - 4*std::pow(pi, 4) + 576*pi)/(std::pow(pi, 3)*(2 - pi)), "4*(-24*pi**2 - 4*pi**3 - 112 - pi**4 + 144*pi)/(3*pi**3*(2 - pi))"},
            {3.0, (-616*std::pow(pi, 4) - 4608*pi - std::pow(pi, 7) - 2*std::pow(pi, 6) + 2560 + 1824*std::pow(pi, 2) + 592*std::pow(pi, 3) + 128*std::pow(pi, 5))/(std::pow(pi, 5)*(2 - pi)), "(-616*pi**4 - 4608*pi - pi**7 - 2*pi**6 + 2560 + 1824*pi**2 + 592*pi**3 + 128*pi**5)/(pi**5*(2 - pi))"},
            {3.5, (1.0/15.0)*(-123520*std::pow(pi, 5) - 1167104*std::pow(pi, 2) - 116480*std::pow(pi, 3) - 688*std::pow(pi, 7) - 798720 + 10*std::pow(pi, 9) + 164*std::pow(pi, 8) + 1843200*pi + 13320*std::pow(pi, 6) + 369760*std::pow(pi, 4))/(std::pow(pi, 7)*(2 - pi)), "2*(-61760*pi**5 - 583552*pi**2 - 58240*pi**3 - 344*pi**7 - 399360 + 5*pi**9 + 82*pi**8 + 921600*pi + 6660*pi**6 + 184880*pi**4)/(15*pi**7*(2 - pi))"},
            {4.0, (1.0/6.0)*(-3225728*std::pow(pi, 6) - 60432*std::pow(pi, 9) - 9127424*std::pow(pi, 4) - 21745664*std::pow(pi, 3) - 123904*std::pow(pi, 7) - 48627712*pi - 3*std::pow(pi, 13) + 14680064 + 18*std::pow(pi, 12) + 136*std::pow(pi, 11) + 3880*std::pow(pi, 10) + 56860672*std::pow(pi, 2) + 276704*std::pow(pi, 8) + 11045120*std::pow(pi, 5))/(std::pow(pi, 9)*(-4*pi + 4 + std::pow(pi, 2))), "(-3225728*pi**6 - 60432*pi**9 - 9127424*pi**4 - 21745664*pi**3 - 123904*pi**7 - 48627712*pi - 3*pi**13 + 14680064 + 18*pi**12 + 136*pi**11 + 3880*pi**10 + 56860672*pi**2 + 276704*pi**8 + 11045120*pi**5)/(6*pi**9*(-4*pi + 4 + pi**2))"},
        }}, ""},
        {"C1I", "xi2", {{
            {1.0, 2, "2"},
            {2.0, -2 + 8/pi, "-2 + 8/pi"},
            {2.5, (-32 + 8*std::pow(pi, 2) + 32*pi)/std::pow(pi, 3), "8*(-4 + pi**2 + 4*pi)/pi**3"},
            {3.0, -64/pi - 768/std::pow(pi, 4) + 512/std::pow(pi, 5) + 96/std::pow(pi, 3) + 4 + 152/std::pow(pi, 2), "-64/pi - 768/pi**4 + 512/pi**5 + 96/pi**3 + 4 + 152/pi**2"},
            {3.5, (1.0/3.0)*(-12176*std::pow(pi, 5) - 110336*std::pow(pi, 2) - 2304*std::pow(pi, 3) - 61440 - 12*std::pow(pi, 7) + 4*std::pow(pi, 8) + 153600*pi + 1272*std::pow(pi, 6) + 32416*std::pow(pi, 4))/(std::pow(pi, 7)*(2 - pi)), "4*(-3044*pi**5 - 27584*pi**2 - 576*pi**3 - 15360 - 3*pi**7 + pi**8 + 38400*pi + 318*pi**6 + 8104*pi**4)/(3*pi**7*(2 - pi))"},
            {4.0, (1.0/3.0)*(-1098368*std::pow(pi, 4) - 35072*std::pow(pi, 7) - 75008*std::pow(pi, 6) - 1300*std::pow(pi, 9) - 694272*std::pow(pi, 3) - 4128768*pi - 6*std::pow(pi, 10) + 3*std::pow(pi, 11) + 1376256 + 3987456*std::pow(pi, 2) + 12536*std::pow(pi, 8) + 653120*std::pow(pi, 5))/(std::pow(pi, 9)*(2 - pi)), "(-1098368*pi**4 - 35072*pi**7 - 75008*pi**6 - 1300*pi**9 - 694272*pi**3 - 4128768*pi - 6*pi**10 + 3*pi**11 + 1376256 + 3987456*pi**2 + 12536*pi**8 + 653120*pi**5)/(3*pi**9*(2 - pi))"},
        }}, ""},
        {"C1I", "xi3", {{
            {2.0, (16 - 12*pi)/std::pow(pi, 2), "4*(4 - 3*pi)/pi**2"},
            {2.5, (1.0/3.0)*(-1152*std::pow(pi, 2) - 24*std::pow(pi, 4) - 1152 + 192*std::pow(pi, 3) + 2176*pi)/(std::pow(pi, 4)*(2 - pi)), "8*(-144*pi**2 - 3*pi**4 - 144 + 24*pi**3 + 272*pi)/(3*pi**4*(2 - pi))"},
            {3.0, (-2128*std::pow(pi, 4) - 128*std::pow(pi, 6) - 17408*pi - 1376*std::pow(pi, 3) + 2*std::pow(pi, 7) + 7168 + 12736*std::pow(pi, 2) + 968*std::pow(pi, 5))/(std::pow(pi, 6)*(2 - pi)), "2*(-1064*pi**4 - 64*pi**6 - 8704*pi - 688*pi**3 + pi**7 + 3584 + 6368*pi**2 + 484*pi**5)/(pi**6*(2 - pi))"},
            {3.5, (1.0/15.0)*(-845440*std::pow(pi, 5) - 6704640*std::pow(pi, 2) - 17920*std::pow(pi, 7) - 2334720 - 20*std::pow(pi, 9) + 1160*std::pow(pi, 8) + 6881280*pi + 1680384*std::pow(pi, 3) + 1157440*std::pow(pi, 4) + 192560*std::pow(pi, 6))/(std::pow(pi, 8)*(2 - pi)), "4*(-211360*pi**5 - 1676160*pi**2 - 4480*pi**7 - 583680 - 5*pi**9 + 290*pi**8 + 1720320*pi + 420096*pi**3 + 289360*pi**4 + 48140*pi**6)/(15*pi**8*(2 - pi))"},
            {4.0, (1.0/3.0)*(-13194880*std::pow(pi, 6) - 261344*std::pow(pi, 9) - 84639744*std::pow(pi, 3) - 3020*std::pow(pi, 11) - 87162880*pi + 6*std::pow(pi, 12) + 3*std::pow(pi, 13) + 22020096 + 6545920*std::pow(pi, 4) + 130981888*std::pow(pi, 2) + 412192*std::pow(pi, 8) + 46488*std::pow(pi, 10) + 22923520*std::pow(pi, 5) + 2330496*std::pow(pi, 7))/(std::pow(pi, 10)*(-4*pi + 4 + std::pow(pi, 2))), "(-13194880*pi**6 - 261344*pi**9 - 84639744*pi**3 - 3020*pi**11 - 87162880*pi + 6*pi**12 + 3*pi**13 + 22020096 + 6545920*pi**4 + 130981888*pi**2 + 412192*pi**8 + 46488*pi**10 + 22923520*pi**5 + 2330496*pi**7)/(3*pi**10*(-4*pi + 4 + pi**2))"},
        }}, ""},
        {"C1I", "xi4", {{
            {1.0, 2 - 4/pi, "2 - 4/pi"},
            {1.5, (32 - 32*pi)/std::pow(pi, 3), "32*(1 - pi)/pi**3"},
            {2.0, -136/std::pow(pi, 2) - 128/std::pow(pi, 3) - 2 - 512/std::pow(pi, 5) + 768/std::pow(pi, 4) + 52/pi, "-136/pi**2 - 128/pi**3 - 2 - 512/pi**5 + 768/pi**4 + 52/pi"},
            {2.5, (1.0/3.0)*(-28896*std::pow(pi, 4) - 1480*std::pow(pi, 6) - 153600*pi - 3456*std::pow(pi, 3) + 61440 + 60*std::pow(pi, 7) + 113408*std::pow(pi, 2) + 11600*std::pow(pi, 5))/(std::pow(pi, 7)*(2 - pi)), "4*(-7224*pi**4 - 370*pi**6 - 38400*pi - 864*pi**3 + 15360 + 15*pi**7 + 28352*pi**2 + 2900*pi**5)/(3*pi**7*(2 - pi))"},
            {3.0, (1.0/3.0)*(-629696*std::pow(pi, 5) - 10936*std::pow(pi, 8) - 4048896*std::pow(pi, 2) - 1376256 - 12*std::pow(pi, 10) + 4128768*pi + 841728*std::pow(pi, 3) + 1172*std::pow(pi, 9) + 27344*std::pow(pi, 7) + 88256*std::pow(pi, 6) + 983168*std::pow(pi, 4))/(std::pow(pi, 9)*(2 - pi)), "4*(-157424*pi**5 - 2734*pi**8 - 1012224*pi**2 - 344064 - 3*pi**10 + 1032192*pi + 210432*pi**3 + 293*pi**9 + 6836*pi**7 + 22064*pi**6 + 245792*pi**4)/(3*pi**9*(2 - pi))"},
        }}, ""},
        {"C1I", "xi5", {{
            {0.0, 1, "1"},
            {1.0, (-8 + 8*pi)/std::pow(pi, 2), "8*(-1 + pi)/pi**2"},
            {1.5, (1.0/3.0)*(-192*std::pow(pi, 3) - 1600*pi + 768 + 24*std::pow(pi, 4) + 960*std::pow(pi, 2))/(std::pow(pi, 4)*(2 - pi)), "8*(-24*pi**3 - 200*pi + 96 + 3*pi**4 + 120*pi**2)/(3*pi**4*(2 - pi))"},
            {2.0, (-696*std::pow(pi, 5) - 10816*std::pow(pi, 2) - 2*std::pow(pi, 7) - 5120 + 13312*pi + 2048*std::pow(pi, 3) + 100*std::pow(pi, 6) + 1264*std::pow(pi, 4))/(std::pow(pi, 6)*(2 - pi)), "2*(-348*pi**5 - 5408*pi**2 - pi**7 - 2560 + 6656*pi + 1024*pi**3 + 50*pi**6 + 632*pi**4)/(pi**6*(2 - pi))"},
            {2.5, (1.0/15.0)*(-170560*std::pow(pi, 6) - 718720*std::pow(pi, 4) - 1784064*std::pow(pi, 3) - 5345280*pi - 1160*std::pow(pi, 8) + 20*std::pow(pi, 9) + 1720320 + 5616640*std::pow(pi, 2) + 18520*std::pow(pi, 7) + 664160*std::pow(pi, 5))/(std::pow(pi, 8)*(2 - pi)), "4*(-42640*pi**6 - 179680*pi**4 - 446016*pi**3 - 1336320*pi - 290*pi**8 + 5*pi**9 + 430080 + 1404160*pi**2 + 4630*pi**7 + 166040*pi**5)/(15*pi**8*(2 - pi))"},
            {3.0, (1.0/3.0)*(-2391744*std::pow(pi, 7) - 16546048*std::pow(pi, 5) - 37296*std::pow(pi, 10) - 172768*std::pow(pi, 8) - 11415552*std::pow(pi, 4) - 106971136*std::pow(pi, 2) - 16515072 - 3*std::pow(pi, 13) - 6*std::pow(pi, 12) + 67895296*pi + 2604*std::pow(pi, 11) + 74895360*std::pow(pi, 3) + 190112*std::pow(pi, 9) + 11057920*std::pow(pi, 6))/(std::pow(pi, 10)*(-4*pi + 4 + std::pow(pi, 2))), "(-2391744*pi**7 - 16546048*pi**5 - 37296*pi**10 - 172768*pi**8 - 11415552*pi**4 - 106971136*pi**2 - 16515072 - 3*pi**13 - 6*pi**12 + 67895296*pi + 2604*pi**11 + 74895360*pi**3 + 190112*pi**9 + 11057920*pi**6)/(3*pi**10*(-4*pi + 4 + pi**2))"},
        }}, ""},
        {"C1II", "xi1", {{
            {0.0, -1, "-1"},
            {1.0, 2, "2"},
            {2.0, -4 + 16/pi, "-4 + 16/pi"},
            {2.5, (1.0/3.0)*(-96*std::pow(pi, 2) - 16*std::pow(pi, 3) - 448 - 4*std::pow(pi, 4) + 576*pi)/(std::pow(pi, 3)*(2 - pi)), "4*(-24*pi**2 - 4*pi**3 - 112 - pi**4 + 144*pi)/(3*pi**3*(2 - pi))"},
            {3.0, (-616*std::pow(pi, 4) - 4608*pi - std::pow(pi, 7) - 2*std::pow(pi, 6) + 2560 + 1824*std::pow(pi, 2) + 592*std::pow(pi, 3) + 128*std::pow(pi, 5))/(std::pow(pi, 5)*(2 - pi)), "(-616*pi**4 - 4608*pi - pi**7 - 2*pi**6 + 2560 + 1824*pi**2 + 592*pi**3 + 128*pi**5)/(pi**5*(2 - pi))"},
            {3.5, (1.0/15.0)*(-123520*std::pow(pi, 5) - 1167104*std::pow(pi, 2) - 116480*std::pow(pi, 3) - 688*std::pow(pi, 7) - 798720 + 10*std::pow(pi, 9) + 164*std::pow(pi, 8) + 1843200*pi + 13320*std::pow(pi, 6) + 369760*std::pow(pi, 4))/(std::pow(pi, 7)*(2 - pi)), "2*(-61760*pi**5 - 583552*pi**2 - 58240*pi**3 - 344*pi**7 - 399360 + 5*pi**9 + 82*pi**8 + 921600*pi + 6660*pi**6 + 184880*pi**4)/(15*pi**7*(2 - pi))"},
            {4.0, (1.0/6.0)*(-3225728*std::pow(pi, 6) - 60432*std::pow(pi, 9) - 9127424*std::pow(pi, 4) - 21745664*std::pow(pi, 3) - 123904*std::pow(pi, 7) - 48627712*pi - 3*std::pow(pi, 13) + 14680064 + 18*std::pow(pi, 12) + 136*std::pow(pi, 11) + 3880*std::pow(pi, 10) + 56860672*std::pow(pi, 2) + 276704*std::pow(pi, 8) + 11045120*std::pow(pi, 5))/(std::pow(pi, 9)*(-4*pi + 4 + std::pow(pi, 2))), "(-3225728*pi**6 - 60432*pi**9 - 9127424*pi**4 - 21745664*pi**3 - 123904*pi**7 - 48627712*pi - 3*pi**13 + 14680064 + 18*pi**12 + 136*pi**11 + 3880*pi**10 + 56860672*pi**2 + 276704*pi**8 + 11045120*pi**5)/(6*pi**9*(-4*pi + 4 + pi**2))"},
        }}, dup},
        {"C1II", "xi2", {{
            {1.0, 2, "2"},
            {2.0, -2 + 8/pi, "-2 + 8/pi"},
            {2.5, (-32 + 8*std::pow(pi, 2) + 32*pi)/std::pow(pi, 3), "8*(-4 + pi**2 + 4*pi)/pi**3"},
            {3.0, -64/pi - 768/std::pow(pi, 4) + 512/std::pow(pi, 5) + 96/std::pow(pi, 3) + 4 + 152/std::pow(pi, 2), "-64/pi - 768/pi**4 + 512/pi**5 + 96/pi**3 + 4 + 152/pi**2"},
            {3.5, (1.0/3.0)*(-12176*std::pow(pi, 5) - 110336*std::pow(pi, 2) - 2304*std::pow(pi, 3) - 61440 - 12*std::pow(pi, 7) + 4*std::pow(pi, 8) + 153600*pi + 1272*std::pow(pi, 6) + 32416*std::pow(pi, 4))/(std::pow(pi, 7)*(2 - pi)), "4*(-3044*pi**5 - 27584*pi**2 - 576*pi**3 - 15360 - 3*pi**7 + pi**8 + 38400*pi + 318*pi**6 + 8104*pi**4)/(3*pi**7*(2 - pi))"},
            {4.0, (1.0/3.0)*(-1098368*std::pow(pi, 4) - 35072*std::pow(pi, 7) - 75008*std::pow(pi, 6) - 1300*std::pow(pi, 9) - 694272*std::pow(pi, 3) - 4128768*pi - 6*std::pow(pi, 10) + 3*std::pow(pi, 11) + 1376256 + 3987456*std::pow(pi, 2) + 12536*std::pow(pi, 8) + 653120*std::pow(pi, 5))/(std::pow(pi, 9)*(2 - pi)), "(-1098368*pi**4 - 35072*pi**7 - 75008*pi**6 - 1300*pi**9 - 694272*pi**3 - 4128768*pi - 6*pi**10 + 3*pi**11 + 1376256 + 3987456*pi**2 + 12536*pi**8 + 653120*pi**5)/(3*pi**9*(2 - pi))"},
        }}, dup},
        {"C1II", "xi3", {{
            {2.0, (16 - 12*pi)/std::pow(pi, 2), "4*(4 - 3*pi)/pi**2"},
            {2.5, (1.0/3.0)*(-1152*std::pow(pi, 2) - 24*std::pow(pi, 4) - 1152 + 192*std::pow(pi, 3) + 2176*pi)/(std::pow(pi, 4)*(2 - pi)), "8*(-144*pi**2 - 3*pi**4 - 144 + 24*pi**3 + 272*pi)/(3*pi**4*(2 - pi))"},
            {3.0, (-2128*std::pow(pi, 4) - 128*std::pow(pi, 6) - 17408*pi - 1376*std::pow(pi, 3) + 2*std::pow(pi, 7) + 7168 + 12736*std::pow(pi, 2) + 968*std::pow(pi, 5))/(std::pow(pi, 6)*(2 - pi)), "2*(-1064*pi**4 - 64*pi**6 - 8704*pi - 688*pi**3 + pi**7 + 3584 + 6368*pi**2 + 484*pi**5)/(pi**6*(2 - pi))"},
            {3.5, (1.0/15.0)*(-845440*std::pow(pi, 5) - 6704640*std::pow(pi, 2) - 17920*std::pow(pi, 7) - 2334720 - 20*std::pow(pi, 9) + 1160*std::pow(pi, 8) + 6881280*pi + 1680384*std::pow(pi, 3) + 1157440*std::pow(pi, 4) + 192560*std::pow(pi, 6))/(std::pow(pi, 8)*(2 - pi)), "4*(-211360*pi**5 - 1676160*pi**2 - 4480*pi**7 - 583680 - 5*pi**9 + 290*pi**8 + 1720320*pi + 420096*pi**3 + 289360*pi**4 + 48140*pi**6)/(15*pi**8*(2 - pi))"},
            {4.0, (1.0/3.0)*(-13194880*std::pow(pi, 6) - 261344*std::pow(pi, 9) - 84639744*std::pow(pi, 3) - 3020*std::pow(pi, 11) - 87162880*pi + 6*std::pow(pi, 12) + 3*std::pow(pi, 13) + 22020096 + 6545920*std::pow(pi, 4) + 130981888*std::pow(pi, 2) + 412192*std::pow(pi, 8) + 46488*std::pow(pi, 10) + 22923520*std::pow(pi, 5) + 2330496*std::pow(pi, 7))/(std::pow(pi, 10)*(-4*pi + 4 + std::pow(pi, 2))), "(-13194880*pi**6 - 261344*pi**9 - 84639744*pi**3 - 3020*pi**11 - 87162880*pi + 6*pi**12 + 3*pi**13 + 22020096 + 6545920*pi**4 + 130981888*pi**2 + 412192*pi**8 + 46488*pi**10 + 22923520*pi**5 + 2330496*pi**7)/(3*pi**10*(-4*pi + 4 + pi**2))"},
        }}, dup},
        {"C1II", "xi4", {{
            {1.0, 2 - 4/pi, "2 - 4/pi"},
            {1.5, (32 - 32*pi)/std::pow(pi, 3), "32*(1 - pi)/pi**3"},
            {2.0, -136/std::pow(pi, 2) - 128/std::pow(pi, 3) - 2 - 512/std::pow(pi, 5) + 768/std::pow(pi, 4) + 52/pi, "-136/pi**2 - 128/pi**3 - 2 - 512/pi**5 + 768/pi**4 + 52/pi"},
            {2.5, (1.0/3.0)*(-28896*std::pow(pi, 4) - 1480*std::pow(pi, 6) - 153600*pi - 3456*std::pow(pi, 3) + 61440 + 60*std::pow(pi, 7) + 113408*std::pow(pi, 2) + 11600*std::pow(pi, 5))/(std::pow(pi, 7)*(2 - pi)), "4*(-7224*pi**4 - 370*pi**6 - 38400*pi - 864*pi**3 + 15360 + 15*pi**7 + 28352*pi**2 + 2900*pi**5)/(3*pi**7*(2 - pi))"},
            {3.0, (1.0/3.0)*(-629696*std::pow(pi, 5) - 10936*std::pow(pi, 8) - 4048896*std::pow(pi, 2) - 1376256 - 12*std::pow(pi, 10) + 4128768*pi + 841728*std::pow(pi, 3) + 1172*std::pow(pi, 9) + 27344*std::pow(pi, 7) + 88256*std::pow(pi, 6) + 983168*std::pow(pi, 4))/(std::pow(pi, 9)*(2 - pi)), "4*(-157424*pi**5 - 2734*pi**8 - 1012224*pi**2 - 344064 - 3*pi**10 + 1032192*pi + 210432*pi**3 + 293*pi**9 + 6836*pi**7 + 22064*pi**6 + 245792*pi**4)/(3*pi**9*(2 - pi))"},
        }}, dup},
        {"C1II", "xi5", {{
            {0.0, 1, "1"},
            {1.0, (-8 + 8*pi)/std::pow(pi, 2), "8*(-1 + pi)/pi**2"},
            {1.5, (1.0/3.0)*(-192*std::pow(pi, 3) - 1600*pi + 768 + 24*std::pow(pi, 4) + 960*std::pow(pi, 2))/(std::pow(pi, 4)*(2 - pi)), "8*(-24*pi**3 - 200*pi + 96 + 3*pi**4 + 120*pi**2)/(3*pi**4*(2 - pi))"},
            {2.0, (-696*std::pow(pi, 5) - 10816*std::pow(pi, 2) - 2*std::pow(pi, 7) - 5120 + 13312*pi + 2048*std::pow(pi, 3) + 100*std::pow(pi, 6) + 1264*std::pow(pi, 4))/(std::pow(pi, 6)*(2 - pi)), "2*(-348*pi**5 - 5408*pi**2 - pi**7 - 2560 + 6656*pi + 1024*pi**3 + 50*pi**6 + 632*pi**4)/(pi**6*(2 - pi))"},
            {2.5, (1.0/15.0)*(-170560*std::pow(pi, 6) - 718720*std::pow(pi, 4) - 1784064*std::pow(pi, 3) - 5345280*pi - 1160*std::pow(pi, 8) + 20*std::pow(pi, 9) + 1720320 + 5616640*std::pow(pi, 2) + 18520*std::pow(pi, 7) + 664160*std::pow(pi, 5))/(std::pow(pi, 8)*(2 - pi)), "4*(-42640*pi**6 - 179680*pi**4 - 446016*pi**3 - 1336320*pi - 290*pi**8 + 5*pi**9 + 430080 + 1404160*pi**2 + 4630*pi**7 + 166040*pi**5)/(15*pi**8*(2 - pi))"},
            {3.0, (1.0/3.0)*(-2391744*std::pow(pi, 7) - 16546048*std::pow(pi, 5) - 37296*std::pow(pi, 10) - 172768*std::pow(pi, 8) - 11415552*std::pow(pi, 4) - 106971136*std::pow(pi, 2) - 16515072 - 3*std::pow(pi, 13) - 6*std::pow(pi, 12) + 67895296*pi + 2604*std::pow(pi, 11) + 74895360*std::pow(pi, 3) + 190112*std::pow(pi, 9) + 11057920*std::pow(pi, 6))/(std::pow(pi, 10)*(-4*pi + 4 + std::pow(pi, 2))), "(-2391744*pi**7 - 16546048*pi**5 - 37296*pi**10 - 172768*pi**8 - 11415552*pi**4 - 106971136*pi**2 - 16515072 - 3*pi**13 - 6*pi**12 + 67895296*pi + 2604*pi**11 + 74895360*pi**3 + 190112*pi**9 + 11057920*pi**6)/(3*pi**10*(-4*pi + 4 + pi**2))"},
        }}, dup},
    };
}

} // namespace

const std::vector<SeriesEntry>& series_table() {
    static const std::vector<SeriesEntry> table = make_table();
    return table;
}

} // namespace tangency
