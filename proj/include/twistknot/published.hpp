#pragma once

#include <array>

namespace twistknot::published {

// Reference data for the verification paths: the worked examples for the
// first two members of each family, and the two result tables (torsion at
// the holonomy representation, as a polynomial in the curve coordinate u and
// rewritten in the cusp-shape coordinate c via u = 4/(c - 2)).
//
// Strings use the canonical text forms produced by MPoly::to_string and
// to_sigma_string; comparisons are whitespace-insensitive but otherwise
// exact.

struct WorkedExample {
    int m;                       // family index: J(2, 2m)
    const char* riley;           // defining curve polynomial, sigma-collected
    const char* torsion_value;   // torsion (divided by the sign tau_0)
    const char* torsion_bracket; // the same before dividing by (s + 1/s - 2)
};

inline constexpr std::array<WorkedExample, 4> worked_examples() {
    return {{
        {1,
         "(s+s^-1) - 1 - u",
         "-3",
         "-3*(s+s^-1) + 6"},
        {2,
         "2*(s+s^-1) - 3 + (-(s+s^-1)^2 + 3*(s+s^-1) - 4)*u + (2*(s+s^-1) - 3)*u^2 - u^3",
         "-10*(s+s^-1) + 1 + (5*(s+s^-1)^2 - 7*(s+s^-1) + 1)*u + (-5*(s+s^-1) - 3)*u^2",
         "-10*(s+s^-1)^2 + 21*(s+s^-1) - 2"
         " + (5*(s+s^-1)^3 - 17*(s+s^-1)^2 + 15*(s+s^-1) - 2)*u"
         " + (-5*(s+s^-1)^2 + 7*(s+s^-1) + 6)*u^2"},
        {-1,
         "-(s+s^-1) + 3 + (-(s+s^-1) + 3)*u + u^2",
         "-2*(s+s^-1) + 1",
         "-2*(s+s^-1)^2 + 5*(s+s^-1) - 2"},
        {-2,
         "-2*(s+s^-1) + 5 + ((s+s^-1)^2 - 7*(s+s^-1) + 12)*u"
         " + ((s+s^-1)^2 - 6*(s+s^-1) + 11)*u^2 + (-2*(s+s^-1) + 5)*u^3 + u^4",
         "-8*(s+s^-1)^2 + 10*(s+s^-1) + 7"
         " + (4*(s+s^-1)^3 - 15*(s+s^-1)^2 + 19*(s+s^-1) + 4)*u"
         " + (-8*(s+s^-1)^2 + 16*(s+s^-1) + 1)*u^2 + (4*(s+s^-1) - 1)*u^3",
         "-8*(s+s^-1)^3 + 26*(s+s^-1)^2 - 13*(s+s^-1) - 14"
         " + (4*(s+s^-1)^4 - 23*(s+s^-1)^3 + 49*(s+s^-1)^2 - 34*(s+s^-1) - 8)*u"
         " + (-8*(s+s^-1)^3 + 32*(s+s^-1)^2 - 31*(s+s^-1) - 2)*u^2"
         " + (4*(s+s^-1)^2 - 9*(s+s^-1) + 2)*u^3"},
    }};
}

// Longitude trace of the m = -1 knot on its character variety, restricted to
// the defining curve (sigma-collected form).
inline constexpr const char* figure_eight_longitude_trace() {
    return "(s+s^-1)^2 - (s+s^-1) - 4";
}

struct TableRow {
    int m;              // row index 1..10; the knot is J(2, 2m) or J(2, -2m)
    const char* u_form; // torsion at the holonomy, polynomial in u
    const char* c_form; // the same after u = 4/(c - 2), numerator primitive
};

// Torsion at the holonomy for J(2, 2m), m = 1..10, divided by -tau_0.
inline constexpr std::array<TableRow, 10> table_positive() {
    return {{
        {1, "3", "3"},
        {2,
         "13*u^2 - 7*u + 19",
         "(19*c^2 - 104*c + 340)/(c-2)^2"},
        {3,
         "26*u^4 - 17*u^3 + 98*u^2 - 45*u + 55",
         "(55*c^4 - 620*c^3 + 3968*c^2 - 11280*c + 17424)/(c-2)^4"},
        {4,
         "46*u^6 - 34*u^5 + 263*u^4 - 157*u^3 + 402*u^2 - 159*u + 118",
         "2*(59*c^6 - 1026*c^5 + 9936*c^4 - 52912*c^3 + 180592*c^2 - 352032*c"
         " + 369280)/(c-2)^6"},
        {5,
         "69*u^8 - 54*u^7 + 540*u^6 - 366*u^5 + 1360*u^4 - 733*u^3 + 1186*u^2"
         " - 411*u + 215",
         "(215*c^8 - 5084*c^7 + 66072*c^6 - 509040*c^5 + 2656960*c^4"
         " - 9378624*c^3 + 22613632*c^2 - 33723648*c + 26688768)/(c-2)^8"},
        {6,
         "99*u^10 - 81*u^9 + 971*u^8 - 710*u^7 + 3400*u^6 - 2123*u^5"
         " + 5052*u^4 - 2469*u^3 + 2875*u^2 - 884*u + 353",
         "(353*c^10 - 10596*c^9 + 173188*c^8 - 1742080*c^7 + 12219808*c^6"
         " - 61550208*c^5 + 228030592*c^4 - 612284416*c^3 + 1160955136*c^2"
         " - 1411093504*c + 903214080)/(c-2)^10"},
        {7,
         "132*u^12 - 111*u^11 + 1566*u^10 - 1203*u^9 + 7057*u^8 - 4810*u^7"
         " + 14996*u^6 - 8647*u^5 + 15044*u^4 - 6710*u^3 + 6076*u^2 - 1678*u"
         " + 539",
         "(539*c^12 - 19648*c^11 + 387176*c^10 - 4799040*c^9 + 42208784*c^8"
         " - 274741248*c^7 + 1363062528*c^6 - 5187840000*c^5 + 15118560512*c^4"
         " - 33001455616*c^3 + 51856091136*c^2 - 53202206720*c"
         " + 28544299008)/(c-2)^12"},
        {8,
         "172*u^14 - 148*u^13 + 2383*u^12 - 1899*u^11 + 13098*u^10 - 9475*u^9"
         " + 36258*u^8 - 23106*u^7 + 52884*u^6 - 28275*u^5 + 38518*u^4"
         " - 15774*u^3 + 11636*u^2 - 2914*u + 780",
         "4*(195*c^14 - 8374*c^13 + 193288*c^12 - 2846448*c^11 + 30095568*c^10"
         " - 239812000*c^9 + 1487434752*c^8 - 7287857664*c^7 + 28404952320*c^6"
         " - 87772645888*c^5 + 212579837952*c^4 - 393068802048*c^3"
         " + 529782681600*c^2 - 471281852416*c + 218188021760)/(c-2)^14"},
        {9,
         "215*u^16 - 188*u^15 + 3416*u^14 - 2796*u^13 + 22210*u^12"
         " - 16767*u^11 + 76022*u^10 - 51847*u^9 + 146639*u^8 - 87602*u^7"
         " + 157972*u^6 - 78647*u^5 + 87864*u^4 - 33238*u^3 + 20652*u^2"
         " - 4730*u + 1083",
         "(1083*c^16 - 53576*c^15 + 1417872*c^14 - 24177568*c^13"
         " + 298484224*c^12 - 2810875520*c^11 + 20889506048*c^10"
         " - 124832580096*c^9 + 606632721920*c^8 - 2406783375360*c^7"
         " + 7784342106112*c^6 - 20354210914304*c^5 + 42341634637824*c^4"
         " - 68068269064192*c^3 + 80435317243904*c^2 - 63142437978112*c"
         " + 25688198283264)/(c-2)^16"},
        {10,
         "265*u^18 - 235*u^17 + 4739*u^16 - 3964*u^15 + 35520*u^14"
         " - 27711*u^13 + 144776*u^12 - 103759*u^11 + 348155*u^10"
         " - 224404*u^9 + 501055*u^8 - 281458*u^7 + 417368*u^6 - 194245*u^5"
         " + 183500*u^4 - 64454*u^3 + 34537*u^2 - 7285*u + 1455",
         "(1455*c^18 - 81520*c^17 + 2433812*c^16 - 47158400*c^15"
         " + 665730240*c^14 - 7230947840*c^13 + 62585931008*c^12"
         " - 440831379456*c^11 + 2561522930176*c^10 - 12371911213056*c^9"
         " + 49827680770048*c^8 - 167134091640832*c^7 + 464297966682112*c^6"
         " - 1056316689612800*c^5 + 1931794260754432*c^4"
         " - 2753296051208192*c^3 + 2901909811167232*c^2 - 2040504620417024*c"
         " + 741196988416000)/(c-2)^18"},
    }};
}

// Torsion at the holonomy for J(2, -2m), m = 1..10, divided by tau_0.
inline constexpr std::array<TableRow, 10> table_negative() {
    return {{
        {1, "-3", "-3"},
        {2,
         "7*u^3 + u^2 + 14*u - 5",
         "-(5*c^3 - 86*c^2 + 268*c - 680)/(c-2)^3"},
        {3,
         "17*u^5 + 8*u^4 + 79*u^3 + 26*u^2 + 73*u + 1",
         "(c^5 + 282*c^4 - 1880*c^3 + 9488*c^2 - 22448*c + 34848)/(c-2)^5"},
        {4,
         "34*u^7 + 22*u^6 + 225*u^5 + 119*u^4 + 439*u^3 + 162*u^2 + 229*u"
         " + 22",
         "2*(11*c^7 + 304*c^6 - 3276*c^5 + 25488*c^4 - 112432*c^3"
         " + 359808*c^2 - 661824*c + 738560)/(c-2)^7"},
        {5,
         "54*u^9 + 39*u^8 + 474*u^7 + 300*u^6 + 1411*u^5 + 730*u^4 + 1619*u^3"
         " + 586*u^2 + 551*u + 65",
         "(65*c^9 + 1034*c^8 - 16528*c^7 + 175520*c^6 - 1125280*c^5"
         " + 5374144*c^4 - 17783040*c^3 + 42336768*c^2 - 62848768*c"
         " + 53377536)/(c-2)^9"},
        {6,
         "81*u^11 + 63*u^10 + 872*u^9 + 611*u^8 + 3462*u^7 + 2104*u^6"
         " + 6167*u^5 + 3036*u^4 + 4714*u^3 + 1615*u^2 + 1129*u + 137",
         "(137*c^11 + 1502*c^10 - 34340*c^9 + 468616*c^8 - 3940960*c^7"
         " + 25007808*c^6 - 117308544*c^5 + 420442368*c^4 - 1109472000*c^3"
         " + 2123257344*c^2 - 2628703232*c + 1806428160)/(c-2)^11"},
        {7,
         "111*u^13 + 90*u^12 + 1425*u^11 + 1062*u^10 + 7105*u^9 + 4747*u^8"
         " + 17286*u^7 + 9956*u^6 + 21045*u^5 + 9752*u^4 + 11610*u^3"
         " + 3724*u^2 + 2070*u + 245",
         "(245*c^13 + 1910*c^12 - 62696*c^11 + 1057552*c^10 - 11025808*c^9"
         " + 87196704*c^8 - 526180096*c^7 + 2499806720*c^6 - 9272200448*c^5"
         " + 26825366016*c^4 - 58773907456*c^3 + 94191718400*c^2"
         " - 99494326272*c + 57088598016)/(c-2)^13"},
        {8,
         "148*u^15 + 124*u^14 + 2195*u^13 + 1711*u^12 + 13125*u^11"
         " + 9354*u^10 + 40453*u^9 + 25698*u^8 + 68070*u^7 + 37044*u^6"
         " + 60745*u^5 + 26422*u^4 + 25394*u^3 + 7604*u^2 + 3502*u + 396",
         "4*(99*c^15 + 532*c^14 - 26060*c^13 + 529856*c^12 - 6606160*c^11"
         " + 62595520*c^10 - 460836032*c^9 + 2719805952*c^8 - 12910096128*c^7"
         " + 49528327168*c^6 - 152285103104*c^5 + 370984124416*c^4"
         " - 695663718400*c^3 + 961422573568*c^2 - 884915453952*c"
         " + 436376043520)/(c-2)^15"},
        {9,
         "188*u^17 + 161*u^16 + 3172*u^15 + 2552*u^14 + 22171*u^13"
         " + 16540*u^12 + 82961*u^11 + 56366*u^10 + 179181*u^9 + 108029*u^8"
         " + 224190*u^7 + 115204*u^6 + 154037*u^5 + 62916*u^4 + 50650*u^3"
         " + 14172*u^2 + 5570*u + 597",
         "(597*c^17 + 1982*c^16 - 161440*c^15 + 3885760*c^14 - 56503104*c^13"
         " + 624108160*c^12 - 5417133568*c^11 + 38142084096*c^10"
         " - 219869856256*c^9 + 1045959103488*c^8 - 4105465389056*c^7"
         " + 13257704030208*c^6 - 34864687169536*c^5 + 73473552449536*c^4"
         " - 120432383098880*c^3 + 146315203575808*c^2 - 119078046597120*c"
         " + 51376396566528)/(c-2)^17"},
        {10,
         "235*u^19 + 205*u^18 + 4434*u^17 + 3659*u^16 + 35404*u^15"
         " + 27360*u^14 + 155687*u^13 + 111176*u^12 + 410964*u^11"
         " + 266255*u^10 + 665399*u^9 + 380935*u^8 + 647346*u^7 + 314408*u^6"
         " + 353985*u^5 + 135980*u^4 + 94041*u^3 + 24637*u^2 + 8440*u + 855",
         "(855*c^19 + 1270*c^18 - 236348*c^17 + 6649256*c^16 - 110706240*c^15"
         " + 1397436800*c^14 - 13965196032*c^13 + 114155938304*c^12"
         " - 773068443136*c^11 + 4380077954048*c^10 - 20842143467520*c^9"
         " + 83401615028224*c^8 - 279834167951360*c^7 + 782314999349248*c^6"
         " - 1800640172326912*c^5 + 3349441682210816*c^4"
         " - 4881403696185344*c^3 + 5296224268058624*c^2 - 3862939033141248*c"
         " + 1482393976832000)/(c-2)^19"},
    }};
}

}  // namespace twistknot::published
