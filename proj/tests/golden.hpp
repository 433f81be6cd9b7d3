#ifndef DISTBENCH_TESTS_GOLDEN_HPP
#define DISTBENCH_TESTS_GOLDEN_HPP

#include <array>
#include <string_view>

namespace golden {

inline constexpr std::array<double, 4> kV1{5.1, 3.5, 1.4, 0.3};
inline constexpr std::array<double, 4> kV2{5.4, 3.4, 1.7, 0.2};

struct Value {
    std::string_view metric;
    double expected;
};

// Published four-decimal values for the reference pair; checked at 1e-3.
inline constexpr std::array<Value, 46> kPublished{{
    {"MD", 0.8},        {"CD", 0.3},        {"ED", 0.4472},     {"LD", 0.7153},     {"SD", 0.0381},
    {"SoD", 0.0734},    {"KD", 0.0792},     {"MCD", 0.2},       {"NID", 0.4},       {"JacD", 0.0048},
    {"CosD", 0.0016},   {"ChoD", 0.0564},   {"BD", -2.34996},   {"SCD", 0.0297},    {"MatD", 0.1722},
    {"HeD", 0.2436},    {"SED", 0.2},       {"ClaD", 0.2245},   {"NCSD", 0.1181},   {"PCSD", 0.1225},
    {"SquD", 0.0591},   {"PSCSD", 0.1182},  {"DivD", 0.1008},   {"AD", 0.2236},     {"MCED", 0.2236},
    {"SCSD", 0.0591},   {"KLD", -0.3402},   {"JefD", 0.1184},   {"KDD", -0.1853},   {"JSD", 0.014809},
    {"JDD", 0.0074},    {"VWHD", 0.8025},   {"VSDF1", 0.3002},  {"VSDF2", 0.1349},  {"VSDF3", 0.1058},
    {"MSCD", 0.1225},   {"MiSCSD", 0.1181}, {"AvgD", 0.55},     {"KJD", 21.2138},   {"TanD", 0.0149},
    {"HamD", 4.0},      {"HauD", 0.3},      {"CSSD", 0.0894},   {"MeeD", 0.48},     {"MotD", 0.5190},
    {"HasD", 0.2571},
}};

// Re-evaluations of the formulas in 50-digit arithmetic (mpmath) for the
// measures whose published value does not follow from the formula; checked at 1e-6.
inline constexpr std::array<Value, 8> kRecomputed{{
    {"CanD", 0.33983837574300407},
    {"DicD", 0.0023820867079561696},
    {"ASCSD", 0.48134453781512605},
    {"WIAD", 0.032483440704110335},
    {"TopD", 0.029617589581153891},
    {"PeaD", 0.0046305983784901422},
    {"CorD", 0.0023152991892450711},
    {"SPeaD", 0.0092397543156374088},
}};

// High-precision values for every measure; checked at 1e-9.
inline constexpr std::array<Value, 54> kOracle{{
    {"MD", 0.8},
    {"CD", 0.3},
    {"ED", 0.44721359549995794},
    {"LD", 0.71534888854363182},
    {"CanD", 0.33983837574300407},
    {"SD", 0.038095238095238095},
    {"SoD", 0.073394495412844037},
    {"KD", 0.079207920792079208},
    {"MCD", 0.2},
    {"NID", 0.4},
    {"JacD", 0.004752851711026616},
    {"CosD", 0.0015917754844166795},
    {"DicD", 0.0023820867079561696},
    {"ChoD", 0.056422964906439993},
    {"BD", -2.3499617065547542},
    {"SCD", 0.029663592349384959},
    {"MatD", 0.17223121769698128},
    {"HeD", 0.24357172393110395},
    {"SED", 0.2},
    {"ClaD", 0.22448075858553083},
    {"NCSD", 0.11812324929971989},
    {"PCSD", 0.12254901960784314},
    {"SquD", 0.059052961998263541},
    {"PSCSD", 0.11810592399652708},
    {"DivD", 0.10078322195027074},
    {"ASCSD", 0.48134453781512605},
    {"AD", 0.22360679774997897},
    {"MCED", 0.22360679774997897},
    {"SCSD", 0.059052961998263541},
    {"KLD", -0.34023041931224604},
    {"JefD", 0.11883959298241349},
    {"KDD", -0.18527516196697092},
    {"TopD", 0.029617589581153891},
    {"JSD", 0.014808794790576946},
    {"JDD", 0.0074043973952884728},
    {"VWHD", 0.80252100840336134},
    {"VSDF1", 0.30024362686250971},
    {"VSDF2", 0.13487394957983193},
    {"VSDF3", 0.10579831932773109},
    {"MSCD", 0.12254901960784314},
    {"MiSCSD", 0.11812324929971989},
    {"AvgD", 0.55},
    {"KJD", 21.213294508854072},
    {"TanD", 0.014901103455026427},
    {"PeaD", 0.0046305983784901422},
    {"CorD", 0.0023152991892450711},
    {"SPeaD", 0.0092397543156374088},
    {"HamD", 4.0},
    {"HauD", 0.3},
    {"CSSD", 0.089147131503372738},
    {"WIAD", 0.032483440704110335},
    {"MeeD", 0.48},
    {"MotD", 0.51904761904761905},
    {"HasD", 0.25713141025641026},
}};

}  // namespace golden

#endif
