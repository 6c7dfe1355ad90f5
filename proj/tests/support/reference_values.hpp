// Generated by scripts/gen_reference_values.py -- do not edit by hand.
// High-precision (60-digit) reference values frozen for the unit tests.
#pragma once

namespace refvals {

struct ScaledBesselRef { double x; double i0; double i1; };
inline constexpr ScaledBesselRef kScaledBessel[] = {
    {1e-6, 0.99999900000075000, 4.9999950000031250e-7},
    {0.1, 0.90710092578230110, 0.045298446808809325},
    {0.5, 0.64503527044915007, 0.15642080318487170},
    {1.0, 0.46575960759364044, 0.20791041534970845},
    {5.0, 0.18354081260932835, 0.16397226694454236},
    {7.9, 0.14436986414104192, 0.13489649943989377},
    {8.1, 0.14251180948829528, 0.13340068832583663},
    {20.0, 0.089780311884826022, 0.087506222183288665},
    {29.9, 0.073269219046001906, 0.072033374911868786},
    {30.1, 0.073023294131060944, 0.071799854351014335},
    {100.0, 0.039944379299096683, 0.039744153025130253},
    {1e3, 0.012617240455891257, 0.012610930256928629},
    {1e6, 0.00039894233026924578, 0.00039894213079803078},
    {1e8, 3.9894228090011053e-5, 3.9894227890539912e-5},
    {1e12, 3.9894228040148255e-7, 3.9894228040128307e-7},
};

struct ErfRef { double x; double y; };
inline constexpr ErfRef kErf[] = {
    {1e-8, 1.1283791670955125e-8},
    {0.1, 0.11246291601828489},
    {0.5, 0.52049987781304654},
    {1.0, 0.84270079294971487},
    {2.0, 0.99532226501895273},
    {5.421, 0.99999999999998232},
};

inline constexpr double kBetaAt1K = 3.8191162887888232e-12;
inline constexpr double kCothOne = 1.3130352854993313;

// Cylinder geometries parameterized by v = (L/2r_C)^2, w = R^2/2r_C^2
// at m = 1e-9 kg, r_C = 1e-7 m, lambda = 1/s.
struct CylEtaRef { double v; double w; double vib_perp; double vib_sym; double rot; };
inline constexpr CylEtaRef kCylEta[] = {
    {1.0000000000000000e-8, 1.0000000000000000e-8, 1.8133089467606791e+49, 1.8133089497828606e+49, 2.5184846549946800e+17},
    {1.0000000000000000e-6, 1.0000000000000000e-6, 1.8133068523903169e+49, 1.8133071546081156e+49, 2.5184824110262082e+21},
    {1.0000000000000000e-6, 6.6666666666666667e-7, 1.8133074568259092e+49, 1.8133074568259159e+49, 130587982.02046307},
    {0.00010000000000000000, 0.030000000000000000, 1.7598862331707361e+49, 1.7863564714433309e+49, 1.9907699091584532e+31},
    {0.30000000000000000, 0.30000000000000000, 1.2944434712489701e+49, 1.3581470112326897e+49, 1.7515815534740540e+32},
    {0.50000000000000000, 5.0000000000000000, 1.0993092992936492e+48, 3.7242986868947673e+48, 4.8153281702824439e+34},
    {1.5000000000000000, 0.50000000000000000, 9.1761682594322611e+48, 7.4583954992925006e+48, 2.6686080042240610e+33},
    {1.9900000000000000, 0.99000000000000000, 5.8106213724302883e+48, 5.1528572774335453e+48, 1.0089175186361850e+33},
    {2.0100000000000000, 1.0100000000000000, 5.7105819360298249e+48, 5.0805729821601532e+48, 9.7859749459694324e+32},
    {3.0000000000000000, 50.000000000000000, 2.8102236453046404e+46, 2.0387926135195380e+47, 4.2467176045251466e+34},
    {0.20000000000000000, 10000.000000000000, 1.4003939423164591e+43, 3.2607456001444338e+45, 1.6172390838615233e+35},
    {25.000000000000000, 25.000000000000000, 3.5847613097840549e+46, 4.8812949384877450e+46, 4.2165908919582377e+33},
    {2500.0000000000000, 0.0010000000000000000, 6.3491290571665836e+47, 7.2496107642900524e+45, 5.1702195959222463e+36},
    {686.00000000000000, 13700000.000000000, 1.8892376065308721e+37, 3.8580112800222431e+39, 2.6421511965267714e+32},
    {250000.00000000000, 10000000000.000000, 5.1230250252890170e+31, 1.4506355998429246e+34, 7.2531192700337268e+29},
};

struct CubeEtaRef { double v; double vib; double rot; };
inline constexpr CubeEtaRef kCubeEta[] = {
    {1.0000000000000000e-8, 1.8133089528050422e+49, 1.3431918162530087},
    {1.0000000000000000e-6, 1.8133074568259193e+49, 134319064.47984362},
    {0.00010000000000000000, 1.8131578665919197e+49, 13430735051433887.},
    {0.25000000000000000, 1.4796323146385181e+49, 4.2222702796157515e+29},
    {1.0000000000000000, 8.5076619049647708e+48, 5.8281098534620979e+31},
    {1.9900000000000000, 4.6011097975696080e+48, 4.3416954535128850e+32},
    {2.0100000000000000, 4.5498169809233007e+48, 4.4548370916676439e+32},
    {4.0000000000000000, 1.8038450555190530e+48, 1.9254979110845216e+33},
    {25.000000000000000, 7.1737726491556088e+46, 4.7398090935720010e+33},
    {2500.0000000000000, 8.9101491157725445e+42, 1.3748412500316293e+32},
};

inline constexpr double kAlphaCslAtMilliRatio = 0.16540688883611179;

inline constexpr double kLisaEtaRotRc1em7 = 2.6685757096514632e+43;
inline constexpr double kLisaEtaVibRc1em7 = 7.5669744316296958e+46;
inline constexpr double kLisaTorqueDns = 2.6661600000000000e-34;
inline constexpr double kLisaLambdaMaxRc1em7 = 8.9836817452140624e-10;

inline constexpr double kCoinMass = 6.9115038378975451e-12;
inline constexpr double kCoinGammaVib = 3.9877956912380010e-9;
inline constexpr double kCoinGammaVibSym = 1.4211115943694859e-8;
inline constexpr double kCoinDPhi = 2.4561927181223823e-28;

inline constexpr double kCoinEtaRotRc1em7 = 7.6467895947469604e+30;
inline constexpr double kCoinEtaVibRc1em7 = 1.8772445688906755e+36;
inline constexpr double kCoinDeltaTRot = 12538793333356.292;
inline constexpr double kCoinDeltaTVib = 27431808890.332185;
inline constexpr double kCoinLambdaMaxRot = 7.9752490803062574e-15;

inline constexpr double kEffOmegaSq = 39478417.098617829;
inline constexpr double kEffGamma = 0.00010323859890487185;

}  // namespace refvals
