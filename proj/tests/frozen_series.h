// Generated by tools/oracles/series_ref.py -- do not edit by hand.
#pragma once

struct FrozenTerm { long qnum; long znum; const char* coeff; };

// eta to q^12; q-exponents over 24
inline const FrozenTerm kEtaRef[] = {
    {1, 0, "1"},
    {25, 0, "-1"},
    {49, 0, "-1"},
    {121, 0, "1"},
    {169, 0, "1"},
};
inline const int kEtaRef_len = 5;

// theta_1 to q^8; q-exponents over 24, zeta over 2
inline const FrozenTerm kTheta1Ref[] = {
    {3, -1, "-1"},
    {3, 1, "1"},
    {27, -3, "1"},
    {27, 3, "-1"},
    {75, -5, "-1"},
    {75, 5, "1"},
    {147, -7, "1"},
    {147, 7, "-1"},
};
inline const int kTheta1Ref_len = 8;

// theta_3 to q^8; q-exponents over 24, zeta over 2
inline const FrozenTerm kTheta3Ref[] = {
    {3, -3, "-1"},
    {3, 3, "1"},
    {27, -9, "1"},
    {27, 9, "-1"},
    {75, -15, "-1"},
    {75, 15, "1"},
    {147, -21, "1"},
    {147, 21, "-1"},
};
inline const int kTheta3Ref_len = 8;

// quintuple series, a=2, to q^8; q over 24, zeta over 2
inline const FrozenTerm kQuintuple2Ref[] = {
    {1, -2, "1"},
    {1, 2, "1"},
    {25, -10, "-1"},
    {25, 10, "-1"},
    {49, -14, "-1"},
    {49, 14, "-1"},
    {121, -22, "1"},
    {121, 22, "1"},
    {169, -26, "1"},
    {169, 26, "1"},
};
inline const int kQuintuple2Ref_len = 10;

// theta_1 theta_2 theta_3 theta_4 theta_5 / eta^6 to q^6; q over 24, zeta over 2
inline const FrozenTerm kBlock12345Ref[] = {
    {9, -15, "-1"},
    {9, -13, "1"},
    {9, -11, "1"},
    {9, -5, "-1"},
    {9, -3, "-1"},
    {9, -1, "-1"},
    {9, 1, "1"},
    {9, 3, "1"},
    {9, 5, "1"},
    {9, 11, "-1"},
    {9, 13, "-1"},
    {9, 15, "1"},
    {33, -25, "1"},
    {33, -21, "-1"},
    {33, -19, "-1"},
    {33, -17, "-1"},
    {33, -15, "-2"},
    {33, -13, "3"},
    {33, -11, "4"},
    {33, -9, "1"},
    {33, -5, "-3"},
    {33, -3, "-4"},
    {33, -1, "-3"},
    {33, 1, "3"},
    {33, 3, "4"},
    {33, 5, "3"},
    {33, 9, "-1"},
    {33, 11, "-4"},
    {33, 13, "-3"},
    {33, 15, "2"},
    {33, 17, "1"},
    {33, 19, "1"},
    {33, 21, "1"},
    {33, 25, "-1"},
    {57, -33, "-1"},
    {57, -27, "1"},
    {57, -25, "4"},
    {57, -23, "1"},
    {57, -21, "-3"},
    {57, -19, "-4"},
    {57, -17, "-4"},
    {57, -15, "-6"},
    {57, -13, "9"},
    {57, -11, "12"},
    {57, -9, "4"},
    {57, -7, "-1"},
    {57, -5, "-10"},
    {57, -3, "-13"},
    {57, -1, "-9"},
    {57, 1, "9"},
    {57, 3, "13"},
    {57, 5, "10"},
    {57, 7, "1"},
    {57, 9, "-4"},
    {57, 11, "-12"},
    {57, 13, "-9"},
    {57, 15, "6"},
    {57, 17, "4"},
    {57, 19, "4"},
    {57, 21, "3"},
    {57, 23, "-1"},
    {57, 25, "-4"},
    {57, 27, "-1"},
    {57, 33, "1"},
    {81, -39, "1"},
    {81, -35, "-1"},
    {81, -33, "-3"},
    {81, -31, "-1"},
    {81, -27, "4"},
    {81, -25, "12"},
    {81, -23, "3"},
    {81, -21, "-9"},
    {81, -19, "-13"},
    {81, -17, "-13"},
    {81, -15, "-13"},
    {81, -13, "23"},
    {81, -11, "33"},
    {81, -9, "13"},
    {81, -7, "-3"},
    {81, -5, "-26"},
    {81, -3, "-35"},
    {81, -1, "-22"},
    {81, 1, "22"},
    {81, 3, "35"},
    {81, 5, "26"},
    {81, 7, "3"},
    {81, 9, "-13"},
    {81, 11, "-33"},
    {81, 13, "-23"},
    {81, 15, "13"},
    {81, 17, "13"},
    {81, 19, "13"},
    {81, 21, "9"},
    {81, 23, "-3"},
    {81, 25, "-12"},
    {81, 27, "-4"},
    {81, 31, "1"},
    {81, 33, "3"},
    {81, 35, "1"},
    {81, 39, "-1"},
    {105, -41, "1"},
    {105, -39, "3"},
    {105, -35, "-4"},
    {105, -33, "-10"},
    {105, -31, "-4"},
    {105, -27, "13"},
    {105, -25, "32"},
    {105, -23, "10"},
    {105, -21, "-22"},
    {105, -19, "-35"},
    {105, -17, "-35"},
    {105, -15, "-29"},
    {105, -13, "55"},
    {105, -11, "80"},
    {105, -9, "35"},
    {105, -7, "-9"},
    {105, -5, "-65"},
    {105, -3, "-86"},
    {105, -1, "-52"},
    {105, 1, "52"},
    {105, 3, "86"},
    {105, 5, "65"},
    {105, 7, "9"},
    {105, 9, "-35"},
    {105, 11, "-80"},
    {105, 13, "-55"},
    {105, 15, "29"},
    {105, 17, "35"},
    {105, 19, "35"},
    {105, 21, "22"},
    {105, 23, "-10"},
    {105, 25, "-32"},
    {105, 27, "-13"},
    {105, 31, "4"},
    {105, 33, "10"},
    {105, 35, "4"},
    {105, 39, "-3"},
    {105, 41, "-1"},
    {129, -49, "-1"},
    {129, -47, "-1"},
    {129, -43, "1"},
    {129, -41, "4"},
    {129, -39, "10"},
    {129, -37, "1"},
    {129, -35, "-12"},
    {129, -33, "-26"},
    {129, -31, "-13"},
    {129, -29, "1"},
    {129, -27, "35"},
    {129, -25, "77"},
    {129, -23, "25"},
    {129, -21, "-52"},
    {129, -19, "-87"},
    {129, -17, "-87"},
    {129, -15, "-58"},
    {129, -13, "121"},
    {129, -11, "182"},
    {129, -9, "86"},
    {129, -7, "-22"},
    {129, -5, "-147"},
    {129, -3, "-195"},
    {129, -1, "-112"},
    {129, 1, "112"},
    {129, 3, "195"},
    {129, 5, "147"},
    {129, 7, "22"},
    {129, 9, "-86"},
    {129, 11, "-182"},
    {129, 13, "-121"},
    {129, 15, "58"},
    {129, 17, "87"},
    {129, 19, "87"},
    {129, 21, "52"},
    {129, 23, "-25"},
    {129, 25, "-77"},
    {129, 27, "-35"},
    {129, 29, "-1"},
    {129, 31, "13"},
    {129, 33, "26"},
    {129, 35, "12"},
    {129, 37, "-1"},
    {129, 39, "-10"},
    {129, 41, "-4"},
    {129, 43, "-1"},
    {129, 47, "1"},
    {129, 49, "1"},
};
inline const int kBlock12345Ref_len = 186;

// eta^(5/2) to q^4; q-exponents over 48
inline const FrozenTerm kEtaPow52Ref[] = {
    {5, 0, "1"},
    {53, 0, "-5/2"},
    {101, 0, "-5/8"},
    {149, 0, "55/16"},
};
inline const int kEtaPow52Ref_len = 4;
inline const long kEtaPow52Scale = 48;
