// Generated by tools/oracles/count_ref.py -- do not edit by hand.
#pragma once

// kShapeCounts[m-1] = number of shape multisets of index m, m = 1..40
inline const long long kShapeCounts[] = {
    1,  // m = 1
    2,  // m = 2
    3,  // m = 3
    4,  // m = 4
    5,  // m = 5
    8,  // m = 6
    9,  // m = 7
    12,  // m = 8
    15,  // m = 9
    18,  // m = 10
    21,  // m = 11
    29,  // m = 12
    32,  // m = 13
    40,  // m = 14
    48,  // m = 15
    56,  // m = 16
    64,  // m = 17
    80,  // m = 18
    88,  // m = 19
    104,  // m = 20
    120,  // m = 21
    136,  // m = 22
    152,  // m = 23
    184,  // m = 24
    200,  // m = 25
    232,  // m = 26
    264,  // m = 27
    296,  // m = 28
    328,  // m = 29
    384,  // m = 30
    416,  // m = 31
    472,  // m = 32
    528,  // m = 33
    584,  // m = 34
    640,  // m = 35
    738,  // m = 36
    794,  // m = 37
    892,  // m = 38
    990,  // m = 39
    1088,  // m = 40
};
inline const int kShapeCounts_len = 40;

// weights w(a) for a = 1..16
inline const long kShapeWeights[] = { 1, 3, 8, 12, 24, 24, 48, 48, 72, 72, 120, 96, 168, 144, 192, 192 };
