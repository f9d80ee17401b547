// Generated by tools/oracles/order_ref.py -- do not edit by hand.
#pragma once

struct FrozenOrderSample { const char* block; const char* x; const char* value; };
struct FrozenOrderMin { const char* block; const char* min; const char* argmin; };

inline const FrozenOrderSample kOrderSamples[] = {
    {"B1", "0", "3/8"},
    {"B1", "1/12", "-17/288"},
    {"B1", "1/7", "-53/392"},
    {"B1", "1/5", "-1/40"},
    {"B1", "1/4", "-1/32"},
    {"B1", "1/3", "-5/72"},
    {"B1", "2/5", "-1/40"},
    {"B1", "1/2", "0"},
    {"B1", "5/8", "-9/128"},
    {"B1", "17/23", "-245/4232"},
    {"B1", "9/10", "-1/10"},
    {"B1", "1", "3/8"},
    {"B2", "0", "13/12"},
    {"B2", "1/12", "35/144"},
    {"B2", "1/7", "85/588"},
    {"B2", "1/5", "61/300"},
    {"B2", "1/4", "13/48"},
    {"B2", "1/3", "11/36"},
    {"B2", "2/5", "49/300"},
    {"B2", "1/2", "1/3"},
    {"B2", "5/8", "61/192"},
    {"B2", "17/23", "1585/6348"},
    {"B2", "9/10", "16/75"},
    {"B2", "1", "13/12"},
    {"B3", "0", "1"},
    {"B3", "1/12", "277/288"},
    {"B3", "1/7", "46/49"},
    {"B3", "1/5", "23/25"},
    {"B3", "1/4", "29/32"},
    {"B3", "1/3", "8/9"},
    {"B3", "2/5", "22/25"},
    {"B3", "1/2", "7/8"},
    {"B3", "5/8", "113/128"},
    {"B3", "17/23", "478/529"},
    {"B3", "9/10", "191/200"},
    {"B3", "1", "1"},
    {"B4", "0", "13/24"},
    {"B4", "1/12", "11/36"},
    {"B4", "1/7", "43/168"},
    {"B4", "1/5", "181/600"},
    {"B4", "1/4", "1/6"},
    {"B4", "1/3", "7/72"},
    {"B4", "2/5", "229/600"},
    {"B4", "1/2", "13/24"},
    {"B4", "5/8", "25/96"},
    {"B4", "17/23", "1861/12696"},
    {"B4", "9/10", "169/600"},
    {"B4", "1", "13/24"},
    {"B5", "0", "2/3"},
    {"B5", "1/12", "-13/288"},
    {"B5", "1/7", "-37/147"},
    {"B5", "1/5", "-16/75"},
    {"B5", "1/4", "-23/96"},
    {"B5", "1/3", "-2/9"},
    {"B5", "2/5", "-19/75"},
    {"B5", "1/2", "-5/24"},
    {"B5", "5/8", "-107/384"},
    {"B5", "17/23", "-421/1587"},
    {"B5", "9/10", "-77/600"},
    {"B5", "1", "2/3"},
};
inline const int kOrderSamples_len = 60;

inline const FrozenOrderMin kOrderMins[] = {
    {"B1", "-3/22", "3/22"},
    {"B2", "107/1716", "61/143"},
    {"B3", "7/8", "1/2"},
    {"B4", "2/21", "9/28"},
    {"B5", "-547/1704", "63/142"},
};
inline const int kOrderMins_len = 5;
