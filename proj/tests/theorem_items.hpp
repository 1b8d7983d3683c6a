#pragma once

#include <string>
#include <vector>

// One registry id per theorem item; controls are not listed.
inline const std::vector<std::string> kTheoremItems = {
    "c2.bessel",      "c2.type1.exp",   "c2.type1.torus", "c2.type2.exp",   "c2.type2.exp0",  "ch2.type1.i",
    "ch2.type1.ii",   "ch2.type1.iii",  "ch2.type1.iv",   "ch2.type1.v",    "ch2.type2.a",    "ch2.type2.b",
    "ch2.type2.c",    "ch2.type2.d",    "ch2.type2.e",    "ch3.nullity.1",  "ch3.nullity.2",  "ch3.nullity.3",
    "ch3.nullity.4",  "ch3.nullity.5",  "ch3.nullity.6",  "ch3.nullity.7",  "ch3.nullity.8",  "ch3.nullity.9",
    "ch3.nullity.10", "chn.warped.1",   "chn.warped.2",   "chn.warped.3",   "chn.warped.4",   "chn.warped.5",
    "chn.warped.6",   "chn.warped.7",   "chn.warped.8",   "chn.warped.9",   "chn.warped.10",  "chn.warped.11",
    "chn.warped.12",  "chn.warped.13",  "chn.warped.14",  "chn.warped.15",  "chn.warped.16",  "chn.warped.17",
    "chn.warped.18",  "chn.warped.19",  "chn.warped.20",  "chn.warped.21",  "cn.warped.a",    "cn.warped.b",
    "cp2.type1",      "cp2.type2.sech", "cp3.nullity.1",  "cp3.nullity.2",  "cp3.nullity.3",  "cp3.nullity.4",
    "cp3.nullity.5",  "cpn.warped.a",   "cpn.warped.b"};
