#pragma once

// Wigner 3-j and 6-j symbols on doubled (half-integer-exact) arguments.

#include <stdexcept>

namespace ionspam {

// Angular momenta are passed as doubled integers: j = 1/2 -> 2j = 1.
// Passing a physical value j through dbl() keeps call sites readable.
constexpr int dbl(double j) { return static_cast<int>(j * 2.0 + (j < 0 ? -0.5 : 0.5)); }

// (j1 j2 j3; m1 m2 m3), arguments doubled. Returns 0 when the triangle
// or projection rules fail; throws on inconsistent half-integer input.
double wigner3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3);

// {j1 j2 j3; j4 j5 j6}, arguments doubled.
double wigner6j(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6);

}  // namespace ionspam
