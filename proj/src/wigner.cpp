#include "ionspam/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace ionspam {
namespace {

// log(n!) table, extended on demand. Doubled-j arguments stay small here
// (factorial arguments < 100 for anything this code evaluates).
double lnfact(int n) {
    static std::vector<double> table{0.0, 0.0};
    while (static_cast<int>(table.size()) <= n) {
        const int k = static_cast<int>(table.size());
        table.push_back(table.back() + std::log(static_cast<double>(k)));
    }
    return table[static_cast<size_t>(n)];
}

bool triangle_ok(int ta, int tb, int tc) {
    if ((ta + tb + tc) % 2 != 0) return false;
    return tc >= std::abs(ta - tb) && tc <= ta + tb;
}

// log of the triangle coefficient Delta(a,b,c); arguments doubled.
double ln_delta(int ta, int tb, int tc) {
    return 0.5 * (lnfact((ta + tb - tc) / 2) + lnfact((ta - tb + tc) / 2) +
                  lnfact((-ta + tb + tc) / 2) - lnfact((ta + tb + tc) / 2 + 1));
}

void check_half_integer(int tj, int tm) {
    if (tj < 0) throw std::invalid_argument("wigner: negative angular momentum");
    if ((tj + tm) % 2 != 0) throw std::invalid_argument("wigner: j and m differ by non-integer");
    if (std::abs(tm) > tj) throw std::invalid_argument("wigner: |m| > j");
}

}  // namespace

double wigner3j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    check_half_integer(tj1, tm1);
    check_half_integer(tj2, tm2);
    check_half_integer(tj3, tm3);
    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if (!triangle_ok(tj1, tj2, tj3)) return 0.0;

    // Racah sum with log-factorials.
    const int kmin = std::max({0, (tj2 - tj3 - tm1) / 2, (tj1 - tj3 + tm2) / 2});
    const int kmax = std::min({(tj1 + tj2 - tj3) / 2, (tj1 - tm1) / 2, (tj2 + tm2) / 2});
    if (kmin > kmax) return 0.0;

    const double pref = ln_delta(tj1, tj2, tj3) +
                        0.5 * (lnfact((tj1 + tm1) / 2) + lnfact((tj1 - tm1) / 2) +
                               lnfact((tj2 + tm2) / 2) + lnfact((tj2 - tm2) / 2) +
                               lnfact((tj3 + tm3) / 2) + lnfact((tj3 - tm3) / 2));
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double ln_term = lnfact(k) + lnfact((tj1 + tj2 - tj3) / 2 - k) +
                               lnfact((tj1 - tm1) / 2 - k) + lnfact((tj2 + tm2) / 2 - k) +
                               lnfact((tj3 - tj2 + tm1) / 2 + k) +
                               lnfact((tj3 - tj1 - tm2) / 2 + k);
        sum += ((k % 2) ? -1.0 : 1.0) * std::exp(pref - ln_term);
    }
    const int phase = ((tj1 - tj2 - tm3) / 2) % 2 ? -1 : 1;
    return phase * sum;
}

double wigner6j(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6) {
    for (int tj : {tj1, tj2, tj3, tj4, tj5, tj6})
        if (tj < 0) throw std::invalid_argument("wigner6j: negative angular momentum");
    if (!triangle_ok(tj1, tj2, tj3) || !triangle_ok(tj1, tj5, tj6) ||
        !triangle_ok(tj4, tj2, tj6) || !triangle_ok(tj4, tj5, tj3))
        return 0.0;

    const double pref = ln_delta(tj1, tj2, tj3) + ln_delta(tj1, tj5, tj6) +
                        ln_delta(tj4, tj2, tj6) + ln_delta(tj4, tj5, tj3);

    const int kmin = std::max({(tj1 + tj2 + tj3) / 2, (tj1 + tj5 + tj6) / 2,
                               (tj4 + tj2 + tj6) / 2, (tj4 + tj5 + tj3) / 2});
    const int kmax = std::min({(tj1 + tj2 + tj4 + tj5) / 2, (tj2 + tj3 + tj5 + tj6) / 2,
                               (tj1 + tj3 + tj4 + tj6) / 2});
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        const double ln_term = lnfact(k + 1) - lnfact(k - (tj1 + tj2 + tj3) / 2) -
                               lnfact(k - (tj1 + tj5 + tj6) / 2) -
                               lnfact(k - (tj4 + tj2 + tj6) / 2) -
                               lnfact(k - (tj4 + tj5 + tj3) / 2) -
                               lnfact((tj1 + tj2 + tj4 + tj5) / 2 - k) -
                               lnfact((tj2 + tj3 + tj5 + tj6) / 2 - k) -
                               lnfact((tj1 + tj3 + tj4 + tj6) / 2 - k);
        sum += ((k % 2) ? -1.0 : 1.0) * std::exp(pref + ln_term);
    }
    return sum;
}

}  // namespace ionspam
