#pragma once

#include "deltasq/qt_poly.hpp"

#include <vector>

namespace deltasq {

// Ordinary binomial coefficient as a big integer; 0 outside 0 <= k <= n.
BigInt int_binomial(int n, int k);

// [n]_q = 1 + q + ... + q^{n-1}, with [0]_q = 0.
QTPoly q_int(int n);

// [n]_q!
QTPoly q_factorial(int n);

// Gaussian binomial; 0 when n < k or k < 0.
QTPoly q_binomial(int n, int k);

// [n]_q! / prod [part]_q!; parts must be >= 0 and sum to n.
QTPoly q_multinomial(int n, const std::vector<int>& parts);

// q-rising factorial (a;q)_s = (1-a)(1-qa)...(1-q^{s-1}a).
QTPoly q_pochhammer(const QTPoly& a, int s);

// Same analogues in the variable t.
QTPoly t_int(int n);
QTPoly t_binomial(int n, int k);
QTPoly t_multinomial(int n, const std::vector<int>& parts);

} // namespace deltasq
