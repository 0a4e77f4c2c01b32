#include "deltasq/q_analogues.hpp"

#include <numeric>
#include <stdexcept>

namespace deltasq {

BigInt int_binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

QTPoly q_int(int n) {
    if (n < 0) throw std::domain_error("q_int: negative argument");
    QTPoly r;
    for (int i = 0; i < n; ++i) r += QTPoly::q(i);
    return r;
}

QTPoly q_factorial(int n) {
    QTPoly r(1);
    for (int i = 2; i <= n; ++i) r *= q_int(i);
    return r;
}

QTPoly q_binomial(int n, int k) {
    if (k < 0 || n < k) return QTPoly();
    // Pascal column: qbinom(a,b) = q^b qbinom(a-1,b) + qbinom(a-1,b-1)
    std::vector<QTPoly> row(k + 1);
    row[0] = QTPoly(1);
    for (int a = 1; a <= n; ++a)
        for (int b = std::min(a, k); b >= 1; --b)
            row[b] = QTPoly::q(b) * row[b] + row[b - 1];
    return row[k];
}

QTPoly q_multinomial(int n, const std::vector<int>& parts) {
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != n) throw std::domain_error("q_multinomial: parts do not sum to n");
    for (int p : parts)
        if (p < 0) throw std::domain_error("q_multinomial: negative part");
    QTPoly r(1);
    int rest = n;
    for (int p : parts) {
        r *= q_binomial(rest, p);
        rest -= p;
    }
    return r;
}

QTPoly q_pochhammer(const QTPoly& a, int s) {
    if (s < 0) throw std::domain_error("q_pochhammer: negative length");
    QTPoly r(1);
    for (int i = 0; i < s; ++i) r *= QTPoly(1) - QTPoly::q(i) * a;
    return r;
}

QTPoly t_int(int n) { return q_int(n).swap_qt(); }
QTPoly t_binomial(int n, int k) { return q_binomial(n, k).swap_qt(); }
QTPoly t_multinomial(int n, const std::vector<int>& parts) {
    return q_multinomial(n, parts).swap_qt();
}

} // namespace deltasq
