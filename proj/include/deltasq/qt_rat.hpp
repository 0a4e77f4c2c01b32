#pragma once

#include "deltasq/qt_poly.hpp"

namespace deltasq {

// Rational function in q and t over Q, kept in canonical form:
// den != 0, gcd(num, den) = 1, and the lex-least nonzero term of den
// has coefficient exactly 1. Equality is therefore structural and agrees
// with cross-multiplication.
class QTRat {
public:
    QTRat() : num_(), den_(1) {}
    QTRat(int c) : num_(c), den_(1) {}
    QTRat(Rational c) : num_(std::move(c)), den_(1) {}
    QTRat(QTPoly p) : num_(std::move(p)), den_(1) {}
    QTRat(QTPoly num, QTPoly den);

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    // The numerator when den == 1; throws otherwise.
    const QTPoly& as_polynomial() const;

    QTRat operator-() const;
    friend QTRat operator+(const QTRat& a, const QTRat& b);
    friend QTRat operator-(const QTRat& a, const QTRat& b) { return a + (-b); }
    friend QTRat operator*(const QTRat& a, const QTRat& b);
    friend QTRat operator/(const QTRat& a, const QTRat& b);
    QTRat& operator+=(const QTRat& o) { *this = *this + o; return *this; }
    QTRat& operator-=(const QTRat& o) { *this = *this - o; return *this; }
    QTRat& operator*=(const QTRat& o) { *this = *this * o; return *this; }
    QTRat& operator/=(const QTRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const QTRat& a, const QTRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QTRat& a, const QTRat& b) { return !(a == b); }

    QTRat subst_q0() const;  // throws on a pole at q=0
    QTRat subst_t0() const;
    QTRat swap_qt() const;
    Rational eval(const Rational& qv, const Rational& tv) const;

    std::string str() const;

private:
    QTPoly num_, den_;
    void normalize();
};

inline QTRat operator*(const QTPoly& p, const QTRat& r) { return QTRat(p) * r; }
inline QTRat operator*(const QTRat& r, const QTPoly& p) { return r * QTRat(p); }

} // namespace deltasq
