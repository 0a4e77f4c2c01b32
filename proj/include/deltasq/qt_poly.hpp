#pragma once

#include "deltasq/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace deltasq {

// One monomial c * q^qe * t^te.
struct QTTerm {
    int qe = 0;
    int te = 0;
    Rational coeff;

    friend bool operator==(const QTTerm& a, const QTTerm& b) {
        return a.qe == b.qe && a.te == b.te && a.coeff == b.coeff;
    }
};

// Sparse polynomial in q and t over Q. Terms are kept sorted lex by
// (q-exponent, t-exponent), with no stored zero coefficients, so the
// representation is canonical and iteration order is deterministic.
// Exponents are always >= 0; negative powers live in QTRat only.
class QTPoly {
public:
    QTPoly() = default;
    QTPoly(int c) : QTPoly(Rational(c)) {}
    explicit QTPoly(Rational c) {
        if (c != 0) terms_.push_back({0, 0, std::move(c)});
    }

    static QTPoly monomial(Rational c, int qe, int te);
    static QTPoly q(int e = 1) { return monomial(1, e, 0); }
    static QTPoly t(int e = 1) { return monomial(1, 0, e); }

    const std::vector<QTTerm>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0 &&
               terms_[0].coeff == 1;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].qe == 0 && terms_[0].te == 0);
    }
    // Value of a constant polynomial (0 for the zero polynomial).
    Rational constant_value() const;

    int deg_q() const;  // -1 for the zero polynomial
    int deg_t() const;

    QTPoly operator-() const;
    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    friend QTPoly operator+(QTPoly a, const QTPoly& b) { a += b; return a; }
    friend QTPoly operator-(QTPoly a, const QTPoly& b) { a -= b; return a; }
    friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
    QTPoly& operator*=(const QTPoly& o) { *this = *this * o; return *this; }
    QTPoly& scale(const Rational& c);
    QTPoly pow(int e) const;

    friend bool operator==(const QTPoly& a, const QTPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QTPoly& a, const QTPoly& b) { return !(a == b); }

    // Total order (term-wise lex), usable for canonical choices.
    static int compare(const QTPoly& a, const QTPoly& b);

    QTPoly subst_q0() const;
    QTPoly subst_t0() const;
    QTPoly swap_qt() const;
    Rational eval(const Rational& qv, const Rational& tv) const;

    // Exact division; empty when b does not divide *this.
    std::optional<QTPoly> divided_by(const QTPoly& b) const;

    static QTPoly gcd(const QTPoly& a, const QTPoly& b);

    // Canonical text form, e.g. "1 + q + q*t^2 - 2*q^3".
    std::string str() const;

private:
    std::vector<QTTerm> terms_;
};

inline QTPoly operator*(const Rational& c, QTPoly p) { return p.scale(c); }

} // namespace deltasq
