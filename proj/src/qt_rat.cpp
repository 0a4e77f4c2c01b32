#include "deltasq/qt_rat.hpp"

namespace deltasq {

QTRat::QTRat(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QTRat: zero denominator");
    normalize();
}

void QTRat::normalize() {
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    QTPoly g = QTPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = *num_.divided_by(g);
        den_ = *den_.divided_by(g);
    }
    Rational lead = den_.terms().front().coeff;  // lex-least term
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_.scale(inv);
        den_.scale(inv);
    }
}

const QTPoly& QTRat::as_polynomial() const {
    if (!is_polynomial())
        throw std::domain_error("QTRat: not a polynomial: (" + num_.str() + ")/(" + den_.str() + ")");
    return num_;
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRat operator+(const QTRat& a, const QTRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) return QTRat(a.num_ + b.num_);
    if (a.den_ == b.den_) return QTRat(a.num_ + b.num_, a.den_);
    QTPoly g = QTPoly::gcd(a.den_, b.den_);
    QTPoly da = *a.den_.divided_by(g);
    QTPoly db = *b.den_.divided_by(g);
    return QTRat(a.num_ * db + b.num_ * da, a.den_ * db);
}

QTRat operator*(const QTRat& a, const QTRat& b) {
    if (a.is_zero() || b.is_zero()) return QTRat();
    if (a.den_.is_one() && b.den_.is_one()) return QTRat(a.num_ * b.num_);
    // cross-cancel before multiplying to keep intermediates small
    QTPoly g1 = QTPoly::gcd(a.num_, b.den_);
    QTPoly g2 = QTPoly::gcd(b.num_, a.den_);
    return QTRat(*a.num_.divided_by(g1) * *b.num_.divided_by(g2),
                 *a.den_.divided_by(g2) * *b.den_.divided_by(g1));
}

QTRat operator/(const QTRat& a, const QTRat& b) {
    if (b.is_zero()) throw std::domain_error("QTRat: division by zero");
    return a * QTRat(b.den_, b.num_);
}

QTRat QTRat::subst_q0() const {
    QTPoly d = den_.subst_q0();
    if (d.is_zero()) throw std::domain_error("QTRat: pole at q=0");
    return QTRat(num_.subst_q0(), std::move(d));
}

QTRat QTRat::subst_t0() const {
    QTPoly d = den_.subst_t0();
    if (d.is_zero()) throw std::domain_error("QTRat: pole at t=0");
    return QTRat(num_.subst_t0(), std::move(d));
}

QTRat QTRat::swap_qt() const { return QTRat(num_.swap_qt(), den_.swap_qt()); }

Rational QTRat::eval(const Rational& qv, const Rational& tv) const {
    Rational d = den_.eval(qv, tv);
    if (d == 0) throw std::domain_error("QTRat: pole at evaluation point");
    return num_.eval(qv, tv) / d;
}

std::string QTRat::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace deltasq
