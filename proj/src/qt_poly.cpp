#include "deltasq/qt_poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace deltasq {

namespace {

bool term_lex_less(const QTTerm& a, const QTTerm& b) {
    if (a.qe != b.qe) return a.qe < b.qe;
    return a.te < b.te;
}

// ---------------------------------------------------------------------------
// gcd machinery. Bivariate gcd works over Z[t][q]: integer-primitive
// univariate gcds for contents, and evaluation at integer t-points plus
// interpolation for the primitive part, verified by exact division.
// ---------------------------------------------------------------------------

// Dense univariate polynomial over Z (variable is t or q as context needs).
using UniZ = std::vector<BigInt>;  // coeff at index i; no trailing zeros

void uz_trim(UniZ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int uz_deg(const UniZ& a) { return static_cast<int>(a.size()) - 1; }

BigInt uz_content(const UniZ& a) {
    BigInt g = 0;
    for (const BigInt& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

void uz_make_primitive(UniZ& a) {
    BigInt g = uz_content(a);
    if (g == 0) return;
    if (a.back() < 0) g = -g;  // positive leading coefficient
    for (BigInt& c : a) c /= g;
}

UniZ uz_mul(const UniZ& a, const UniZ& b) {
    if (a.empty() || b.empty()) return {};
    UniZ r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uz_trim(r);
    return r;
}

// Exact quotient a / b for a primitive divisor b; by Gauss's lemma the
// quotient is integral whenever b | a over Q[x]. Empty when not divisible.
std::optional<UniZ> uz_div_exact(const UniZ& a, const UniZ& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return UniZ{};
    if (uz_deg(a) < uz_deg(b)) return std::nullopt;
    std::vector<Rational> rem(a.size());
    for (size_t i = 0; i < a.size(); ++i) rem[i] = a[i];
    std::vector<Rational> quot(a.size() - b.size() + 1, Rational(0));
    for (int d = uz_deg(a); d >= uz_deg(b);) {
        Rational f = rem[d] / Rational(b.back());
        int shift = d - uz_deg(b);
        quot[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[i + shift] -= f * Rational(b[i]);
        --d;
        while (d >= 0 && rem[d] == 0) --d;
    }
    for (const Rational& r : rem)
        if (r != 0) return std::nullopt;
    UniZ out(quot.size());
    for (size_t i = 0; i < quot.size(); ++i) {
        if (denominator(quot[i]) != 1)
            throw std::logic_error("uz_div_exact: non-integral quotient for primitive divisor");
        out[i] = numerator(quot[i]);
    }
    uz_trim(out);
    return out;
}

// Integer pseudo-remainder prem(a, b).
UniZ uz_prem(UniZ a, const UniZ& b) {
    int db = uz_deg(b);
    const BigInt& lb = b.back();
    while (uz_deg(a) >= db && !a.empty()) {
        BigInt la = a.back();
        int shift = uz_deg(a) - db;
        UniZ next(std::max(a.size(), b.size() + shift), BigInt(0));
        for (size_t i = 0; i < a.size(); ++i) next[i] = a[i] * lb;
        for (size_t i = 0; i < b.size(); ++i) next[i + shift] -= b[i] * la;
        uz_trim(next);
        a = std::move(next);
    }
    return a;
}

// Primitive gcd over Z[x] via primitive PRS (univariate only, cheap).
UniZ uz_gcd(UniZ a, UniZ b) {
    uz_make_primitive(a);
    uz_make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (uz_deg(a) < uz_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        UniZ r = uz_prem(a, b);
        uz_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt uz_eval(const UniZ& a, const BigInt& x) {
    BigInt acc = 0;
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

// Dense integer view of a QTPoly as a polynomial in q over Z[t], together
// with the rational scale that was cleared.
struct ZDense {
    std::vector<UniZ> qc;  // q-coefficient polynomials in t
    int deg_q() const { return static_cast<int>(qc.size()) - 1; }
    bool zero() const { return qc.empty(); }
};

ZDense to_zdense(const QTPoly& p) {
    BigInt lcm = 1;
    for (const auto& tm : p.terms()) lcm = boost::multiprecision::lcm(lcm, denominator(tm.coeff));
    ZDense r;
    for (const auto& tm : p.terms()) {
        if (static_cast<int>(r.qc.size()) <= tm.qe) r.qc.resize(tm.qe + 1);
        UniZ& u = r.qc[tm.qe];
        if (static_cast<int>(u.size()) <= tm.te) u.resize(tm.te + 1, BigInt(0));
        u[tm.te] = numerator(tm.coeff) * (lcm / denominator(tm.coeff));
    }
    for (auto& u : r.qc) uz_trim(u);
    while (!r.qc.empty() && r.qc.back().empty()) r.qc.pop_back();
    return r;
}

QTPoly from_zdense(const ZDense& a) {
    QTPoly r;
    for (size_t qe = 0; qe < a.qc.size(); ++qe)
        for (size_t te = 0; te < a.qc[qe].size(); ++te)
            if (a.qc[qe][te] != 0)
                r += QTPoly::monomial(Rational(a.qc[qe][te]), static_cast<int>(qe),
                                      static_cast<int>(te));
    return r;
}

// gcd in Z[t] of all q-coefficients.
UniZ zd_content(const ZDense& a) {
    UniZ c;
    for (const UniZ& u : a.qc)
        if (!u.empty()) c = uz_gcd(c, u);
    return c;
}

ZDense zd_divide_content(const ZDense& a, const UniZ& content) {
    ZDense r;
    r.qc.reserve(a.qc.size());
    for (const UniZ& u : a.qc) {
        if (u.empty()) {
            r.qc.push_back({});
            continue;
        }
        auto d = uz_div_exact(u, content);
        if (!d) throw std::logic_error("zd_divide_content: content does not divide");
        r.qc.push_back(std::move(*d));
    }
    while (!r.qc.empty() && r.qc.back().empty()) r.qc.pop_back();
    return r;
}

int zd_deg_t(const ZDense& a) {
    int d = -1;
    for (const UniZ& u : a.qc) d = std::max(d, uz_deg(u));
    return d;
}

// Evaluate at integer t = x, producing a univariate integer poly in q.
UniZ zd_eval_t(const ZDense& a, const BigInt& x) {
    UniZ r(a.qc.size(), BigInt(0));
    for (size_t i = 0; i < a.qc.size(); ++i) r[i] = uz_eval(a.qc[i], x);
    uz_trim(r);
    return r;
}

// gcd of the q-primitive parts by evaluation at integer t-points and
// Lagrange interpolation of the q-coefficients. A division check guards
// against unlucky point sets; on failure the degree cap is lowered, so the
// loop terminates with the true gcd (only finitely many points are bad).
QTPoly gcd_primitive_parts(const ZDense& A, const ZDense& B, const QTPoly& a_poly,
                           const QTPoly& b_poly) {
    struct Image {
        BigInt x;
        UniZ g;  // primitive gcd image in q
    };
    const UniZ& la = A.qc.back();
    const UniZ& lb = B.qc.back();
    UniZ delta = uz_gcd(la, lb);  // multiple of lc_q(gcd) up to a rational unit
    const int points_needed = std::min(zd_deg_t(A), zd_deg_t(B)) + uz_deg(delta) + 1;
    int cap = std::min(A.deg_q(), B.deg_q());
    while (cap > 0) {
        int dmin = cap;
        std::vector<Image> images;
        BigInt x = 0;
        while (static_cast<int>(images.size()) < points_needed) {
            if (uz_eval(la, x) != 0 && uz_eval(lb, x) != 0) {
                UniZ g = uz_gcd(zd_eval_t(A, x), zd_eval_t(B, x));
                int d = uz_deg(g);
                if (d == 0) return QTPoly(1);
                if (d < dmin) {
                    dmin = d;
                    images.clear();
                }
                if (d == dmin) images.push_back({x, std::move(g)});
            }
            ++x;
        }
        // interpolate delta(x_i) * g_i / lc(g_i) over the points
        size_t m = images.size();
        std::vector<std::vector<Rational>> lagr(m);  // Lagrange basis polys in t
        for (size_t i = 0; i < m; ++i) {
            std::vector<Rational> li{Rational(1)};
            Rational denom(1);
            for (size_t j = 0; j < m; ++j) {
                if (i == j) continue;
                std::vector<Rational> next(li.size() + 1, Rational(0));
                for (size_t k = 0; k < li.size(); ++k) {
                    next[k + 1] += li[k];
                    next[k] -= li[k] * Rational(images[j].x);
                }
                li = std::move(next);
                denom *= Rational(images[i].x - images[j].x);
            }
            for (Rational& c : li) c /= denom;
            lagr[i] = std::move(li);
        }
        QTPoly cand;
        for (int d = 0; d <= dmin; ++d) {
            std::vector<Rational> tpoly(m, Rational(0));
            for (size_t i = 0; i < m; ++i) {
                BigInt num = d <= uz_deg(images[i].g) ? images[i].g[d] : BigInt(0);
                if (num == 0) continue;
                Rational v = Rational(num * uz_eval(delta, images[i].x), images[i].g.back());
                for (size_t k = 0; k < lagr[i].size(); ++k) tpoly[k] += v * lagr[i][k];
            }
            for (size_t k = 0; k < tpoly.size(); ++k)
                if (tpoly[k] != 0) cand += QTPoly::monomial(tpoly[k], d, static_cast<int>(k));
        }
        if (!cand.is_zero()) {
            // strip the t-content introduced by the delta scaling
            ZDense cz = to_zdense(cand);
            UniZ content = zd_content(cz);
            if (uz_deg(content) > 0 || (!content.empty() && content[0] != 1))
                cz = zd_divide_content(cz, content);
            QTPoly g = from_zdense(cz);
            if (a_poly.divided_by(g) && b_poly.divided_by(g)) return g;
        }
        cap = dmin - 1;  // every degree-dmin image was unlucky
    }
    return QTPoly(1);
}

}  // namespace

QTPoly QTPoly::monomial(Rational c, int qe, int te) {
    QTPoly p;
    if (c != 0) {
        if (qe < 0 || te < 0) throw std::domain_error("QTPoly: negative exponent");
        p.terms_.push_back({qe, te, std::move(c)});
    }
    return p;
}

Rational QTPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("QTPoly: not a constant");
    return terms_[0].coeff;
}

int QTPoly::deg_q() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.qe);
    return d;
}

int QTPoly::deg_t() const {
    int d = -1;
    for (const auto& tm : terms_) d = std::max(d, tm.te);
    return d;
}

QTPoly QTPoly::operator-() const {
    QTPoly r = *this;
    for (auto& tm : r.terms_) tm.coeff = -tm.coeff;
    return r;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    std::vector<QTTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto it = terms_.begin();
    auto jt = o.terms_.begin();
    while (it != terms_.end() || jt != o.terms_.end()) {
        if (jt == o.terms_.end() || (it != terms_.end() && term_lex_less(*it, *jt))) {
            merged.push_back(*it++);
        } else if (it == terms_.end() || term_lex_less(*jt, *it)) {
            merged.push_back(*jt++);
        } else {
            Rational c = it->coeff + jt->coeff;
            if (c != 0) merged.push_back({it->qe, it->te, std::move(c)});
            ++it;
            ++jt;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) { return *this += -o; }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
    std::map<std::pair<int, int>, Rational> acc;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) acc[{x.qe + y.qe, x.te + y.te}] += x.coeff * y.coeff;
    QTPoly r;
    for (auto& [key, c] : acc)
        if (c != 0) r.terms_.push_back({key.first, key.second, std::move(c)});
    return r;
}

QTPoly& QTPoly::scale(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& tm : terms_) tm.coeff *= c;
    return *this;
}

QTPoly QTPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("QTPoly::pow: negative exponent");
    QTPoly r(1);
    QTPoly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

int QTPoly::compare(const QTPoly& a, const QTPoly& b) {
    size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (size_t i = 0; i < n; ++i) {
        const auto& x = a.terms_[i];
        const auto& y = b.terms_[i];
        if (x.qe != y.qe) return x.qe < y.qe ? -1 : 1;
        if (x.te != y.te) return x.te < y.te ? -1 : 1;
        if (x.coeff != y.coeff) return x.coeff < y.coeff ? -1 : 1;
    }
    if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

QTPoly QTPoly::subst_q0() const {
    QTPoly r;
    for (const auto& tm : terms_)
        if (tm.qe == 0) r.terms_.push_back(tm);
    return r;
}

QTPoly QTPoly::subst_t0() const {
    QTPoly r;
    for (const auto& tm : terms_)
        if (tm.te == 0) r.terms_.push_back(tm);
    return r;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (const auto& tm : terms_) r += monomial(tm.coeff, tm.te, tm.qe);
    return r;
}

Rational QTPoly::eval(const Rational& qv, const Rational& tv) const {
    Rational acc(0);
    for (const auto& tm : terms_) {
        Rational m = tm.coeff;
        for (int i = 0; i < tm.qe; ++i) m *= qv;
        for (int i = 0; i < tm.te; ++i) m *= tv;
        acc += m;
    }
    return acc;
}

std::optional<QTPoly> QTPoly::divided_by(const QTPoly& b) const {
    if (b.is_zero()) return std::nullopt;
    QTPoly rem = *this;
    QTPoly quot;
    const QTTerm& lb = b.terms_.back();  // lex-greatest term of the divisor
    while (!rem.is_zero()) {
        const QTTerm& lr = rem.terms_.back();
        if (lr.qe < lb.qe || lr.te < lb.te) return std::nullopt;
        QTPoly step = monomial(lr.coeff / lb.coeff, lr.qe - lb.qe, lr.te - lb.te);
        quot += step;
        rem -= step * b;
    }
    return quot;
}

QTPoly QTPoly::gcd(const QTPoly& a, const QTPoly& b) {
    if (a.is_zero() && b.is_zero()) return QTPoly();
    if (a.is_zero() || b.is_zero()) {
        QTPoly g = a.is_zero() ? b : a;
        return g.scale(Rational(1) / g.terms_.back().coeff);
    }
    if (a.is_constant() || b.is_constant()) return QTPoly(1);
    ZDense A = to_zdense(a);
    ZDense B = to_zdense(b);
    UniZ ca = zd_content(A);
    UniZ cb = zd_content(B);
    ZDense ppA = zd_divide_content(A, ca);
    ZDense ppB = zd_divide_content(B, cb);
    QTPoly g;
    if (ppA.deg_q() == 0 || ppB.deg_q() == 0) {
        // a q-free divisor must divide both contents, handled below
        g = QTPoly(1);
        if (ppA.deg_q() == 0 && ppB.deg_q() == 0) {
            UniZ u = uz_gcd(ppA.qc[0], ppB.qc[0]);
            ZDense z;
            z.qc.push_back(u);
            g = from_zdense(z);
        }
    } else {
        g = gcd_primitive_parts(ppA, ppB, from_zdense(ppA), from_zdense(ppB));
    }
    UniZ ct = uz_gcd(ca, cb);
    if (!ct.empty() && (uz_deg(ct) > 0 || ct[0] != 1)) {
        ZDense z;
        z.qc.push_back(ct);
        g = g * from_zdense(z);
    }
    if (!g.is_zero()) g.scale(Rational(1) / g.terms_.back().coeff);
    return g;
}

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& tm : terms_) {
        Rational c = tm.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) c = -c;
        std::string vars;
        if (tm.qe > 0) vars += (tm.qe == 1 ? "q" : "q^" + std::to_string(tm.qe));
        if (tm.te > 0) {
            if (!vars.empty()) vars += "*";
            vars += (tm.te == 1 ? "t" : "t^" + std::to_string(tm.te));
        }
        if (vars.empty()) {
            os << to_string(c);
        } else if (c == 1) {
            os << vars;
        } else {
            os << to_string(c) << "*" << vars;
        }
    }
    return os.str();
}

} // namespace deltasq
