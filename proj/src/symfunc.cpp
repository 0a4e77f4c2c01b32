#include "deltasq/symfunc.hpp"

#include "deltasq/q_analogues.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace deltasq {

namespace {

constexpr int kMaxDegree = 24;

using Mat = std::vector<std::vector<Rational>>;
using MonoMap = std::map<Partition, Rational>;

// Coefficient of m_nu in m_la * m_mu: pairs of distinct rearrangements
// (alpha of la, beta of mu, zero-padded) with alpha + beta = nu.
std::vector<std::pair<Partition, Rational>> mono_product_raw(const Partition& la,
                                                             const Partition& mu) {
    std::vector<std::pair<Partition, Rational>> out;
    int total = la.size() + mu.size();
    for (const Partition& nu : enumerate_partitions(total)) {
        int L = nu.length();
        if (la.length() > L || mu.length() > L || la.length() + mu.length() < L) continue;
        if (!nu.empty() && nu.parts()[0] < std::max(la.part(0), mu.part(0))) continue;
        std::vector<int> alpha(L, 0);
        for (int i = 0; i < la.length(); ++i) alpha[i] = la.parts()[i];
        std::sort(alpha.begin(), alpha.end());
        BigInt count = 0;
        std::vector<int> beta(L);
        do {
            bool ok = true;
            for (int i = 0; i < L; ++i) {
                beta[i] = nu.parts()[i] - alpha[i];
                if (beta[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<int> nz;
            for (int b : beta)
                if (b > 0) nz.push_back(b);
            std::sort(nz.begin(), nz.end(), std::greater<int>());
            if (nz == mu.parts()) ++count;
        } while (std::next_permutation(alpha.begin(), alpha.end()));
        if (count != 0) out.emplace_back(nu, Rational(count));
    }
    return out;
}

const std::vector<std::pair<Partition, Rational>>& mono_product(const Partition& la,
                                                                const Partition& mu) {
    static std::map<std::pair<Partition, Partition>, std::vector<std::pair<Partition, Rational>>>
        cache;
    static std::shared_mutex mx;
    std::pair<Partition, Partition> key =
        Partition::compare(la, mu) <= 0 ? std::make_pair(la, mu) : std::make_pair(mu, la);
    {
        std::shared_lock lock(mx);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto val = mono_product_raw(key.first, key.second);
    std::unique_lock lock(mx);
    return cache.emplace(std::move(key), std::move(val)).first->second;
}

MonoMap mono_mul(const MonoMap& f, const MonoMap& g) {
    MonoMap r;
    for (const auto& [la, a] : f)
        for (const auto& [mu, b] : g)
            for (const auto& [nu, c] : mono_product(la, mu)) {
                Rational v = a * b * c;
                auto it = r.find(nu);
                if (it == r.end())
                    r.emplace(nu, std::move(v));
                else
                    it->second += v;
            }
    for (auto it = r.begin(); it != r.end();)
        it = it->second == 0 ? r.erase(it) : std::next(it);
    return r;
}

int kostka_number(const Partition& shape, const Partition& content) {
    // semistandard tableaux: rows weakly increase, columns strictly increase
    if (shape.empty()) return content.empty() ? 1 : 0;
    std::vector<std::vector<int>> tab(shape.length());
    for (int r = 0; r < shape.length(); ++r) tab[r].assign(shape.parts()[r], 0);
    std::vector<int> left(content.length());
    for (int i = 0; i < content.length(); ++i) left[i] = content.parts()[i];
    int count = 0;
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == shape.length()) {
            ++count;
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == shape.parts()[r]) {
            ++nr;
            nc = 0;
        }
        int lo = 1;
        if (c > 0) lo = std::max(lo, tab[r][c - 1]);
        if (r > 0 && c < shape.parts()[r - 1]) lo = std::max(lo, tab[r - 1][c] + 1);
        for (int v = lo; v <= content.length(); ++v) {
            if (left[v - 1] == 0) continue;
            --left[v - 1];
            tab[r][c] = v;
            rec(nr, nc);
            ++left[v - 1];
        }
    };
    rec(0, 0);
    return count;
}

Mat invert(Mat a) {
    size_t n = a.size();
    Mat inv(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("invert: singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

struct DegreeTables {
    int n = 0;
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    Mat e2m, h2m, p2m, s2m;
    Mat m2e, m2h, m2p, m2s;
};

MonoMap single_part_expansion(Basis b, int k) {
    MonoMap r;
    switch (b) {
        case Basis::e:
            r[Partition(std::vector<int>(k, 1))] = 1;
            break;
        case Basis::h:
            for (const Partition& la : enumerate_partitions(k)) r[la] = 1;
            break;
        case Basis::p:
            r[Partition({k})] = 1;
            break;
        default:
            throw std::logic_error("single_part_expansion: bad basis");
    }
    return r;
}

Mat basis_matrix(Basis b, const std::vector<Partition>& parts) {
    size_t P = parts.size();
    Mat m(P, std::vector<Rational>(P, Rational(0)));
    for (size_t j = 0; j < P; ++j) {
        MonoMap exp;
        if (b == Basis::s) {
            for (const Partition& mu : parts) {
                int k = kostka_number(parts[j], mu);
                if (k != 0) exp[mu] = k;
            }
        } else {
            exp[Partition()] = 1;
            for (int part : parts[j].parts()) exp = mono_mul(exp, single_part_expansion(b, part));
        }
        for (const auto& [mu, c] : exp) {
            auto it = std::find(parts.begin(), parts.end(), mu);
            m[it - parts.begin()][j] = c;
        }
    }
    return m;
}

const DegreeTables& degree_tables(int n) {
    if (n < 0 || n > kMaxDegree) throw std::domain_error("degree_tables: degree out of range");
    static std::array<std::once_flag, kMaxDegree + 1> flags;
    static std::array<std::unique_ptr<DegreeTables>, kMaxDegree + 1> tables;
    std::call_once(flags[n], [n] {
        auto t = std::make_unique<DegreeTables>();
        t->n = n;
        t->parts = enumerate_partitions(n);
        for (size_t i = 0; i < t->parts.size(); ++i) t->index[t->parts[i]] = static_cast<int>(i);
        t->e2m = basis_matrix(Basis::e, t->parts);
        t->h2m = basis_matrix(Basis::h, t->parts);
        t->p2m = basis_matrix(Basis::p, t->parts);
        t->s2m = basis_matrix(Basis::s, t->parts);
        t->m2e = invert(t->e2m);
        t->m2h = invert(t->h2m);
        t->m2p = invert(t->p2m);
        t->m2s = invert(t->s2m);
        tables[n] = std::move(t);
    });
    return *tables[n];
}

const Mat* to_basis_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::m: return nullptr;
        case Basis::e: return &t.m2e;
        case Basis::h: return &t.m2h;
        case Basis::p: return &t.m2p;
        case Basis::s: return &t.m2s;
    }
    return nullptr;
}

const Mat* from_basis_matrix(const DegreeTables& t, Basis b) {
    switch (b) {
        case Basis::m: return nullptr;
        case Basis::e: return &t.e2m;
        case Basis::h: return &t.h2m;
        case Basis::p: return &t.p2m;
        case Basis::s: return &t.s2m;
    }
    return nullptr;
}

std::vector<QTRat> mat_vec(const Mat& m, const std::vector<QTRat>& v) {
    std::vector<QTRat> r(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
            if (m[i][j] == 0 || v[j].is_zero()) continue;
            r[i] += QTRat(m[i][j]) * v[j];
        }
    return r;
}

}  // namespace

SymFunc SymFunc::constant(QTRat c) {
    SymFunc f(0);
    f.set_coeff(Partition(), std::move(c));
    return f;
}

QTRat SymFunc::coeff(const Partition& la) const {
    auto it = coeffs_.find(la);
    return it == coeffs_.end() ? QTRat() : it->second;
}

void SymFunc::set_coeff(const Partition& la, QTRat c) {
    if (la.size() != degree_) throw std::domain_error("SymFunc: partition size != degree");
    if (c.is_zero())
        coeffs_.erase(la);
    else
        coeffs_[la] = std::move(c);
}

void SymFunc::add_coeff(const Partition& la, const QTRat& c) {
    if (la.size() != degree_) throw std::domain_error("SymFunc: partition size != degree");
    if (c.is_zero()) return;
    auto it = coeffs_.find(la);
    if (it == coeffs_.end()) {
        coeffs_.emplace(la, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
}

SymFunc SymFunc::operator-() const {
    SymFunc r = *this;
    for (auto& [la, c] : r.coeffs_) c = -c;
    return r;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (degree_ != o.degree_) throw std::domain_error("SymFunc: degree mismatch in +");
    for (const auto& [la, c] : o.coeffs_) add_coeff(la, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc& SymFunc::scale(const QTRat& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [la, v] : coeffs_) v *= c;
    return *this;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) {
    SymFunc r(f.degree() + g.degree());
    if (f.is_zero() || g.is_zero()) return r;
    for (const auto& [la, a] : f.coeffs())
        for (const auto& [mu, b] : g.coeffs()) {
            QTRat ab = a * b;
            for (const auto& [nu, c] : mono_product(la, mu)) r.add_coeff(nu, QTRat(c) * ab);
        }
    return r;
}

SymFunc SymFunc::subst_q0() const {
    SymFunc r(degree_);
    for (const auto& [la, c] : coeffs_) r.set_coeff(la, c.subst_q0());
    return r;
}

SymFunc SymFunc::subst_t0() const {
    SymFunc r(degree_);
    for (const auto& [la, c] : coeffs_) r.set_coeff(la, c.subst_t0());
    return r;
}

SymFunc SymFunc::swap_qt() const {
    SymFunc r(degree_);
    for (const auto& [la, c] : coeffs_) r.set_coeff(la, c.swap_qt());
    return r;
}

std::string SymFunc::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*m" << la.str();
    }
    return os.str();
}

SymFunc basis_element(Basis b, const Partition& la) {
    switch (b) {
        case Basis::m:
            return monomial_sf(la);
        case Basis::s:
            return schur(la);
        default: {
            SymFunc f = SymFunc::constant(QTRat(1));
            for (int part : la.parts()) {
                switch (b) {
                    case Basis::e: f = f * elementary(part); break;
                    case Basis::h: f = f * complete(part); break;
                    case Basis::p: f = f * powersum(part); break;
                    default: break;
                }
            }
            return f;
        }
    }
}

SymFunc elementary(int k) {
    if (k < 0) return SymFunc(0);
    if (k == 0) return SymFunc::constant(QTRat(1));
    SymFunc f(k);
    f.set_coeff(Partition(std::vector<int>(k, 1)), QTRat(1));
    return f;
}

SymFunc complete(int k) {
    if (k < 0) return SymFunc(0);
    if (k == 0) return SymFunc::constant(QTRat(1));
    SymFunc f(k);
    for (const Partition& la : enumerate_partitions(k)) f.set_coeff(la, QTRat(1));
    return f;
}

SymFunc powersum(int k) {
    if (k < 1) throw std::domain_error("powersum: k must be >= 1");
    SymFunc f(k);
    f.set_coeff(Partition({k}), QTRat(1));
    return f;
}

SymFunc schur(const Partition& la) {
    SymFunc f(la.size());
    for (const Partition& mu : enumerate_partitions(la.size())) {
        int k = kostka_number(la, mu);
        if (k != 0) f.set_coeff(mu, QTRat(k));
    }
    return f;
}

SymFunc monomial_sf(const Partition& la) {
    SymFunc f(la.size());
    f.set_coeff(la, QTRat(1));
    return f;
}

std::vector<QTRat> to_basis(const SymFunc& f, Basis b) {
    const DegreeTables& t = degree_tables(f.degree());
    std::vector<QTRat> mcoords(t.parts.size());
    for (const auto& [la, c] : f.coeffs()) mcoords[t.index.at(la)] = c;
    const Mat* m = to_basis_matrix(t, b);
    return m ? mat_vec(*m, mcoords) : mcoords;
}

SymFunc from_basis(Basis b, int degree, const std::vector<QTRat>& coords) {
    const DegreeTables& t = degree_tables(degree);
    if (coords.size() != t.parts.size()) throw std::domain_error("from_basis: bad coord size");
    const Mat* m = from_basis_matrix(t, b);
    std::vector<QTRat> mcoords = m ? mat_vec(*m, coords) : coords;
    SymFunc f(degree);
    for (size_t i = 0; i < mcoords.size(); ++i)
        if (!mcoords[i].is_zero()) f.set_coeff(t.parts[i], std::move(mcoords[i]));
    return f;
}

QTRat hall_inner(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero()) return QTRat();
    if (f.degree() != g.degree()) throw std::domain_error("hall_inner: degree mismatch");
    const DegreeTables& t = degree_tables(f.degree());
    std::vector<QTRat> gh = to_basis(g, Basis::h);
    QTRat acc;
    for (const auto& [la, c] : f.coeffs()) {
        const QTRat& x = gh[t.index.at(la)];
        if (!x.is_zero()) acc += c * x;
    }
    return acc;
}

SymFunc omega(const SymFunc& f) {
    if (f.is_zero()) return f;
    return pleth_transform(f, pst_minus_epsilon());
}

SymFunc skew_h(int j, const SymFunc& f) {
    if (j < 1 || j > f.degree()) throw std::domain_error("skew_h: need 1 <= j <= deg f");
    SymFunc r(f.degree() - j);
    for (const auto& [la, c] : f.coeffs()) {
        auto rest = la.with_part_removed(j);
        if (rest) r.add_coeff(*rest, c);
    }
    return r;
}

VirtualAlphabet& VirtualAlphabet::add(int sign, int qe, int te) {
    if (sign != 1 && sign != -1) throw std::domain_error("VirtualAlphabet: sign must be +-1");
    monos_.push_back({sign, qe, te});
    canonicalize();
    return *this;
}

void VirtualAlphabet::canonicalize() {
    std::map<std::pair<int, int>, int> acc;
    for (const Mono& m : monos_) acc[{m.qe, m.te}] += m.sign;
    monos_.clear();
    for (const auto& [key, mult] : acc) {
        for (int i = 0; i < std::abs(mult); ++i)
            monos_.push_back({mult > 0 ? 1 : -1, key.first, key.second});
    }
}

VirtualAlphabet VirtualAlphabet::from_poly_monomials(const QTPoly& p) {
    VirtualAlphabet a;
    for (const QTTerm& tm : p.terms()) {
        if (denominator(tm.coeff) != 1)
            throw std::domain_error("VirtualAlphabet: non-integer multiplicity");
        BigInt c = numerator(tm.coeff);
        int n = static_cast<int>(abs(c));
        for (int i = 0; i < n; ++i) a.monos_.push_back({c > 0 ? 1 : -1, tm.qe, tm.te});
    }
    a.canonicalize();
    return a;
}

VirtualAlphabet VirtualAlphabet::B(const Partition& mu) { return from_poly_monomials(B_mu(mu)); }

VirtualAlphabet VirtualAlphabet::B_minus_one(const Partition& mu) {
    return from_poly_monomials(B_mu(mu) - QTPoly(1));
}

VirtualAlphabet VirtualAlphabet::B_minus_t(const Partition& mu) {
    return from_poly_monomials(B_mu(mu) - QTPoly::t());
}

VirtualAlphabet VirtualAlphabet::MB(const Partition& mu) {
    return from_poly_monomials(M_qt() * B_mu(mu));
}

VirtualAlphabet VirtualAlphabet::q_integer(int n) { return from_poly_monomials(q_int(n)); }

VirtualAlphabet VirtualAlphabet::one_minus_t() {
    return from_poly_monomials(QTPoly(1) - QTPoly::t());
}

QTPoly VirtualAlphabet::power_sum(int k) const {
    QTPoly r;
    for (const Mono& m : monos_) r += QTPoly::monomial(m.sign, k * m.qe, k * m.te);
    return r;
}

QTRat eval_alphabet(const SymFunc& f, const VirtualAlphabet& A) {
    if (f.is_zero()) return QTRat();
    const DegreeTables& t = degree_tables(f.degree());
    std::vector<QTRat> fp = to_basis(f, Basis::p);
    QTRat acc;
    for (size_t i = 0; i < fp.size(); ++i) {
        if (fp[i].is_zero()) continue;
        QTPoly prod(1);
        for (int part : t.parts[i].parts()) prod *= A.power_sum(part);
        acc += fp[i] * QTRat(prod);
    }
    return acc;
}

SymFunc pleth_transform(const SymFunc& f, const PowerSumTransform& T) {
    if (f.is_zero()) return f;
    const DegreeTables& t = degree_tables(f.degree());
    std::vector<QTRat> fp = to_basis(f, Basis::p);
    for (size_t i = 0; i < fp.size(); ++i) {
        if (fp[i].is_zero()) continue;
        for (int part : t.parts[i].parts()) fp[i] *= T(part);
    }
    return from_basis(Basis::p, f.degree(), fp);
}

PowerSumTransform pst_identity() {
    return [](int) { return QTRat(1); };
}

PowerSumTransform pst_X_over_M() {
    return [](int k) {
        QTPoly d = (QTPoly(1) - QTPoly::q(k)) * (QTPoly(1) - QTPoly::t(k));
        return QTRat(QTPoly(1), d);
    };
}

PowerSumTransform pst_MX() {
    return [](int k) { return QTRat((QTPoly(1) - QTPoly::q(k)) * (QTPoly(1) - QTPoly::t(k))); };
}

PowerSumTransform pst_minus_epsilon() {
    return [](int k) { return QTRat(k % 2 == 1 ? 1 : -1); };
}

PowerSumTransform pst_X_qk_ratio(int k) {
    return [k](int j) {
        if (k == 0) return QTRat();
        return QTRat(QTPoly(1) - QTPoly::q(j * k), QTPoly(1) - QTPoly::q(j));
    };
}

PowerSumTransform pst_X_times(const VirtualAlphabet& Y) {
    return [Y](int k) { return QTRat(Y.power_sum(k)); };
}

PowerSumTransform pst_X_over_one_minus_q() {
    return [](int k) { return QTRat(QTPoly(1), QTPoly(1) - QTPoly::q(k)); };
}

namespace {

// Expansion in an explicit monomial alphabet, used by the finite-variable
// identity checks.
using ExpVec = std::vector<int>;
using VPoly = std::map<ExpVec, QTRat>;

void vp_add(VPoly& into, const VPoly& other) {
    for (const auto& [e, c] : other) {
        auto it = into.find(e);
        if (it == into.end())
            into.emplace(e, c);
        else
            it->second += c;
    }
    for (auto it = into.begin(); it != into.end();)
        it = it->second.is_zero() ? into.erase(it) : std::next(it);
}

VPoly vp_mul(const VPoly& a, const VPoly& b) {
    VPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            ExpVec e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            QTRat v = ca * cb;
            auto it = r.find(e);
            if (it == r.end())
                r.emplace(std::move(e), std::move(v));
            else
                it->second += v;
        }
    for (auto it = r.begin(); it != r.end();)
        it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

VPoly eval_in_monomials(const SymFunc& f, const std::vector<ExpVec>& alphabet, size_t nvars) {
    VPoly total;
    for (const auto& [la, c] : f.coeffs()) {
        if (la.length() > static_cast<int>(alphabet.size()))
            throw std::domain_error("eval_in_monomials: alphabet too small");
        std::vector<int> alpha(alphabet.size(), 0);
        for (int i = 0; i < la.length(); ++i) alpha[i] = la.parts()[i];
        std::sort(alpha.begin(), alpha.end());
        do {
            ExpVec e(nvars, 0);
            for (size_t j = 0; j < alphabet.size(); ++j)
                for (size_t v = 0; v < nvars; ++v) e[v] += alpha[j] * alphabet[j][v];
            auto it = total.find(e);
            if (it == total.end())
                total.emplace(std::move(e), c);
            else
                it->second += c;
        } while (std::next_permutation(alpha.begin(), alpha.end()));
    }
    for (auto it = total.begin(); it != total.end();)
        it = it->second.is_zero() ? total.erase(it) : std::next(it);
    return total;
}

}  // namespace

bool addition_formula_check(int n) {
    size_t nvars = 2 * static_cast<size_t>(n);
    std::vector<ExpVec> alphX, alphY, alphXplusY, alphXY;
    for (int i = 0; i < n; ++i) {
        ExpVec e(nvars, 0);
        e[i] = 1;
        alphX.push_back(e);
        ExpVec f(nvars, 0);
        f[n + i] = 1;
        alphY.push_back(f);
    }
    alphXplusY = alphX;
    alphXplusY.insert(alphXplusY.end(), alphY.begin(), alphY.end());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExpVec e(nvars, 0);
            e[i] = 1;
            e[n + j] = 1;
            alphXY.push_back(e);
        }

    // e_n[X+Y] = sum e_{n-i}[X] e_i[Y], and the h version
    for (bool use_e : {true, false}) {
        auto elem = [&](int k) { return use_e ? elementary(k) : complete(k); };
        VPoly lhs = eval_in_monomials(elem(n), alphXplusY, nvars);
        VPoly rhs;
        for (int i = 0; i <= n; ++i)
            vp_add(rhs, vp_mul(eval_in_monomials(elem(n - i), alphX, nvars),
                               eval_in_monomials(elem(i), alphY, nvars)));
        if (lhs != rhs) return false;
    }

    // h_n[XY] = sum_la s_la[X] s_la[Y] = sum_la h_la[X] m_la[Y]
    VPoly lhs = eval_in_monomials(complete(n), alphXY, nvars);
    VPoly rhs_s, rhs_hm;
    for (const Partition& la : enumerate_partitions(n)) {
        vp_add(rhs_s, vp_mul(eval_in_monomials(schur(la), alphX, nvars),
                             eval_in_monomials(schur(la), alphY, nvars)));
        vp_add(rhs_hm, vp_mul(eval_in_monomials(basis_element(Basis::h, la), alphX, nvars),
                              eval_in_monomials(monomial_sf(la), alphY, nvars)));
    }
    return lhs == rhs_s && lhs == rhs_hm;
}

} // namespace deltasq
