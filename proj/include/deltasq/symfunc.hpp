#pragma once

#include "deltasq/partition.hpp"
#include "deltasq/qt_rat.hpp"

#include <functional>
#include <map>
#include <vector>

namespace deltasq {

enum class Basis { m, e, h, p, s };

// Homogeneous symmetric function of a fixed degree, stored in the monomial
// basis. Keys are partitions of the degree; zero coefficients are dropped.
// Degree-n truncation is exact in >= n variables, so no alphabet size is
// ever materialized.
class SymFunc {
public:
    SymFunc() = default;  // zero of degree 0
    explicit SymFunc(int degree) : degree_(degree) {}

    static SymFunc constant(QTRat c);  // degree 0

    int degree() const { return degree_; }
    const std::map<Partition, QTRat>& coeffs() const { return coeffs_; }
    QTRat coeff(const Partition& la) const;
    void set_coeff(const Partition& la, QTRat c);
    void add_coeff(const Partition& la, const QTRat& c);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { a += b; return a; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { a -= b; return a; }
    SymFunc& scale(const QTRat& c);
    friend SymFunc operator*(const QTRat& c, SymFunc f) { f.scale(c); return f; }
    friend SymFunc operator*(const SymFunc& f, const SymFunc& g);  // graded product

    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    SymFunc subst_q0() const;
    SymFunc subst_t0() const;
    SymFunc swap_qt() const;

    std::string str() const;

private:
    int degree_ = 0;
    std::map<Partition, QTRat> coeffs_;
};

// Basis elements expanded into monomial coordinates.
SymFunc basis_element(Basis b, const Partition& la);
SymFunc elementary(int k);   // e_k; 1 for k == 0; zero function for k < 0
SymFunc complete(int k);     // h_k
SymFunc powersum(int k);     // p_k, k >= 1
SymFunc schur(const Partition& la);
SymFunc monomial_sf(const Partition& la);

// Coordinates of f in basis b (canonical partition order of f.degree()).
std::vector<QTRat> to_basis(const SymFunc& f, Basis b);
SymFunc from_basis(Basis b, int degree, const std::vector<QTRat>& coords);

// Hall scalar product (Schur functions orthonormal).
QTRat hall_inner(const SymFunc& f, const SymFunc& g);

// The fundamental involution: e_k -> h_k, s_la -> s_la', p_k -> (-1)^{k-1} p_k.
SymFunc omega(const SymFunc& f);

// h_j^perp f, the Hall adjoint of multiplication by h_j, computed as the
// coefficient of y^j in f[X+y]. Requires 1 <= j <= deg f.
SymFunc skew_h(int j, const SymFunc& f);

// Finite formal alphabet: a signed sum of monomials q^a t^b.
class VirtualAlphabet {
public:
    struct Mono {
        int sign = 1;  // +1 or -1
        int qe = 0;
        int te = 0;
    };

    VirtualAlphabet() = default;
    VirtualAlphabet& add(int sign, int qe, int te);

    static VirtualAlphabet from_poly_monomials(const QTPoly& p);  // each monomial, sign from coeff
    static VirtualAlphabet B(const Partition& mu);
    static VirtualAlphabet B_minus_one(const Partition& mu);
    static VirtualAlphabet B_minus_t(const Partition& mu);
    static VirtualAlphabet MB(const Partition& mu);  // M * B_mu expanded
    static VirtualAlphabet q_integer(int n);         // [n]_q
    static VirtualAlphabet one_minus_t();

    const std::vector<Mono>& monomials() const { return monos_; }
    QTPoly power_sum(int k) const;  // p_k[A]

private:
    std::vector<Mono> monos_;
    void canonicalize();
};

// Plethystic evaluation f[A].
QTRat eval_alphabet(const SymFunc& f, const VirtualAlphabet& A);

// Multiplier applied to each power sum p_k; must be defined for 1 <= k <= deg f.
using PowerSumTransform = std::function<QTRat(int)>;

SymFunc pleth_transform(const SymFunc& f, const PowerSumTransform& T);

// Ready-made transforms.
PowerSumTransform pst_identity();
PowerSumTransform pst_X_over_M();          // p_k -> p_k / ((1-q^k)(1-t^k))
PowerSumTransform pst_MX();                // p_k -> (1-q^k)(1-t^k) p_k
PowerSumTransform pst_minus_epsilon();     // f[-eps X] = omega f
PowerSumTransform pst_X_qk_ratio(int k);   // p_j -> p_j (1-q^{jk})/(1-q^j)
PowerSumTransform pst_X_times(const VirtualAlphabet& Y);  // p_k -> p_k * p_k[Y]
PowerSumTransform pst_X_over_one_minus_q();  // p_k -> p_k / (1-q^k)

// Validates e_n[X+Y] / h_n[X+Y] addition formulas and both Cauchy identities
// by expansion in finite variable sets.
bool addition_formula_check(int n);

} // namespace deltasq
