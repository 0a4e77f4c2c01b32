#pragma once

#include "deltasq/macdonald.hpp"
#include "deltasq/paths.hpp"

#include <string>
#include <vector>

namespace deltasq {

// ---------------------------------------------------------------------------
// The F and S families. Parameters follow (n, k; p) with decorations (d, l).
// Out-of-domain parameters (negative entries, k > n, n - k - l < 0, d > n + p)
// evaluate to zero. All entries are genuine polynomials.
// ---------------------------------------------------------------------------

// t^{n-k-l} < Delta_{h_{n-k-l}} Delta_{e_l} e_{n+p-d}[X (1-q^k)/(1-q)], e_p h_{n-d} >
QTPoly f_direct(int n, int k, int p, int d, int l);

// The double-sum recursion with its initial conditions, memoized.
QTPoly f_recursive(int n, int k, int p, int d, int l);

// The evaluation formula through Pi^{-1} nabla E_{n-l,k} at X = M B_gamma,
// summed over gamma of n+p-d cells. (Requires n+p > d; the formula's
// gamma-sum degenerates at n+p = d.)
QTPoly f_via_nabla_enk(int n, int k, int p, int d, int l);

// S = ([n]_q/[k]_q) F, via the S recursion (memoized) and via exact division.
QTPoly s_recursive(int n, int k, int p, int d, int l);
QTPoly s_from_f(int n, int k, int p, int d, int l);  // hard error on a remainder

// ---------------------------------------------------------------------------
// Named symmetric functions.
// ---------------------------------------------------------------------------

// Delta_{h_m} Delta'_{e_{n-k-1}} e_n; every coefficient is checked polynomial.
SymFunc sf_gen_delta(int m, int n, int k);

// ([n-k]_t/[n]_t) Delta_{h_m} Delta_{e_{n-k}} omega(p_n); polynomiality after
// the t-ratio is checked and failure raises.
SymFunc sf_gen_delta_square(int m, int n, int k);

// ---------------------------------------------------------------------------
// Verification reports.
// ---------------------------------------------------------------------------

struct VerificationReport {
    std::string statement;
    std::string params;
    bool equal = false;
    std::string witness;  // first differing coefficient; notes when equal
    double ms = 0.0;
};

// Compare helpers producing a witness string on the first difference.
bool compare_symfunc(const SymFunc& a, const SymFunc& b, std::string* witness);
bool compare_qtpoly(const QTPoly& a, const QTPoly& b, std::string* witness);

// Grid parameters for the statement runners; -1 means "range over the
// statement's default grid".
struct StatementParams {
    int m = -1;
    int n = -1;
    int k = -1;
    int p = -1;
    int d = -1;
    int l = -1;
};

using StatementRunner = std::vector<VerificationReport> (*)(const StatementParams&);

// Registered statement ids: gen-delta, gen-delta-square, schroeder, f-triple,
// s-sum, main-thm, invo-sums, appendix-q0, q0-delta-square, t0-k0.
std::vector<std::string> statement_ids();
StatementRunner find_statement(const std::string& id);  // nullptr when unknown

std::vector<VerificationReport> verify_gen_delta(const StatementParams& P);
std::vector<VerificationReport> verify_gen_delta_square(const StatementParams& P);
std::vector<VerificationReport> verify_schroeder(const StatementParams& P);
std::vector<VerificationReport> verify_f_triple(const StatementParams& P);
std::vector<VerificationReport> verify_s_sum(const StatementParams& P);
std::vector<VerificationReport> verify_main_thm(const StatementParams& P);
std::vector<VerificationReport> verify_invo_sums(const StatementParams& P);
std::vector<VerificationReport> verify_appendix_q0(const StatementParams& P);
std::vector<VerificationReport> verify_q0_delta_square(const StatementParams& P);
std::vector<VerificationReport> verify_t0_k0(const StatementParams& P);

} // namespace deltasq
