#pragma once

#include "deltasq/symfunc.hpp"

#include <functional>
#include <optional>

namespace deltasq {

// Square path ending east, canonically encoded by its area word: entry i is
// the index of the diagonal y = x + a_i the i-th north step starts from
// (rows 0-based here). Valid words have a_0 <= 0, a_{i+1} <= a_i + 1 and
// a_{N-1} >= 0 (the path must end with an east step). The empty path is
// allowed; it is the terminal object of the removal algorithm.
class SquarePathE {
public:
    SquarePathE() = default;
    explicit SquarePathE(std::vector<int> area_word);

    int size() const { return static_cast<int>(a_.size()); }
    const std::vector<int>& area_word() const { return a_; }
    int shift() const { return shift_; }
    bool starts_north() const { return !a_.empty() && a_[0] == 0; }
    bool is_dyck() const { return shift_ == 0; }

    bool is_rise(int i) const { return i > 0 && a_[i] > a_[i - 1]; }
    bool is_valley(int i) const { return i == 0 ? a_[0] < 0 : a_[i] <= a_[i - 1]; }
    bool is_peak(int i) const { return i == size() - 1 || a_[i + 1] <= a_[i]; }
    std::vector<int> rises() const;
    std::vector<int> valleys() const;
    std::vector<int> peaks() const;

    std::string step_word() const;  // letters N and E

    friend bool operator==(const SquarePathE& x, const SquarePathE& y) { return x.a_ == y.a_; }
    friend bool operator!=(const SquarePathE& x, const SquarePathE& y) { return !(x == y); }

private:
    std::vector<int> a_;
    int shift_ = 0;
};

// All square paths ending east of the given size, in ascending lex order of
// the area word.
void enumerate_square_paths(int size, bool dyck_only,
                            const std::function<void(const SquarePathE&)>& fn);

// Partially labelled decorated path: labels per row (0 = zero label),
// decorated-rise flags per row.
struct DecoratedLabelledPath {
    SquarePathE path;
    std::vector<int> labels;
    std::vector<char> drise;

    int zeros() const;
    int nonzeros() const;
    int decorated_rises() const;

    friend bool operator==(const DecoratedLabelledPath& x, const DecoratedLabelledPath& y) {
        return x.path == y.path && x.labels == y.labels && x.drise == y.drise;
    }
};

// Structural validity for the PLSQE family (column-strictness, zero rules,
// nonzero label on the base diagonal, decorations on rises).
bool is_valid_plsqe(const DecoratedLabelledPath& P, std::string* why = nullptr);

int area(const DecoratedLabelledPath& P);
int dinv(const DecoratedLabelledPath& P);
int bonus_dinv(const DecoratedLabelledPath& P);
std::vector<int> dinv_reading_word(const DecoratedLabelledPath& P);

struct LabelledEnumOptions {
    bool dyck_only = false;
    int max_area = -1;                // -1 = unbounded
    int max_dinv = -1;                // -1 = unbounded
    int max_label = -1;               // default: n
    int exact_max_label_count = -1;   // require this many labels equal to max_label
};

// Streams every element of PLSQE(m,n)^{*k} (or PLD with dyck_only), paths in
// lex order of area word, then decorations lex, then labels lex.
void enumerate_plsqe(int m, int n, int k,
                     const std::function<void(const DecoratedLabelledPath&)>& fn,
                     const LabelledEnumOptions& opt = {});
void enumerate_pld(int m, int n, int k,
                   const std::function<void(const DecoratedLabelledPath&)>& fn,
                   LabelledEnumOptions opt = {});

// sum q^dinv t^area x^P collected into monomial coordinates. Fails hard if
// the collected coefficients are not symmetric across exponent rearrangements.
SymFunc gen_function_plsqe(int m, int n, int k, const LabelledEnumOptions& opt = {});
SymFunc gen_function_pld(int m, int n, int k, LabelledEnumOptions opt = {});

// The decoration-toggling involution: toggles the first rise after the
// breaking point; identity on rise-free paths.
DecoratedLabelledPath phi(const DecoratedLabelledPath& P);

// Decorated square path of the Schroeder family: decorated rises, decorated
// peaks, zero valleys.
struct SchroederPath {
    SquarePathE path;
    std::vector<char> drise;
    std::vector<char> dpeak;
    std::vector<char> zval;

    int decorated_rises() const;
    int decorated_peaks() const;
    int zero_valleys() const;

    friend bool operator==(const SchroederPath& x, const SchroederPath& y) {
        return x.path == y.path && x.drise == y.drise && x.dpeak == y.dpeak && x.zval == y.zval;
    }
};

bool is_valid_schroeder(const SchroederPath& P, std::string* why = nullptr);
int area(const SchroederPath& P);
int dinv_schroeder(const SchroederPath& P);
// #(non-zero-valley letters of minimal height), the refinement parameter.
int refined_k(const SchroederPath& P);
// The partially labelled square path whose reading word shuffles the zeros,
// 1..n-d increasing and n..n-d+1 decreasing on the decorated peaks.
DecoratedLabelledPath canonical_labelling(const SchroederPath& P);

struct SchroederEnumOptions {
    int k = -1;             // -1 = no refinement
    bool dyck_only = false; // restrict to Dyck paths (the DD / DDd families)
};

void enumerate_sqe(int p, int n, int l, int d, const std::function<void(const SchroederPath&)>& fn,
                   const SchroederEnumOptions& opt = {});
QTPoly qt_polynomial_sqe(int p, int n, int l, int d, const SchroederEnumOptions& opt = {});

// One removal at a peak carrying a big car, on a dinv-0 labelled Dyck path:
// decorations weakly below shift down one rise (rise-killing when one falls
// off), then the north step is deleted together with the following east
// step (contractible peak) or the last east step of the path.
struct RemovalOutcome {
    DecoratedLabelledPath result;
    int area_loss = 0;
    bool rise_killing = false;
    bool contractible = false;
};

RemovalOutcome removal_step(const DecoratedLabelledPath& D, int peak_row);

// Full removal of all big cars: bottom-most contractible first until none is
// left, then top-most non-contractible.
struct RemovalTrace {
    DecoratedLabelledPath reduced;
    std::vector<int> rows;           // peak rows in removal order
    std::vector<int> losses;         // area losses in removal order
    std::vector<char> rise_killing;  // mode per step
    int preserving_count = 0;
};

RemovalTrace removal_algorithm(const DecoratedLabelledPath& D, int big_label);

// Inverse of one removal by bounded search: the unique object whose next
// algorithmic removal of big_label reproduces (E, loss, mode); empty when
// none exists.
std::optional<DecoratedLabelledPath> insertion_search(const DecoratedLabelledPath& E,
                                                      int big_label, int loss,
                                                      bool rise_killing);

// h_j^perp of the q=0 Dyck generating function, computed combinatorially:
// dinv-0 elements of PLD(0,n)^{*k} over the alphabet {1..n-j} plus j copies
// of a largest letter, weighted t^area on the small letters.
SymFunc hperp_combinatorial(int j, int n, int k);

} // namespace deltasq
