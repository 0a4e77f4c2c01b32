#include "deltasq/paths.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace deltasq {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::domain_error(msg);
}

bool valid_dyck_word(const std::vector<int>& a) {
    if (a.empty() || a[0] != 0) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0) return false;
        if (i > 0 && a[i] > a[i - 1] + 1) return false;
    }
    return true;
}

}  // namespace

SquarePathE::SquarePathE(std::vector<int> area_word) : a_(std::move(area_word)) {
    if (a_.empty()) return;
    require(a_[0] <= 0, "SquarePathE: first letter must be <= 0");
    for (size_t i = 1; i < a_.size(); ++i)
        require(a_[i] <= a_[i - 1] + 1, "SquarePathE: letters may rise by at most one");
    require(a_.back() >= 0, "SquarePathE: path must end with an east step");
    shift_ = -*std::min_element(a_.begin(), a_.end());
}

std::vector<int> SquarePathE::rises() const {
    std::vector<int> r;
    for (int i = 1; i < size(); ++i)
        if (is_rise(i)) r.push_back(i);
    return r;
}

std::vector<int> SquarePathE::valleys() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (is_valley(i)) r.push_back(i);
    return r;
}

std::vector<int> SquarePathE::peaks() const {
    std::vector<int> r;
    for (int i = 0; i < size(); ++i)
        if (is_peak(i)) r.push_back(i);
    return r;
}

std::string SquarePathE::step_word() const {
    // north step i starts at (i - a_i, i)
    std::string w;
    int x = 0;
    for (int i = 0; i < size(); ++i) {
        int xi = i - a_[i];
        w.append(xi - x, 'E');
        w.push_back('N');
        x = xi;
    }
    w.append(size() - x, 'E');
    return w;
}

void enumerate_square_paths(int size, bool dyck_only,
                            const std::function<void(const SquarePathE&)>& fn) {
    require(size >= 1, "enumerate_square_paths: size must be >= 1");
    std::vector<int> a(size);
    std::function<void(int)> rec = [&](int i) {
        if (i == size) {
            fn(SquarePathE(a));
            return;
        }
        int hi = i == 0 ? 0 : a[i - 1] + 1;
        // the word must be able to climb back to >= 0 by the last letter
        int lo = dyck_only ? 0 : -(size - 1 - i);
        if (i == size - 1) lo = std::max(lo, 0);
        for (int v = lo; v <= hi; ++v) {
            a[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
}

int DecoratedLabelledPath::zeros() const {
    return static_cast<int>(std::count(labels.begin(), labels.end(), 0));
}

int DecoratedLabelledPath::nonzeros() const { return path.size() - zeros(); }

int DecoratedLabelledPath::decorated_rises() const {
    return static_cast<int>(std::count(drise.begin(), drise.end(), 1));
}

bool is_valid_plsqe(const DecoratedLabelledPath& P, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int N = P.path.size();
    if (static_cast<int>(P.labels.size()) != N || static_cast<int>(P.drise.size()) != N)
        return fail("label/decoration length mismatch");
    if (N == 0) return fail("empty path");
    for (int i = 0; i < N; ++i) {
        if (P.labels[i] < 0) return fail("negative label");
        if (P.path.is_rise(i) && P.labels[i] <= P.labels[i - 1])
            return fail("labels must strictly increase in a column");
        if (P.drise[i] && !P.path.is_rise(i)) return fail("decoration on a non-rise");
    }
    if (P.path.starts_north() && P.labels[0] == 0)
        return fail("a north start must carry a nonzero label");
    int s = P.path.shift();
    bool base_nonzero = false;
    for (int i = 0; i < N; ++i)
        if (P.path.area_word()[i] == -s && P.labels[i] != 0) base_nonzero = true;
    if (!base_nonzero) return fail("no nonzero label on the base diagonal");
    return true;
}

int area(const DecoratedLabelledPath& P) {
    int s = P.path.shift();
    int acc = 0;
    for (int i = 0; i < P.path.size(); ++i)
        if (!P.drise[i]) acc += P.path.area_word()[i] + s;
    return acc;
}

int bonus_dinv(const DecoratedLabelledPath& P) {
    int acc = 0;
    for (int i = 0; i < P.path.size(); ++i)
        if (P.path.area_word()[i] < 0 && P.labels[i] != 0) ++acc;
    return acc;
}

int dinv(const DecoratedLabelledPath& P) {
    const auto& a = P.path.area_word();
    const auto& l = P.labels;
    int N = P.path.size();
    int acc = bonus_dinv(P);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (a[i] == a[j] && l[i] < l[j]) ++acc;          // primary
            else if (a[i] == a[j] + 1 && l[i] > l[j]) ++acc; // secondary
        }
    return acc;
}

std::vector<int> dinv_reading_word(const DecoratedLabelledPath& P) {
    std::vector<int> order(P.path.size());
    std::iota(order.begin(), order.end(), 0);
    const auto& a = P.path.area_word();
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a[i] < a[j]; });
    std::vector<int> word;
    word.reserve(order.size());
    for (int i : order) word.push_back(P.labels[i]);
    return word;
}

namespace {

// Shared enumeration core: per path, per decoration subset, depth-first
// label assignment with a running dinv count and exact label counts.
struct LabelledEnumerator {
    int m = 0, n = 0, k = 0;
    LabelledEnumOptions opt;
    const std::function<void(const DecoratedLabelledPath&)>* emit = nullptr;

    void run() {
        int N = m + n;
        int max_label = opt.max_label > 0 ? opt.max_label : n;
        enumerate_square_paths(N, opt.dyck_only, [&](const SquarePathE& path) {
            std::vector<int> rises = path.rises();
            if (static_cast<int>(rises.size()) < k) return;
            std::vector<int> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::vector<char> drise(N, 0);
                for (int idx : pick) drise[rises[idx]] = 1;
                int ar = 0;
                for (int i = 0; i < N; ++i)
                    if (!drise[i]) ar += path.area_word()[i] + path.shift();
                if (opt.max_area < 0 || ar <= opt.max_area) labels_dfs(path, drise, max_label);
                int pos = k - 1;
                while (pos >= 0 && pick[pos] == static_cast<int>(rises.size()) - k + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (int jx = pos + 1; jx < k; ++jx) pick[jx] = pick[jx - 1] + 1;
            }
        });
    }

    void labels_dfs(const SquarePathE& path, const std::vector<char>& drise, int max_label) {
        int N = path.size();
        std::vector<int> labels(N, -1);
        const auto& a = path.area_word();
        int s = path.shift();
        std::function<void(int, int, int, int, int)> rec = [&](int i, int zeros, int nonzeros,
                                                               int bigs, int pdinv) {
            if (i == N) {
                if (zeros != m || nonzeros != n) return;
                if (opt.exact_max_label_count >= 0 && bigs != opt.exact_max_label_count) return;
                bool base_nonzero = false;
                for (int r = 0; r < N; ++r)
                    if (a[r] == -s && labels[r] != 0) base_nonzero = true;
                if (!base_nonzero) return;
                DecoratedLabelledPath P{path, labels, drise};
                (*emit)(P);
                return;
            }
            int lo = 0;
            if (path.is_rise(i)) lo = labels[i - 1] + 1;
            if (i == 0 && path.starts_north()) lo = std::max(lo, 1);
            for (int v = lo; v <= max_label; ++v) {
                int zeros2 = zeros + (v == 0 ? 1 : 0);
                int nonzeros2 = nonzeros + (v != 0 ? 1 : 0);
                if (zeros2 > m || nonzeros2 > n) continue;
                int bigs2 = bigs + (v == max_label ? 1 : 0);
                if (opt.exact_max_label_count >= 0 && bigs2 > opt.exact_max_label_count) continue;
                int d = (a[i] < 0 && v != 0) ? 1 : 0;
                for (int j = 0; j < i; ++j) {
                    if (a[j] == a[i] && labels[j] < v) ++d;
                    else if (a[j] == a[i] + 1 && labels[j] > v) ++d;
                }
                int pdinv2 = pdinv + d;
                if (opt.max_dinv >= 0 && pdinv2 > opt.max_dinv) continue;
                labels[i] = v;
                rec(i + 1, zeros2, nonzeros2, bigs2, pdinv2);
                labels[i] = -1;
            }
        };
        rec(0, 0, 0, 0, 0);
    }
};

// Collects q^dinv t^area monomials by label-exponent vector and converts to
// monomial-basis coordinates after an explicit symmetry check.
struct GenCollector {
    int nvars = 0;
    int skip_label = -1;  // label excluded from the monomial (the big car)
    std::map<std::vector<int>, QTPoly> acc;

    void add(const DecoratedLabelledPath& P) {
        std::vector<int> e(nvars, 0);
        for (int v : P.labels) {
            if (v == 0 || v == skip_label) continue;
            ++e[v - 1];
        }
        acc[std::move(e)] += QTPoly::monomial(1, dinv(P), area(P));
    }

    SymFunc finish(int degree) {
        SymFunc f(degree);
        for (const Partition& la : enumerate_partitions(degree)) {
            if (la.length() > nvars) continue;  // exponent vectors have nvars slots
            std::vector<int> pattern(nvars, 0);
            for (int i = 0; i < la.length(); ++i) pattern[i] = la.parts()[i];
            std::sort(pattern.begin(), pattern.end());
            bool first = true;
            QTPoly value;
            do {
                auto it = acc.find(pattern);
                const QTPoly& got = it == acc.end() ? QTPoly() : it->second;
                if (first) {
                    value = got;
                    first = false;
                } else if (got != value) {
                    throw std::logic_error(
                        "gen_function: collected coefficients are not symmetric");
                }
            } while (std::next_permutation(pattern.begin(), pattern.end()));
            if (!value.is_zero()) f.set_coeff(la, QTRat(value));
        }
        return f;
    }
};

}  // namespace

void enumerate_plsqe(int m, int n, int k,
                     const std::function<void(const DecoratedLabelledPath&)>& fn,
                     const LabelledEnumOptions& opt) {
    require(m >= 0 && n >= 1, "enumerate_plsqe: need m >= 0 and n >= 1");
    require(k >= 0 && k < n, "enumerate_plsqe: need 0 <= k < n");
    LabelledEnumerator e;
    e.m = m;
    e.n = n;
    e.k = k;
    e.opt = opt;
    e.emit = &fn;
    e.run();
}

void enumerate_pld(int m, int n, int k,
                   const std::function<void(const DecoratedLabelledPath&)>& fn,
                   LabelledEnumOptions opt) {
    opt.dyck_only = true;
    enumerate_plsqe(m, n, k, fn, opt);
}

SymFunc gen_function_plsqe(int m, int n, int k, const LabelledEnumOptions& opt) {
    GenCollector col;
    col.nvars = n;
    enumerate_plsqe(m, n, k, [&](const DecoratedLabelledPath& P) { col.add(P); }, opt);
    return col.finish(n);
}

SymFunc gen_function_pld(int m, int n, int k, LabelledEnumOptions opt) {
    opt.dyck_only = true;
    return gen_function_plsqe(m, n, k, opt);
}

DecoratedLabelledPath phi(const DecoratedLabelledPath& P) {
    const auto& a = P.path.area_word();
    int N = P.path.size();
    int s = P.path.shift();
    bool has_rise = false;
    for (int i = 1; i < N; ++i) has_rise |= P.path.is_rise(i);
    if (!has_rise) return P;
    int istar = 0;
    while (a[istar] != -s) ++istar;  // breaking point: lowest touch of the base diagonal
    int r = istar + 1;
    while (r < N && !P.path.is_rise(r)) ++r;
    if (r == N) throw std::logic_error("phi: no rise after the breaking point");
    if (a[r] + s != 1) throw std::logic_error("phi: toggled rise is not at distance 1");
    DecoratedLabelledPath Q = P;
    Q.drise[r] = !Q.drise[r];
    return Q;
}

int SchroederPath::decorated_rises() const {
    return static_cast<int>(std::count(drise.begin(), drise.end(), 1));
}

int SchroederPath::decorated_peaks() const {
    return static_cast<int>(std::count(dpeak.begin(), dpeak.end(), 1));
}

int SchroederPath::zero_valleys() const {
    return static_cast<int>(std::count(zval.begin(), zval.end(), 1));
}

bool is_valid_schroeder(const SchroederPath& P, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    int N = P.path.size();
    if (static_cast<int>(P.drise.size()) != N || static_cast<int>(P.dpeak.size()) != N ||
        static_cast<int>(P.zval.size()) != N)
        return fail("flag length mismatch");
    if (N == 0) return fail("empty path");
    int s = P.path.shift();
    bool base_free = false;
    for (int i = 0; i < N; ++i) {
        if (P.drise[i] && !P.path.is_rise(i)) return fail("decorated rise on a non-rise");
        if (P.dpeak[i] && !P.path.is_peak(i)) return fail("decorated peak on a non-peak");
        if (P.zval[i] && !P.path.is_valley(i)) return fail("zero valley on a non-valley");
        if (P.dpeak[i] && P.zval[i]) return fail("decorated peak coincides with a zero valley");
        if (P.path.area_word()[i] == -s && !P.zval[i]) base_free = true;
    }
    if (!base_free) return fail("all base-diagonal steps are zero valleys");
    return true;
}

int area(const SchroederPath& P) {
    int s = P.path.shift();
    int acc = 0;
    for (int i = 0; i < P.path.size(); ++i)
        if (!P.drise[i]) acc += P.path.area_word()[i] + s;
    return acc;
}

int dinv_schroeder(const SchroederPath& P) {
    const auto& a = P.path.area_word();
    int N = P.path.size();
    int acc = 0;
    for (int i = 0; i < N; ++i)
        if (a[i] < 0 && !P.zval[i]) ++acc;  // bonus
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            if (a[i] == a[j] && !P.dpeak[i] && !P.zval[j]) ++acc;          // primary
            else if (a[i] == a[j] + 1 && !P.dpeak[j] && !P.zval[i]) ++acc; // secondary
        }
    return acc;
}

int refined_k(const SchroederPath& P) {
    int s = P.path.shift();
    int acc = 0;
    for (int i = 0; i < P.path.size(); ++i)
        if (P.path.area_word()[i] == -s && !P.zval[i]) ++acc;
    return acc;
}

DecoratedLabelledPath canonical_labelling(const SchroederPath& P) {
    int N = P.path.size();
    int n = N - P.zero_valleys();
    int d = P.decorated_peaks();
    std::vector<int> order(N);
    std::iota(order.begin(), order.end(), 0);
    const auto& a = P.path.area_word();
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a[i] < a[j]; });
    std::vector<int> labels(N, 0);
    int small = 1, big = n;
    for (int row : order) {
        if (P.zval[row]) continue;
        if (P.dpeak[row])
            labels[row] = big--;
        else
            labels[row] = small++;
    }
    if (small != n - d + 1 || big != n - d)
        throw std::logic_error("canonical_labelling: label count mismatch");
    return DecoratedLabelledPath{P.path, std::move(labels), P.drise};
}

void enumerate_sqe(int p, int n, int l, int d, const std::function<void(const SchroederPath&)>& fn,
                   const SchroederEnumOptions& opt) {
    require(n >= 1, "enumerate_sqe: need n >= 1");
    require(p >= 0 && l >= 0 && d >= 0, "enumerate_sqe: negative parameter");
    int N = n + p;
    enumerate_square_paths(N, opt.dyck_only, [&](const SquarePathE& path) {
        std::vector<int> rises = path.rises();
        std::vector<int> peaks = path.peaks();
        std::vector<int> valleys = path.valleys();
        if (static_cast<int>(rises.size()) < l || static_cast<int>(peaks.size()) < d ||
            static_cast<int>(valleys.size()) < p)
            return;
        int s = path.shift();
        std::vector<int> minima;
        for (int i = 0; i < N; ++i)
            if (path.area_word()[i] == -s) minima.push_back(i);

        auto combinations = [](const std::vector<int>& pool, int take, auto&& body) {
            if (take > static_cast<int>(pool.size())) return;
            std::vector<int> pick(take);
            std::iota(pick.begin(), pick.end(), 0);
            while (true) {
                std::vector<int> rows;
                rows.reserve(take);
                for (int idx : pick) rows.push_back(pool[idx]);
                body(rows);
                int pos = take - 1;
                while (pos >= 0 && pick[pos] == static_cast<int>(pool.size()) - take + pos) --pos;
                if (pos < 0) break;
                ++pick[pos];
                for (int jx = pos + 1; jx < take; ++jx) pick[jx] = pick[jx - 1] + 1;
            }
        };

        combinations(rises, l, [&](const std::vector<int>& dr) {
            combinations(peaks, d, [&](const std::vector<int>& dp) {
                combinations(valleys, p, [&](const std::vector<int>& zv) {
                    for (int i : zv)
                        if (std::find(dp.begin(), dp.end(), i) != dp.end()) return;
                    bool base_free = false;
                    for (int i : minima)
                        if (std::find(zv.begin(), zv.end(), i) == zv.end()) base_free = true;
                    if (!base_free) return;
                    SchroederPath P{path, std::vector<char>(N, 0), std::vector<char>(N, 0),
                                    std::vector<char>(N, 0)};
                    for (int i : dr) P.drise[i] = 1;
                    for (int i : dp) P.dpeak[i] = 1;
                    for (int i : zv) P.zval[i] = 1;
                    if (opt.k >= 0 && refined_k(P) != opt.k) return;
                    fn(P);
                });
            });
        });
    });
}

QTPoly qt_polynomial_sqe(int p, int n, int l, int d, const SchroederEnumOptions& opt) {
    QTPoly acc;
    enumerate_sqe(
        p, n, l, d,
        [&](const SchroederPath& P) { acc += QTPoly::monomial(1, dinv_schroeder(P), area(P)); },
        opt);
    return acc;
}

namespace {

bool is_contractible(const DecoratedLabelledPath& D, int i) {
    const auto& a = D.path.area_word();
    const auto& l = D.labels;
    int N = D.path.size();
    if (i >= N - 1 || a[i + 1] != a[i]) return false;
    if (i == 0) return true;
    return a[i - 1] < a[i] && l[i - 1] < l[i + 1];
}

// Row the algorithm removes next: bottom-most contractible big-car peak if
// any, else the top-most big-car peak.
int next_removal_row(const DecoratedLabelledPath& D, int big_label, bool* contractible) {
    std::vector<int> big_rows;
    for (int r = 0; r < D.path.size(); ++r)
        if (D.labels[r] == big_label) big_rows.push_back(r);
    if (big_rows.empty()) return -1;
    for (int r : big_rows)
        if (!D.path.is_peak(r)) throw std::logic_error("removal: big car off a peak");
    for (int r : big_rows)
        if (is_contractible(D, r)) {
            if (contractible) *contractible = true;
            return r;
        }
    if (contractible) *contractible = false;
    return big_rows.back();
}

}  // namespace

RemovalOutcome removal_step(const DecoratedLabelledPath& D, int peak_row) {
    require(D.path.is_dyck(), "removal_step: requires a Dyck path");
    require(dinv(D) == 0, "removal_step: requires dinv 0");
    require(peak_row >= 0 && peak_row < D.path.size(), "removal_step: row out of range");
    require(D.path.is_peak(peak_row), "removal_step: row is not a peak");
    const auto& a = D.path.area_word();
    int N = D.path.size();
    int i = peak_row;

    std::vector<int> rises = D.path.rises();
    bool killing = false;
    std::vector<int> shifted_rows;  // decorated rows after the shift, old row numbers
    for (size_t pidx = 0; pidx < rises.size(); ++pidx) {
        if (!D.drise[rises[pidx]]) continue;
        if (rises[pidx] > i) {
            shifted_rows.push_back(rises[pidx]);
        } else if (pidx == 0) {
            killing = true;  // decoration of the bottom-most rise falls off
        } else {
            shifted_rows.push_back(rises[pidx - 1]);
        }
    }

    bool contractible = is_contractible(D, i);
    std::vector<int> na;
    std::vector<int> nl;
    for (int r = 0; r < N; ++r) {
        if (r == i) continue;
        na.push_back(contractible || r < i ? a[r] : a[r] - 1);
        nl.push_back(D.labels[r]);
    }
    RemovalOutcome out;
    out.contractible = contractible;
    out.rise_killing = killing;
    if (na.empty()) {
        out.result = DecoratedLabelledPath{SquarePathE(), {}, {}};
        out.area_loss = area(D);
    } else {
        DecoratedLabelledPath E{SquarePathE(na), std::move(nl),
                                std::vector<char>(N - 1, 0)};
        for (int row : shifted_rows) E.drise[row - (row > i ? 1 : 0)] = 1;
        for (int r = 0; r < E.path.size(); ++r) {
            if (E.drise[r] && !E.path.is_rise(r))
                throw std::logic_error("removal_step: decoration landed off a rise");
            if (E.path.is_rise(r) && E.labels[r] <= E.labels[r - 1])
                throw std::logic_error("removal_step: column-strictness broken");
        }
        if (dinv(E) != 0) throw std::logic_error("removal_step: result has positive dinv");
        out.area_loss = area(D) - area(E);
        out.result = std::move(E);
    }

    // the removal accounting: non-decorated rises weakly below the peak,
    // plus the non-decorated vertical steps above it for a non-contractible one
    int expected = 0;
    for (int r : rises)
        if (r <= i && !D.drise[r]) ++expected;
    if (!contractible)
        for (int r = i + 1; r < N; ++r)
            if (!D.drise[r]) ++expected;
    if (expected != out.area_loss)
        throw std::logic_error("removal_step: loss does not match the removal accounting");
    return out;
}

RemovalTrace removal_algorithm(const DecoratedLabelledPath& D, int big_label) {
    RemovalTrace trace;
    DecoratedLabelledPath cur = D;
    bool tail_phase = false;
    while (!cur.labels.empty()) {
        bool contractible = false;
        int row = next_removal_row(cur, big_label, &contractible);
        if (row < 0) break;
        if (contractible && tail_phase)
            throw std::logic_error("removal_algorithm: contractible peak appeared after the switch");
        if (!contractible) tail_phase = true;
        RemovalOutcome out = removal_step(cur, row);
        trace.rows.push_back(row);
        trace.losses.push_back(out.area_loss);
        trace.rise_killing.push_back(out.rise_killing ? 1 : 0);
        if (!out.rise_killing) ++trace.preserving_count;
        cur = std::move(out.result);
    }
    trace.reduced = std::move(cur);
    return trace;
}

std::optional<DecoratedLabelledPath> insertion_search(const DecoratedLabelledPath& E,
                                                      int big_label, int loss,
                                                      bool rise_killing) {
    int NE = static_cast<int>(E.labels.size());
    std::vector<DecoratedLabelledPath> matches;

    auto try_candidate = [&](const std::vector<int>& na, const std::vector<int>& nl, int i) {
        if (!valid_dyck_word(na)) return;
        SquarePathE path(na);
        if (!path.is_peak(i)) return;
        // undo the decoration shift
        std::vector<int> rises = path.rises();
        std::vector<int> prefix;  // rises weakly below i
        for (int r : rises)
            if (r <= i) prefix.push_back(r);
        std::vector<char> drise(path.size(), 0);
        for (int er = 0; er < NE; ++er) {
            if (!E.drise[er]) continue;
            int orow = er < i ? er : er + 1;
            if (orow <= i) {
                auto it = std::find(prefix.begin(), prefix.end(), orow);
                if (it == prefix.end()) return;
                size_t pos = it - prefix.begin();
                if (pos + 1 >= prefix.size()) return;
                drise[prefix[pos + 1]] = 1;
            } else {
                if (!path.is_rise(orow)) return;
                drise[orow] = 1;
            }
        }
        if (rise_killing) {
            if (rises.empty() || rises[0] > i || drise[rises[0]]) return;
            drise[rises[0]] = 1;
        }
        DecoratedLabelledPath cand{path, nl, drise};
        if (!is_valid_plsqe(cand)) return;
        if (dinv(cand) != 0) return;
        bool contractible = false;
        if (next_removal_row(cand, big_label, &contractible) != i) return;
        RemovalOutcome out = removal_step(cand, i);
        bool same = NE == 0 ? out.result.labels.empty() : out.result == E;
        if (same && out.area_loss == loss && out.rise_killing == rise_killing)
            matches.push_back(std::move(cand));
    };

    for (int i = 0; i <= NE; ++i) {
        const auto& ea = E.path.area_word();
        // contract-style insertion duplicates the letter at position i
        if (i < NE) {
            std::vector<int> na;
            std::vector<int> nl;
            for (int r = 0; r < NE; ++r) {
                if (r == i) {
                    na.push_back(ea[i]);
                    nl.push_back(big_label);
                }
                na.push_back(ea[r]);
                nl.push_back(E.labels[r]);
            }
            try_candidate(na, nl, i);
        }
        // tail-style insertion pushes the letters above i up one diagonal
        int hi = i == 0 ? 0 : ea[i - 1] + 1;
        for (int v = 0; v <= hi; ++v) {
            std::vector<int> na;
            std::vector<int> nl;
            for (int r = 0; r < NE; ++r) {
                if (r == i) {
                    na.push_back(v);
                    nl.push_back(big_label);
                }
                na.push_back(r >= i ? ea[r] + 1 : ea[r]);
                nl.push_back(E.labels[r]);
            }
            if (i == NE) {
                na.push_back(v);
                nl.push_back(big_label);
            }
            try_candidate(na, nl, i);
        }
    }
    if (matches.empty()) return std::nullopt;
    if (matches.size() > 1) throw std::logic_error("insertion_search: ambiguous inverse");
    return matches[0];
}

SymFunc hperp_combinatorial(int j, int n, int k) {
    require(j >= 1 && j <= n, "hperp_combinatorial: need 1 <= j <= n");
    require(k >= 0 && k < n, "hperp_combinatorial: need 0 <= k < n");
    int big = n - j + 1;
    GenCollector col;
    col.nvars = n - j;
    col.skip_label = big;
    LabelledEnumOptions opt;
    opt.dyck_only = true;
    opt.max_dinv = 0;
    opt.max_label = big;
    opt.exact_max_label_count = j;
    enumerate_plsqe(
        0, n, k,
        [&](const DecoratedLabelledPath& P) {
            for (int r = 0; r < P.path.size(); ++r)
                if (P.labels[r] == big && !P.path.is_peak(r))
                    throw std::logic_error("hperp_combinatorial: big car off a peak");
            col.add(P);
        },
        opt);
    return col.finish(n - j);
}

} // namespace deltasq
