#include "deltasq/macdonald.hpp"

#include "deltasq/q_analogues.hpp"
#include "deltasq/serialization.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <sstream>

namespace deltasq {

namespace {

std::atomic<int> g_threads{1};
std::mutex g_cache_dir_mx;
std::string g_cache_dir;

struct ReadingCell {
    int col = 0;
    int row = 0;
    int below = -1;    // reading index of the cell directly below, -1 in bottom row
    int arm = 0;
    int leg = 0;
};

// Reading order: rows top to bottom, left to right within a row.
std::vector<ReadingCell> reading_cells(const Partition& mu) {
    std::vector<ReadingCell> cells;
    std::map<std::pair<int, int>, int> pos;
    for (int row = mu.length() - 1; row >= 0; --row)
        for (int col = 0; col < mu.parts()[row]; ++col) {
            ReadingCell c;
            c.col = col;
            c.row = row;
            CellStats st = mu.cell_stats({col, row});
            c.arm = st.arm;
            c.leg = st.leg;
            pos[{col, row}] = static_cast<int>(cells.size());
            cells.push_back(c);
        }
    for (auto& c : cells)
        if (c.row > 0) c.below = pos.at({c.col, c.row - 1});
    return cells;
}

// Attacking pairs (u,v), u before v in reading order: same row with u left
// of v, or v one row below and strictly left of u.
std::vector<std::pair<int, int>> attack_pairs(const std::vector<ReadingCell>& cells) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t u = 0; u < cells.size(); ++u)
        for (size_t v = u + 1; v < cells.size(); ++v) {
            if (cells[u].row == cells[v].row) pairs.emplace_back(u, v);
            else if (cells[v].row == cells[u].row - 1 && cells[v].col < cells[u].col)
                pairs.emplace_back(u, v);
        }
    return pairs;
}

// q^inv t^maj monomial-basis expansion of H_mu by fillings with entries
// bounded by |mu|, which is exact for the degree-|mu| truncation.
SymFunc htilde_by_fillings(const Partition& mu) {
    int n = mu.size();
    SymFunc f(n);
    if (n == 0) {
        f.set_coeff(Partition(), QTRat(1));
        return f;
    }
    auto cells = reading_cells(mu);
    auto attacks = attack_pairs(cells);
    for (const Partition& la : enumerate_partitions(n)) {
        std::vector<int> values;
        for (int i = 0; i < la.length(); ++i)
            values.insert(values.end(), la.parts()[i], i + 1);
        std::sort(values.begin(), values.end());
        QTPoly coeff;
        do {
            int maj = 0, inv = 0, armsum = 0;
            for (size_t u = 0; u < cells.size(); ++u) {
                if (cells[u].below >= 0 && values[u] > values[cells[u].below]) {
                    maj += cells[u].leg + 1;
                    armsum += cells[u].arm;
                }
            }
            for (const auto& [u, v] : attacks)
                if (values[u] > values[v]) ++inv;
            inv -= armsum;
            if (inv < 0) throw std::logic_error("htilde_by_fillings: negative inv");
            coeff += QTPoly::monomial(1, inv, maj);
        } while (std::next_permutation(values.begin(), values.end()));
        if (!coeff.is_zero()) f.set_coeff(la, QTRat(coeff));
    }
    return f;
}

// Star pairing in power-sum coordinates:
// <f,g>_* = sum_la z_la prod_i (-1)^{la_i-1}(1-q^{la_i})(1-t^{la_i}) f^p_la g^p_la.
QTRat star_inner_pcoords(const std::vector<QTRat>& fp, const std::vector<QTRat>& gp, int degree) {
    const auto parts = enumerate_partitions(degree);
    QTRat acc;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (fp[i].is_zero() || gp[i].is_zero()) continue;
        QTPoly factor(Rational(z_lambda(parts[i])));
        for (int part : parts[i].parts()) {
            QTPoly m = (QTPoly(1) - QTPoly::q(part)) * (QTPoly(1) - QTPoly::t(part));
            if (part % 2 == 0) m = -m;
            factor *= m;
        }
        acc += fp[i] * gp[i] * QTRat(factor);
    }
    return acc;
}

}  // namespace

void set_parallelism(int threads) {
    g_threads.store(std::max(1, threads));
}

int parallelism() { return g_threads.load(); }

void set_cache_dir(const std::string& dir) {
    std::lock_guard lock(g_cache_dir_mx);
    g_cache_dir = dir;
}

std::string cache_dir() {
    std::lock_guard lock(g_cache_dir_mx);
    return g_cache_dir;
}

MacdonaldBasis::MacdonaldBasis(int degree) : degree_(degree) {
    parts_ = enumerate_partitions(degree);
    table_.resize(parts_.size());
    int workers = std::min<int>(parallelism(), static_cast<int>(parts_.size()));
    if (workers > 1) {
        std::atomic<size_t> next{0};
        std::vector<std::future<void>> jobs;
        for (int w = 0; w < workers; ++w)
            jobs.push_back(std::async(std::launch::async, [&] {
                size_t i;
                while ((i = next.fetch_add(1)) < parts_.size())
                    table_[i] = htilde_by_fillings(parts_[i]);
            }));
        for (auto& j : jobs) j.get();
    } else {
        for (size_t i = 0; i < parts_.size(); ++i) table_[i] = htilde_by_fillings(parts_[i]);
    }
    finish();
}

MacdonaldBasis MacdonaldBasis::from_table(int degree, std::vector<SymFunc> table) {
    MacdonaldBasis b;
    b.degree_ = degree;
    b.parts_ = enumerate_partitions(degree);
    if (table.size() != b.parts_.size())
        throw std::domain_error("MacdonaldBasis: wrong table size");
    b.table_ = std::move(table);
    b.finish();
    return b;
}

void MacdonaldBasis::finish() {
    pco_.resize(table_.size());
    for (size_t i = 0; i < table_.size(); ++i) pco_[i] = to_basis(table_[i], Basis::p);
}

const SymFunc& MacdonaldBasis::htilde(const Partition& mu) const {
    auto it = std::find(parts_.begin(), parts_.end(), mu);
    if (it == parts_.end()) throw std::domain_error("htilde: partition of wrong size");
    return table_[it - parts_.begin()];
}

const std::vector<QTRat>& MacdonaldBasis::htilde_pcoords(const Partition& mu) const {
    auto it = std::find(parts_.begin(), parts_.end(), mu);
    if (it == parts_.end()) throw std::domain_error("htilde_pcoords: partition of wrong size");
    return pco_[it - parts_.begin()];
}

bool MacdonaldBasis::validate_orthogonality(bool full, std::string* detail) const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        for (size_t j = full ? 0 : i; j <= i; ++j) {
            QTRat v = star_inner_pcoords(pco_[i], pco_[j], degree_);
            QTRat expect = i == j ? QTRat(w_mu(parts_[i])) : QTRat();
            if (v != expect) {
                if (detail)
                    *detail = "orthogonality fails at " + parts_[i].str() + ", " + parts_[j].str();
                return false;
            }
        }
    }
    return true;
}

namespace {

std::string cache_file_path(const std::string& dir, int degree) {
    return dir + "/htilde_deg" + std::to_string(degree) + ".json";
}

constexpr int kCacheFormatVersion = 1;

void write_cache_file(const std::string& dir, const MacdonaldBasis& basis) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json entries = nlohmann::json::array();
    for (const Partition& mu : basis.partitions()) {
        entries.push_back({{"partition", to_json(mu)},
                           {"symfunc", to_json(basis.htilde(mu))},
                           {"integrity", to_json(QTRat(w_mu(mu)))}});
    }
    nlohmann::json doc{{"format_version", kCacheFormatVersion},
                       {"degree", basis.degree()},
                       {"entries", entries}};
    std::ofstream out(cache_file_path(dir, basis.degree()));
    out << doc.dump(1) << "\n";
}

// Loads and fully validates one degree; returns nullptr with a detail
// message when the file is missing or fails validation.
std::unique_ptr<MacdonaldBasis> load_cache_file(const std::string& dir, int degree,
                                                std::string* detail) {
    std::ifstream in(cache_file_path(dir, degree));
    if (!in) {
        if (detail) *detail = "missing";
        return nullptr;
    }
    nlohmann::json doc;
    try {
        in >> doc;
        if (doc.at("format_version").get<int>() != kCacheFormatVersion) {
            if (detail) *detail = "format version mismatch";
            return nullptr;
        }
        auto parts = enumerate_partitions(degree);
        std::vector<SymFunc> table(parts.size());
        std::vector<bool> seen(parts.size(), false);
        for (const auto& entry : doc.at("entries")) {
            Partition mu = partition_from_json(entry.at("partition"));
            auto it = std::find(parts.begin(), parts.end(), mu);
            if (it == parts.end()) {
                if (detail) *detail = "unexpected partition " + mu.str();
                return nullptr;
            }
            size_t idx = it - parts.begin();
            table[idx] = symfunc_from_json(entry.at("symfunc"));
            seen[idx] = true;
            QTRat integrity = qtrat_from_json(entry.at("integrity"));
            if (integrity != QTRat(w_mu(mu))) {
                if (detail) *detail = "integrity mismatch at " + mu.str();
                return nullptr;
            }
        }
        for (size_t i = 0; i < parts.size(); ++i)
            if (!seen[i]) {
                if (detail) *detail = "missing partition " + parts[i].str();
                return nullptr;
            }
        auto basis = std::make_unique<MacdonaldBasis>(
            MacdonaldBasis::from_table(degree, std::move(table)));
        std::string orth_detail;
        if (!basis->validate_orthogonality(true, &orth_detail)) {
            if (detail) *detail = orth_detail;
            return nullptr;
        }
        return basis;
    } catch (const std::exception& e) {
        if (detail) *detail = std::string("parse error: ") + e.what();
        return nullptr;
    }
}

}  // namespace

const MacdonaldBasis& macdonald_basis(int degree) {
    if (degree < 0 || degree > kMacdonaldDegreeBound)
        throw std::domain_error("macdonald_basis: degree bound exceeded");
    static std::mutex mx;
    static std::map<int, std::unique_ptr<MacdonaldBasis>> bases;
    std::lock_guard lock(mx);
    auto it = bases.find(degree);
    if (it != bases.end()) return *it->second;
    std::string dir = cache_dir();
    if (!dir.empty()) {
        std::string detail;
        if (auto loaded = load_cache_file(dir, degree, &detail)) {
            return *bases.emplace(degree, std::move(loaded)).first->second;
        }
    }
    return *bases.emplace(degree, std::make_unique<MacdonaldBasis>(degree)).first->second;
}

SymFunc htilde(const Partition& mu) { return macdonald_basis(mu.size()).htilde(mu); }

QTRat star_inner(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero()) return QTRat();
    if (f.degree() != g.degree()) throw std::domain_error("star_inner: degree mismatch");
    return star_inner_pcoords(to_basis(f, Basis::p), to_basis(g, Basis::p), f.degree());
}

DeltaExpansion macdonald_expand(const SymFunc& f) {
    DeltaExpansion e;
    e.degree = f.degree();
    if (f.is_zero()) return e;
    const MacdonaldBasis& basis = macdonald_basis(f.degree());
    std::vector<QTRat> fp = to_basis(f, Basis::p);
    for (const Partition& mu : basis.partitions()) {
        QTRat c = star_inner_pcoords(fp, basis.htilde_pcoords(mu), f.degree()) / QTRat(w_mu(mu));
        if (!c.is_zero()) e.coeffs.emplace(mu, std::move(c));
    }
    return e;
}

SymFunc reconstruct(const DeltaExpansion& e) {
    const MacdonaldBasis& basis = macdonald_basis(e.degree);
    SymFunc f(e.degree);
    for (const auto& [mu, c] : e.coeffs) {
        SymFunc term = basis.htilde(mu);
        term.scale(c);
        f += term;
    }
    return f;
}

SymFunc delta_op(EigenFamily fam, int k, const SymFunc& g, bool primed) {
    if (k < 0) return SymFunc(g.degree());
    if (k == 0) return g;  // e_0 = h_0 = 1
    DeltaExpansion e = macdonald_expand(g);
    SymFunc fk = fam == EigenFamily::e ? elementary(k) : complete(k);
    for (auto& [mu, c] : e.coeffs) {
        VirtualAlphabet A =
            primed ? VirtualAlphabet::B_minus_one(mu) : VirtualAlphabet::B(mu);
        c *= eval_alphabet(fk, A);
    }
    return reconstruct(e);
}

SymFunc nabla(const SymFunc& g) {
    DeltaExpansion e = macdonald_expand(g);
    for (auto& [mu, c] : e.coeffs) c *= QTRat(T_mu(mu));
    return reconstruct(e);
}

SymFunc pi_op(const SymFunc& g, bool inverse) {
    DeltaExpansion e = macdonald_expand(g);
    for (auto& [mu, c] : e.coeffs) {
        QTRat pi = QTRat(Pi_mu(mu));
        c = inverse ? c / pi : c * pi;
    }
    return reconstruct(e);
}

std::map<Partition, QTRat> pieri_c_all(int k, const Partition& mu) {
    if (k < 1) throw std::domain_error("pieri_c_all: k must be >= 1");
    if (mu.size() < k) throw std::domain_error("pieri_c_all: k exceeds |mu|");
    DeltaExpansion e = macdonald_expand(skew_h(k, htilde(mu)));
    return e.coeffs;
}

std::map<Partition, QTRat> pieri_d_all(int k, const Partition& nu) {
    if (k < 1) throw std::domain_error("pieri_d_all: k must be >= 1");
    SymFunc ek_xm = pleth_transform(elementary(k), pst_X_over_M());
    DeltaExpansion e = macdonald_expand(ek_xm * htilde(nu));
    return e.coeffs;
}

QTRat pieri_c(int k, const Partition& mu, const Partition& nu) {
    if (!mu.contains(nu) || mu.size() != nu.size() + k)
        throw std::domain_error("pieri_c: nu is not contained in mu with k cells removed");
    auto all = pieri_c_all(k, mu);
    auto it = all.find(nu);
    return it == all.end() ? QTRat() : it->second;
}

QTRat pieri_d(int k, const Partition& mu, const Partition& nu) {
    if (!mu.contains(nu) || mu.size() != nu.size() + k)
        throw std::domain_error("pieri_d: nu is not contained in mu with k cells added");
    auto all = pieri_d_all(k, nu);
    auto it = all.find(mu);
    return it == all.end() ? QTRat() : it->second;
}

namespace {

// Solves the z-triangular system of the E_{n,k} definition; the local
// variable z is a plain coefficient index here and never escapes.
std::vector<SymFunc> enk_family(int n) {
    const auto parts = enumerate_partitions(n);
    std::vector<QTRat> ep = to_basis(elementary(n), Basis::p);
    // lhs[d] = p-coordinates of [z^d] e_n[X (1-z)/(1-q)]
    std::vector<std::vector<QTRat>> lhs(n + 1, std::vector<QTRat>(parts.size()));
    for (size_t i = 0; i < parts.size(); ++i) {
        if (ep[i].is_zero()) continue;
        std::vector<Rational> zpoly{Rational(1)};  // prod_j (1 - z^{la_j})
        QTPoly qden(1);
        for (int part : parts[i].parts()) {
            std::vector<Rational> next(zpoly.size() + part, Rational(0));
            for (size_t d = 0; d < zpoly.size(); ++d) {
                next[d] += zpoly[d];
                next[d + part] -= zpoly[d];
            }
            zpoly = std::move(next);
            qden *= QTPoly(1) - QTPoly::q(part);
        }
        QTRat base = ep[i] / QTRat(qden);
        for (size_t d = 0; d < zpoly.size() && d <= static_cast<size_t>(n); ++d)
            if (zpoly[d] != 0) lhs[d][i] += QTRat(zpoly[d]) * base;
    }
    // weight[d][k] = [z^d] (z;q)_k / (q;q)_k = (-1)^d q^binom(d,2) qbinom(k,d) / (q;q)_k
    auto weight = [](int d, int k) {
        QTPoly num = q_binomial(k, d) * QTPoly::q(static_cast<int>(int_binomial(d, 2)));
        if (d % 2 == 1) num = -num;
        return QTRat(num, q_pochhammer(QTPoly::q(), k));
    };
    std::vector<std::vector<QTRat>> E(n + 1, std::vector<QTRat>(parts.size()));
    for (int d = n; d >= 1; --d) {
        std::vector<QTRat> rhs = lhs[d];
        for (int k = d + 1; k <= n; ++k) {
            QTRat w = weight(d, k);
            if (w.is_zero()) continue;
            for (size_t i = 0; i < parts.size(); ++i)
                if (!E[k][i].is_zero()) rhs[i] -= w * E[k][i];
        }
        QTRat wdd = weight(d, d);
        for (size_t i = 0; i < parts.size(); ++i) E[d][i] = rhs[i] / wdd;
    }
    std::vector<SymFunc> out(n + 1, SymFunc(n));
    for (int k = 1; k <= n; ++k) out[k] = from_basis(Basis::p, n, E[k]);
    return out;
}

}  // namespace

SymFunc enk(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::domain_error("enk: need 1 <= k <= n");
    static std::mutex mx;
    static std::map<int, std::vector<SymFunc>> cache;
    std::lock_guard lock(mx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, enk_family(n)).first;
    return it->second[k];
}

bool reciprocity_check(const Partition& alpha, const Partition& beta) {
    if (alpha.empty() || beta.empty())
        throw std::domain_error("reciprocity_check: partitions must be nonempty");
    QTRat lhs = eval_alphabet(htilde(alpha), VirtualAlphabet::MB(beta)) / QTRat(Pi_mu(alpha));
    QTRat rhs = eval_alphabet(htilde(beta), VirtualAlphabet::MB(alpha)) / QTRat(Pi_mu(beta));
    return lhs == rhs;
}

bool cauchy_check(int n) {
    const MacdonaldBasis& basis = macdonald_basis(n);
    for (const Partition& nu : enumerate_partitions(n)) {
        SymFunc lhs =
            pleth_transform(elementary(n), pst_X_times(VirtualAlphabet::B(nu)));
        SymFunc rhs(n);
        for (const Partition& mu : basis.partitions()) {
            QTRat c = eval_alphabet(basis.htilde(mu), VirtualAlphabet::MB(nu)) / QTRat(w_mu(mu));
            SymFunc term = basis.htilde(mu);
            term.scale(c);
            rhs += term;
        }
        if (lhs != rhs) return false;
    }
    return true;
}

void cache_build(const std::string& dir, int max_degree) {
    for (int n = 0; n <= max_degree; ++n) write_cache_file(dir, macdonald_basis(n));
}

CacheCheck cache_check(const std::string& dir, int max_degree) {
    CacheCheck r;
    for (int n = 0; n <= max_degree; ++n) {
        if (!std::filesystem::exists(cache_file_path(dir, n))) continue;
        r.empty = false;
        std::string detail;
        auto basis = load_cache_file(dir, n, &detail);
        if (!basis) {
            r.ok = false;
            r.detail = "degree " + std::to_string(n) + ": " + detail;
            return r;
        }
    }
    return r;
}

void cache_clear(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::exists(dir)) return;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("htilde_deg", 0) == 0 && entry.path().extension() == ".json")
            fs::remove(entry.path());
    }
}

} // namespace deltasq
