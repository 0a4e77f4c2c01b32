#include "deltasq/partition.hpp"

#include "deltasq/q_analogues.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace deltasq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::domain_error("Partition: parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> cs;
    cs.reserve(size_);
    for (int row = 0; row < length(); ++row)
        for (int col = 0; col < parts_[row]; ++col) cs.push_back({col, row});
    return cs;
}

CellStats Partition::cell_stats(const Cell& c) const {
    if (!contains_cell(c)) throw std::domain_error("cell_stats: cell outside diagram");
    CellStats s;
    s.coarm = c.col;
    s.coleg = c.row;
    s.arm = parts_[c.row] - 1 - c.col;
    for (int r = c.row + 1; r < length(); ++r)
        if (parts_[r] > c.col) ++s.leg;
    return s;
}

Partition Partition::conjugate() const {
    if (empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int row = 0; row < length(); ++row)
        for (int col = 0; col < parts_[row]; ++col) ++conj[col];
    return Partition(std::move(conj));
}

bool Partition::contains(const Partition& other) const {
    if (other.length() > length()) return false;
    for (int i = 0; i < other.length(); ++i)
        if (parts_[i] < other.parts_[i]) return false;
    return true;
}

std::optional<Partition> Partition::with_part_removed(int value) const {
    auto it = std::find(parts_.begin(), parts_.end(), value);
    if (it == parts_.end()) return std::nullopt;
    std::vector<int> rest = parts_;
    rest.erase(rest.begin() + (it - parts_.begin()));
    return Partition(std::move(rest));
}

int Partition::compare(const Partition& a, const Partition& b) {
    size_t n = std::min(a.parts_.size(), b.parts_.size());
    for (size_t i = 0; i < n; ++i)
        if (a.parts_[i] != b.parts_[i]) return a.parts_[i] > b.parts_[i] ? -1 : 1;
    if (a.parts_.size() != b.parts_.size()) return a.parts_.size() < b.parts_.size() ? -1 : 1;
    return 0;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << "]";
    return os.str();
}

namespace {
void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::domain_error("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

std::vector<Partition> covers(const Partition& nu, int k) {
    if (k < 1) throw std::domain_error("covers: k must be >= 1");
    std::vector<Partition> out;
    for (const Partition& mu : enumerate_partitions(nu.size() + k))
        if (mu.contains(nu)) out.push_back(mu);
    return out;
}

std::vector<Partition> contained(const Partition& mu, int k) {
    if (k < 1) throw std::domain_error("contained: k must be >= 1");
    std::vector<Partition> out;
    if (mu.size() < k) return out;
    for (const Partition& nu : enumerate_partitions(mu.size() - k))
        if (mu.contains(nu)) out.push_back(nu);
    return out;
}

QTPoly B_mu(const Partition& mu) {
    QTPoly r;
    for (const Cell& c : mu.cells()) r += QTPoly::monomial(1, c.col, c.row);
    return r;
}

QTPoly T_mu(const Partition& mu) {
    if (mu.empty()) return QTPoly(1);
    int qe = 0, te = 0;
    for (const Cell& c : mu.cells()) {
        qe += c.col;
        te += c.row;
    }
    return QTPoly::monomial(1, qe, te);
}

QTPoly Pi_mu(const Partition& mu) {
    QTPoly r(1);
    for (const Cell& c : mu.cells()) {
        if (c.col == 0 && c.row == 0) continue;
        r *= QTPoly(1) - QTPoly::monomial(1, c.col, c.row);
    }
    return r;
}

QTPoly w_mu(const Partition& mu) {
    QTPoly r(1);
    for (const Cell& c : mu.cells()) {
        CellStats s = mu.cell_stats(c);
        r *= (QTPoly::q(s.arm) - QTPoly::t(s.leg + 1)) * (QTPoly::t(s.leg) - QTPoly::q(s.arm + 1));
    }
    return r;
}

QTPoly M_qt() { return (QTPoly(1) - QTPoly::q()) * (QTPoly(1) - QTPoly::t()); }

AppendixStats appendix_stats(const Partition& mu) {
    if (mu.empty()) throw std::domain_error("appendix_stats: empty partition");
    AppendixStats st;
    st.multiplicities.assign(mu.parts()[0] + 1, 0);
    for (int i = 0; i < mu.length(); ++i) {
        st.n_stat += mu.parts()[i] * i;
        ++st.multiplicities[mu.parts()[i]];
    }
    BigInt g = -2 * BigInt(st.n_stat) - mu.size();
    for (int m : st.multiplicities) g += int_binomial(m + 1, 2);
    st.g_stat = static_cast<int>(g);
    return st;
}

BigInt z_lambda(const Partition& lambda) {
    BigInt z = 1;
    int run = 0;
    const auto& p = lambda.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        ++run;
        z *= p[i];
        if (i + 1 == p.size() || p[i + 1] != p[i]) {
            for (int j = 2; j <= run; ++j) z *= j;
            run = 0;
        }
    }
    return z;
}

} // namespace deltasq
