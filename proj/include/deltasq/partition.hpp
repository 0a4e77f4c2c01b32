#pragma once

#include "deltasq/qt_poly.hpp"

#include <optional>
#include <vector>

namespace deltasq {

// Cell of a Ferrers diagram, zero-based: col counts cells strictly to the
// left (co-arm), row counts cells strictly below (co-leg). Row 0 is the
// bottom row of the diagram.
struct Cell {
    int col = 0;
    int row = 0;
    friend bool operator==(const Cell& a, const Cell& b) {
        return a.col == b.col && a.row == b.row;
    }
};

struct CellStats {
    int arm = 0;
    int leg = 0;
    int coarm = 0;
    int coleg = 0;
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based

    bool contains_cell(const Cell& c) const {
        return c.row >= 0 && c.row < length() && c.col >= 0 && c.col < parts_[c.row];
    }
    std::vector<Cell> cells() const;
    CellStats cell_stats(const Cell& c) const;  // throws when c is outside

    Partition conjugate() const;
    bool contains(const Partition& other) const;  // containment of diagrams
    std::optional<Partition> with_part_removed(int value) const;

    // Canonical order: the order of enumerate(); (n) first, (1^n) last.
    static int compare(const Partition& a, const Partition& b);
    friend bool operator<(const Partition& a, const Partition& b) { return compare(a, b) < 0; }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    std::string str() const;  // e.g. "[3,1,1]"

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of n, each exactly once, in canonical (reverse-lex) order.
std::vector<Partition> enumerate_partitions(int n);

// All mu obtained from nu by adding k cells (containment of diagrams).
std::vector<Partition> covers(const Partition& nu, int k);
// All nu obtained from mu by removing k cells.
std::vector<Partition> contained(const Partition& mu, int k);

// The partition scalars of the Macdonald world.
QTPoly B_mu(const Partition& mu);
QTPoly T_mu(const Partition& mu);
QTPoly Pi_mu(const Partition& mu);  // product over mu/(1); 1 for empty and (1)
QTPoly w_mu(const Partition& mu);
QTPoly M_qt();  // (1-q)(1-t)

struct AppendixStats {
    int n_stat = 0;                       // sum_i mu_i (i-1)
    std::vector<int> multiplicities;      // multiplicities[i] = # parts equal to i, index 0 unused
    int g_stat = 0;                       // -2 n(mu) - n + sum_i C(m_i + 1, 2)
};
AppendixStats appendix_stats(const Partition& mu);

// z_lambda = prod_i i^{m_i} m_i!
BigInt z_lambda(const Partition& lambda);

} // namespace deltasq
