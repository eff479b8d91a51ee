#include "abacus/partition.hpp"

#include <algorithm>
#include <numeric>

namespace abacus {

Charges MultiSymbol::multicharge() const {
    Charges s;
    for (const auto& x : symbols) s.push_back(x.charge);
    return s;
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

void check_partition(const Partition& p) {
    if (!is_partition(p)) throw error("not a partition");
}

void check_multipartition(const Multipartition& mp, const Charges& charges) {
    if (mp.empty()) throw error("empty multipartition level");
    if (mp.size() != charges.size()) throw error("charge count does not match level");
    for (const auto& p : mp) check_partition(p);
}

void check_modulus(int e) {
    if (e < 2) throw error("modulus must be at least 2");
}

int size(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

int size(const Multipartition& mp) {
    int n = 0;
    for (const auto& p : mp) n += size(p);
    return n;
}

int length(const Partition& p) {
    return static_cast<int>(p.size());
}

std::vector<int> beta_set(const Partition& p, int m, int rows) {
    check_partition(p);
    if (rows < length(p)) throw error("window too small");
    std::vector<int> b(rows);
    for (int i = 1; i <= rows; ++i) {
        int part = i <= length(p) ? p[i - 1] : 0;
        b[rows - i] = part - i + m;
    }
    return b;
}

Partition partition_of_symbol(const std::vector<int>& betas, int m) {
    for (std::size_t i = 1; i < betas.size(); ++i)
        if (betas[i] <= betas[i - 1]) throw error("beta numbers not strictly increasing");
    Partition p;
    int rows = static_cast<int>(betas.size());
    for (int i = 1; i <= rows; ++i) {
        int part = betas[rows - i] + i - m;
        if (part < 0) throw error("beta numbers not eventually trivial");
        if (part > 0) p.push_back(part);
    }
    return p;
}

std::vector<int> beads_from(const Partition& p, int m, int lo) {
    return beta_set(p, m, m - lo);
}

Symbol symbol_from_beads(const std::vector<int>& beads, int floor) {
    int charge = floor + static_cast<int>(beads.size());
    return {partition_of_symbol(beads, charge), charge};
}

Symbol shift_symbol(const Symbol& s, int r) {
    return {s.partition, s.charge + r};
}

MultiSymbol shift_symbol(const MultiSymbol& s, int r) {
    MultiSymbol out;
    for (const auto& x : s.symbols) out.symbols.push_back(shift_symbol(x, r));
    return out;
}

MultiSymbol make_multisymbol(const Multipartition& mp, const Charges& charges) {
    check_multipartition(mp, charges);
    MultiSymbol ms;
    for (std::size_t c = 0; c < mp.size(); ++c) ms.symbols.push_back({mp[c], charges[c]});
    return ms;
}

int content(const Node& n, const Charges& charges) {
    return n.col - n.row + charges.at(n.comp);
}

int residue(const Node& n, const Charges& charges, int e) {
    return mod(content(n, charges), e);
}

bool node_before(const Node& a, const Node& b, const Charges& charges) {
    int ca = content(a, charges), cb = content(b, charges);
    if (ca != cb) return ca < cb;
    return a.comp > b.comp;
}

BoundaryNodes boundary_nodes(const Multipartition& mp, const Charges& charges, int e, int i) {
    check_modulus(e);
    check_multipartition(mp, charges);
    if (i < 0 || i >= e) throw error("residue out of range");
    BoundaryNodes out;
    for (int c = 0; c < static_cast<int>(mp.size()); ++c) {
        const auto& p = mp[c];
        int len = length(p);
        for (int a = 1; a <= len + 1; ++a) {
            int cur = a <= len ? p[a - 1] : 0;
            int above = a > 1 ? p[a - 2] : -1;
            int below = a < len ? p[a] : 0;
            if (a == 1 || above > cur) {
                Node n{a, cur + 1, c};
                if (residue(n, charges, e) == i) out.addable.push_back(n);
            }
            if (a <= len && cur > below) {
                Node n{a, cur, c};
                if (residue(n, charges, e) == i) out.removable.push_back(n);
            }
        }
    }
    auto less = [&](const Node& x, const Node& y) { return node_before(x, y, charges); };
    std::sort(out.addable.begin(), out.addable.end(), less);
    std::sort(out.removable.begin(), out.removable.end(), less);
    return out;
}

std::vector<int> count_nodes_by_residue(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    std::vector<int> n(e, 0);
    for (int c = 0; c < static_cast<int>(mp.size()); ++c)
        for (int a = 1; a <= length(mp[c]); ++a)
            for (int b = 1; b <= mp[c][a - 1]; ++b) ++n[mod(b - a + charges[c], e)];
    return n;
}

Multipartition add_node(const Multipartition& mp, const Node& n) {
    Multipartition out = mp;
    auto& p = out.at(n.comp);
    if (n.row == length(p) + 1 && n.col == 1) {
        p.push_back(1);
    } else if (n.row <= length(p) && p[n.row - 1] + 1 == n.col &&
               (n.row == 1 || p[n.row - 2] > p[n.row - 1])) {
        ++p[n.row - 1];
    } else {
        throw error("node is not addable");
    }
    return out;
}

Multipartition remove_node(const Multipartition& mp, const Node& n) {
    Multipartition out = mp;
    auto& p = out.at(n.comp);
    int len = length(p);
    if (n.row > len || p[n.row - 1] != n.col || (n.row < len && p[n.row] == n.col))
        throw error("node is not removable");
    if (--p[n.row - 1] == 0) p.pop_back();
    return out;
}

std::string render_abacus(const MultiSymbol& ms, int lo, int hi) {
    if (lo > hi) throw error("empty window");
    std::string out;
    for (int x = lo; x <= hi; ++x) out += static_cast<char>('0' + (x < 0 ? -x : x) % 10);
    out += '\n';
    for (auto it = ms.symbols.rbegin(); it != ms.symbols.rend(); ++it) {
        int floor = std::min(lo, it->charge - length(it->partition));
        auto beads = beads_from(it->partition, it->charge, floor);
        for (int x = lo; x <= hi; ++x)
            out += std::binary_search(beads.begin(), beads.end(), x) || x < floor ? 'X' : '.';
        out += '\n';
    }
    return out;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition p;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(p);
            return;
        }
        for (int k = std::min(left, cap); k >= 1; --k) {
            p.push_back(k);
            self(self, left - k, k);
            p.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Multipartition> multipartitions(int n, int l) {
    std::vector<Multipartition> out;
    if (l < 1 || n < 0) return out;
    std::vector<std::vector<Partition>> by_size(n + 1);
    for (int k = 0; k <= n; ++k) by_size[k] = partitions(k);
    Multipartition cur(l);
    auto rec = [&](auto&& self, int c, int left) -> void {
        if (c == l - 1) {
            for (const auto& p : by_size[left]) {
                cur[c] = p;
                out.push_back(cur);
            }
            return;
        }
        for (int k = left; k >= 0; --k)
            for (const auto& p : by_size[k]) {
                cur[c] = p;
                self(self, c + 1, left - k);
            }
    };
    rec(rec, 0, n);
    return out;
}

}  // namespace abacus
