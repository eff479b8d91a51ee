#include "abacus/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace abacus {

namespace {

int sum(const Charges& s) {
    return std::accumulate(s.begin(), s.end(), 0);
}

int l1(const Charges& a, const Charges& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
    return d;
}

}  // namespace

bool operator<(const BlockId& a, const BlockId& b) {
    return std::tie(a.weight, a.core_multicharge, a.e, a.l, a.m) <
           std::tie(b.weight, b.core_multicharge, b.e, b.l, b.m);
}

BlockId make_block_id(const Charges& s_e, int weight, int l) {
    int e = static_cast<int>(s_e.size());
    check_modulus(e);
    if (l < 1) throw error("level must be at least 1");
    if (weight < 0) throw error("negative weight");
    return {s_e, weight, e, l, sum(s_e)};
}

BlockId block_id(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    check_fundamental_domain(charges, e);
    auto t = level_rank_transpose(mp, charges, e);
    return make_block_id(t.charges, size(t.mp), static_cast<int>(mp.size()));
}

std::vector<Block> blocks_of(int n, const Charges& charges, int e) {
    check_modulus(e);
    check_fundamental_domain(charges, e);
    if (n < 0) throw error("negative size");
    std::map<BlockId, std::vector<Multipartition>> groups;
    for (auto& mp : multipartitions(n, static_cast<int>(charges.size())))
        groups[block_id(mp, charges, e)].push_back(std::move(mp));
    std::vector<Block> out;
    for (auto& [id, members] : groups) out.push_back({id, std::move(members)});
    return out;
}

std::vector<Multipartition> uglov_set(const Charges& charges, int e, int n) {
    check_modulus(e);
    if (charges.empty()) throw error("empty multicharge");
    if (n < 0) throw error("negative size");
    std::set<Multipartition> layer{Multipartition(charges.size())};
    for (int k = 0; k < n; ++k) {
        std::set<Multipartition> next;
        for (const auto& mp : layer)
            for (int i = 0; i < e; ++i)
                if (auto up = e_tilde(i, mp, charges, e)) next.insert(std::move(*up));
        layer = std::move(next);
    }
    return {layer.begin(), layer.end()};
}

bool is_scopes(const BlockId& b, int i) {
    int e = b.e;
    if (i < 0 || i >= e) throw error("residue out of range");
    const auto& s = b.core_multicharge;
    if (i >= 1) return s[i] - s[i - 1] >= b.weight;
    return s[0] - s[e - 1] >= b.weight + b.l;
}

std::vector<Charged> block_members(const BlockId& b) {
    std::vector<Charged> out;
    for (const auto& q : multipartitions(b.weight, b.e)) {
        auto p = tau_e_inverse(q, b.core_multicharge);
        out.push_back(tau_l(p.partition, p.m, b.e, b.l));
    }
    return out;
}

bool is_scopes_brute(const BlockId& b, int i) {
    if (i < 0 || i >= b.e) throw error("residue out of range");
    for (const auto& x : block_members(b))
        if (!boundary_nodes(x.mp, x.charges, b.e, i).addable.empty()) return false;
    return true;
}

BlockId block_action(const GroupWord& g, const BlockId& b) {
    return make_block_id(act_charge_e(g, b.core_multicharge, b.l), b.weight, b.l);
}

bool orbit_equivalent(const BlockId& a, const BlockId& b) {
    if (a.e != b.e || a.l != b.l || a.m != b.m) throw error("context mismatch");
    return a.weight == b.weight && core_l_charges(a.core_multicharge, a.l) == core_l_charges(b.core_multicharge, b.l);
}

std::vector<std::pair<int, int>> charge_transfers(const Charges& start, const Charges& target) {
    Charges cur = start;
    int l = static_cast<int>(cur.size());
    std::vector<std::pair<int, int>> out;
    while (cur != target) {
        int before = l1(cur, target);
        int p = l - 1;
        while (cur[p] == target[p]) --p;
        int from = -1, to = -1;
        if (cur[p] < target[p]) {
            for (int j = l - 1; j >= 0 && from < 0; --j)
                if (cur[j] > target[j] && (j == 0 || cur[j - 1] != cur[j])) from = j;
            for (int j = l - 1; j >= 0 && from < 0; --j)
                if (cur[j] > target[j]) from = j;
            to = p;
        } else {
            from = p;
            while (from > 0 && cur[from - 1] == cur[p]) --from;
            for (int j = 0; j < l; ++j)
                if (cur[j] < target[j] && (to < 0 || cur[j] >= cur[to])) to = j;
        }
        --cur[from];
        ++cur[to];
        out.emplace_back(from, to);
        if (l1(cur, target) >= before) throw error("charge transfer loop does not converge");
    }
    return out;
}

Multipartition realize_multicharge(const Charges& start, const Charges& target, int e) {
    check_modulus(e);
    if (start.size() != target.size() || start.empty()) throw error("rank mismatch");
    if (!in_closed_domain(start, e)) throw error("start not in closed fundamental domain");
    if (!in_closed_domain(target, e) || sum(start) != sum(target)) throw error("unreachable multicharge");
    int l = static_cast<int>(start.size());
    auto transfers = charge_transfers(start, target);

    // Begin at the core (empty, target) on the e-abacus and undo the transfers with right bead moves.
    // Position q on a runner belongs to component l-1-(q mod l).
    auto t = level_rank_transpose(Multipartition(l), target, e);
    int moves = static_cast<int>(transfers.size());
    int lo = *std::min_element(t.charges.begin(), t.charges.end()) - l * (moves + 2);
    int hi = *std::max_element(t.charges.begin(), t.charges.end()) + l * (moves + 2);
    std::vector<std::vector<char>> bead(e, std::vector<char>(hi - lo, 0));
    for (int c = 0; c < e; ++c)
        for (int q = lo; q < t.charges[c]; ++q) bead[c][q - lo] = 1;
    auto comp = [&](int q) { return l - 1 - mod(q, l); };

    for (auto it = transfers.rbegin(); it != transfers.rend(); ++it) {
        int src = it->second, dst = it->first;
        int best_c = -1, best_q = 0, best_to = 0;
        for (int c = 0; c < e; ++c)
            for (int q = lo; q < hi; ++q) {
                if (!bead[c][q - lo] || comp(q) != src) continue;
                int to = q + 1;
                while (to < hi && (bead[c][to - lo] || comp(to) != dst)) ++to;
                if (to >= hi) continue;
                if (best_c < 0 || to - q < best_to - best_q || (to - q == best_to - best_q && q > best_q))
                    best_c = c, best_q = q, best_to = to;
            }
        if (best_c < 0) throw error("no bead available for transfer");
        bead[best_c][best_q - lo] = 0;
        bead[best_c][best_to - lo] = 1;
    }

    Multipartition q;
    Charges s_e;
    for (int c = 0; c < e; ++c) {
        std::vector<int> beads;
        for (int x = lo; x < hi; ++x)
            if (bead[c][x - lo]) beads.push_back(x);
        auto sym = symbol_from_beads(beads, lo);
        q.push_back(sym.partition);
        s_e.push_back(sym.charge);
    }
    auto p = tau_e_inverse(q, s_e);
    auto out = tau_l(p.partition, p.m, e, l);
    if (out.charges != start) throw error("realized multipartition has wrong multicharge");
    if (generalized_core_unchecked(out.mp, start, e).core_charges != target)
        throw error("realized multipartition has wrong core");
    return out.mp;
}

std::vector<Charges> reachable_multicharges(const Charges& start, int e, int bound) {
    check_modulus(e);
    if (start.empty()) throw error("empty multicharge");
    int l = static_cast<int>(start.size());
    std::set<Charges> seen;
    for (int n = 0; n <= bound; ++n)
        for (const auto& mp : multipartitions(n, l))
            seen.insert(core_l_charges(level_rank_transpose(mp, start, e).charges, l));
    return {seen.begin(), seen.end()};
}

}  // namespace abacus
