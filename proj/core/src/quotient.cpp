#include "abacus/quotient.hpp"

#include <algorithm>

namespace abacus {

namespace {

// Common floor for several symbols: at most every s_c - len(p_c), rounded down to a multiple of step.
int common_floor(const Multipartition& mp, const Charges& charges, int step) {
    int lo = charges[0] - length(mp[0]);
    for (std::size_t c = 1; c < mp.size(); ++c) lo = std::min(lo, charges[c] - length(mp[c]));
    return step * floor_div(lo, step);
}

Charged from_runners(std::vector<std::vector<int>>& runners, int floor) {
    Charged out;
    for (auto& r : runners) {
        std::sort(r.begin(), r.end());
        auto sym = symbol_from_beads(r, floor);
        out.mp.push_back(sym.partition);
        out.charges.push_back(sym.charge);
    }
    return out;
}

// Window of an l-symbol: bead flags for each component on [lo, hi).
struct Window {
    int lo = 0;
    int hi = 0;
    std::vector<std::vector<char>> bead;

    bool at(int c, int x) const { return x < lo || (x < hi && bead[c][x - lo]); }
};

Window make_window(const Multipartition& mp, const Charges& charges, int pad) {
    Window w;
    w.lo = common_floor(mp, charges, 1);
    w.hi = w.lo;
    for (std::size_t c = 0; c < mp.size(); ++c)
        w.hi = std::max(w.hi, charges[c] + (mp[c].empty() ? 0 : mp[c][0]));
    w.hi += pad;
    for (std::size_t c = 0; c < mp.size(); ++c) {
        std::vector<char> row(w.hi - w.lo, 0);
        for (int x : beads_from(mp[c], charges[c], w.lo)) row[x - w.lo] = 1;
        w.bead.push_back(std::move(row));
    }
    return w;
}

Charged read_window(const Window& w) {
    Charged out;
    for (const auto& row : w.bead) {
        std::vector<int> beads;
        for (int x = w.lo; x < w.hi; ++x)
            if (row[x - w.lo]) beads.push_back(x);
        auto sym = symbol_from_beads(beads, w.lo);
        out.mp.push_back(sym.partition);
        out.charges.push_back(sym.charge);
    }
    return out;
}

// An operation at (c, x) moves the bead one runner up, or from the top runner to runner 0 at x - e.
bool can_move(const Window& w, int c, int x, int e) {
    int l = static_cast<int>(w.bead.size());
    if (!w.at(c, x)) return false;
    if (c + 1 < l) return !w.at(c + 1, x);
    return x - e >= w.lo && !w.at(0, x - e);
}

void move(Window& w, int c, int x, int e) {
    int l = static_cast<int>(w.bead.size());
    w.bead[c][x - w.lo] = 0;
    if (c + 1 < l) w.bead[c + 1][x - w.lo] = 1;
    else w.bead[0][x - e - w.lo] = 1;
}

}  // namespace

Charged tau_e(const Partition& p, int m, int e, int slack) {
    check_modulus(e);
    check_partition(p);
    int lo = e * floor_div(m - length(p) - slack * e, e);
    std::vector<std::vector<int>> runners(e);
    for (int v : beads_from(p, m, lo)) {
        int j = mod(v, e);
        runners[j].push_back((v - j) / e);
    }
    return from_runners(runners, lo / e);
}

ChargedPartition tau_e_inverse(const Multipartition& q, const Charges& s_e) {
    int e = static_cast<int>(q.size());
    check_modulus(e);
    check_multipartition(q, s_e);
    int lo = common_floor(q, s_e, 1);
    std::vector<int> beads;
    for (int j = 0; j < e; ++j)
        for (int k : beads_from(q[j], s_e[j], lo)) beads.push_back(j + e * k);
    std::sort(beads.begin(), beads.end());
    auto sym = symbol_from_beads(beads, e * lo);
    return {sym.partition, sym.charge};
}

Partition e_core_partition(const Partition& p, int e) {
    auto q = tau_e(p, 0, e);
    return tau_e_inverse(Multipartition(e), q.charges).partition;
}

CoreData core_data(const Partition& p, int m, int e) {
    auto q = tau_e(p, m, e);
    return {q.charges, tau_e_inverse(Multipartition(e), q.charges).partition, size(q.mp)};
}

Charged tau_l(const Partition& p, int m, int e, int l, int slack) {
    check_modulus(e);
    check_partition(p);
    if (l < 1) throw error("level must be at least 1");
    int step = e * l;
    int lo = step * floor_div(m - length(p) - slack * step, step);
    std::vector<std::vector<int>> comps(l);
    for (int v : beads_from(p, m, lo)) {
        int c = mod(v, e);
        int r = floor_div(v, e);
        comps[l - 1 - mod(r, l)].push_back(c + e * floor_div(r, l));
    }
    return from_runners(comps, lo / l);
}

ChargedPartition tau_l_inverse(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    int l = static_cast<int>(mp.size());
    int lo = common_floor(mp, charges, e);
    std::vector<int> beads;
    for (int d = 0; d < l; ++d)
        for (int u : beads_from(mp[d], charges[d], lo))
            beads.push_back(mod(u, e) + e * (l - 1 - d) + e * l * floor_div(u, e));
    std::sort(beads.begin(), beads.end());
    auto sym = symbol_from_beads(beads, l * lo);
    return {sym.partition, sym.charge};
}

Charged level_rank_transpose(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    int l = static_cast<int>(mp.size());
    int lo = common_floor(mp, charges, e);
    // Each block of e consecutive positions on runner d is one column of height e on the e-abacus.
    std::vector<std::vector<int>> runners(e);
    for (int d = 0; d < l; ++d)
        for (int u : beads_from(mp[d], charges[d], lo))
            runners[mod(u, e)].push_back((l - 1 - d) + l * floor_div(u, e));
    return from_runners(runners, l * lo / e);
}

bool in_fundamental_domain(const Charges& s, int e) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] - s[i] < 0 || s[j] - s[i] >= e) return false;
    return true;
}

bool in_closed_domain(const Charges& s, int e) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[j] - s[i] < 0 || s[j] - s[i] > e) return false;
    return true;
}

void check_fundamental_domain(const Charges& s, int e) {
    if (!in_fundamental_domain(s, e)) throw error("charges not in fundamental domain");
}

GeneralizedCore generalized_core(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    check_fundamental_domain(charges, e);
    return generalized_core_unchecked(mp, charges, e);
}

GeneralizedCore generalized_core_unchecked(const Multipartition& mp, const Charges& charges, int e,
                                           std::mt19937* rng) {
    check_modulus(e);
    check_multipartition(mp, charges);
    int l = static_cast<int>(mp.size());
    auto w = make_window(mp, charges, 1);
    int ops = 0;
    std::vector<std::pair<int, int>> moves;
    for (;;) {
        moves.clear();
        for (int c = 0; c < l && (rng || moves.empty()); ++c)
            for (int x = w.lo; x < w.hi; ++x)
                if (can_move(w, c, x, e)) {
                    moves.emplace_back(c, x);
                    if (!rng) break;
                }
        if (moves.empty()) break;
        auto [c, x] = rng ? moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(*rng)]
                          : moves.front();
        move(w, c, x, e);
        ++ops;
    }
    auto core = read_window(w);
    return {core.mp, core.charges, ops};
}

std::vector<Charged> elementary_moves(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    auto w = make_window(mp, charges, 1);
    std::vector<Charged> out;
    for (int c = 0; c < static_cast<int>(mp.size()); ++c)
        for (int x = w.lo; x < w.hi; ++x)
            if (can_move(w, c, x, e)) {
                auto next = w;
                move(next, c, x, e);
                out.push_back(read_window(next));
            }
    return out;
}

GeneralizedCore core_via_transpose(const Multipartition& mp, const Charges& charges, int e) {
    auto t = level_rank_transpose(mp, charges, e);
    auto core = tau_e_inverse(Multipartition(e), t.charges);
    auto back = tau_l(core.partition, core.m, e, static_cast<int>(mp.size()));
    return {back.mp, back.charges, size(t.mp)};
}

int weight(const Multipartition& mp, const Charges& charges, int e) {
    return generalized_core(mp, charges, e).weight;
}

bool is_nested(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    int l = static_cast<int>(mp.size());
    auto w = make_window(mp, charges, e + 1);
    for (int x = w.lo; x < w.hi; ++x) {
        for (int c = 0; c + 1 < l; ++c)
            if (w.at(c, x) && !w.at(c + 1, x)) return false;
        if (w.at(l - 1, x) && !w.at(0, x - e)) return false;
    }
    return true;
}

bool has_no_mixed_residue(const Multipartition& mp, const Charges& charges, int e) {
    for (int i = 0; i < e; ++i) {
        auto b = boundary_nodes(mp, charges, e, i);
        if (!b.addable.empty() && !b.removable.empty()) return false;
    }
    return true;
}

bool is_core(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    check_fundamental_domain(charges, e);
    return is_nested(mp, charges, e);
}

bool is_core_by_nodes(const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    check_fundamental_domain(charges, e);
    return has_no_mixed_residue(mp, charges, e);
}

Charges core_l_charges(const Charges& s_e, int l) {
    int e = static_cast<int>(s_e.size());
    auto core = tau_e_inverse(Multipartition(e), s_e);
    return tau_l(core.partition, core.m, e, l).charges;
}

}  // namespace abacus
