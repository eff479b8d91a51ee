#include "abacus/actions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace abacus {

GroupWord parse_word(const std::string& text) {
    GroupWord w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "t") {
            w.letters.push_back({Letter::tau, 0});
        } else if (tok == "T") {
            w.letters.push_back({Letter::tau_inv, 0});
        } else if (tok.size() > 1 && tok[0] == 's' &&
                   std::all_of(tok.begin() + 1, tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            w.letters.push_back({Letter::sigma, std::stoi(tok.substr(1))});
        } else {
            throw error("bad word token '" + tok + "'");
        }
    }
    return w;
}

std::vector<std::string> word_tokens(const GroupWord& w) {
    std::vector<std::string> out;
    for (const auto& x : w.letters) {
        if (x.kind == Letter::tau) out.push_back("t");
        else if (x.kind == Letter::tau_inv) out.push_back("T");
        else out.push_back("s" + std::to_string(x.index));
    }
    return out;
}

GroupWord word_sigma(int i) {
    return {{{Letter::sigma, i}}};
}

namespace {

void check_letter(const Letter& x, std::size_t rank) {
    if (x.kind != Letter::sigma) return;
    if (rank < 2) throw error("rank mismatch: no sigma generators in rank 1");
    if (x.index < 0 || static_cast<std::size_t>(x.index) >= rank) throw error("rank mismatch");
}

Charges left_letter(const Letter& x, Charges s, int l) {
    std::size_t r = s.size();
    check_letter(x, r);
    if (x.kind == Letter::tau) {
        std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
        s[0] += l;
    } else if (x.kind == Letter::tau_inv) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        s[r - 1] -= l;
    } else if (x.index == 0) {
        int first = s[0];
        s[0] = s[r - 1] + l;
        s[r - 1] = first - l;
    } else {
        std::swap(s[x.index - 1], s[x.index]);
    }
    return s;
}

Charges right_letter(const Letter& x, Charges s, int e) {
    std::size_t r = s.size();
    check_letter(x, r);
    if (x.kind == Letter::tau) {
        std::rotate(s.begin(), s.begin() + 1, s.end());
        s[r - 1] += e;
    } else if (x.kind == Letter::tau_inv) {
        std::rotate(s.rbegin(), s.rbegin() + 1, s.rend());
        s[0] -= e;
    } else if (x.index == 0) {
        int first = s[0];
        s[0] = s[r - 1] - e;
        s[r - 1] = first + e;
    } else {
        std::swap(s[x.index - 1], s[x.index]);
    }
    return s;
}

}  // namespace

Charges act_charge_e(const GroupWord& w, const Charges& s, int l) {
    if (s.empty()) throw error("empty charge tuple");
    Charges out = s;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = left_letter(*it, out, l);
    return out;
}

Charges act_charge_l(const Charges& s, const GroupWord& w, int e) {
    if (s.empty()) throw error("empty charge tuple");
    Charges out = s;
    for (const auto& x : w.letters) out = right_letter(x, out, e);
    return out;
}

std::pair<BeadSet, BeadSet> pair_symbols(const BeadSet& x, const BeadSet& y) {
    BeadSet xs = x, ys = y;
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    // The larger set keeps its unmatched beads; the matched ones cross over.
    bool x_larger = xs.size() >= ys.size();
    BeadSet rem = x_larger ? xs : ys;
    const BeadSet& other = x_larger ? ys : xs;
    BeadSet matched;
    for (auto it = other.rbegin(); it != other.rend(); ++it) {
        int v = *it;
        BeadSet::iterator pick;
        if (x_larger) {
            pick = std::lower_bound(rem.begin(), rem.end(), v);
            if (pick == rem.end()) pick = rem.begin();
        } else {
            pick = std::upper_bound(rem.begin(), rem.end(), v);
            if (pick == rem.begin()) pick = rem.end();
            --pick;
        }
        matched.push_back(*pick);
        rem.erase(pick);
    }
    std::sort(matched.begin(), matched.end());
    rem.insert(rem.end(), other.begin(), other.end());
    std::sort(rem.begin(), rem.end());
    if (x_larger) return {matched, rem};
    return {rem, matched};
}

namespace {

Charged psi_tau(const Charged& x, int e) {
    Charged out = x;
    std::rotate(out.mp.begin(), out.mp.begin() + 1, out.mp.end());
    out.charges = right_letter({Letter::tau, 0}, x.charges, e);
    return out;
}

Charged psi_tau_inv(const Charged& x, int e) {
    Charged out = x;
    std::rotate(out.mp.rbegin(), out.mp.rbegin() + 1, out.mp.rend());
    out.charges = right_letter({Letter::tau_inv, 0}, x.charges, e);
    return out;
}

Charged psi_pair(const Charged& x, int i) {
    int a = i - 1, b = i;
    int lo = std::min(x.charges[a] - length(x.mp[a]), x.charges[b] - length(x.mp[b]));
    auto [xa, xb] = pair_symbols(beads_from(x.mp[a], x.charges[a], lo), beads_from(x.mp[b], x.charges[b], lo));
    Charged out = x;
    auto sa = symbol_from_beads(xa, lo);
    auto sb = symbol_from_beads(xb, lo);
    out.mp[a] = sa.partition;
    out.charges[a] = sa.charge;
    out.mp[b] = sb.partition;
    out.charges[b] = sb.charge;
    return out;
}

}  // namespace

Charged psi(const Multipartition& mp, const Charges& charges, const GroupWord& w, int e) {
    check_multipartition(mp, charges);
    if (e < 1) throw error("shift must be positive");
    std::size_t l = mp.size();
    Charged cur{mp, charges};
    for (const auto& x : w.letters) {
        check_letter(x, l);
        if (x.kind == Letter::tau) {
            cur = psi_tau(cur, e);
        } else if (x.kind == Letter::tau_inv) {
            cur = psi_tau_inv(cur, e);
        } else if (x.index >= 1) {
            cur = psi_pair(cur, x.index);
        } else {
            cur = psi_tau_inv(psi_pair(psi_tau(cur, e), static_cast<int>(l) - 1), e);
        }
    }
    return cur;
}

Multipartition sigma_ordinary(int i, const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    if (i < 0 || i >= e) throw error("residue out of range");
    Multipartition out;
    for (std::size_t c = 0; c < mp.size(); ++c) {
        const auto& p = mp[c];
        int lo = charges[c] - length(p) - 1;
        int hi = charges[c] + (p.empty() ? 0 : p[0]) + 1;
        std::vector<char> bead(hi - lo + 1, 0);
        for (int x : beads_from(p, charges[c], lo)) bead[x - lo] = 1;
        // An i-node sits between positions v-1 and v with v = i mod e.
        for (int v = lo + 1; v <= hi; ++v)
            if (mod(v, e) == i) std::swap(bead[v - 1 - lo], bead[v - lo]);
        std::vector<int> beads;
        for (int x = lo; x <= hi; ++x)
            if (bead[x - lo]) beads.push_back(x);
        out.push_back(symbol_from_beads(beads, lo).partition);
    }
    return out;
}

Signature i_signature(const Multipartition& mp, const Charges& charges, int e, int i) {
    auto b = boundary_nodes(mp, charges, e, i);
    std::vector<std::pair<Node, char>> letters;
    for (const auto& n : b.addable) letters.emplace_back(n, 'A');
    for (const auto& n : b.removable) letters.emplace_back(n, 'R');
    std::sort(letters.begin(), letters.end(),
              [&](const auto& x, const auto& y) { return node_before(x.first, y.first, charges); });
    Signature sig;
    std::vector<std::pair<Node, char>> stack;
    for (const auto& [n, c] : letters) {
        sig.word += c;
        sig.nodes.push_back(n);
        if (c == 'A' && !stack.empty() && stack.back().second == 'R') stack.pop_back();
        else stack.emplace_back(n, c);
    }
    for (const auto& [n, c] : stack) {
        sig.reduced += c;
        sig.reduced_nodes.push_back(n);
        if (c == 'A') sig.good_addable = n;
        else if (!sig.good_removable) sig.good_removable = n;
    }
    return sig;
}

std::optional<Multipartition> e_tilde(int i, const Multipartition& mp, const Charges& charges, int e) {
    auto sig = i_signature(mp, charges, e, i);
    if (!sig.good_addable) return std::nullopt;
    return add_node(mp, *sig.good_addable);
}

std::optional<Multipartition> f_tilde(int i, const Multipartition& mp, const Charges& charges, int e) {
    auto sig = i_signature(mp, charges, e, i);
    if (!sig.good_removable) return std::nullopt;
    return remove_node(mp, *sig.good_removable);
}

Multipartition sigma_star(int i, const Multipartition& mp, const Charges& charges, int e) {
    auto sig = i_signature(mp, charges, e, i);
    int a = static_cast<int>(std::count(sig.reduced.begin(), sig.reduced.end(), 'A'));
    int r = static_cast<int>(sig.reduced.size()) - a;
    Multipartition cur = mp;
    for (int k = 0; k < std::abs(r - a); ++k) cur = *(r >= a ? f_tilde(i, cur, charges, e) : e_tilde(i, cur, charges, e));
    return cur;
}

Multipartition duality_transport(int i, const Multipartition& mp, const Charges& charges, int e) {
    check_modulus(e);
    check_multipartition(mp, charges);
    if (i < 0 || i >= e) throw error("residue out of range");
    int l = static_cast<int>(mp.size());
    auto base = tau_l_inverse(mp, charges, e);
    auto t = tau_e(base.partition, base.m, e);
    Charged moved;
    if (i >= 1) {
        moved = psi(t.mp, t.charges, word_sigma(i), l);
    } else {
        // Rotate so the wrapped pair (e-1, 0) sits in slots (0, 1), pair them, rotate back.
        Charged star = t;
        std::rotate(star.mp.rbegin(), star.mp.rbegin() + 1, star.mp.rend());
        star.charges = left_letter({Letter::tau, 0}, t.charges, l);
        auto paired = psi(star.mp, star.charges, word_sigma(1), l);
        moved = paired;
        std::rotate(moved.mp.begin(), moved.mp.begin() + 1, moved.mp.end());
        std::rotate(moved.charges.begin(), moved.charges.begin() + 1, moved.charges.end());
        moved.charges[e - 1] -= l;
    }
    auto back = tau_e_inverse(moved.mp, moved.charges);
    auto out = tau_l(back.partition, back.m, e, l);
    if (out.charges != charges) throw error("transport did not return to the original multicharge");
    return out.mp;
}

}  // namespace abacus
