#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abacus/quotient.hpp"

namespace abacus {

struct Letter {
    enum Kind { sigma, tau, tau_inv };
    Kind kind = sigma;
    int index = 0;
    bool operator==(const Letter&) const = default;
};

struct GroupWord {
    std::vector<Letter> letters;
    bool operator==(const GroupWord&) const = default;
};

// Tokens "s0", "s1", ..., "t" (tau) and "T" (tau inverse), whitespace separated.
GroupWord parse_word(const std::string& text);
std::vector<std::string> word_tokens(const GroupWord& w);
GroupWord word_sigma(int i);

// Left action on Z^e; the word is applied right to left.
Charges act_charge_e(const GroupWord& w, const Charges& s, int l);
// Right action on Z^l; the word is applied left to right.
Charges act_charge_l(const Charges& s, const GroupWord& w, int e);

using BeadSet = std::vector<int>;
std::pair<BeadSet, BeadSet> pair_symbols(const BeadSet& x, const BeadSet& y);

// Crystal isomorphism from (mp, s) to the multipartition at s.w.
Charged psi(const Multipartition& mp, const Charges& charges, const GroupWord& w, int e);

// Adds every addable i-node and removes every removable i-node.
Multipartition sigma_ordinary(int i, const Multipartition& mp, const Charges& charges, int e);

struct Signature {
    std::string word;
    std::vector<Node> nodes;
    std::string reduced;
    std::vector<Node> reduced_nodes;
    std::optional<Node> good_addable;
    std::optional<Node> good_removable;
};

Signature i_signature(const Multipartition& mp, const Charges& charges, int e, int i);
std::optional<Multipartition> e_tilde(int i, const Multipartition& mp, const Charges& charges, int e);
std::optional<Multipartition> f_tilde(int i, const Multipartition& mp, const Charges& charges, int e);

Multipartition sigma_star(int i, const Multipartition& mp, const Charges& charges, int e);
Multipartition duality_transport(int i, const Multipartition& mp, const Charges& charges, int e);

}  // namespace abacus
