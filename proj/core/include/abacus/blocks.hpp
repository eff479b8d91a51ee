#pragma once

#include <vector>

#include "abacus/actions.hpp"

namespace abacus {

// B(s_e, w) with its context (e, l, m).
struct BlockId {
    Charges core_multicharge;
    int weight = 0;
    int e = 2;
    int l = 1;
    int m = 0;
    bool operator==(const BlockId&) const = default;
};

// Weight first, then core multicharge.
bool operator<(const BlockId& a, const BlockId& b);

BlockId make_block_id(const Charges& s_e, int weight, int l);

struct Block {
    BlockId id;
    std::vector<Multipartition> members;
};

BlockId block_id(const Multipartition& mp, const Charges& charges, int e);
std::vector<Block> blocks_of(int n, const Charges& charges, int e);

// Layer n of the crystal generated from the empty multipartition by the e_tilde operators.
std::vector<Multipartition> uglov_set(const Charges& charges, int e, int n);

// Charge inequality: s_i - s_{i-1} >= w, and s_0 - s_{e-1} >= w + l when i = 0.
bool is_scopes(const BlockId& b, int i);
// Every member of the block, over all e-quotients of size w, has no addable i-node.
bool is_scopes_brute(const BlockId& b, int i);
std::vector<Charged> block_members(const BlockId& b);

BlockId block_action(const GroupWord& g, const BlockId& b);
bool orbit_equivalent(const BlockId& a, const BlockId& b);

Multipartition realize_multicharge(const Charges& start, const Charges& target, int e);
// Sequence of unit charge transfers (from, to) leading start to target.
std::vector<std::pair<int, int>> charge_transfers(const Charges& start, const Charges& target);
std::vector<Charges> reachable_multicharges(const Charges& start, int e, int bound);

}  // namespace abacus
