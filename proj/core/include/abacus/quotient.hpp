#pragma once

#include <random>

#include "abacus/partition.hpp"

namespace abacus {

// A multipartition together with its multicharge.
struct Charged {
    Multipartition mp;
    Charges charges;
    bool operator==(const Charged&) const = default;
};

struct ChargedPartition {
    Partition partition;
    int m = 0;
    bool operator==(const ChargedPartition&) const = default;
};

struct CoreData {
    Charges core_multicharge;
    Partition core_partition;
    int weight = 0;
    bool operator==(const CoreData&) const = default;
};

struct GeneralizedCore {
    Multipartition core_mp;
    Charges core_charges;
    int weight = 0;
    bool operator==(const GeneralizedCore&) const = default;
};

// Runner j of the e-abacus holds {k : j + k e in X^m(p)}. slack only widens the window.
Charged tau_e(const Partition& p, int m, int e, int slack = 0);
ChargedPartition tau_e_inverse(const Multipartition& q, const Charges& s_e);
Partition e_core_partition(const Partition& p, int e);
CoreData core_data(const Partition& p, int m, int e);

// beta = c + e d + e l k goes to component l-1-d with value c + e k.
Charged tau_l(const Partition& p, int m, int e, int l, int slack = 0);
ChargedPartition tau_l_inverse(const Multipartition& mp, const Charges& charges, int e);

// Rectangle rotation from the l-abacus to the e-abacus.
Charged level_rank_transpose(const Multipartition& mp, const Charges& charges, int e);

// 0 <= s_j - s_i < e (strict) or <= e (closed) for all i < j.
bool in_fundamental_domain(const Charges& s, int e);
bool in_closed_domain(const Charges& s, int e);
void check_fundamental_domain(const Charges& s, int e);

GeneralizedCore generalized_core(const Multipartition& mp, const Charges& charges, int e);
// Any charges; with rng the applicable operation is chosen at random each step.
GeneralizedCore generalized_core_unchecked(const Multipartition& mp, const Charges& charges, int e,
                                           std::mt19937* rng = nullptr);
// Same fixed point read off the transpose: tau^l of the e-core.
GeneralizedCore core_via_transpose(const Multipartition& mp, const Charges& charges, int e);
int weight(const Multipartition& mp, const Charges& charges, int e);
// Every result of exactly one elementary operation.
std::vector<Charged> elementary_moves(const Multipartition& mp, const Charges& charges, int e);

bool is_nested(const Multipartition& mp, const Charges& charges, int e);
bool has_no_mixed_residue(const Multipartition& mp, const Charges& charges, int e);
bool is_core(const Multipartition& mp, const Charges& charges, int e);
bool is_core_by_nodes(const Multipartition& mp, const Charges& charges, int e);

// l-multicharge of tau^l applied to the e-core with multicharge s_e.
Charges core_l_charges(const Charges& s_e, int l);

}  // namespace abacus
