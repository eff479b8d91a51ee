#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace abacus {

using Partition = std::vector<int>;
using Multipartition = std::vector<Partition>;
using Charges = std::vector<int>;

// Raised on every domain violation; the CLI maps it to exit code 2.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline int mod(int a, int b) {
    int r = a % b;
    return r < 0 ? r + b : r;
}

inline int floor_div(int a, int b) {
    return (a - mod(a, b)) / b;
}

struct Symbol {
    Partition partition;
    int charge = 0;
    bool operator==(const Symbol&) const = default;
};

struct MultiSymbol {
    std::vector<Symbol> symbols;
    Charges multicharge() const;
    bool operator==(const MultiSymbol&) const = default;
};

// Cell (row, col) of component comp; rows and columns start at 1.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 0;
    auto operator<=>(const Node&) const = default;
};

bool is_partition(const Partition& p);
void check_partition(const Partition& p);
void check_multipartition(const Multipartition& mp, const Charges& charges);
void check_modulus(int e);

int size(const Partition& p);
int size(const Multipartition& mp);
int length(const Partition& p);

// beta_set returns beta_{m-rows} .. beta_{m-1} in increasing order.
std::vector<int> beta_set(const Partition& p, int m, int rows);
Partition partition_of_symbol(const std::vector<int>& betas, int m);

// All beads of X^m(p) at positions >= lo (everything below lo is a bead).
std::vector<int> beads_from(const Partition& p, int m, int lo);
// Inverse of beads_from: sorted beads above a fully occupied floor.
Symbol symbol_from_beads(const std::vector<int>& beads, int floor);

Symbol shift_symbol(const Symbol& s, int r);
MultiSymbol shift_symbol(const MultiSymbol& s, int r);
MultiSymbol make_multisymbol(const Multipartition& mp, const Charges& charges);

int content(const Node& n, const Charges& charges);
int residue(const Node& n, const Charges& charges, int e);

// Total order on nodes: content ascending, equal contents by larger component first.
bool node_before(const Node& a, const Node& b, const Charges& charges);

struct BoundaryNodes {
    std::vector<Node> addable;
    std::vector<Node> removable;
};

BoundaryNodes boundary_nodes(const Multipartition& mp, const Charges& charges, int e, int i);
std::vector<int> count_nodes_by_residue(const Multipartition& mp, const Charges& charges, int e);

Multipartition add_node(const Multipartition& mp, const Node& n);
Multipartition remove_node(const Multipartition& mp, const Node& n);

// Header of position digits, then runner l-1 down to runner 0.
std::string render_abacus(const MultiSymbol& ms, int lo, int hi);

std::vector<Partition> partitions(int n);
std::vector<Multipartition> multipartitions(int n, int l);

}  // namespace abacus
