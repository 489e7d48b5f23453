#pragma once

#include <string>
#include <vector>

#include "schubert/pos.hpp"
#include "schubert/poset.hpp"

namespace schubert {

/// Integer partition as a non-increasing sequence of non-negative parts.
/// Trailing zeros are significant: (4,3,1) and (4,3,1,0) differ, because the
/// ambient length carries meaning when partitions index cells.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition zeros(int length) { return Partition(std::vector<int>(static_cast<std::size_t>(length), 0)); }

    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }
    int sum() const;

    bool operator==(const Partition&) const = default;
    bool subpartition_of(const Partition& lam) const;

    /// Ferrers board cells (i, j), 1 <= i <= length, 1 <= j <= part(i), in
    /// row-major order.
    std::vector<Pos> cells() const;
    /// Maximal cells of the board under the product order.
    std::vector<Pos> maximal_cells() const;

    std::string to_string() const;
};

/// All subpartitions mu <= lambda componentwise, emitted with the same length
/// as lambda, in lexicographically ascending order (the empty one first).
std::vector<Partition> subpartitions(const Partition& lambda);

/// All partitions of the given length with parts <= max_part, ascending.
std::vector<Partition> partitions_in_box(int length, int max_part);

/// Product-order poset on the Ferrers board; cells_out (optional) receives
/// the cell list aligned with the poset's element indices.
Poset ferrers_poset(const Partition& shape, std::vector<Pos>* cells_out = nullptr);

/// Pivot anti-chains: size-m anti-chains in [n] x [m]. Such a set has one
/// element per column 1..m, with strictly decreasing rows.
bool is_pivot_antichain(const std::vector<Pos>& alpha, int n, int m);

/// Rows of [n] that contain no pivot, ascending.
std::vector<int> pivot_free_rows(const std::vector<Pos>& alpha, int n);

/// The free positions of the cell: elements of Down(alpha) lying in
/// pivot-free rows, in row-major order. Throws unless 1 <= m <= n-1 and
/// alpha is a valid pivot anti-chain.
std::vector<Pos> free_positions(const std::vector<Pos>& alpha, int n, int m);

/// Row profile of the free positions: the partition whose i-th part counts
/// the free positions in the i-th pivot-free row. A bijection onto the
/// partitions of length n-m with parts <= m.
Partition pivot_partition(const std::vector<Pos>& alpha, int n, int m);

/// Inverse of pivot_partition: merge lambda with the staircase (m,...,1) and
/// take the maximal cells of the resulting board.
std::vector<Pos> partition_pivots(const Partition& lambda, int n, int m);

/// The order isomorphism from the Ferrers board of pivot_partition(alpha)
/// onto the free positions: (i, j) -> (d_i, j) with d the pivot-free rows.
/// Validated (bijective, order preserved and reflected) on construction.
std::vector<std::pair<Pos, Pos>> board_embedding(const std::vector<Pos>& alpha, int n, int m);

/// Anti-chain of free positions attached to a subpartition mu of
/// pivot_partition(alpha): the image of mu's maximal cells under the board
/// embedding. A bijection from subpartitions onto anti-chains.
std::vector<Pos> subpartition_antichain(const Partition& mu, const std::vector<Pos>& alpha, int n, int m);

/// All pivot anti-chains for given n, m, ordered by their partitions
/// (ascending as in partitions_in_box).
std::vector<std::vector<Pos>> all_pivot_antichains(int n, int m);

}  // namespace schubert
