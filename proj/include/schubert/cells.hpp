#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schubert/gf.hpp"
#include "schubert/matrix.hpp"
#include "schubert/partition.hpp"
#include "schubert/poset.hpp"
#include "schubert/scheme.hpp"

namespace schubert {

/// A Schubert cell of Gr(m, n) over a finite field: the set of RRCEF
/// matrices with a fixed pivot anti-chain. Points are encoded by their free
/// coordinates, listed in row-major order over the free positions; point
/// indices count in mixed radix base q with the first coordinate most
/// significant.
class SchubertCell {
public:
    using Coords = std::vector<Gf::Elem>;

    SchubertCell(int n, int m, std::vector<Pos> alpha, Gf field);
    SchubertCell(int n, int m, const Partition& lambda, Gf field);

    int n() const { return n_; }
    int m() const { return m_; }
    const Gf& field() const { return field_; }
    const std::vector<Pos>& pivots() const { return pivots_; }
    const std::vector<Pos>& free_positions() const { return free_; }
    const Partition& shape() const { return shape_; }
    const Poset& free_order() const { return free_order_; }

    std::size_t free_count() const { return free_.size(); }
    /// q^{number of free positions}; throws if it does not fit in 62 bits.
    std::uint64_t size() const;

    Coords coords_of_index(std::uint64_t idx) const;
    std::uint64_t index_of_coords(const Coords& c) const;

    GfMatrix matrix_of(const Coords& c) const;
    /// Extracts the free coordinates; throws if the matrix is not an RRCEF
    /// matrix with this cell's pivot set.
    Coords coords_of_matrix(const GfMatrix& m) const;

    /// The relation label of the ordered pair: Piv(A - B) of the represented
    /// matrices. Always an anti-chain of free positions; empty iff a == b.
    std::vector<Pos> relation_label(const Coords& a, const Coords& b) const;

    Coords random_coords(std::mt19937_64& rng) const;

    std::string describe() const;  // "n=7 m=4 q=2 lambda=(4,3,1)"

private:
    int n_;
    int m_;
    Gf field_;
    std::vector<Pos> pivots_;
    std::vector<Pos> free_;
    Partition shape_;
    Poset free_order_;

    void init();
};

/// The cell's association scheme: base set = cell points, labels = the
/// anti-chains of the free positions in enumeration order (label 0 empty),
/// membership by relation_label. Dense up to dense_cap points.
struct CellScheme {
    SchemeInstance scheme;
    std::vector<std::vector<Pos>> labels;
};
CellScheme build_cell_scheme(const SchubertCell& cell, std::size_t dense_cap = 4096);

struct TrialReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

/// Pivot sets are unchanged by the Borel action: random (G, M) trials.
TrialReport pivot_invariance_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed);

/// Relation labels are unchanged by the diagonal Borel action:
/// random (G, M, N) trials.
TrialReport label_invariance_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed);

/// The Borel action is transitive on the cell: for random (M, N) the
/// explicit witness G_M * G_N^{-1} built from borel_factor maps N to M.
TrialReport transitivity_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed);

}  // namespace schubert
