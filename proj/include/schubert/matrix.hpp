#pragma once

#include <random>
#include <vector>

#include "schubert/gf.hpp"
#include "schubert/pos.hpp"

namespace schubert {

/// Dense matrix of field-element indices. Storage is row-major and 0-based;
/// Pos accessors are 1-based to match the combinatorial layer.
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, 0) {}

    static GfMatrix identity(int n);
    /// 0/1 matrix with ones exactly at the given positions.
    static GfMatrix indicator(int n, const std::vector<Pos>& ones);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Gf::Elem operator()(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    Gf::Elem& operator()(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    Gf::Elem at(Pos p) const { return (*this)(p.row - 1, p.col - 1); }
    void set(Pos p, Gf::Elem v) { (*this)(p.row - 1, p.col - 1) = v; }

    bool operator==(const GfMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Gf::Elem> e_;
};

/// Positions of nonzero entries, sorted by (row, col).
std::vector<Pos> support(const GfMatrix& m);

/// Maximal elements of the support under the product order (the pivots),
/// sorted by (row, col). Always an anti-chain.
std::vector<Pos> pivot_set(const GfMatrix& m);

/// Reduced reverse column echelon form test: zero columns rightmost, bottom
/// entries strictly descending to the left, each bottom entry 1 and alone in
/// its row.
bool is_rrcef(const GfMatrix& m);

/// Canonicalizes the column space of `generators` (n x k, k <= n) into the
/// unique n x n reduced reverse column echelon matrix, padding with zero
/// columns. Reduction picks the bottom-most usable pivot per column,
/// normalizes it to 1 and clears the pivot's row.
GfMatrix rrcef(const GfMatrix& generators, const Gf& f);

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b, const Gf& f);
GfMatrix mat_sub(const GfMatrix& a, const GfMatrix& b, const Gf& f);

/// Upper triangular with nonzero diagonal.
bool is_borel(const GfMatrix& g);
GfMatrix upper_inverse(const GfMatrix& g, const Gf& f);
GfMatrix random_borel(int n, const Gf& f, std::mt19937_64& rng);

/// Action of g on the subspace represented by the echelon matrix m:
/// rrcef(g * m). Throws if g is not upper triangular invertible.
GfMatrix borel_act(const GfMatrix& g, const GfMatrix& m, const Gf& f);

/// The unit-diagonal G in B with m == G * indicator(pivot_set(m));
/// verified by multiplication. Throws if m is not in RRCEF.
GfMatrix borel_factor(const GfMatrix& m, const Gf& f);

/// Joint factor for a pair m, n in one cell (equal pivot sets): G carries n's
/// columns on pivot rows and (m-n)'s columns on the rows of Piv(m-n), so that
/// n == G * y always holds, where y = indicator(alpha) and
/// x = indicator(alpha ∪ beta). The companion identity m == G * x holds
/// exactly when every nonzero column of m-n contains an element of beta;
/// left_exact records whether it does.
struct PairFactor {
    GfMatrix g;
    GfMatrix x;
    GfMatrix y;
    std::vector<Pos> beta;  // Piv(m - n)
    bool left_exact = false;
};
PairFactor pair_borel_factor(const GfMatrix& m, const GfMatrix& n, const Gf& f);

}  // namespace schubert
