#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace schubert {

/// Finite poset over elements 0..size-1 with a precomputed comparability
/// table. Order axioms are verified on construction.
class Poset {
public:
    Poset() = default;

    static Poset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);
    /// covers are (lower, upper) pairs; the order is the reflexive-transitive
    /// closure. Throws on cycles.
    static Poset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers);

    std::size_t size() const { return n_; }
    bool leq(std::size_t a, std::size_t b) const { return (up_[a * words_ + b / 64] >> (b % 64)) & 1; }
    bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    bool is_antichain(const std::vector<std::size_t>& s) const;

    /// Strictly-below set of an anti-chain: {x | x < y for some y in Y}.
    /// Disjoint from Y itself. Throws if Y is not an anti-chain.
    std::vector<std::size_t> down_set(const std::vector<std::size_t>& antichain) const;

    /// All anti-chains (including the empty one), each once, in a fixed
    /// order with the empty anti-chain first. Throws if size exceeds the bound.
    std::vector<std::vector<std::size_t>> antichains(std::size_t max_elements = 64) const;

    /// Maximal elements of an arbitrary subset.
    std::vector<std::size_t> maximal_of(const std::vector<std::size_t>& subset) const;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> up_;  // row a = bitmask of {b : a <= b}

    void validate() const;
};

}  // namespace schubert
