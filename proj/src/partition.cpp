#include "schubert/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be non-negative");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::subpartition_of(const Partition& lam) const {
    if (length() > lam.length()) {
        for (int i = lam.length(); i < length(); ++i)
            if (part(i) > 0) return false;
    }
    for (int i = 0; i < std::min(length(), lam.length()); ++i)
        if (part(i) > lam.part(i)) return false;
    return true;
}

std::vector<Pos> Partition::cells() const {
    std::vector<Pos> out;
    for (int i = 0; i < length(); ++i)
        for (int j = 1; j <= part(i); ++j) out.push_back({i + 1, j});
    return out;
}

std::vector<Pos> Partition::maximal_cells() const {
    std::vector<Pos> out;
    for (int i = 0; i < length(); ++i) {
        if (part(i) == 0) continue;
        if (i + 1 == length() || part(i + 1) < part(i)) out.push_back({i + 1, part(i)});
    }
    return out;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (int i = 0; i < length(); ++i) {
        if (i) s += ",";
        s += std::to_string(part(i));
    }
    return s + ")";
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> mu(static_cast<std::size_t>(lambda.length()), 0);
    std::function<void(int, int)> rec = [&](int i, int prev) {
        if (i == lambda.length()) {
            out.emplace_back(mu);
            return;
        }
        const int cap = std::min(prev, lambda.part(i));
        for (int v = 0; v <= cap; ++v) {
            mu[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
        mu[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, lambda.length() ? lambda.part(0) : 0);
    return out;
}

std::vector<Partition> partitions_in_box(int length, int max_part) {
    std::vector<Partition> out;
    std::vector<int> parts(static_cast<std::size_t>(length), 0);
    std::function<void(int, int)> rec = [&](int i, int prev) {
        if (i == length) {
            out.emplace_back(parts);
            return;
        }
        for (int v = 0; v <= prev; ++v) {
            parts[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
        parts[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, max_part);
    return out;
}

Poset ferrers_poset(const Partition& shape, std::vector<Pos>* cells_out) {
    const std::vector<Pos> cells = shape.cells();
    if (cells_out) *cells_out = cells;
    return Poset::from_relation(cells.size(), [&](std::size_t a, std::size_t b) {
        return pos_leq(cells[a], cells[b]);
    });
}

bool is_pivot_antichain(const std::vector<Pos>& alpha, int n, int m) {
    if (static_cast<int>(alpha.size()) != m) return false;
    for (Pos p : alpha)
        if (p.row < 1 || p.row > n || p.col < 1 || p.col > m) return false;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::size_t j = i + 1; j < alpha.size(); ++j)
            if (pos_comparable(alpha[i], alpha[j])) return false;
    return true;
}

namespace {

/// Pivot row per column 1..m (k_1 > k_2 > ... > k_m). Validates alpha.
std::vector<int> pivot_rows_by_column(const std::vector<Pos>& alpha, int n, int m) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("m must satisfy 1 <= m <= n-1");
    if (!is_pivot_antichain(alpha, n, m))
        throw std::invalid_argument("not a pivot anti-chain of size m in [n] x [m]");
    std::vector<int> k(static_cast<std::size_t>(m) + 1, 0);
    for (Pos p : alpha) k[static_cast<std::size_t>(p.col)] = p.row;
    return k;
}

}  // namespace

std::vector<int> pivot_free_rows(const std::vector<Pos>& alpha, int n) {
    std::vector<bool> has_pivot(static_cast<std::size_t>(n) + 1, false);
    for (Pos p : alpha) has_pivot[static_cast<std::size_t>(p.row)] = true;
    std::vector<int> out;
    for (int r = 1; r <= n; ++r)
        if (!has_pivot[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

std::vector<Pos> free_positions(const std::vector<Pos>& alpha, int n, int m) {
    const std::vector<int> k = pivot_rows_by_column(alpha, n, m);
    std::vector<Pos> out;
    for (int r : pivot_free_rows(alpha, n))
        for (int c = 1; c <= m; ++c)
            if (k[static_cast<std::size_t>(c)] > r) out.push_back({r, c});
    return out;
}

Partition pivot_partition(const std::vector<Pos>& alpha, int n, int m) {
    const std::vector<int> k = pivot_rows_by_column(alpha, n, m);
    std::vector<int> parts;
    for (int r : pivot_free_rows(alpha, n)) {
        int count = 0;
        for (int c = 1; c <= m; ++c)
            if (k[static_cast<std::size_t>(c)] > r) ++count;
        parts.push_back(count);
    }
    return Partition(parts);
}

std::vector<Pos> partition_pivots(const Partition& lambda, int n, int m) {
    if (m < 1 || m > n - 1)
        throw std::invalid_argument("m must satisfy 1 <= m <= n-1");
    if (lambda.length() != n - m)
        throw std::invalid_argument("partition length must equal n-m");
    if (lambda.length() > 0 && lambda.part(0) > m)
        throw std::invalid_argument("partition parts must not exceed m");
    std::vector<int> merged = lambda.parts();
    for (int v = m; v >= 1; --v) merged.push_back(v);
    std::sort(merged.rbegin(), merged.rend());
    return Partition(merged).maximal_cells();
}

std::vector<std::pair<Pos, Pos>> board_embedding(const std::vector<Pos>& alpha, int n, int m) {
    const Partition lambda = pivot_partition(alpha, n, m);
    const std::vector<int> rows = pivot_free_rows(alpha, n);
    std::vector<std::pair<Pos, Pos>> map;
    for (Pos cell : lambda.cells())
        map.emplace_back(cell, Pos{rows[static_cast<std::size_t>(cell.row - 1)], cell.col});

    std::vector<Pos> image;
    for (const auto& [from, to] : map) image.push_back(to);
    std::vector<Pos> target = free_positions(alpha, n, m);
    std::sort(image.begin(), image.end());
    std::sort(target.begin(), target.end());
    if (image != target) throw std::logic_error("board_embedding: image differs from the free positions");
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = 0; j < map.size(); ++j)
            if (pos_leq(map[i].first, map[j].first) != pos_leq(map[i].second, map[j].second))
                throw std::logic_error("board_embedding: order not preserved");
    return map;
}

std::vector<Pos> subpartition_antichain(const Partition& mu, const std::vector<Pos>& alpha, int n, int m) {
    const Partition lambda = pivot_partition(alpha, n, m);
    if (!mu.subpartition_of(lambda))
        throw std::invalid_argument("mu is not a subpartition of the cell shape");
    const std::vector<int> rows = pivot_free_rows(alpha, n);
    std::vector<Pos> out;
    for (Pos cell : mu.maximal_cells())
        out.push_back({rows[static_cast<std::size_t>(cell.row - 1)], cell.col});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Pos>> all_pivot_antichains(int n, int m) {
    std::vector<std::vector<Pos>> out;
    for (const Partition& lambda : partitions_in_box(n - m, m))
        out.push_back(partition_pivots(lambda, n, m));
    return out;
}

}  // namespace schubert
