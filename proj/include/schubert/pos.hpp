#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace schubert {

/// 1-based matrix position (row, col). operator<=> is lexicographic and is
/// only used for canonical sorting; the partial (product) order lives in
/// pos_leq / pos_less.
struct Pos {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Pos&, const Pos&) = default;
};

/// Componentwise (direct product) order on positions.
inline bool pos_leq(Pos a, Pos b) { return a.row <= b.row && a.col <= b.col; }
inline bool pos_less(Pos a, Pos b) { return pos_leq(a, b) && a != b; }
inline bool pos_comparable(Pos a, Pos b) { return pos_leq(a, b) || pos_leq(b, a); }

std::string to_string(const std::vector<Pos>& ps);

}  // namespace schubert
