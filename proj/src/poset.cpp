#include "schubert/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

Poset Poset::from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    Poset p;
    p.n_ = n;
    p.words_ = (n + 63) / 64;
    p.up_.assign(n * p.words_, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (leq(a, b)) p.up_[a * p.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
    p.validate();
    return p;
}

Poset Poset::from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    Poset p;
    p.n_ = n;
    p.words_ = (n + 63) / 64;
    p.up_.assign(n * p.words_, 0);
    for (std::size_t a = 0; a < n; ++a) p.up_[a * p.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
    for (auto [lo, hi] : covers) {
        if (lo >= n || hi >= n) throw std::invalid_argument("cover index out of range");
        if (lo == hi) throw std::invalid_argument("cover relates an element to itself");
        p.up_[lo * p.words_ + hi / 64] |= std::uint64_t{1} << (hi % 64);
    }
    // transitive closure
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (a == b || !p.leq(a, b)) continue;
                for (std::size_t w = 0; w < p.words_; ++w) {
                    const std::uint64_t merged = p.up_[a * p.words_ + w] | p.up_[b * p.words_ + w];
                    if (merged != p.up_[a * p.words_ + w]) {
                        p.up_[a * p.words_ + w] = merged;
                        changed = true;
                    }
                }
            }
    }
    p.validate();
    return p;
}

void Poset::validate() const {
    for (std::size_t a = 0; a < n_; ++a)
        if (!leq(a, a)) throw std::invalid_argument("relation is not reflexive");
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b)
            if (a != b && leq(a, b) && leq(b, a))
                throw std::invalid_argument("relation is not antisymmetric (contains a cycle)");
    for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) {
            if (!leq(a, b)) continue;
            for (std::size_t w = 0; w < words_; ++w)
                if (up_[b * words_ + w] & ~up_[a * words_ + w])
                    throw std::invalid_argument("relation is not transitive");
        }
}

bool Poset::is_antichain(const std::vector<std::size_t>& s) const {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (comparable(s[i], s[j])) return false;
    return true;
}

std::vector<std::size_t> Poset::down_set(const std::vector<std::size_t>& antichain) const {
    if (!is_antichain(antichain)) throw std::invalid_argument("down_set requires an anti-chain");
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y : antichain)
            if (less(x, y)) {
                out.push_back(x);
                break;
            }
    return out;
}

std::vector<std::vector<std::size_t>> Poset::antichains(std::size_t max_elements) const {
    if (n_ > max_elements) throw std::invalid_argument("anti-chain enumeration bound exceeded");
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        out.push_back(current);
        for (std::size_t e = next; e < n_; ++e) {
            bool ok = true;
            for (std::size_t c : current)
                if (comparable(c, e)) { ok = false; break; }
            if (!ok) continue;
            current.push_back(e);
            self(self, e + 1);
            current.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<std::size_t> Poset::maximal_of(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (std::size_t x : subset) {
        bool maximal = true;
        for (std::size_t y : subset)
            if (less(x, y)) { maximal = false; break; }
        if (maximal) out.push_back(x);
    }
    return out;
}

}  // namespace schubert
