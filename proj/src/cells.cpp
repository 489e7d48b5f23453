#include "schubert/cells.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

SchubertCell::SchubertCell(int n, int m, std::vector<Pos> alpha, Gf field)
    : n_(n), m_(m), field_(std::move(field)), pivots_(std::move(alpha)) {
    std::sort(pivots_.begin(), pivots_.end());
    init();
}

SchubertCell::SchubertCell(int n, int m, const Partition& lambda, Gf field)
    : n_(n), m_(m), field_(std::move(field)), pivots_(partition_pivots(lambda, n, m)) {
    init();
}

void SchubertCell::init() {
    free_ = free_positions(pivots_, n_, m_);  // validates n, m, alpha
    shape_ = pivot_partition(pivots_, n_, m_);
    free_order_ = Poset::from_relation(free_.size(), [this](std::size_t a, std::size_t b) {
        return pos_leq(free_[a], free_[b]);
    });
}

std::uint64_t SchubertCell::size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < free_.size(); ++i) {
        if (s > (std::uint64_t{1} << 62) / field_.q())
            throw std::overflow_error("cell size does not fit in 62 bits");
        s *= field_.q();
    }
    return s;
}

SchubertCell::Coords SchubertCell::coords_of_index(std::uint64_t idx) const {
    Coords c(free_.size());
    for (std::size_t i = free_.size(); i-- > 0;) {
        c[i] = static_cast<Gf::Elem>(idx % field_.q());
        idx /= field_.q();
    }
    return c;
}

std::uint64_t SchubertCell::index_of_coords(const Coords& c) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < c.size(); ++i) idx = idx * field_.q() + c[i];
    return idx;
}

GfMatrix SchubertCell::matrix_of(const Coords& c) const {
    if (c.size() != free_.size()) throw std::invalid_argument("coordinate count mismatch");
    GfMatrix m = GfMatrix::indicator(n_, pivots_);
    for (std::size_t i = 0; i < free_.size(); ++i) m.set(free_[i], c[i]);
    return m;
}

SchubertCell::Coords SchubertCell::coords_of_matrix(const GfMatrix& m) const {
    if (m.rows() != n_ || m.cols() != n_ || !is_rrcef(m) || pivot_set(m) != pivots_)
        throw std::invalid_argument("matrix does not belong to this cell");
    Coords c(free_.size());
    for (std::size_t i = 0; i < free_.size(); ++i) c[i] = m.at(free_[i]);
    return c;
}

std::vector<Pos> SchubertCell::relation_label(const Coords& a, const Coords& b) const {
    return pivot_set(mat_sub(matrix_of(a), matrix_of(b), field_));
}

SchubertCell::Coords SchubertCell::random_coords(std::mt19937_64& rng) const {
    Coords c(free_.size());
    for (auto& v : c) v = field_.random_element(rng);
    return c;
}

std::string SchubertCell::describe() const {
    return "n=" + std::to_string(n_) + " m=" + std::to_string(m_) + " q=" + std::to_string(field_.q()) +
           " lambda=" + shape_.to_string();
}

CellScheme build_cell_scheme(const SchubertCell& cell, std::size_t dense_cap) {
    CellScheme out;
    const auto index_lists = cell.free_order().antichains();
    out.labels.reserve(index_lists.size());
    std::unordered_map<std::uint64_t, SchemeInstance::Label> by_mask;
    for (const auto& idxs : index_lists) {
        std::vector<Pos> ps;
        std::uint64_t mask = 0;
        for (std::size_t i : idxs) {
            ps.push_back(cell.free_positions()[i]);
            mask |= std::uint64_t{1} << i;
        }
        std::sort(ps.begin(), ps.end());
        by_mask.emplace(mask, static_cast<SchemeInstance::Label>(out.labels.size()));
        out.labels.push_back(std::move(ps));
    }

    // position -> free index, for turning relation labels into masks
    std::unordered_map<std::uint64_t, std::size_t> free_index;
    for (std::size_t i = 0; i < cell.free_positions().size(); ++i) {
        const Pos p = cell.free_positions()[i];
        free_index.emplace((std::uint64_t{(std::uint32_t)p.row} << 32) | static_cast<std::uint32_t>(p.col), i);
    }
    auto label_of = [&, by_mask, free_index](const std::vector<Pos>& beta) -> SchemeInstance::Label {
        std::uint64_t mask = 0;
        for (Pos p : beta) {
            const auto it =
                free_index.find((std::uint64_t{(std::uint32_t)p.row} << 32) | static_cast<std::uint32_t>(p.col));
            if (it == free_index.end()) throw std::logic_error("relation label left the free positions");
            mask |= std::uint64_t{1} << it->second;
        }
        const auto it = by_mask.find(mask);
        if (it == by_mask.end()) throw std::logic_error("relation label is not an anti-chain of free positions");
        return it->second;
    };

    const std::uint64_t size = cell.size();
    if (size <= dense_cap) {
        // materialize all point matrices once, then label every pair
        std::vector<GfMatrix> mats;
        mats.reserve(size);
        for (std::uint64_t i = 0; i < size; ++i) mats.push_back(cell.matrix_of(cell.coords_of_index(i)));
        std::vector<SchemeInstance::Label> matrix(size * size);
        const Gf& f = cell.field();
        for (std::uint64_t x = 0; x < size; ++x)
            for (std::uint64_t y = 0; y < size; ++y)
                matrix[x * size + y] = label_of(pivot_set(mat_sub(mats[x], mats[y], f)));
        out.scheme = SchemeInstance::dense(size, out.labels.size(), std::move(matrix));
    } else {
        const SchubertCell* c = &cell;
        out.scheme = SchemeInstance::lazy(size, out.labels.size(),
                                          [c, label_of](std::size_t x, std::size_t y) -> SchemeInstance::Label {
                                              return label_of(c->relation_label(c->coords_of_index(x),
                                                                                c->coords_of_index(y)));
                                          });
    }
    return out;
}

TrialReport pivot_invariance_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed) {
    TrialReport rep;
    std::mt19937_64 rng(seed);
    const Gf& f = cell.field();
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const GfMatrix m = cell.matrix_of(cell.random_coords(rng));
        const GfMatrix g = random_borel(cell.n(), f, rng);
        if (pivot_set(borel_act(g, m, f)) != cell.pivots()) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "pivot set changed at trial " + std::to_string(t);
        }
    }
    return rep;
}

TrialReport label_invariance_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed) {
    TrialReport rep;
    std::mt19937_64 rng(seed);
    const Gf& f = cell.field();
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const GfMatrix m = cell.matrix_of(cell.random_coords(rng));
        const GfMatrix n = cell.matrix_of(cell.random_coords(rng));
        const GfMatrix g = random_borel(cell.n(), f, rng);
        const auto before = pivot_set(mat_sub(m, n, f));
        const auto after = pivot_set(mat_sub(borel_act(g, m, f), borel_act(g, n, f), f));
        if (before != after) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "label changed at trial " + std::to_string(t);
        }
    }
    return rep;
}

TrialReport transitivity_trial(const SchubertCell& cell, std::uint64_t trials, std::uint64_t seed) {
    TrialReport rep;
    std::mt19937_64 rng(seed);
    const Gf& f = cell.field();
    for (std::uint64_t t = 0; t < trials; ++t) {
        ++rep.trials;
        const GfMatrix m = cell.matrix_of(cell.random_coords(rng));
        const GfMatrix n = cell.matrix_of(cell.random_coords(rng));
        // borel_factor verifies each factor identity by exact multiplication
        const GfMatrix g = mat_mul(borel_factor(m, f), upper_inverse(borel_factor(n, f), f), f);
        if (borel_act(g, n, f) != m) {
            ++rep.failures;
            if (rep.first_failure.empty()) rep.first_failure = "witness failed at trial " + std::to_string(t);
        }
    }
    return rep;
}

}  // namespace schubert
