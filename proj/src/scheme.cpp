#include "schubert/scheme.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace schubert {

SchemeInstance SchemeInstance::dense(std::size_t size, std::size_t label_count, std::vector<Label> matrix) {
    if (matrix.size() != size * size) throw std::invalid_argument("label matrix size mismatch");
    SchemeInstance s;
    s.size_ = size;
    s.label_count_ = label_count;
    s.matrix_ = std::move(matrix);
    return s;
}

SchemeInstance SchemeInstance::lazy(std::size_t size, std::size_t label_count,
                                    std::function<Label(std::size_t, std::size_t)> fn) {
    SchemeInstance s;
    s.size_ = size;
    s.label_count_ = label_count;
    s.fn_ = std::move(fn);
    return s;
}

namespace {

std::string pair_str(std::size_t x, std::size_t y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

/// Count vector scratch with epoch stamping, so per-pair resets are free.
struct Counts {
    std::vector<std::uint32_t> value;
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;

    explicit Counts(std::size_t n) : value(n, 0), stamp(n, 0) {}
    void reset() { ++epoch; }
    void add(std::size_t i) {
        if (stamp[i] != epoch) {
            stamp[i] = epoch;
            value[i] = 0;
        }
        ++value[i];
    }
    std::uint32_t get(std::size_t i) const { return stamp[i] == epoch ? value[i] : 0; }
};

/// Shared first-phase checks: diagonal, label range, occurrence, transpose.
/// Returns false with a counterexample on failure. pair_source yields the
/// pairs to inspect ((x,y) for all scanned pairs).
bool basic_checks(const SchemeInstance& s, SchemeVerdict& v, bool full_scan, std::mt19937_64& rng,
                  std::uint64_t sample_pairs) {
    const std::size_t n = s.size();
    const std::size_t L = s.label_count();
    for (std::size_t x = 0; x < n; ++x) {
        if (s.label(x, x) != 0) {
            v.counterexample = "label" + pair_str(x, x) + " != 0 on the diagonal";
            return false;
        }
    }

    v.transpose.assign(L, SIZE_MAX);
    std::vector<char> seen(L, 0);
    seen[0] = 1;
    v.transpose[0] = 0;

    auto inspect = [&](std::size_t x, std::size_t y) -> bool {
        const std::size_t i = s.label(x, y);
        if (i >= L) {
            v.counterexample = "label" + pair_str(x, y) + " out of range";
            return false;
        }
        if (x != y && i == 0) {
            v.counterexample = "label" + pair_str(x, y) + " == 0 off the diagonal";
            return false;
        }
        seen[i] = 1;
        const std::size_t j = s.label(y, x);
        if (v.transpose[i] == SIZE_MAX)
            v.transpose[i] = j;
        else if (v.transpose[i] != j) {
            v.counterexample = "transpose of relation " + std::to_string(i) + " is ambiguous at " + pair_str(x, y);
            return false;
        }
        return true;
    };

    if (full_scan) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (!inspect(x, y)) return false;
        for (std::size_t i = 0; i < L; ++i)
            if (!seen[i]) {
                v.counterexample = "relation " + std::to_string(i) + " is empty";
                return false;
            }
    } else {
        for (std::uint64_t t = 0; t < sample_pairs; ++t)
            if (!inspect(rng() % n, rng() % n)) return false;
    }

    for (std::size_t i = 0; i < L; ++i) {
        if (v.transpose[i] == SIZE_MAX) continue;
        const std::size_t j = v.transpose[i];
        if (v.transpose[j] != SIZE_MAX && v.transpose[j] != i) {
            v.counterexample = "transpose map is not an involution at relation " + std::to_string(i);
            return false;
        }
    }
    return true;
}

}  // namespace

SchemeVerdict verify_scheme(const SchemeInstance& s, const VerifyOptions& opts) {
    SchemeVerdict v;
    v.size = s.size();
    v.labels = s.label_count();
    const std::size_t n = s.size();
    const std::size_t L = s.label_count();
    if (n == 0 || L == 0) {
        v.counterexample = "empty scheme";
        return v;
    }
    v.exhaustive = n <= opts.exhaustive_cap;
    std::mt19937_64 rng(opts.seed);

    if (!basic_checks(s, v, v.exhaustive, rng, opts.sample_budget)) return v;

    Counts counts(L * L);
    auto pair_counts = [&](std::size_t x, std::size_t y) {
        counts.reset();
        for (std::size_t z = 0; z < n; ++z) counts.add(s.label(x, z) * L + s.label(z, y));
    };

    if (v.exhaustive) {
        // reference pair per label, then constancy over every pair
        v.p.assign(L * L * L, 0);
        std::vector<char> have_ref(L, 0);
        std::size_t missing = L;
        for (std::size_t x = 0; x < n && missing; ++x)
            for (std::size_t y = 0; y < n && missing; ++y) {
                const std::size_t k = s.label(x, y);
                if (have_ref[k]) continue;
                have_ref[k] = 1;
                --missing;
                pair_counts(x, y);
                for (std::size_t i = 0; i < L; ++i)
                    for (std::size_t j = 0; j < L; ++j)
                        v.p[(k * L + i) * L + j] = counts.get(i * L + j);
            }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const std::size_t k = s.label(x, y);
                pair_counts(x, y);
                for (std::size_t i = 0; i < L; ++i)
                    for (std::size_t j = 0; j < L; ++j)
                        if (counts.get(i * L + j) != v.p[(k * L + i) * L + j]) {
                            v.counterexample = "p^" + std::to_string(k) + "_{" + std::to_string(i) + "," +
                                               std::to_string(j) + "} differs at pair " + pair_str(x, y);
                            return v;
                        }
            }
    } else {
        // sampled constancy: random pairs with full z-sweeps within budget
        const std::uint64_t pairs = std::max<std::uint64_t>(1, opts.sample_budget / n);
        std::vector<std::vector<std::uint32_t>> ref(L);
        for (std::uint64_t t = 0; t < pairs; ++t) {
            const std::size_t x = rng() % n, y = rng() % n;
            const std::size_t k = s.label(x, y);
            pair_counts(x, y);
            if (ref[k].empty()) {
                ref[k].resize(L * L);
                for (std::size_t c = 0; c < L * L; ++c) ref[k][c] = counts.get(c);
            } else {
                for (std::size_t c = 0; c < L * L; ++c)
                    if (counts.get(c) != ref[k][c]) {
                        v.counterexample = "sampled intersection numbers differ at pair " + pair_str(x, y);
                        return v;
                    }
            }
        }
    }

    // valencies and the p^0 identities
    v.valency.assign(L, 0);
    for (std::size_t y = 0; y < n; ++y) ++v.valency[s.label(0, y)];
    if (v.exhaustive) {
        for (std::size_t x = 1; x < n; ++x) {
            std::vector<std::uint64_t> deg(L, 0);
            for (std::size_t y = 0; y < n; ++y) ++deg[s.label(x, y)];
            if (deg != v.valency) {
                v.counterexample = "out-degrees differ between vertices 0 and " + std::to_string(x);
                return v;
            }
        }
        for (std::size_t i = 0; i < L; ++i)
            for (std::size_t j = 0; j < L; ++j) {
                const std::uint32_t expect = (j == v.transpose[i]) ? static_cast<std::uint32_t>(v.valency[i]) : 0;
                if (v.pnum(0, i, j) != expect) {
                    v.counterexample = "p^0 identity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")";
                    return v;
                }
            }
    }

    v.symmetric = true;
    for (std::size_t i = 0; i < L; ++i)
        if (v.transpose[i] != SIZE_MAX && v.transpose[i] != i) v.symmetric = false;
    v.ok = true;
    return v;
}

bool is_symmetric(const SchemeInstance& s) {
    for (std::size_t x = 0; x < s.size(); ++x)
        for (std::size_t y = x + 1; y < s.size(); ++y)
            if (s.label(x, y) != s.label(y, x)) return false;
    return true;
}

std::vector<std::uint64_t> valencies(const SchemeInstance& s) {
    std::vector<std::uint64_t> deg(s.label_count(), 0);
    for (std::size_t y = 0; y < s.size(); ++y) ++deg[s.label(0, y)];
    for (std::size_t x = 1; x < s.size(); ++x) {
        std::vector<std::uint64_t> d(s.label_count(), 0);
        for (std::size_t y = 0; y < s.size(); ++y) ++d[s.label(x, y)];
        if (d != deg) throw std::logic_error("valencies are not constant across vertices");
    }
    std::uint64_t total = 0;
    for (auto v : deg) total += v;
    if (total != s.size()) throw std::logic_error("valencies do not sum to the size");
    return deg;
}

SchemeInstance one_class_scheme(std::size_t q) {
    if (q < 2) throw std::invalid_argument("a one-class scheme needs at least 2 points");
    return SchemeInstance::lazy(q, 2, [](std::size_t x, std::size_t y) -> SchemeInstance::Label {
        return x == y ? 0 : 1;
    });
}

SchemeInstance cyclic_difference_scheme(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cyclic difference scheme needs at least 2 points");
    return SchemeInstance::lazy(n, n, [n](std::size_t x, std::size_t y) -> SchemeInstance::Label {
        return static_cast<SchemeInstance::Label>((y + n - x) % n);
    });
}

}  // namespace schubert
