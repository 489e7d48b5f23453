#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schubert {

/// A finite association scheme candidate: a base set of point indices and a
/// total labeling of ordered pairs, label 0 reserved for the diagonal.
/// Membership is either a dense label matrix or a computing closure.
class SchemeInstance {
public:
    using Label = std::uint16_t;

    SchemeInstance() = default;

    static SchemeInstance dense(std::size_t size, std::size_t label_count, std::vector<Label> matrix);
    static SchemeInstance lazy(std::size_t size, std::size_t label_count,
                               std::function<Label(std::size_t, std::size_t)> fn);

    std::size_t size() const { return size_; }
    std::size_t label_count() const { return label_count_; }
    bool is_dense() const { return !matrix_.empty(); }

    Label label(std::size_t x, std::size_t y) const {
        return is_dense() ? matrix_[x * size_ + y] : fn_(x, y);
    }

private:
    std::size_t size_ = 0;
    std::size_t label_count_ = 0;
    std::vector<Label> matrix_;
    std::function<Label(std::size_t, std::size_t)> fn_;
};

struct VerifyOptions {
    std::size_t exhaustive_cap = 1024;     // full O(n^3) constancy check up to this size
    std::uint64_t sample_budget = 100000;  // z-evaluations when sampling
    std::uint64_t seed = 0;
};

struct SchemeVerdict {
    bool ok = false;
    bool exhaustive = true;  // false: sampled verification (flagged)
    std::string counterexample;
    std::size_t size = 0;
    std::size_t labels = 0;
    bool symmetric = false;
    std::vector<std::size_t> transpose;       // label i -> i*
    std::vector<std::uint64_t> valency;       // n_i
    std::vector<std::uint32_t> p;             // p[k][i][j], exhaustive mode only

    std::uint32_t pnum(std::size_t k, std::size_t i, std::size_t j) const {
        return p[(k * labels + i) * labels + j];
    }
};

/// Checks the axioms: every label occurs, label 0 is exactly the diagonal,
/// each relation's transpose is a relation, and the intersection numbers
/// p^k_{ij} do not depend on the representative pair. Reports the first
/// counterexample. Sizes above exhaustive_cap fall back to seeded sampling.
SchemeVerdict verify_scheme(const SchemeInstance& s, const VerifyOptions& opts = {});

bool is_symmetric(const SchemeInstance& s);

/// Out-degrees n_i of vertex 0; verifies they are constant over all vertices
/// and sum to the size.
std::vector<std::uint64_t> valencies(const SchemeInstance& s);

/// The scheme on q points with the two relations equality / inequality.
SchemeInstance one_class_scheme(std::size_t q);

/// Relations on Z/n by difference (y - x) mod n; a valid scheme, and not
/// symmetric for n >= 3.
SchemeInstance cyclic_difference_scheme(std::size_t n);

}  // namespace schubert
