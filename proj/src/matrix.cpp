#include "schubert/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

std::string to_string(const std::vector<Pos>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(ps[i].row) + "," + std::to_string(ps[i].col) + ")";
    }
    return s + "}";
}

GfMatrix GfMatrix::identity(int n) {
    GfMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

GfMatrix GfMatrix::indicator(int n, const std::vector<Pos>& ones) {
    GfMatrix m(n, n);
    for (Pos p : ones) m.set(p, 1);
    return m;
}

std::vector<Pos> support(const GfMatrix& m) {
    std::vector<Pos> out;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) out.push_back({r + 1, c + 1});
    return out;
}

std::vector<Pos> pivot_set(const GfMatrix& m) {
    const std::vector<Pos> supp = support(m);
    std::vector<Pos> out;
    for (Pos p : supp) {
        bool maximal = true;
        for (Pos q : supp)
            if (pos_less(p, q)) { maximal = false; break; }
        if (maximal) out.push_back(p);
    }
    return out;
}

namespace {

/// 0-based index of the last nonzero entry of column c, or -1.
int bottom_row(const GfMatrix& m, int c) {
    for (int r = m.rows() - 1; r >= 0; --r)
        if (m(r, c) != 0) return r;
    return -1;
}

int bottom_row(const std::vector<Gf::Elem>& col) {
    for (int r = static_cast<int>(col.size()) - 1; r >= 0; --r)
        if (col[static_cast<std::size_t>(r)] != 0) return r;
    return -1;
}

}  // namespace

bool is_rrcef(const GfMatrix& m) {
    std::vector<int> bottoms(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) bottoms[static_cast<std::size_t>(c)] = bottom_row(m, c);

    // (CE1) zero columns right of all nonzero columns
    bool seen_zero = false;
    for (int c = 0; c < m.cols(); ++c) {
        if (bottoms[static_cast<std::size_t>(c)] < 0)
            seen_zero = true;
        else if (seen_zero)
            return false;
    }
    // (CE2) bottom entries strictly descend toward the left
    for (int c = 0; c + 1 < m.cols(); ++c) {
        if (bottoms[static_cast<std::size_t>(c)] < 0 || bottoms[static_cast<std::size_t>(c + 1)] < 0) continue;
        if (bottoms[static_cast<std::size_t>(c)] <= bottoms[static_cast<std::size_t>(c + 1)]) return false;
    }
    // (CE3) every bottom entry is 1 and alone in its row
    for (int c = 0; c < m.cols(); ++c) {
        const int r = bottoms[static_cast<std::size_t>(c)];
        if (r < 0) continue;
        if (m(r, c) != 1) return false;
        for (int c2 = 0; c2 < m.cols(); ++c2)
            if (c2 != c && m(r, c2) != 0) return false;
    }
    return true;
}

GfMatrix rrcef(const GfMatrix& generators, const Gf& f) {
    const int n = generators.rows();
    std::vector<std::vector<Gf::Elem>> cols;
    for (int c = 0; c < generators.cols(); ++c) {
        std::vector<Gf::Elem> col(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) col[static_cast<std::size_t>(r)] = generators(r, c);
        if (bottom_row(col) >= 0) cols.push_back(std::move(col));
    }

    std::vector<std::vector<Gf::Elem>> chosen;
    auto eliminate_row = [&](std::vector<Gf::Elem>& d, const std::vector<Gf::Elem>& pivot_col, int r) {
        const Gf::Elem factor = d[static_cast<std::size_t>(r)];
        if (factor == 0) return;
        for (int i = 0; i <= r; ++i)
            d[static_cast<std::size_t>(i)] =
                f.sub(d[static_cast<std::size_t>(i)], f.mul(factor, pivot_col[static_cast<std::size_t>(i)]));
    };

    for (int r = n - 1; r >= 0; --r) {
        int found = -1;
        for (std::size_t i = 0; i < cols.size(); ++i)
            if (bottom_row(cols[i]) == r) { found = static_cast<int>(i); break; }
        if (found < 0) continue;
        std::vector<Gf::Elem> piv = std::move(cols[static_cast<std::size_t>(found)]);
        cols.erase(cols.begin() + found);

        const Gf::Elem scale = f.inv(piv[static_cast<std::size_t>(r)]);
        for (int i = 0; i <= r; ++i)
            piv[static_cast<std::size_t>(i)] = f.mul(piv[static_cast<std::size_t>(i)], scale);

        for (auto& d : cols) eliminate_row(d, piv, r);
        for (auto& d : chosen) eliminate_row(d, piv, r);
        std::erase_if(cols, [](const std::vector<Gf::Elem>& d) { return bottom_row(d) < 0; });
        chosen.push_back(std::move(piv));
    }

    GfMatrix out(n, n);
    for (std::size_t c = 0; c < chosen.size(); ++c)
        for (int r = 0; r < n; ++r) out(r, static_cast<int>(c)) = chosen[c][static_cast<std::size_t>(r)];
    return out;
}

GfMatrix mat_mul(const GfMatrix& a, const GfMatrix& b, const Gf& f) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
    GfMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Gf::Elem aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Gf::Elem bkj = b(k, j);
                if (bkj == 0) continue;
                out(i, j) = f.add(out(i, j), f.mul(aik, bkj));
            }
        }
    return out;
}

GfMatrix mat_sub(const GfMatrix& a, const GfMatrix& b, const Gf& f) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix dimension mismatch");
    GfMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = f.sub(a(i, j), b(i, j));
    return out;
}

bool is_borel(const GfMatrix& g) {
    if (g.rows() != g.cols()) return false;
    for (int i = 0; i < g.rows(); ++i) {
        if (g(i, i) == 0) return false;
        for (int j = 0; j < i; ++j)
            if (g(i, j) != 0) return false;
    }
    return true;
}

GfMatrix upper_inverse(const GfMatrix& g, const Gf& f) {
    if (!is_borel(g)) throw std::invalid_argument("matrix is not upper triangular invertible");
    const int n = g.rows();
    GfMatrix inv(n, n);
    for (int j = 0; j < n; ++j) {
        inv(j, j) = f.inv(g(j, j));
        for (int i = j - 1; i >= 0; --i) {
            Gf::Elem acc = 0;
            for (int t = i + 1; t <= j; ++t) acc = f.add(acc, f.mul(g(i, t), inv(t, j)));
            inv(i, j) = f.mul(f.neg(acc), f.inv(g(i, i)));
        }
    }
    return inv;
}

GfMatrix random_borel(int n, const Gf& f, std::mt19937_64& rng) {
    GfMatrix g(n, n);
    for (int i = 0; i < n; ++i) {
        g(i, i) = f.random_nonzero(rng);
        for (int j = i + 1; j < n; ++j) g(i, j) = f.random_element(rng);
    }
    return g;
}

GfMatrix borel_act(const GfMatrix& g, const GfMatrix& m, const Gf& f) {
    if (!is_borel(g)) throw std::invalid_argument("group element must be upper triangular invertible");
    return rrcef(mat_mul(g, m, f), f);
}

GfMatrix borel_factor(const GfMatrix& m, const Gf& f) {
    if (m.rows() != m.cols() || !is_rrcef(m))
        throw std::invalid_argument("borel_factor requires a square RRCEF matrix");
    const int n = m.rows();
    const std::vector<Pos> alpha = pivot_set(m);
    GfMatrix g = GfMatrix::identity(n);
    for (Pos p : alpha)
        for (int i = 0; i < n; ++i) g(i, p.row - 1) = m(i, p.col - 1);
    if (mat_mul(g, GfMatrix::indicator(n, alpha), f) != m)
        throw std::logic_error("borel_factor: factor identity failed");
    return g;
}

PairFactor pair_borel_factor(const GfMatrix& m, const GfMatrix& n, const Gf& f) {
    if (m.rows() != m.cols() || m.rows() != n.rows() || m.cols() != n.cols())
        throw std::invalid_argument("pair_borel_factor requires square matrices of equal size");
    if (!is_rrcef(m) || !is_rrcef(n))
        throw std::invalid_argument("pair_borel_factor requires RRCEF matrices");
    const std::vector<Pos> alpha = pivot_set(m);
    if (alpha != pivot_set(n)) throw std::invalid_argument("pivot sets differ");

    const int sz = m.rows();
    const GfMatrix diff = mat_sub(m, n, f);
    PairFactor out;
    out.beta = pivot_set(diff);

    GfMatrix g = GfMatrix::identity(sz);
    for (Pos p : alpha)
        for (int i = 0; i < sz; ++i) g(i, p.row - 1) = n(i, p.col - 1);
    for (Pos p : out.beta)
        for (int i = 0; i < sz; ++i) g(i, p.row - 1) = diff(i, p.col - 1);
    if (!is_borel(g)) throw std::logic_error("pair_borel_factor: factor left the Borel group");

    std::vector<Pos> on = alpha;
    on.insert(on.end(), out.beta.begin(), out.beta.end());
    out.x = GfMatrix::indicator(sz, on);
    out.y = GfMatrix::indicator(sz, alpha);
    if (mat_mul(g, out.y, f) != n)
        throw std::logic_error("pair_borel_factor: right factor identity failed");
    out.left_exact = (mat_mul(g, out.x, f) == m);
    out.g = std::move(g);
    return out;
}

}  // namespace schubert
