#include "schubert/gf.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace schubert {

namespace {

constexpr std::uint32_t kMaxQ = 1u << 16;
constexpr int kMaxDegree = 16;

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

using Poly = std::vector<std::uint16_t>;  // coefficients, lowest degree first

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

/// Remainder of a mod b over GF(p); b must be nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    const int db = poly_degree(b);
    std::uint32_t lead_inv = 1;
    {
        // naive inverse of b's leading coefficient mod p
        const std::uint32_t lead = b[static_cast<std::size_t>(db)];
        for (std::uint32_t x = 1; x < p; ++x)
            if (lead * x % p == 1) { lead_inv = x; break; }
    }
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        const std::uint32_t factor = a[static_cast<std::size_t>(da)] * lead_inv % p;
        for (int j = 0; j <= db; ++j) {
            const std::uint32_t sub = factor * b[static_cast<std::size_t>(j)] % p;
            std::uint32_t cur = a[static_cast<std::size_t>(da - db + j)];
            a[static_cast<std::size_t>(da - db + j)] =
                static_cast<std::uint16_t>((cur + p - sub) % p);
        }
    }
    return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

/// Full brute-force irreducibility test: no monic divisor of degree 1..k/2.
bool is_irreducible(const Poly& mod, std::uint32_t p, int k) {
    for (int d = 1; d * 2 <= k; ++d) {
        // enumerate all monic polynomials of degree d
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly div(static_cast<std::size_t>(d) + 1, 0);
            std::uint64_t c = code;
            for (int i = 0; i < d; ++i) {
                div[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(c % p);
                c /= p;
            }
            div[static_cast<std::size_t>(d)] = 1;
            if (poly_is_zero(poly_rem(mod, div, p))) return false;
        }
    }
    return true;
}

Poly default_modulus(std::uint32_t p, int k) {
    if (p == 2 && k == 2) return {1, 1, 1};     // x^2 + x + 1
    if (p == 2 && k == 3) return {1, 1, 0, 1};  // x^3 + x + 1
    if (p == 3 && k == 2) return {1, 0, 1};     // x^2 + 1
    return {};
}

}  // namespace

FieldSpec FieldSpec::parse(const std::string& text) {
    FieldSpec spec;
    const auto caret = text.find('^');
    try {
        if (caret == std::string::npos) {
            const unsigned long q = std::stoul(text);
            if (is_prime(static_cast<std::uint32_t>(q))) {
                spec.p = static_cast<std::uint32_t>(q);
                spec.k = 1;
            } else if (q == 4) {
                spec.p = 2; spec.k = 2;
            } else if (q == 8) {
                spec.p = 2; spec.k = 3;
            } else if (q == 9) {
                spec.p = 3; spec.k = 2;
            } else {
                throw std::invalid_argument(
                    "field size must be prime, one of {4,8,9}, or given as p^k: " + text);
            }
        } else {
            spec.p = static_cast<std::uint32_t>(std::stoul(text.substr(0, caret)));
            spec.k = static_cast<int>(std::stoul(text.substr(caret + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse field size: " + text);
    }
    return spec;
}

Gf::Gf(const FieldSpec& spec) : p_(spec.p), k_(spec.k), mod_(spec.modulus) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
    if (k_ < 1 || k_ > kMaxDegree) throw std::invalid_argument("extension degree out of range");
    std::uint64_t q = 1;
    for (int i = 0; i < k_; ++i) {
        q *= p_;
        if (q > kMaxQ) throw std::invalid_argument("field size exceeds 2^16");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (k_ == 1) {
        mod_.clear();
        return;
    }
    if (mod_.empty()) mod_ = default_modulus(p_, k_);
    if (mod_.empty())
        throw std::invalid_argument("an explicit modulus is required for this extension field");
    if (mod_.size() != static_cast<std::size_t>(k_) + 1)
        throw std::invalid_argument("modulus must have k+1 coefficients");
    for (auto c : mod_)
        if (c >= p_) throw std::invalid_argument("modulus coefficients must lie in [0, p)");
    if (mod_.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(mod_, p_, k_))
        throw std::invalid_argument("modulus is reducible over the prime field");
}

Gf::Gf(std::uint32_t q) : Gf(FieldSpec::parse(std::to_string(q))) {}

void Gf::to_digits(Elem a, std::uint16_t* d) const {
    std::uint32_t v = a;
    for (int i = 0; i < k_; ++i) {
        d[i] = static_cast<std::uint16_t>(v % p_);
        v /= p_;
    }
}

Gf::Elem Gf::from_digits(const std::uint16_t* d) const {
    std::uint32_t acc = 0;
    for (int i = k_ - 1; i >= 0; --i) acc = acc * p_ + d[i];
    return static_cast<Elem>(acc);
}

Gf::Elem Gf::add(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>((static_cast<std::uint32_t>(a) + b) % p_);
    std::array<std::uint16_t, kMaxDegree> x{}, y{};
    to_digits(a, x.data());
    to_digits(b, y.data());
    for (int i = 0; i < k_; ++i) x[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>((x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)]) % p_);
    return from_digits(x.data());
}

Gf::Elem Gf::neg(Elem a) const {
    if (k_ == 1) return static_cast<Elem>((p_ - a) % p_);
    std::array<std::uint16_t, kMaxDegree> x{};
    to_digits(a, x.data());
    for (int i = 0; i < k_; ++i)
        x[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>((p_ - x[static_cast<std::size_t>(i)]) % p_);
    return from_digits(x.data());
}

Gf::Elem Gf::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Gf::Elem Gf::mul(Elem a, Elem b) const {
    if (k_ == 1)
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::array<std::uint16_t, kMaxDegree> x{}, y{};
    to_digits(a, x.data());
    to_digits(b, y.data());
    std::array<std::uint32_t, 2 * kMaxDegree> c{};
    for (int i = 0; i < k_; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < k_; ++j)
            c[static_cast<std::size_t>(i + j)] +=
                static_cast<std::uint32_t>(x[static_cast<std::size_t>(i)]) * y[static_cast<std::size_t>(j)];
    }
    // reduce modulo the defining polynomial (monic): x^k = -(mod[0..k-1])
    for (int i = 2 * k_ - 2; i >= k_; --i) {
        const std::uint32_t t = c[static_cast<std::size_t>(i)] % p_;
        if (t == 0) continue;
        for (int j = 0; j < k_; ++j)
            c[static_cast<std::size_t>(i - k_ + j)] += (p_ - t) * mod_[static_cast<std::size_t>(j)] % p_ ;
        c[static_cast<std::size_t>(i)] = 0;
    }
    std::array<std::uint16_t, kMaxDegree> r{};
    for (int i = 0; i < k_; ++i)
        r[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(c[static_cast<std::size_t>(i)] % p_);
    return from_digits(r.data());
}

Gf::Elem Gf::pow(Elem a, std::uint64_t e) const {
    Elem result = 1;
    Elem base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Gf::Elem Gf::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, q_ - 2);
}

std::vector<Gf::Elem> Gf::elements() const {
    std::vector<Elem> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = static_cast<Elem>(i);
    return out;
}

Gf::Elem Gf::random_element(std::mt19937_64& rng) const {
    return static_cast<Elem>(rng() % q_);
}

Gf::Elem Gf::random_nonzero(std::mt19937_64& rng) const {
    return static_cast<Elem>(1 + rng() % (q_ - 1));
}

bool Gf::operator==(const Gf& other) const {
    return p_ == other.p_ && k_ == other.k_ && mod_ == other.mod_;
}

}  // namespace schubert
