#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace schubert {

/// Description of a finite field GF(p^k), q = p^k <= 2^16.
///
/// For k > 1 the field is F_p[x]/(modulus), where modulus holds the k+1
/// coefficients of a monic irreducible polynomial, lowest degree first.
/// An empty modulus picks a built-in default for q in {4, 8, 9}.
struct FieldSpec {
    std::uint32_t p = 2;
    int k = 1;
    std::vector<std::uint16_t> modulus;

    /// Parses "11" or "2^4". The modulus (if any) is supplied separately.
    static FieldSpec parse(const std::string& text);
};

/// Finite field with table-free arithmetic on element indices.
///
/// Elements are indices in [0, q): the residue itself for prime fields, the
/// base-p digit encoding of the coefficient vector for extensions. Index 0 is
/// the zero element and index 1 the one element in every field, so 0/1
/// matrices are field independent. Immutable after construction.
class Gf {
public:
    using Elem = std::uint16_t;

    explicit Gf(const FieldSpec& spec);
    /// Convenience: prime q, or one of the built-in extensions {4, 8, 9}.
    explicit Gf(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    int degree() const { return k_; }
    const std::vector<std::uint16_t>& modulus() const { return mod_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws std::domain_error on a == 0
    Elem pow(Elem a, std::uint64_t e) const;

    /// All q elements in index order: 0, 1, 2, ...
    std::vector<Elem> elements() const;

    Elem random_element(std::mt19937_64& rng) const;
    Elem random_nonzero(std::mt19937_64& rng) const;

    bool operator==(const Gf& other) const;

private:
    std::uint32_t p_ = 2;
    int k_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint16_t> mod_;

    void to_digits(Elem a, std::uint16_t* d) const;
    Elem from_digits(const std::uint16_t* d) const;
};

}  // namespace schubert
