// Dirichlet characters mod f, stored as exact root-of-unity exponents.
#pragma once

#include "qkernel.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace hqz {

inline constexpr std::uint32_t kMaxModulus = 10000;

// chi(a) = e^{2 pi i num/den} with 0 <= num < den and gcd(num, den) = 1,
// or zero when gcd(a, modulus) > 1.
struct CharValue {
    bool zero = true;
    std::int64_t num = 0;
    std::int64_t den = 1;
};

class CharacterTable {
public:
    CharacterTable(std::uint32_t modulus, std::uint32_t index,
                   std::vector<CharValue> values)
        : modulus_(modulus), index_(index), values_(std::move(values)) {}

    std::uint32_t modulus() const { return modulus_; }
    // Position in the canonical enumeration of characters_mod(modulus);
    // index 0 is the principal character.
    std::uint32_t index() const { return index_; }

    const CharValue& exponent(std::int64_t a) const {
        return values_[reduce(a)];
    }
    bool is_zero(std::int64_t a) const { return values_[reduce(a)].zero; }

    std::complex<double> evaluate(std::int64_t a) const;
    BigComplex evaluate_big(std::int64_t a) const;

    bool is_principal() const;
    // Order of chi in the character group (lcm of the value orders).
    std::uint64_t order() const;
    // Smallest f' | modulus such that chi is induced by a character mod f'.
    std::uint32_t conductor() const;

private:
    std::size_t reduce(std::int64_t a) const {
        const std::int64_t f = static_cast<std::int64_t>(modulus_);
        std::int64_t r = a % f;
        if (r < 0) r += f;
        return static_cast<std::size_t>(r);
    }

    std::uint32_t modulus_;
    std::uint32_t index_;
    std::vector<CharValue> values_;
};

// All phi(f) characters mod f, principal first, in a canonical deterministic
// order. 1 <= f <= kMaxModulus.
std::vector<CharacterTable> characters_mod(std::uint32_t f);

std::uint32_t euler_phi(std::uint32_t f);

// e^{2 pi i num/den}; quarter turns are returned exactly.
std::complex<double> root_of_unity(std::int64_t num, std::int64_t den);
BigComplex root_of_unity_big(std::int64_t num, std::int64_t den);

}  // namespace hqz
