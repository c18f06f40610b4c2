#include "dirichlet.hpp"

#include <algorithm>
#include <numeric>

namespace hqz {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e != 0) {
        if (e & 1u) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> factorize(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            std::uint32_t e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

std::uint32_t primitive_root_mod_p(std::uint32_t p) {
    if (p == 2) return 1;
    const auto factors = prime_factors(p - 1);
    for (std::uint32_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint32_t r : factors) {
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error(errc::domain, "no primitive root found");
}

// One cyclic factor of (Z/pe)*: order m with a discrete-log table over the
// residues mod pe (entry kNoLog for non-units).
constexpr std::uint32_t kNoLog = 0xffffffffu;

struct CyclicFactor {
    std::uint32_t pe = 1;
    std::uint64_t order = 1;
    std::vector<std::uint32_t> dlog;
};

// Unit-group decomposition of (Z/pe)*: one factor for odd p (or 4), the
// {+-1} x <5> pair for 2^e with e >= 3, nothing for pe in {1, 2}.
std::vector<CyclicFactor> decompose(std::uint32_t p, std::uint32_t e,
                                    std::uint32_t pe) {
    std::vector<CyclicFactor> out;
    if (pe <= 2) return out;
    if (p != 2) {
        std::uint32_t g = primitive_root_mod_p(p);
        if (e >= 2 && pow_mod(g, p - 1, static_cast<std::uint64_t>(p) * p) == 1)
            g += p;
        CyclicFactor c;
        c.pe = pe;
        c.order = static_cast<std::uint64_t>(pe / p) * (p - 1);
        c.dlog.assign(pe, kNoLog);
        std::uint64_t v = 1;
        for (std::uint64_t t = 0; t < c.order; ++t) {
            c.dlog[v] = static_cast<std::uint32_t>(t);
            v = (v * g) % pe;
        }
        out.push_back(std::move(c));
        return out;
    }
    if (e == 2) {
        CyclicFactor c;
        c.pe = 4;
        c.order = 2;
        c.dlog.assign(4, kNoLog);
        c.dlog[1] = 0;
        c.dlog[3] = 1;
        out.push_back(std::move(c));
        return out;
    }
    // 2^e, e >= 3: units are (-1)^s * 5^t.
    CyclicFactor sign, five;
    sign.pe = five.pe = pe;
    sign.order = 2;
    five.order = pe / 4;
    sign.dlog.assign(pe, kNoLog);
    five.dlog.assign(pe, kNoLog);
    std::uint64_t v = 1;
    for (std::uint64_t t = 0; t < five.order; ++t) {
        sign.dlog[v] = 0;
        five.dlog[v] = static_cast<std::uint32_t>(t);
        sign.dlog[pe - v] = 1;
        five.dlog[pe - v] = static_cast<std::uint32_t>(t);
        v = (v * 5) % pe;
    }
    out.push_back(std::move(sign));
    out.push_back(std::move(five));
    return out;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

// (n1/d1 + n2/d2) mod 1, reduced with 0 <= num < den.
void frac_add(std::int64_t& n1, std::int64_t& d1, std::int64_t n2,
              std::int64_t d2) {
    const std::int64_t g = gcd64(d1, d2);
    const std::int64_t den = d1 / g * d2;
    std::int64_t num = n1 * (d2 / g) + n2 * (d1 / g);
    num %= den;
    if (num < 0) num += den;
    const std::int64_t g2 = gcd64(num, den);
    n1 = num / g2;
    d1 = den / g2;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t f) {
    std::uint32_t out = 1;
    for (auto& [p, e] : factorize(f)) {
        std::uint32_t pe1 = 1;
        for (std::uint32_t i = 1; i < e; ++i) pe1 *= p;
        out *= pe1 * (p - 1);
    }
    return out;
}

std::complex<double> root_of_unity(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    if (num == 0) return {1.0, 0.0};
    if (4 * num == den) return {0.0, 1.0};
    if (2 * num == den) return {-1.0, 0.0};
    if (4 * num == 3 * den) return {0.0, -1.0};
    const double theta = 2.0 * M_PI * static_cast<double>(num) /
                         static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

BigComplex root_of_unity_big(std::int64_t num, std::int64_t den) {
    num %= den;
    if (num < 0) num += den;
    if (num == 0) return {big(1), big(0)};
    if (4 * num == den) return {big(0), big(1)};
    if (2 * num == den) return {big(-1), big(0)};
    if (4 * num == 3 * den) return {big(0), big(-1)};
    using boost::multiprecision::atan;
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    static const big two_pi = 8 * atan(big(1));
    const big theta = two_pi * num / den;
    return {cos(theta), sin(theta)};
}

std::complex<double> CharacterTable::evaluate(std::int64_t a) const {
    const CharValue& v = values_[reduce(a)];
    if (v.zero) return {0.0, 0.0};
    return root_of_unity(v.num, v.den);
}

BigComplex CharacterTable::evaluate_big(std::int64_t a) const {
    const CharValue& v = values_[reduce(a)];
    if (v.zero) return {big(0), big(0)};
    return root_of_unity_big(v.num, v.den);
}

bool CharacterTable::is_principal() const {
    for (const CharValue& v : values_)
        if (!v.zero && v.num != 0) return false;
    return true;
}

std::uint64_t CharacterTable::order() const {
    std::uint64_t ord = 1;
    for (const CharValue& v : values_) {
        if (v.zero) continue;
        const std::uint64_t d = static_cast<std::uint64_t>(v.den);
        ord = ord / std::gcd(ord, d) * d;
    }
    return ord;
}

std::uint32_t CharacterTable::conductor() const {
    const std::uint32_t f = modulus_;
    for (std::uint32_t d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        bool induced = true;
        for (std::uint32_t a = 1; a < f && induced; ++a) {
            if (values_[a].zero || (a % d) != (1 % d)) continue;
            if (values_[a].num != 0) induced = false;
        }
        if (induced) return d;
    }
    return f;
}

std::vector<CharacterTable> characters_mod(std::uint32_t f) {
    if (f == 0) throw Error(errc::bad_argument, "modulus must be positive");
    if (f > kMaxModulus)
        throw Error(errc::cap_exceeded, "modulus exceeds enumeration cap");

    if (f == 1) {
        // The modulus-1 character is the constant 1 (chi(0) = 1).
        std::vector<CharValue> vals{CharValue{false, 0, 1}};
        return {CharacterTable(1, 0, std::move(vals))};
    }

    std::vector<CyclicFactor> factors;
    for (auto& [p, e] : factorize(f)) {
        std::uint32_t pe = 1;
        for (std::uint32_t i = 0; i < e; ++i) pe *= p;
        for (auto& c : decompose(p, e, pe)) factors.push_back(std::move(c));
    }

    const std::uint32_t count = euler_phi(f);
    const std::size_t r = factors.size();

    // Per-residue discrete logs of the CRT components, precomputed once.
    std::vector<char> is_unit(f, 0);
    std::vector<std::vector<std::uint32_t>> logs(f);
    for (std::uint32_t a = 0; a < f; ++a) {
        if (std::gcd(a, f) != 1) continue;
        is_unit[a] = 1;
        std::vector<std::uint32_t> row(r);
        for (std::size_t j = 0; j < r; ++j)
            row[j] = factors[j].dlog[a % factors[j].pe];
        logs[a] = std::move(row);
    }

    std::vector<CharacterTable> out;
    out.reserve(count);
    std::vector<std::uint64_t> tuple(r, 0);
    for (std::uint32_t index = 0; index < count; ++index) {
        std::vector<CharValue> vals(f);
        for (std::uint32_t a = 0; a < f; ++a) {
            if (!is_unit[a]) continue;  // stays zero
            std::int64_t num = 0, den = 1;
            for (std::size_t j = 0; j < r; ++j) {
                if (tuple[j] == 0) continue;
                frac_add(num, den,
                         static_cast<std::int64_t>(tuple[j]) * logs[a][j] %
                             static_cast<std::int64_t>(factors[j].order),
                         static_cast<std::int64_t>(factors[j].order));
            }
            vals[a] = CharValue{false, num, den};
        }
        out.emplace_back(f, index, std::move(vals));
        // odometer over exponent tuples, last factor fastest
        for (std::size_t j = r; j-- > 0;) {
            if (++tuple[j] < factors[j].order) break;
            tuple[j] = 0;
        }
    }
    return out;
}

}  // namespace hqz
