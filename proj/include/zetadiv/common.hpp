#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace zetadiv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
/// 100-decimal-digit binary float, used for decimal renderings only.
/// Exact quantities never pass through this type.
using Real = boost::multiprecision::cpp_bin_float_100;

/// Bad user input: malformed files, unsupported models, out-of-range arguments.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed; indicates a bug or inconsistent data, never user error.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline Int int_pow(const Int& base, unsigned exp) {
    Int r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline Int floor_rat(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);  // d > 0 canonical
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Smallest prime factor; for prime powers this is the characteristic.
inline std::uint64_t smallest_prime_factor(std::uint64_t n) {
    if (n < 2) throw validation_error("smallest_prime_factor: n < 2");
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return d;
    return n;
}

/// Decompose q = p^n with p prime; throws if q is not a prime power.
inline void prime_power_decompose(std::uint64_t q, std::uint64_t& p, unsigned& n) {
    p = smallest_prime_factor(q);
    n = 0;
    std::uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) throw validation_error("q = " + std::to_string(q) + " is not a prime power");
        t /= p;
        ++n;
    }
}

inline std::string int_to_string(const Int& v) { return v.str(); }

/// "n" when integral, "n/d" otherwise.
inline std::string rat_to_string(const Rat& r) {
    Int n = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace zetadiv
