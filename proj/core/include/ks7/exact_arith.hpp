#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ks7/errors.hpp"

namespace ks7 {

using BigInt = mpz_class;

BigInt big(long long v);
std::strong_ordering compare(const BigInt& a, const BigInt& b);
int sign(const BigInt& a);

/// Floor modulus: result in [0, m) for m > 0.
BigInt mod_floor(const BigInt& a, const BigInt& m);

bool is_perfect_square(const BigInt& n);

/// Exact fraction, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long long n); // NOLINT: integers promote implicitly
    Rational(const BigInt& n); // NOLINT
    Rational(const BigInt& num, const BigInt& den);

    /// Parses "n", "n/d" or "-n/d".
    static Rational parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    bool is_integer() const { return value_.get_den() == 1; }
    BigInt floor() const;

    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    explicit Rational(mpq_class v);
    mpq_class value_;
};

/// Canonical representative of a class in Q/Z: the reduced fraction in [0,1).
class ModOneValue {
public:
    ModOneValue() = default;
    explicit ModOneValue(const Rational& q);

    const Rational& representative() const { return rep_; }
    ModOneValue operator-() const { return ModOneValue(-rep_); }
    ModOneValue operator+(const ModOneValue& o) const { return ModOneValue(rep_ + o.rep_); }
    ModOneValue scaled(const BigInt& k) const { return ModOneValue(rep_ * Rational(k)); }
    bool is_zero() const { return rep_ == Rational(0); }
    std::string str() const { return rep_.str(); }

    friend bool operator==(const ModOneValue&, const ModOneValue&) = default;
    friend std::strong_ordering operator<=>(const ModOneValue& a, const ModOneValue& b) {
        return a.rep_ <=> b.rep_;
    }

private:
    Rational rep_;
};

ModOneValue mod_one(const Rational& q);

struct ResidueClass {
    BigInt value;
    BigInt modulus;

    ResidueClass() : value(0), modulus(1) {}
    /// Reduces value into [0, modulus); modulus must be positive.
    ResidueClass(const BigInt& v, const BigInt& m);

    std::string str() const; // "v mod m"

    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.value == b.value && a.modulus == b.modulus;
    }
    friend std::strong_ordering operator<=>(const ResidueClass& a, const ResidueClass& b);
};

struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> factors;

    BigInt product() const;
    friend bool operator==(const Factorization&, const Factorization&) = default;
};

BigInt inv_mod(const BigInt& a, const BigInt& m);
Factorization factorize(const BigInt& n);
ResidueClass crt_combine(const std::vector<ResidueClass>& residues);
std::vector<BigInt> sqrt_mod(const BigInt& a, const BigInt& m);
/// Same, with the modulus given by its factorization (for repeated calls with one modulus).
std::vector<BigInt> sqrt_mod(const BigInt& a, const Factorization& modulus);

} // namespace ks7
