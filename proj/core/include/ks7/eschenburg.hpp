#pragma once

#include <array>
#include <istream>
#include <map>
#include <string>
#include <vector>

#include "ks7/exact_arith.hpp"

namespace ks7 {

using Weights = std::array<long long, 3>;

/// E_{k,l}: circle weights k, l with equal coordinate sums.
struct EschenburgSpace {
    Weights k{};
    Weights l{};

    std::string str() const; // "k1 k2 k3 | l1 l2 l3"

    friend bool operator==(const EschenburgSpace&, const EschenburgSpace&) = default;
    friend auto operator<=>(const EschenburgSpace&, const EschenburgSpace&) = default;
};

struct EschenburgInvariants {
    BigInt r;
    BigInt s_signed;                    // sigma3(k) - sigma3(l)
    ResidueClass p1;
    std::vector<ResidueClass> lk_pair;  // {s^-1, -s^-1} mod r, deduplicated; empty when r = 1 or s not a unit
    bool free = false;
    bool positively_curved = false;
};

struct EschenburgFixture {
    EschenburgSpace space;
    ModOneValue s1, s2, s3;
    int line = 0;
    /// Trailing fields: a bare integer is stored under "r"; "key=value" tokens and bare flags as written.
    std::map<std::string, std::string> annotations;

    bool has(const std::string& key) const { return annotations.count(key) != 0; }
};

BigInt sigma1(const Weights& w);
BigInt sigma2(const Weights& w);
BigInt sigma3(const Weights& w);

bool is_free(const EschenburgSpace& e);
/// Only the (k1,k2) pair of the freeness condition; kept to check that it agrees with is_free.
bool is_free_literal(const EschenburgSpace& e);
bool is_positively_curved(const EschenburgSpace& e);
EschenburgInvariants invariants(const EschenburgSpace& e);
EschenburgSpace normalize(const EschenburgSpace& e);

/// Free, positively curved spaces with r < r_max, one per normalize class, sorted by (r, normal form).
std::vector<EschenburgSpace> enumerate_positively_curved(long long r_max, unsigned threads = 0);

std::vector<EschenburgFixture> load_fixtures(std::istream& in);
std::vector<EschenburgFixture> load_fixture_file(const std::string& path);

} // namespace ks7
