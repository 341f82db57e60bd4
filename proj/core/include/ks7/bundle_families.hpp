#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ks7/eschenburg.hpp"
#include "ks7/exact_arith.hpp"

namespace ks7 {

enum class Family { Sphere, SpinSphere, Circle, SpinCircle };
enum class CohomologyType { E, EBar }; // E_r (spin) and Ē_r (non-spin)
enum class Pi4 { Zero, Z2, Unknown };

std::string_view family_name(Family f) noexcept;
std::string_view type_name(CohomologyType t) noexcept;
std::string_view pi4_name(Pi4 p) noexcept;

struct BundleSpec {
    Family family = Family::Sphere;
    BigInt a, b;
    BigInt t; // ignored for the sphere families

    static BundleSpec sphere(const BigInt& a, const BigInt& b) { return {Family::Sphere, a, b, 0}; }
    static BundleSpec spin_sphere(const BigInt& a, const BigInt& b) { return {Family::SpinSphere, a, b, 0}; }
    static BundleSpec circle(const BigInt& t, const BigInt& a, const BigInt& b) { return {Family::Circle, a, b, t}; }
    static BundleSpec spin_circle(const BigInt& t, const BigInt& a, const BigInt& b) {
        return {Family::SpinCircle, a, b, t};
    }

    bool has_t() const { return family == Family::Circle || family == Family::SpinCircle; }
    std::string str() const; // e.g. "Circle(t=1,a=1,b=1)"

    friend bool operator==(const BundleSpec& x, const BundleSpec& y) {
        return x.family == y.family && x.a == y.a && x.b == y.b && (!x.has_t() || x.t == y.t);
    }
};

struct MnPair {
    BigInt m, n;
};

struct InvariantProfile {
    CohomologyType type = CohomologyType::E;
    BigInt r = 1;
    ModOneValue s1, s2, s3;
    ResidueClass p1;
    std::vector<ResidueClass> lk; // sorted; one class for bundles, the ± pair for Eschenburg spaces, empty for r = 1
    Pi4 pi4 = Pi4::Unknown;

    friend bool operator==(const InvariantProfile& x, const InvariantProfile& y) {
        return x.type == y.type && x.r == y.r && x.s1 == y.s1 && x.s2 == y.s2 && x.s3 == y.s3 &&
               x.p1 == y.p1 && x.lk == y.lk && x.pi4 == y.pi4;
    }
};

MnPair choose_mn(const BundleSpec& spec);
/// The j-th alternative solution, (m + b j, n + a j) for Circle and (m + b j, n - a j) for SpinCircle,
/// parity-corrected for SpinCircle with b odd.
MnPair choose_mn(const BundleSpec& spec, long long j);

InvariantProfile profile_sphere(const BigInt& a, const BigInt& b);
InvariantProfile profile_spin_sphere(const BigInt& a, const BigInt& b);
InvariantProfile profile_circle(const BigInt& t, const BigInt& a, const BigInt& b);
InvariantProfile profile_circle(const BigInt& t, const BigInt& a, const BigInt& b, const MnPair& mn);
InvariantProfile profile_spin_circle(const BigInt& t, const BigInt& a, const BigInt& b);
InvariantProfile profile_spin_circle(const BigInt& t, const BigInt& a, const BigInt& b, const MnPair& mn);
InvariantProfile profile(const BundleSpec& spec);

/// Profile of an Eschenburg space with externally supplied s-invariants.
InvariantProfile profile_eschenburg(const EschenburgSpace& e, const ModOneValue& s1, const ModOneValue& s2,
                                    const ModOneValue& s3);
InvariantProfile profile_eschenburg(const EschenburgFixture& fx);

InvariantProfile reverse_orientation(const InvariantProfile& p);
std::optional<BundleSpec> natural_partner(const BundleSpec& spec);

} // namespace ks7
