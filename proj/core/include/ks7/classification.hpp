#pragma once

#include <optional>
#include <vector>

#include "ks7/bundle_families.hpp"

namespace ks7 {

enum class Orientation { Preserving, Reversing };
enum class Verdict { Preserving, Reversing, None };
enum class HomotopyVerdict { Equivalent, NotEquivalent, Undetermined };

std::string_view orientation_name(Orientation o) noexcept;
std::string_view verdict_name(Verdict v) noexcept;
std::string_view homotopy_name(HomotopyVerdict v) noexcept;

/// Both orientation outcomes of a Kreck–Stolz comparison.
struct OrientationMatch {
    bool preserving = false;
    bool reversing = false;
};

OrientationMatch ks_compare(const InvariantProfile& p, const InvariantProfile& q, bool homeomorphism);
Verdict ks_diffeomorphic(const InvariantProfile& p, const InvariantProfile& q);
Verdict ks_homeomorphic(const InvariantProfile& p, const InvariantProfile& q);
HomotopyVerdict kruggel_homotopy(const InvariantProfile& p, const InvariantProfile& q);

struct CongruenceReport {
    bool homeo_preserving = false;
    bool homeo_reversing = false;
    bool diffeo_preserving = false;
    bool diffeo_reversing = false;

    friend bool operator==(const CongruenceReport&, const CongruenceReport&) = default;
};

/// Closed-form congruence classification of S_{a,b} vs S_{a2,b2} (or the spin family).
CongruenceReport sphere_congruence_classify(const BigInt& a, const BigInt& b, const BigInt& a2, const BigInt& b2,
                                            bool spin);

class EdiffeoProblem {
public:
    /// Fails with DivisibilityFailure unless 224r s1, 24r s2 and 6r s3 are integers.
    EdiffeoProblem(const BigInt& r, const ModOneValue& s1, const ModOneValue& s2, const ModOneValue& s3);

    const BigInt& r() const { return r_; }
    const ModOneValue& s1() const { return s1_; }
    const ModOneValue& s2() const { return s2_; }
    const ModOneValue& s3() const { return s3_; }
    /// Computed from the representatives in (-1/2, 1/2].
    const BigInt& E1() const { return e1_; }
    const BigInt& E2() const { return e2_; }
    const BigInt& E3() const { return e3_; }

    EdiffeoProblem negated() const;

private:
    BigInt r_;
    ModOneValue s1_, s2_, s3_;
    BigInt e1_, e2_, e3_;
};

struct EdiffeoSolution {
    std::vector<ResidueClass> residues; // mod 168 r, sorted, deduplicated
    Orientation orientation = Orientation::Preserving;
    std::vector<BigInt> witness_roots;  // admissible square roots of r + E1 mod 224 r
    size_t root_count = 0;              // all square roots of r + E1 mod 224 r
};

EdiffeoSolution ediffeo_solve(const EdiffeoProblem& problem, Orientation orientation = Orientation::Preserving);

/// Runs both orientations; an orientation whose conditions fail is omitted.
std::vector<EdiffeoSolution> ediffeo_solve_all(const EdiffeoProblem& problem);

struct ChenParams {
    BigInt q1, q2;
};

BundleSpec chen_bundle(const ChenParams& p);

enum class EinsteinKind { L, C };

/// L: params are (a, b) of L_{a,b} = M̄⁰_{a,b}. C: params are (q1, q2).
bool einstein_congruence(EinsteinKind kind, const std::pair<BigInt, BigInt>& params,
                         const std::pair<BigInt, BigInt>& params2);

struct TorusReduction {
    bool reduces_to_U2 = false;
    bool reduces_to_T2 = false;
};

TorusReduction torus_reduction(const BundleSpec& spec);

} // namespace ks7
