#include "ks7/classification.hpp"

#include <algorithm>
#include <set>

namespace ks7 {

std::string_view orientation_name(Orientation o) noexcept {
    return o == Orientation::Preserving ? "preserving" : "reversing";
}

std::string_view verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::Preserving: return "preserving";
    case Verdict::Reversing: return "reversing";
    case Verdict::None: return "none";
    }
    return "?";
}

std::string_view homotopy_name(HomotopyVerdict v) noexcept {
    switch (v) {
    case HomotopyVerdict::Equivalent: return "equivalent";
    case HomotopyVerdict::NotEquivalent: return "not-equivalent";
    case HomotopyVerdict::Undetermined: return "undetermined";
    }
    return "?";
}

namespace {

bool pi4_compatible(Pi4 x, Pi4 y) { return x == Pi4::Unknown || y == Pi4::Unknown || x == y; }

bool lk_compatible(const std::vector<ResidueClass>& x, const std::vector<ResidueClass>& y) {
    if (x.empty() || y.empty()) return true;
    return std::any_of(x.begin(), x.end(),
                       [&](const ResidueClass& c) { return std::find(y.begin(), y.end(), c) != y.end(); });
}

bool s_equal(const InvariantProfile& p, const InvariantProfile& q, bool homeomorphism) {
    bool first = homeomorphism ? p.s1.scaled(28) == q.s1.scaled(28) : p.s1 == q.s1;
    return first && p.s2 == q.s2 && p.s3 == q.s3;
}

} // namespace

OrientationMatch ks_compare(const InvariantProfile& p, const InvariantProfile& q, bool homeomorphism) {
    OrientationMatch m;
    if (p.type != q.type || p.r != q.r || !pi4_compatible(p.pi4, q.pi4)) return m;
    m.preserving = s_equal(p, q, homeomorphism) && lk_compatible(p.lk, q.lk);
    auto rq = reverse_orientation(q);
    m.reversing = s_equal(p, rq, homeomorphism) && lk_compatible(p.lk, rq.lk);
    return m;
}

namespace {

Verdict to_verdict(const OrientationMatch& m) {
    if (m.preserving) return Verdict::Preserving;
    if (m.reversing) return Verdict::Reversing;
    return Verdict::None;
}

enum class Tri { Yes, No, Maybe };

// lk equality when a side may carry the ± ambiguity of an Eschenburg space.
Tri lk_equal(const std::vector<ResidueClass>& x, const std::vector<ResidueClass>& y) {
    if (x.empty() && y.empty()) return Tri::Yes;
    if (x.empty() || y.empty()) return Tri::Maybe;
    if (!lk_compatible(x, y)) return Tri::No;
    return x.size() == 1 && y.size() == 1 ? Tri::Yes : Tri::Maybe;
}

HomotopyVerdict combine(Tri lk, bool other) {
    if (lk == Tri::No || !other) return HomotopyVerdict::NotEquivalent;
    return lk == Tri::Yes ? HomotopyVerdict::Equivalent : HomotopyVerdict::Undetermined;
}

} // namespace

Verdict ks_diffeomorphic(const InvariantProfile& p, const InvariantProfile& q) {
    return to_verdict(ks_compare(p, q, false));
}

Verdict ks_homeomorphic(const InvariantProfile& p, const InvariantProfile& q) {
    return to_verdict(ks_compare(p, q, true));
}

HomotopyVerdict kruggel_homotopy(const InvariantProfile& p, const InvariantProfile& q) {
    if (p.type != q.type || p.r != q.r) return HomotopyVerdict::NotEquivalent;
    if (p.pi4 != Pi4::Unknown && q.pi4 != Pi4::Unknown && p.pi4 != q.pi4) return HomotopyVerdict::NotEquivalent;
    const BigInt& r = p.r;
    Tri lk = lk_equal(p.lk, q.lk);
    if (p.type == CohomologyType::EBar) {
        if (!mpz_divisible_ui_p(r.get_mpz_t(), 24)) return HomotopyVerdict::Undetermined;
        bool p1_ok = mod_floor(p.p1.value - q.p1.value, BigInt(24)) == 0;
        return combine(lk, p1_ok);
    }
    if (p.pi4 == Pi4::Unknown || q.pi4 == Pi4::Unknown) return HomotopyVerdict::Undetermined;
    if (p.pi4 == Pi4::Zero) return combine(lk, p.s2.scaled(2 * r) == q.s2.scaled(2 * r));
    if (mpz_odd_p(r.get_mpz_t())) return combine(lk, p.s2.scaled(r) == q.s2.scaled(r));
    return HomotopyVerdict::Undetermined;
}

namespace {

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

} // namespace

CongruenceReport sphere_congruence_classify(const BigInt& a_in, const BigInt& b_in, const BigInt& a2_in,
                                            const BigInt& b2_in, bool spin) {
    // S_{a,b} with a < b is the orientation reverse of S_{b,a}; bring both to a - b > 0.
    BigInt a = a_in, b = b_in, a2 = a2_in, b2 = b2_in;
    bool flip = false;
    if (a < b) { std::swap(a, b); flip = !flip; }
    if (a2 < b2) { std::swap(a2, b2); flip = !flip; }
    BigInt r = a - b;
    if (r == 0 || a2 - b2 != r)
        throw Error(ErrorCode::MismatchedOrder,
                    "|a-b| = " + BigInt(abs(a_in - b_in)).get_str() + " vs " + BigInt(abs(a2_in - b2_in)).get_str());

    CongruenceReport rep;
    BigInt diff = a - a2, sum = a + a2;
    if (!spin) {
        rep.homeo_preserving = divides(12 * r, diff);
        rep.diffeo_preserving = rep.homeo_preserving && divides(56 * r, BigInt(diff * (sum - r + 2)));
        rep.homeo_reversing = r == 1 && divides(BigInt(12), sum);
        rep.diffeo_reversing = rep.homeo_reversing && divides(BigInt(56), BigInt(a * (a + 1) + a2 * (a2 + 1)));
    } else {
        rep.homeo_preserving = divides(6 * r, diff);
        rep.diffeo_preserving = rep.homeo_preserving && divides(168 * r, BigInt(diff * (3 * sum - 3 * r + 1)));
        if (r == 1) {
            rep.homeo_reversing = mod_floor(sum, BigInt(6)) == 2;
            rep.diffeo_reversing =
                rep.homeo_reversing && divides(BigInt(168), BigInt(a * (3 * a - 2) + a2 * (3 * a2 - 2) - 2));
        } else if (r == 2) {
            rep.homeo_reversing = mod_floor(sum, BigInt(12)) == 3;
            rep.diffeo_reversing =
                rep.homeo_reversing && divides(BigInt(336), BigInt(a * (3 * a - 5) + a2 * (3 * a2 - 5)));
        }
    }
    if (flip) {
        std::swap(rep.homeo_preserving, rep.homeo_reversing);
        std::swap(rep.diffeo_preserving, rep.diffeo_reversing);
    }
    return rep;
}

// ------------------------------------------------------------------ Ediffeo

namespace {

// Numerator of the representative of s in (-1/2, 1/2], scaled by k; fails unless integral.
BigInt scaled_balanced(const ModOneValue& s, const BigInt& k, const char* which) {
    Rational x = s.representative();
    if (x > Rational(1, 1) / Rational(2)) x -= Rational(1);
    Rational v = x * Rational(k);
    if (!v.is_integer())
        throw Error(ErrorCode::DivisibilityFailure, std::string(which) + " = " + s.str() + " times " + k.get_str() +
                                                        " is not an integer");
    return v.num();
}

} // namespace

EdiffeoProblem::EdiffeoProblem(const BigInt& r, const ModOneValue& s1, const ModOneValue& s2, const ModOneValue& s3)
    : r_(r), s1_(s1), s2_(s2), s3_(s3) {
    if (sgn(r) <= 0) throw Error(ErrorCode::DegenerateOrder, "r must be positive");
    e1_ = scaled_balanced(s1, 224 * r, "s1");
    e2_ = scaled_balanced(s2, 24 * r, "s2");
    e3_ = scaled_balanced(s3, 6 * r, "s3");
}

EdiffeoProblem EdiffeoProblem::negated() const { return EdiffeoProblem(r_, -s1_, -s2_, -s3_); }

EdiffeoSolution ediffeo_solve(const EdiffeoProblem& problem, Orientation orientation) {
    if (orientation == Orientation::Reversing) {
        auto sol = ediffeo_solve(problem.negated(), Orientation::Preserving);
        sol.orientation = Orientation::Reversing;
        return sol;
    }
    const BigInt& r = problem.r();
    const BigInt& E1 = problem.E1();
    const BigInt& E2 = problem.E2();
    const BigInt& E3 = problem.E3();
    if (mpz_odd_p(E1.get_mpz_t()) || mpz_odd_p(E2.get_mpz_t()) || mpz_even_p(E3.get_mpz_t()))
        throw Error(ErrorCode::ParityFailure, "E1, E2, E3+1 must be even (E = " + E1.get_str() + ", " +
                                                  E2.get_str() + ", " + E3.get_str() + ")");
    if (!divides(3 * r, BigInt(E3 - E2 - 3)))
        throw Error(ErrorCode::CongruenceFailure, "E3 - E2 - 3 is not divisible by 3r");

    EdiffeoSolution sol;
    sol.orientation = Orientation::Preserving;
    BigInt m224 = 224 * r, m8 = 8 * r, m168 = 168 * r;
    auto roots = sqrt_mod(r + E1, m224);
    sol.root_count = roots.size();
    std::set<BigInt> residues;
    for (const auto& S : roots) {
        if (!divides(m8, BigInt(S + E2 - 1))) continue;
        sol.witness_roots.push_back(S);
        BigInt twice = r + 15 * S; // even: S ≡ r + E1 ≡ r mod 2
        residues.insert(mod_floor(twice / 2 + 7 * E2 - 8, m168));
    }
    for (const auto& a : residues) sol.residues.emplace_back(a, m168);
    return sol;
}

std::vector<EdiffeoSolution> ediffeo_solve_all(const EdiffeoProblem& problem) {
    std::vector<EdiffeoSolution> out;
    for (auto o : {Orientation::Preserving, Orientation::Reversing}) {
        try {
            out.push_back(ediffeo_solve(problem, o));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::ParityFailure && e.code() != ErrorCode::CongruenceFailure) throw;
        }
    }
    return out;
}

// ----------------------------------------------------------------- Einstein

BundleSpec chen_bundle(const ChenParams& p) {
    if (p.q1 == 0 || p.q2 == 0) throw Error(ErrorCode::DegenerateOrder, "q1 q2 = 0");
    BigInt plus = p.q1 + p.q2, minus = p.q1 - p.q2;
    if (mpz_odd_p(plus.get_mpz_t())) return BundleSpec::sphere((plus * plus - 1) / 4, (minus * minus - 1) / 4);
    return BundleSpec::spin_sphere(plus * plus / 4, minus * minus / 4);
}

bool einstein_congruence(EinsteinKind kind, const std::pair<BigInt, BigInt>& x, const std::pair<BigInt, BigInt>& y) {
    if (kind == EinsteinKind::L) {
        if (x.first != y.first) throw Error(ErrorCode::MismatchedOrder, "L_{a,b} needs the same a on both sides");
        return divides(56 * x.first * x.first, BigInt(x.second - y.second));
    }
    BigInt r = x.first * x.second;
    bool same_parity = mpz_odd_p(BigInt(x.first + x.second).get_mpz_t()) ==
                       mpz_odd_p(BigInt(y.first + y.second).get_mpz_t());
    if (r != y.first * y.second || !same_parity)
        throw Error(ErrorCode::MismatchedOrder, "C_{q1,q2} needs equal q1 q2 and equal parity of q1 + q2");
    BigInt lhs = x.first * x.first + x.second * x.second;
    BigInt rhs = y.first * y.first + y.second * y.second;
    return divides(672 * abs(r), BigInt(lhs - rhs));
}

TorusReduction torus_reduction(const BundleSpec& spec) {
    BigInt minus, plus;
    if (spec.family == Family::Sphere) {
        minus = 4 * spec.a + 1;
        plus = 4 * spec.b + 1;
    } else if (spec.family == Family::SpinSphere) {
        minus = 4 * spec.a;
        plus = 4 * spec.b;
    } else {
        throw Error(ErrorCode::WrongFamily, "torus reduction applies to sphere bundles only");
    }
    TorusReduction tr;
    tr.reduces_to_U2 = is_perfect_square(plus);
    tr.reduces_to_T2 = tr.reduces_to_U2 && is_perfect_square(minus);
    return tr;
}

} // namespace ks7
