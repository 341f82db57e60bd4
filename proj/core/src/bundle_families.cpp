#include "ks7/bundle_families.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ks7 {

std::string_view family_name(Family f) noexcept {
    switch (f) {
    case Family::Sphere: return "sphere";
    case Family::SpinSphere: return "spin-sphere";
    case Family::Circle: return "circle";
    case Family::SpinCircle: return "spin-circle";
    }
    return "?";
}

std::string_view type_name(CohomologyType t) noexcept { return t == CohomologyType::E ? "E" : "Ebar"; }

std::string_view pi4_name(Pi4 p) noexcept {
    switch (p) {
    case Pi4::Zero: return "0";
    case Pi4::Z2: return "Z2";
    case Pi4::Unknown: return "unknown";
    }
    return "?";
}

std::string BundleSpec::str() const {
    std::ostringstream os;
    os << family_name(family) << '(';
    if (has_t()) os << "t=" << t.get_str() << ',';
    os << "a=" << a.get_str() << ",b=" << b.get_str() << ')';
    return os.str();
}

namespace {

Rational Q(const BigInt& n, const BigInt& d) { return Rational(n, d); }

BigInt pow4(const BigInt& x) { return x * x * x * x; }

void require_coprime(const BigInt& a, const BigInt& b) {
    if (gcd(a, b) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + a.get_str() + ", " + b.get_str() + ") != 1");
}

std::vector<ResidueClass> lk_of(const BigInt& j, const BigInt& r) {
    if (r == 1) return {};
    return {ResidueClass(j, r)};
}

bool is_pronic(const BigInt& b) { return sgn(b) >= 0 && is_perfect_square(4 * b + 1); }

} // namespace

MnPair choose_mn(const BundleSpec& spec) { return choose_mn(spec, 0); }

MnPair choose_mn(const BundleSpec& spec, long long j) {
    if (!spec.has_t()) throw Error(ErrorCode::WrongFamily, "(m,n) only exists for circle families");
    require_coprime(spec.a, spec.b);
    BigInt g, x, y;
    const BigInt& a = spec.a;
    const BigInt& b = spec.b;
    if (spec.family == Family::Circle) {
        BigInt nb = -b;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), nb.get_mpz_t());
        MnPair mn{x + b * big(j), y + a * big(j)};
        if (a * mn.m - b * mn.n != 1) throw std::logic_error("choose_mn: Bezout failed");
        return mn;
    }
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    MnPair mn{x + b * big(j), y - a * big(j)};
    if (mpz_odd_p(b.get_mpz_t()) && mpz_even_p(mn.m.get_mpz_t())) {
        mn.m += b;
        mn.n -= a;
    }
    if (a * mn.m + b * mn.n != 1) throw std::logic_error("choose_mn: Bezout failed");
    return mn;
}

InvariantProfile profile_sphere(const BigInt& a, const BigInt& b) {
    BigInt d = a - b;
    if (d == 0) throw Error(ErrorCode::DegenerateOrder, "a = b");
    BigInt S = a + b;
    InvariantProfile p;
    p.type = CohomologyType::E;
    p.r = abs(d);
    p.s1 = mod_one(Q((S + 2) * (S + 2), 224 * d) - Q(sgn(d), 224));
    p.s2 = mod_one(Q(-(S + 1), 24 * d));
    p.s3 = mod_one(Q(-(S - 2), 6 * d));
    p.p1 = ResidueClass(2 * S + 4, p.r);
    p.lk = lk_of(sgn(d), p.r);
    if (mpz_even_p(p.r.get_mpz_t())) p.pi4 = Pi4::Z2;
    else if ((abs(a) == 1 && is_pronic(b)) || (abs(b) == 1 && is_pronic(a))) p.pi4 = Pi4::Zero;
    else p.pi4 = Pi4::Unknown;
    return p;
}

InvariantProfile profile_spin_sphere(const BigInt& a, const BigInt& b) {
    BigInt d = a - b;
    if (d == 0) throw Error(ErrorCode::DegenerateOrder, "a = b");
    BigInt S = a + b;
    InvariantProfile p;
    p.type = CohomologyType::EBar;
    p.r = abs(d);
    p.s1 = mod_one(Q((2 * S + 3) * (2 * S + 3), 896 * d) - Q(4 * S + 5, 384 * d) - Q(sgn(d), 224));
    p.s2 = mod_one(Q(-(S - 1), 12 * d));
    p.s3 = mod_one(Q(-(S - 5), 4 * d));
    p.p1 = ResidueClass(2 * S + 3, p.r);
    p.lk = lk_of(sgn(d), p.r);
    bool l_pair = (a == 0 && is_perfect_square(b)) || (b == 0 && is_perfect_square(a));
    p.pi4 = l_pair ? Pi4::Z2 : Pi4::Unknown;
    return p;
}

InvariantProfile profile_circle(const BigInt& t, const BigInt& a, const BigInt& b) {
    return profile_circle(t, a, b, choose_mn(BundleSpec::circle(t, a, b)));
}

InvariantProfile profile_circle(const BigInt& t, const BigInt& a, const BigInt& b, const MnPair& mn) {
    require_coprime(a, b);
    const BigInt& m = mn.m;
    const BigInt& n = mn.n;
    if (a * m - b * n != 1) throw std::invalid_argument("profile_circle: a m - b n != 1");
    BigInt S = a + b, M = m + n;
    BigInt s = t * S * S - a * b;
    if (s == 0) throw Error(ErrorCode::DegenerateOrder, "t(a+b)^2 - ab = 0");

    int sw = 0;
    if (sgn(s) < 0) {
        BigInt trace = b + (1 - t) * S;
        if (trace == 0) throw std::logic_error("profile_circle: indefinite form with zero trace");
        sw = sgn(trace) > 0 ? 2 : -2;
    }
    BigInt t1 = t - 1, tt1 = t * t - 1;
    BigInt m4 = pow4(m), n4 = pow4(n), M2 = M * M;
    BigInt am2bn2 = a * m * m + b * n * n;

    Rational s1 = Q(-sw, 224) - Q(S * t1 * t1, 56 * s) + Q(S * (3 * a * b + t1 * (8 + S * S)), 672);

    BigInt s2_poly = t1 * M * (2 - S * M - 2 * M2) - a * m * (m + 2 * n) - b * n * (n + 2 * m) - 6 * m * n * M;
    BigInt s2_frac = tt1 * S * M2 * (2 - M2) +
                     t1 * (m4 * (3 * a + b) + n4 * (a + 3 * b) - 2 * S * M2 + 2 * am2bn2 * (2 * n * m - 1)) +
                     a * m4 + b * n4 - 6 * m * m * n * n * S - 4 * m * n * (a * n * n + b * m * m);
    Rational s2 = Q(s2_poly, 24) + Q(s2_frac, 24 * s);

    BigInt s3_poly = t1 * M * (1 - S * M - 4 * M2) - a * m * (m + 2 * n) - b * n * (n + 2 * m);
    BigInt s3_frac = tt1 * S * M2 * (1 - 2 * M2) +
                     t1 * (2 * m4 * (3 * a + b) + 2 * n4 * (a + 3 * b) - S * M2 + am2bn2 * (8 * n * m - 1)) +
                     2 * a * m4 + 2 * b * n4 - 12 * m * m * n * n * S - 8 * m * n * (a * n * n + b * m * m);
    Rational s3 = Q(s3_poly, 6) + Q(s3_frac, 3 * s);

    InvariantProfile p;
    p.type = CohomologyType::E;
    p.r = abs(s);
    p.s1 = mod_one(s1);
    p.s2 = mod_one(s2);
    p.s3 = mod_one(s3);
    p.p1 = ResidueClass(4 * (1 - t) * S * S, p.r);
    BigInt N = -t * t * S * pow4(M) + t * (m4 * (3 * a + b) + n4 * (a + 3 * b) + 4 * n * m * am2bn2) - a * m4 - b * n4;
    p.lk = lk_of(N * sgn(s), p.r);
    if (abs(t) == 1) p.pi4 = Pi4::Zero;
    else if (mpz_even_p(t.get_mpz_t())) p.pi4 = Pi4::Z2;
    else p.pi4 = Pi4::Unknown;
    return p;
}

InvariantProfile profile_spin_circle(const BigInt& t, const BigInt& a, const BigInt& b) {
    return profile_spin_circle(t, a, b, choose_mn(BundleSpec::spin_circle(t, a, b)));
}

InvariantProfile profile_spin_circle(const BigInt& t, const BigInt& a, const BigInt& b, const MnPair& mn) {
    require_coprime(a, b);
    const BigInt& m = mn.m;
    const BigInt& n = mn.n;
    bool b_odd = mpz_odd_p(b.get_mpz_t()) != 0;
    if (a * m + b * n != 1 || (b_odd && mpz_even_p(m.get_mpz_t())))
        throw std::invalid_argument("profile_spin_circle: invalid (m,n)");
    BigInt s = a * a - t * b * b;
    if (s == 0) throw Error(ErrorCode::DegenerateOrder, "a^2 - t b^2 = 0");

    int sw = 0;
    if (sgn(s) < 0) sw = sgn(BigInt(b * (t + 1))) > 0 ? 2 : -2;

    BigInt Qf = n * n + t * m * m;
    BigInt alpha = a * Qf + 2 * t * b * n * m;
    BigInt beta = b * Qf + 2 * a * n * m;
    BigInt c = 3 + 4 * t;
    BigInt lead = b * Qf - 2 * a * n * m;
    Rational base = Q(-sw, 224) + Q(b * (6 + 8 * t + 3 * a * a + b * b * t), 896) - Q(b * c * c, 896 * s);

    Rational s1, s2, s3;
    if (!b_odd) {
        s1 = base;
        s2 = -Q(lead, 48) - Q(4 * n * m * alpha - (c - 2 * Qf) * beta, 48 * s);
        s3 = -Q(lead, 12) - Q(16 * n * m * alpha - (c - 8 * Qf) * beta, 12 * s);
    } else {
        s1 = base - Q(lead, 192) + Q(-2 * n * m * alpha + (6 + 8 * t - n * n - t * m * m) * beta, 384 * s);
        s2 = -Q(lead, 24) - Q(10 * n * m * alpha - (c - 5 * Qf) * beta, 24 * s);
        s3 = -Q(lead, 8) - Q(26 * n * m * alpha - (c - 13 * Qf) * beta, 8 * s);
    }

    InvariantProfile p;
    p.type = b_odd ? CohomologyType::EBar : CohomologyType::E;
    p.r = abs(s);
    p.s1 = mod_one(s1);
    p.s2 = mod_one(s2);
    p.s3 = mod_one(s3);
    p.p1 = ResidueClass(c * b * b, p.r);
    BigInt lk_num = -(b * pow4(n) + 6 * b * t * n * n * m * m + 4 * a * t * n * m * m * m + 4 * a * n * n * n * m +
                      b * t * t * pow4(m));
    p.lk = lk_of(lk_num * sgn(s), p.r);
    // t = 0 gives the L_{a,b} family; a = 0 with t = q^2 is the partner of the reversed L_{q,1}.
    bool z2 = t == 0 || (a == 0 && is_perfect_square(t));
    p.pi4 = z2 ? Pi4::Z2 : Pi4::Unknown;
    return p;
}

InvariantProfile profile(const BundleSpec& spec) {
    switch (spec.family) {
    case Family::Sphere: return profile_sphere(spec.a, spec.b);
    case Family::SpinSphere: return profile_spin_sphere(spec.a, spec.b);
    case Family::Circle: return profile_circle(spec.t, spec.a, spec.b);
    case Family::SpinCircle: return profile_spin_circle(spec.t, spec.a, spec.b);
    }
    throw std::logic_error("profile: bad family");
}

InvariantProfile profile_eschenburg(const EschenburgSpace& e, const ModOneValue& s1, const ModOneValue& s2,
                                    const ModOneValue& s3) {
    auto inv = invariants(e);
    InvariantProfile p;
    p.type = CohomologyType::E;
    p.r = inv.r;
    p.s1 = s1;
    p.s2 = s2;
    p.s3 = s3;
    p.p1 = inv.p1;
    p.lk = inv.lk_pair;
    p.pi4 = Pi4::Zero;
    return p;
}

InvariantProfile profile_eschenburg(const EschenburgFixture& fx) {
    return profile_eschenburg(fx.space, fx.s1, fx.s2, fx.s3);
}

InvariantProfile reverse_orientation(const InvariantProfile& p) {
    InvariantProfile q = p;
    q.s1 = -p.s1;
    q.s2 = -p.s2;
    q.s3 = -p.s3;
    q.lk.clear();
    for (const auto& c : p.lk) q.lk.emplace_back(-c.value, c.modulus);
    std::sort(q.lk.begin(), q.lk.end());
    return q;
}

std::optional<BundleSpec> natural_partner(const BundleSpec& spec) {
    if (spec.family == Family::Circle && spec.a + spec.b == 1)
        return BundleSpec::sphere(-spec.t, spec.a * (spec.a - 1));
    if (spec.family == Family::SpinCircle && spec.b == 1)
        return BundleSpec::spin_sphere(spec.t, spec.a * spec.a);
    return std::nullopt;
}

} // namespace ks7
