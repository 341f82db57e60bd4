#include "ks7/exact_arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ks7 {

BigInt big(long long v) {
    BigInt r;
    mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
    return r;
}

std::strong_ordering compare(const BigInt& a, const BigInt& b) {
    int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

int sign(const BigInt& a) { return sgn(a); }

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool is_perfect_square(const BigInt& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// ---------------------------------------------------------------- Rational

Rational::Rational(long long n) : value_(big(n)) {}
Rational::Rational(const BigInt& n) : value_(n) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [](std::string_view s, BigInt& out) {
        std::string buf(s);
        // Accept a Unicode minus, which shows up when values are pasted from typeset tables.
        if (buf.rfind("\xE2\x88\x92", 0) == 0) buf.replace(0, 3, "-");
        if (buf.empty()) return false;
        size_t i = (buf[0] == '-' || buf[0] == '+') ? 1 : 0;
        if (i == buf.size()) return false;
        for (size_t j = i; j < buf.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(buf[j]))) return false;
        if (buf[0] == '+') buf.erase(0, 1);
        return out.set_str(buf, 10) == 0;
    };
    text = trim(text);
    BigInt n, d(1);
    auto slash = text.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_int(text, n)
                  : parse_int(trim(text.substr(0, slash)), n) && parse_int(trim(text.substr(slash + 1)), d);
    if (!ok || d == 0) throw Error(ErrorCode::ParseError, "not a fraction: '" + std::string(text) + "'");
    return Rational(n, d);
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }
Rational& Rational::operator+=(const Rational& o) { value_ += o.value_; return *this; }
Rational& Rational::operator-=(const Rational& o) { value_ -= o.value_; return *this; }
Rational& Rational::operator*=(const Rational& o) { value_ *= o.value_; return *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ------------------------------------------------------------- ModOneValue

ModOneValue::ModOneValue(const Rational& q) : rep_(q - Rational(q.floor())) {}

ModOneValue mod_one(const Rational& q) { return ModOneValue(q); }

// ------------------------------------------------------------ ResidueClass

ResidueClass::ResidueClass(const BigInt& v, const BigInt& m) : value(0), modulus(m) {
    if (sgn(m) <= 0) throw std::domain_error("ResidueClass: modulus must be positive");
    value = mod_floor(v, m);
}

std::string ResidueClass::str() const { return value.get_str() + " mod " + modulus.get_str(); }

std::strong_ordering operator<=>(const ResidueClass& a, const ResidueClass& b) {
    if (auto c = compare(a.modulus, b.modulus); c != 0) return c;
    return compare(a.value, b.value);
}

// -------------------------------------------------------------- modular ops

BigInt inv_mod(const BigInt& a, const BigInt& m) {
    if (sgn(m) <= 0) throw std::domain_error("inv_mod: modulus must be positive");
    BigInt r = mod_floor(a, m);
    if (m == 1) return 0;
    BigInt u;
    if (mpz_invert(u.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorCode::NotCoprime, "gcd(" + a.get_str() + ", " + m.get_str() + ") != 1");
    return u;
}

BigInt Factorization::product() const {
    BigInt p = 1;
    for (const auto& [q, e] : factors) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), e);
        p *= t;
    }
    return p;
}

namespace {

constexpr unsigned long kTrialLimit = 1000000;

bool probably_prime(const BigInt& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
BigInt pollard_rho(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt y = 2, x, q = 1, g = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const BigInt& v) { return mod_floor(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod_floor(q * abs(x - y), n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (probably_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    split(d, out);
    split(n / d, out);
}

} // namespace

Factorization factorize(const BigInt& n) {
    if (sgn(n) <= 0) throw std::domain_error("factorize: n must be positive");
    std::map<BigInt, unsigned> acc;
    BigInt rest;
    if (n.fits_ulong_p()) {
        unsigned long v = n.get_ui();
        for (unsigned long p = 2; p <= kTrialLimit && p * p <= v; p += (p == 2 ? 1 : 2))
            while (v % p == 0) {
                ++acc[BigInt(p)];
                v /= p;
            }
        rest = v;
    } else {
        rest = n;
        for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
            if (BigInt(p) * p > rest) break;
            while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
                ++acc[BigInt(p)];
                rest /= p;
            }
        }
    }
    if (rest != 1) {
        // Trial division stopped at sqrt(rest) or at the limit; below limit^2 the cofactor is prime.
        if (rest <= BigInt(kTrialLimit) * kTrialLimit) ++acc[rest];
        else split(rest, acc);
    }
    Factorization f;
    for (auto& [p, e] : acc) f.factors.emplace_back(p, e);
    return f;
}

ResidueClass crt_combine(const std::vector<ResidueClass>& residues) {
    BigInt x = 0, m = 1;
    for (const auto& rc : residues) {
        if (gcd(m, rc.modulus) != 1)
            throw Error(ErrorCode::ModuliNotCoprime, m.get_str() + " and " + rc.modulus.get_str());
        // x' = x + m * ((v - x) * m^{-1} mod n)
        BigInt t = mod_floor((rc.value - x) * inv_mod(m, rc.modulus), rc.modulus);
        x += m * t;
        m *= rc.modulus;
    }
    return ResidueClass(x, m);
}

namespace {

BigInt pow_ui(const BigInt& b, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

BigInt powm(const BigInt& b, const BigInt& e, const BigInt& m) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// One root of a unit a modulo an odd prime p, or false.
bool tonelli_shanks(const BigInt& a_in, const BigInt& p, BigInt& root) {
    BigInt a = mod_floor(a_in, p);
    if (a == 0) { root = 0; return true; }
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return false;
    BigInt q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) { q /= 2; ++s; }
    BigInt z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    BigInt c = powm(z, q, p);
    BigInt x = powm(a, (q + 1) / 2, p);
    BigInt t = powm(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        BigInt tt = t;
        while (tt != 1) { tt = mod_floor(tt * tt, p); ++i; }
        BigInt b = c;
        for (unsigned long j = 0; j + 1 < m - i; ++j) b = mod_floor(b * b, p);
        x = mod_floor(x * b, p);
        c = mod_floor(b * b, p);
        t = mod_floor(t * c, p);
        m = i;
    }
    root = x;
    return true;
}

// Roots of a unit modulo p^e, p odd: Tonelli–Shanks then Newton/Hensel lifting.
std::vector<BigInt> odd_unit_roots(const BigInt& a, const BigInt& p, unsigned e) {
    BigInt x;
    if (!tonelli_shanks(a, p, x)) return {};
    BigInt pk = p;
    for (unsigned k = 1; k < e; ++k) {
        pk *= p;
        BigInt fx = mod_floor(x * x - a, pk);
        x = mod_floor(x - fx * inv_mod(2 * x, pk), pk);
    }
    BigInt mod = pow_ui(p, e);
    x = mod_floor(x, mod);
    BigInt y = mod_floor(-x, mod);
    if (x == y) return {x};
    return {std::min(x, y), std::max(x, y)};
}

// All roots modulo 2^e, by lifting the root set one bit at a time.
std::vector<BigInt> two_power_roots(const BigInt& a, unsigned e) {
    std::vector<BigInt> roots;
    BigInt mod = 2;
    for (int x = 0; x < 2; ++x)
        if (mod_floor(BigInt(x * x) - a, mod) == 0) roots.emplace_back(x);
    for (unsigned k = 1; k < e && !roots.empty(); ++k) {
        BigInt next = mod * 2;
        std::vector<BigInt> lifted;
        for (const auto& r : roots)
            for (const BigInt& c : {r, BigInt(r + mod)})
                if (mod_floor(c * c - a, next) == 0) lifted.push_back(c);
        roots = std::move(lifted);
        mod = next;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<BigInt> prime_power_roots(const BigInt& a_in, const BigInt& p, unsigned e) {
    if (p == 2) return two_power_roots(mod_floor(a_in, pow_ui(p, e)), e);
    BigInt mod = pow_ui(p, e);
    BigInt a = mod_floor(a_in, mod);
    if (a == 0) {
        // x ≡ 0 mod p^ceil(e/2)
        BigInt step = pow_ui(p, (e + 1) / 2);
        std::vector<BigInt> out;
        for (BigInt x = 0; x < mod; x += step) out.push_back(x);
        return out;
    }
    unsigned v = 0;
    BigInt u = a;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) { u /= p; ++v; }
    if (v % 2 != 0) return {};
    // x = p^(v/2) y with y^2 ≡ u mod p^(e-v); y is free modulo p^(e-v/2).
    auto base = odd_unit_roots(u, p, e - v);
    BigInt scale = pow_ui(p, v / 2);
    BigInt ymod = pow_ui(p, e - v);
    BigInt lifts = pow_ui(p, v / 2);
    std::vector<BigInt> out;
    for (const auto& y0 : base)
        for (BigInt k = 0; k < lifts; ++k) out.push_back(mod_floor(scale * (y0 + k * ymod), mod));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<BigInt> sqrt_mod(const BigInt& a, const BigInt& m) {
    if (sgn(m) <= 0) throw std::domain_error("sqrt_mod: modulus must be positive");
    return sqrt_mod(a, factorize(m));
}

std::vector<BigInt> sqrt_mod(const BigInt& a, const Factorization& fac) {
    if (fac.factors.empty()) return {BigInt(0)};
    std::vector<std::vector<ResidueClass>> local;
    for (const auto& [p, e] : fac.factors) {
        BigInt pe = pow_ui(p, e);
        std::vector<ResidueClass> rs;
        for (const auto& x : prime_power_roots(a, p, e)) rs.emplace_back(x, pe);
        if (rs.empty()) return {};
        local.push_back(std::move(rs));
    }
    std::vector<BigInt> out;
    std::vector<size_t> idx(local.size(), 0);
    std::vector<ResidueClass> pick(local.size());
    for (;;) {
        for (size_t i = 0; i < local.size(); ++i) pick[i] = local[i][idx[i]];
        out.push_back(crt_combine(pick).value);
        size_t i = 0;
        while (i < local.size() && ++idx[i] == local[i].size()) idx[i++] = 0;
        if (i == local.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ks7
