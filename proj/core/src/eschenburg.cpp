#include "ks7/eschenburg.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace ks7 {

std::string EschenburgSpace::str() const {
    std::ostringstream os;
    os << k[0] << ' ' << k[1] << ' ' << k[2] << " | " << l[0] << ' ' << l[1] << ' ' << l[2];
    return os.str();
}

BigInt sigma1(const Weights& w) { return big(w[0]) + big(w[1]) + big(w[2]); }

BigInt sigma2(const Weights& w) {
    return big(w[0]) * big(w[1]) + big(w[0]) * big(w[2]) + big(w[1]) * big(w[2]);
}

BigInt sigma3(const Weights& w) { return big(w[0]) * big(w[1]) * big(w[2]); }

namespace {

void require_equal_sums(const EschenburgSpace& e) {
    if (sigma1(e.k) != sigma1(e.l))
        throw Error(ErrorCode::UnequalSums, "sum(k) != sum(l) for " + e.str());
}

bool unit_gcd(long long x, long long y) { return std::gcd(x, y) == 1; }

bool free_unchecked(const Weights& k, const Weights& l) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j && !unit_gcd(k[a] - l[i], k[b] - l[j])) return false;
        }
    return true;
}

bool outside(const Weights& xs, const Weights& range) {
    auto [lo, hi] = std::minmax_element(range.begin(), range.end());
    return std::all_of(xs.begin(), xs.end(), [&](long long x) { return x < *lo || x > *hi; });
}

} // namespace

bool is_free(const EschenburgSpace& e) {
    require_equal_sums(e);
    return free_unchecked(e.k, e.l);
}

bool is_free_literal(const EschenburgSpace& e) {
    require_equal_sums(e);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && !unit_gcd(e.k[0] - e.l[i], e.k[1] - e.l[j])) return false;
    return true;
}

bool is_positively_curved(const EschenburgSpace& e) {
    return outside(e.k, e.l) || outside(e.l, e.k);
}

EschenburgInvariants invariants(const EschenburgSpace& e) {
    require_equal_sums(e);
    EschenburgInvariants inv;
    BigInt d = sigma2(e.k) - sigma2(e.l);
    if (d == 0) throw Error(ErrorCode::DegenerateOrder, "sigma2(k) = sigma2(l) for " + e.str());
    inv.r = abs(d);
    inv.s_signed = sigma3(e.k) - sigma3(e.l);
    BigInt s1 = sigma1(e.k);
    inv.p1 = ResidueClass(2 * s1 * s1 - 6 * sigma2(e.k), inv.r);
    inv.free = free_unchecked(e.k, e.l);
    inv.positively_curved = is_positively_curved(e);
    if (inv.r > 1 && gcd(inv.s_signed, inv.r) == 1) {
        BigInt u = inv_mod(inv.s_signed, inv.r);
        ResidueClass plus(u, inv.r), minus(-u, inv.r);
        inv.lk_pair.push_back(std::min(plus, minus));
        if (plus != minus) inv.lk_pair.push_back(std::max(plus, minus));
    }
    return inv;
}

namespace {

EschenburgSpace sorted_shifted(Weights k, Weights l) {
    std::sort(k.begin(), k.end());
    std::sort(l.begin(), l.end());
    long long c = l[0];
    for (auto& x : k) x -= c;
    for (auto& x : l) x -= c;
    return {k, l};
}

Weights negated(const Weights& w) { return {-w[0], -w[1], -w[2]}; }

} // namespace

EschenburgSpace normalize(const EschenburgSpace& e) {
    EschenburgSpace best = sorted_shifted(e.k, e.l);
    for (const auto& cand : {sorted_shifted(negated(e.k), negated(e.l)), sorted_shifted(e.l, e.k),
                             sorted_shifted(negated(e.l), negated(e.k))})
        best = std::min(best, cand);
    return best;
}

namespace {

// Every class has a representative with k outside [0, L], l = (0, l2, L), 0 <= l2 <= L
// (swap k and l if needed, then shift and permute). Since sum(k) = l2 + L lies in [L, 2L],
// either L = 0 (Aloff–Wallach, all k_i nonzero), or two k_i exceed L and one is negative
// (shape A), or one exceeds L and two are negative (shape B). In both shapes
// 2r = sum k_i^2 - L^2 - l2^2, and the lower bounds below prune each loop.
class Enumerator {
public:
    explicit Enumerator(long long r_max) : r_max_(r_max) {}

    void aloff_wallach(std::set<EschenburgSpace>& out) const {
        long long bound = static_cast<long long>(std::sqrt(2.0 * static_cast<double>(r_max_))) + 2;
        for (long long p = -bound; p <= bound; ++p)
            for (long long q = -bound; q <= bound; ++q) {
                if (p == 0 || q == 0 || p + q == 0) continue;
                consider({p, q, -p - q}, {0, 0, 0}, out);
            }
    }

    // All candidates with max(l) = L, L >= 1.
    void slab(long long L, std::set<EschenburgSpace>& out) const {
        const long long two_r = 2 * r_max_;
        for (long long l2 = 0; l2 <= L; ++l2) {
            // shape A: k1 >= k2 > L, k3 < 0; 2r >= 2L + 1 + 2*l2 + 1 + k3^2
            if (2 * L + 2 * l2 + 2 >= two_r + 1) break;
            for (long long k3 = -1; 2 * L + 2 * l2 + 2 + k3 * k3 < two_r; --k3) {
                long long total = L + l2 - k3;
                for (long long k2 = L + 1; 2 * k2 <= total; ++k2)
                    consider({total - k2, k2, k3}, {0, l2, L}, out);
            }
            // shape B: k1 > L, k2 = -u, k3 = -w with u >= w >= 1
            for (long long u = 1;; ++u) {
                if (shape_b_bound(L, l2, u, 1) >= two_r) break;
                for (long long w = 1; w <= u && shape_b_bound(L, l2, u, w) < two_r; ++w)
                    consider({L + l2 + u + w, -u, -w}, {0, l2, L}, out);
            }
        }
    }

    long long max_l() const { return r_max_; }

private:
    static long long shape_b_bound(long long L, long long l2, long long u, long long w) {
        return 2 * (L + l2) * (u + w) + (u + w) * (u + w) + u * u + w * w;
    }

    void consider(const Weights& k, const Weights& l, std::set<EschenburgSpace>& out) const {
        long long s2k = k[0] * k[1] + k[0] * k[2] + k[1] * k[2];
        long long s2l = l[0] * l[1] + l[0] * l[2] + l[1] * l[2];
        long long r = std::llabs(s2k - s2l);
        if (r == 0 || r >= r_max_) return;
        if (!free_unchecked(k, l)) return;
        EschenburgSpace e{k, l};
        if (!is_positively_curved(e)) return;
        out.insert(normalize(e));
    }

    long long r_max_;
};

} // namespace

std::vector<EschenburgSpace> enumerate_positively_curved(long long r_max, unsigned threads) {
    Enumerator en(r_max);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::set<EschenburgSpace>> parts(threads);
    en.aloff_wallach(parts[0]);
    std::atomic<long long> next{1};
    auto worker = [&](unsigned id) {
        for (long long L; (L = next.fetch_add(1)) < en.max_l();) en.slab(L, parts[id]);
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& t : pool) t.join();

    std::set<EschenburgSpace> all;
    for (auto& p : parts) all.merge(p);
    std::vector<std::pair<BigInt, EschenburgSpace>> keyed;
    keyed.reserve(all.size());
    for (const auto& e : all) keyed.emplace_back(abs(sigma2(e.k) - sigma2(e.l)), e);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (int c = cmp(a.first, b.first); c != 0) return c < 0;
        return a.second < b.second;
    });
    std::vector<EschenburgSpace> out;
    out.reserve(keyed.size());
    for (auto& [r, e] : keyed) out.push_back(e);
    return out;
}

// ------------------------------------------------------------------ fixtures

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

Weights parse_weights(const std::string& field, int line) {
    auto ts = tokens(field);
    if (ts.size() != 3) parse_fail(line, "expected three integers, got '" + field + "'");
    Weights w{};
    for (int i = 0; i < 3; ++i) {
        Rational q;
        try {
            q = Rational::parse(ts[i]);
        } catch (const Error&) {
            parse_fail(line, "bad integer '" + ts[i] + "'");
        }
        if (!q.is_integer() || !q.num().fits_slong_p()) parse_fail(line, "bad integer '" + ts[i] + "'");
        w[i] = q.num().get_si();
    }
    return w;
}

bool divides(const BigInt& d, const BigInt& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

} // namespace

std::vector<EschenburgFixture> load_fixtures(std::istream& in) {
    std::vector<EschenburgFixture> out;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto fields = split_fields(raw);
        if (fields.size() < 3) parse_fail(line_no, "expected 'k | l | s1 s2 s3'");

        EschenburgFixture fx;
        fx.line = line_no;
        fx.space = {parse_weights(fields[0], line_no), parse_weights(fields[1], line_no)};
        auto ss = tokens(fields[2]);
        if (ss.size() != 3) parse_fail(line_no, "expected three fractions");
        try {
            fx.s1 = mod_one(Rational::parse(ss[0]));
            fx.s2 = mod_one(Rational::parse(ss[1]));
            fx.s3 = mod_one(Rational::parse(ss[2]));
        } catch (const Error& e) {
            parse_fail(line_no, e.what());
        }
        for (size_t f = 3; f < fields.size(); ++f)
            for (const auto& tok : tokens(fields[f])) {
                auto eq = tok.find('=');
                if (eq != std::string::npos) fx.annotations[tok.substr(0, eq)] = tok.substr(eq + 1);
                else if (std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    fx.annotations["r"] = tok;
                else fx.annotations[tok] = "";
            }

        if (sigma1(fx.space.k) != sigma1(fx.space.l))
            throw Error(ErrorCode::InconsistentFixture, "line " + std::to_string(line_no) + ": unequal sums");
        BigInt r = abs(sigma2(fx.space.k) - sigma2(fx.space.l));
        if (r == 0)
            throw Error(ErrorCode::InconsistentFixture, "line " + std::to_string(line_no) + ": r = 0");
        if (fx.has("r") && BigInt(fx.annotations["r"]) != r)
            throw Error(ErrorCode::InconsistentFixture, "line " + std::to_string(line_no) + ": stated r " +
                                                            fx.annotations["r"] + " but (k,l) give " + r.get_str());
        // 2016 = lcm(224, 24, 6) * 3; every invariant denominator divides 2016 r.
        for (const auto* s : {&fx.s1, &fx.s2, &fx.s3})
            if (!divides(s->representative().den(), 2016 * r))
                throw Error(ErrorCode::InconsistentFixture, "line " + std::to_string(line_no) + ": denominator of " +
                                                                s->str() + " does not divide 2016*" + r.get_str());
        out.push_back(std::move(fx));
    }
    return out;
}

std::vector<EschenburgFixture> load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::MissingFixture, "cannot open " + path);
    return load_fixtures(in);
}

} // namespace ks7
