#include "ks7/atlas_search.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ks7 {

ProfileKey ProfileKey::of(const InvariantProfile& p) {
    ProfileKey k;
    k.type = p.type;
    k.r = p.r;
    auto own = std::tie(p.s1, p.s2, p.s3);
    ModOneValue n1 = -p.s1, n2 = -p.s2, n3 = -p.s3;
    auto neg = std::tie(n1, n2, n3);
    k.reversed = neg < own;
    std::tie(k.s1, k.s2, k.s3) = k.reversed ? neg : own;
    return k;
}

bool operator<(const BucketKey& x, const BucketKey& y) {
    if (x.type != y.type) return x.type < y.type;
    if (int c = cmp(x.r, y.r); c != 0) return c < 0;
    return std::tie(x.s1, x.s2, x.s3) < std::tie(y.s1, y.s2, y.s3);
}

size_t ProfileIndex::size() const {
    size_t n = 0;
    for (const auto& [k, v] : buckets) n += v.size();
    return n;
}

ProfileIndex build_index(const std::vector<std::pair<std::string, InvariantProfile>>& profiles) {
    ProfileIndex idx;
    for (const auto& [desc, prof] : profiles) {
        auto key = ProfileKey::of(prof);
        idx.buckets[BucketKey{key.type, key.r, key.s1, key.s2, key.s3}].push_back({desc, prof, key.reversed});
    }
    return idx;
}

std::vector<MatchRecord> match_all(const ProfileIndex& left, const ProfileIndex& right, bool require_pi4_compat) {
    std::vector<MatchRecord> out;
    for (const auto& [key, lefts] : left.buckets) {
        auto it = right.buckets.find(key);
        if (it == right.buckets.end()) continue;
        for (const auto& l : lefts)
            for (const auto& r : it->second) {
                InvariantProfile lp = l.profile, rp = r.profile;
                if (!require_pi4_compat) lp.pi4 = rp.pi4 = Pi4::Unknown;
                auto m = ks_compare(lp, rp, false);
                if (!m.preserving && !m.reversing) continue;
                MatchRecord rec;
                rec.left = l.descriptor;
                rec.right = r.descriptor;
                rec.orientation = m.preserving ? Orientation::Preserving : Orientation::Reversing;
                rec.r = lp.r;
                rec.s1 = lp.s1;
                rec.s2 = lp.s2;
                rec.s3 = lp.s3;
                rec.p1_coherent = lp.p1 == rp.p1;
                out.push_back(std::move(rec));
            }
    }
    return out;
}

std::string matches_tsv(const std::vector<MatchRecord>& records) {
    std::ostringstream os;
    for (const auto& m : records)
        os << m.left << '\t' << m.right << '\t' << orientation_name(m.orientation) << '\t' << m.r.get_str() << '\t'
           << m.s1.str() << '\t' << m.s2.str() << '\t' << m.s3.str() << '\n';
    return os.str();
}

// ------------------------------------------------------------ table reports

bool RowReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RowCheck& c) { return c.pass; });
}

bool TableReport::pass() const {
    return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.pass(); });
}

std::string TableReport::text() const {
    std::ostringstream os;
    os << "Table " << (table == Table::A ? 'A' : 'B') << ": " << rows.size() << " rows\n";
    for (const auto& row : rows) {
        os << (row.pass() ? "PASS " : "FAIL ") << row.id << " r=" << row.r.get_str() << '\n';
        for (const auto& c : row.checks)
            os << "    [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << ": " << c.detail << '\n';
    }
    os << (pass() ? "all rows pass\n" : "some rows fail\n");
    return os.str();
}

std::string TableReport::tsv() const {
    std::ostringstream os;
    for (const auto& row : rows)
        for (const auto& c : row.checks)
            os << row.id << '\t' << row.r.get_str() << '\t' << c.name << '\t' << (c.pass ? "pass" : "fail") << '\t'
               << c.detail << '\n';
    return os.str();
}

std::vector<BigInt> parse_int_list(const std::string& csv) {
    std::vector<BigInt> out;
    std::stringstream ss(csv);
    for (std::string item; std::getline(ss, item, ',');) {
        auto q = Rational::parse(item);
        if (!q.is_integer()) throw Error(ErrorCode::ParseError, "not an integer: '" + item + "'");
        out.push_back(q.num());
    }
    return out;
}

namespace {

std::string triple(const ModOneValue& a, const ModOneValue& b, const ModOneValue& c) {
    return "(" + a.str() + ", " + b.str() + ", " + c.str() + ")";
}

std::string residues_str(const std::vector<ResidueClass>& rs) {
    std::string s = "{";
    for (size_t i = 0; i < rs.size(); ++i) s += (i ? ", " : "") + rs[i].value.get_str();
    if (!rs.empty()) s += "} mod " + rs.front().modulus.get_str();
    else s += "}";
    return s;
}

std::string row_id(const EschenburgFixture& fx, size_t i) {
    if (fx.has("id")) return fx.annotations.at("id");
    return "row" + std::to_string(i + 1);
}

const std::string& need(const EschenburgFixture& fx, const std::string& key, const std::string& id) {
    auto it = fx.annotations.find(key);
    if (it == fx.annotations.end())
        throw Error(ErrorCode::MissingFixture, id + " (line " + std::to_string(fx.line) + ") lacks '" + key + "='");
    return it->second;
}

void add(RowReport& row, std::string name, bool pass, std::string detail) {
    row.checks.push_back({std::move(name), pass, std::move(detail)});
}

RowReport table_a_row(const EschenburgFixture& fx, const std::string& id) {
    RowReport row;
    row.id = id;
    auto inv = invariants(fx.space);
    row.r = inv.r;
    const BigInt& r = inv.r;
    BigInt m168 = 168 * r;

    add(row, "r", !fx.has("r") || BigInt(fx.annotations.at("r")) == r, "(k,l) give r = " + r.get_str());
    add(row, "free", inv.free, fx.space.str());
    add(row, "positively_curved", inv.positively_curved, fx.space.str());
    BigInt s_mod = mod_floor(inv.s_signed, r);
    add(row, "s = +-1 mod r", s_mod == 1 || s_mod == r - 1, "s = " + inv.s_signed.get_str() + " = " + s_mod.get_str() + " mod r");

    std::vector<ResidueClass> listed;
    for (const auto& a : parse_int_list(need(fx, "a", id))) listed.emplace_back(a, m168);
    std::sort(listed.begin(), listed.end());
    listed.erase(std::unique(listed.begin(), listed.end()), listed.end());

    std::set<ResidueClass> found;
    std::map<BigInt, Orientation> orientation_of;
    std::string solved;
    try {
        EdiffeoProblem prob(r, fx.s1, fx.s2, fx.s3);
        for (const auto& sol : ediffeo_solve_all(prob)) {
            solved += std::string(solved.empty() ? "" : "; ") + std::string(orientation_name(sol.orientation)) + " " +
                      residues_str(sol.residues);
            for (const auto& rc : sol.residues) {
                found.insert(rc);
                orientation_of.emplace(rc.value, sol.orientation);
            }
        }
    } catch (const Error& e) {
        solved = e.what();
    }
    std::vector<ResidueClass> found_v(found.begin(), found.end());
    add(row, "ediffeo residues", found_v == listed,
        "listed " + residues_str(listed) + ", solved " + (solved.empty() ? "nothing" : solved));

    auto target = profile_eschenburg(fx);
    for (const auto& rc : listed) {
        auto it = orientation_of.find(rc.value);
        Orientation o = it == orientation_of.end() ? Orientation::Preserving : it->second;
        row.orientations.push_back(o);
        auto sp = profile_sphere(rc.value, rc.value - r);
        auto want = o == Orientation::Preserving ? target : reverse_orientation(target);
        bool ok = sp.s1 == want.s1 && sp.s2 == want.s2 && sp.s3 == want.s3;
        add(row, "S_{" + rc.value.get_str() + "," + BigInt(rc.value - r).get_str() + "} " +
                     std::string(orientation_name(o)),
            ok, "bundle " + triple(sp.s1, sp.s2, sp.s3) + ", table " + triple(fx.s1, fx.s2, fx.s3));
    }
    return row;
}

RowReport table_b_row(const EschenburgFixture& fx, const std::string& id) {
    RowReport row;
    row.id = id;
    auto inv = invariants(fx.space);
    row.r = inv.r;
    BigInt a(need(fx, "a", id)), b(need(fx, "b", id)), t(need(fx, "t", id));
    Orientation o = fx.has("star") ? Orientation::Reversing : Orientation::Preserving;
    row.orientations.push_back(o);

    add(row, "r", !fx.has("r") || BigInt(fx.annotations.at("r")) == inv.r, "(k,l) give r = " + inv.r.get_str());
    add(row, "free", inv.free, fx.space.str());
    add(row, "positively_curved", inv.positively_curved, fx.space.str());

    BigInt s = t * (a + b) * (a + b) - a * b;
    add(row, "bundle r", abs(s) == inv.r, "|t(a+b)^2 - ab| = " + BigInt(abs(s)).get_str());
    if (abs(s) != inv.r) return row;

    auto bundle = profile_circle(t, a, b);
    auto esch = profile_eschenburg(fx);
    auto want = o == Orientation::Preserving ? esch : reverse_orientation(esch);
    bool s_ok = bundle.s1 == want.s1 && bundle.s2 == want.s2 && bundle.s3 == want.s3;
    add(row, std::string("s-invariants ") + std::string(orientation_name(o)), s_ok,
        "bundle " + triple(bundle.s1, bundle.s2, bundle.s3) + ", table " + triple(fx.s1, fx.s2, fx.s3));
    add(row, "p1 coherence", bundle.p1 == esch.p1,
        "bundle " + bundle.p1.str() + ", eschenburg " + esch.p1.str());
    Verdict v = ks_diffeomorphic(bundle, esch);
    Verdict expect = o == Orientation::Preserving ? Verdict::Preserving : Verdict::Reversing;
    add(row, "ks verdict", v == expect, std::string(verdict_name(v)));
    return row;
}

} // namespace

TableReport reproduce_table(Table which, const std::vector<EschenburgFixture>& fixtures) {
    if (fixtures.empty()) throw Error(ErrorCode::MissingFixture, "no fixture rows");
    TableReport rep;
    rep.table = which;
    for (size_t i = 0; i < fixtures.size(); ++i) {
        auto id = row_id(fixtures[i], i);
        rep.rows.push_back(which == Table::A ? table_a_row(fixtures[i], id) : table_b_row(fixtures[i], id));
    }
    return rep;
}

} // namespace ks7
