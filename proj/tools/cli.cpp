#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ks7/atlas_search.hpp"

namespace ks7::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Tsv, Text };

// Short options keep the '=' of "-b=-1" in the value.
std::string strip_eq(const std::string& s) { return !s.empty() && s[0] == '=' ? s.substr(1) : s; }

BigInt parse_big(const std::string& s_in, const std::string& what) {
    std::string s = strip_eq(s_in);
    try {
        auto q = Rational::parse(s);
        if (q.is_integer()) return q.num();
    } catch (const Error&) {
    }
    throw UsageError(what + ": expected an integer, got '" + s + "'");
}

Rational parse_fraction(const std::string& s_in, const std::string& what) {
    std::string s = strip_eq(s_in);
    try {
        return Rational::parse(s);
    } catch (const Error&) {
        throw UsageError(what + ": expected a fraction, got '" + s + "'");
    }
}

json jint(const BigInt& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);) out.push_back(item);
    return out;
}

Weights parse_weights(const std::string& s, const std::string& what) {
    auto parts = split(s, ',');
    if (parts.size() != 3) throw UsageError(what + ": expected three comma-separated integers");
    Weights w{};
    for (int i = 0; i < 3; ++i) {
        BigInt v = parse_big(parts[i], what);
        if (!v.fits_slong_p()) throw UsageError(what + ": weight out of range");
        w[i] = v.get_si();
    }
    return w;
}

Family parse_family(const std::string& s) {
    if (s == "sphere") return Family::Sphere;
    if (s == "spin-sphere") return Family::SpinSphere;
    if (s == "circle") return Family::Circle;
    if (s == "spin-circle") return Family::SpinCircle;
    throw UsageError("unknown family '" + s + "'");
}

// ------------------------------------------------------------------ output

json profile_json(const InvariantProfile& p) {
    json lk = json::array();
    for (const auto& c : p.lk) lk.push_back(c.str());
    return json{{"type", std::string(type_name(p.type))},
                {"r", jint(p.r)},
                {"s1", p.s1.str()},
                {"s2", p.s2.str()},
                {"s3", p.s3.str()},
                {"p1", p.p1.str()},
                {"lk", lk},
                {"pi4", std::string(pi4_name(p.pi4))}};
}

std::string lk_text(const InvariantProfile& p) {
    if (p.lk.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < p.lk.size(); ++i) s += (i ? "," : "") + p.lk[i].value.get_str();
    return s;
}

std::string profile_tsv(const std::string& subject, const InvariantProfile& p) {
    std::ostringstream os;
    os << subject << '\t' << type_name(p.type) << '\t' << p.r.get_str() << '\t' << p.s1.str() << '\t' << p.s2.str()
       << '\t' << p.s3.str() << '\t' << p.p1.value.get_str() << '\t' << lk_text(p) << '\t' << pi4_name(p.pi4) << '\n';
    return os.str();
}

std::string profile_text(const std::string& subject, const InvariantProfile& p) {
    std::ostringstream os;
    os << subject << '\n'
       << "  type  " << type_name(p.type) << "_r, r = " << p.r.get_str() << '\n'
       << "  s1    " << p.s1.str() << '\n'
       << "  s2    " << p.s2.str() << '\n'
       << "  s3    " << p.s3.str() << '\n'
       << "  p1    " << p.p1.str() << '\n'
       << "  lk    " << lk_text(p) << '\n'
       << "  pi4   " << pi4_name(p.pi4) << '\n';
    return os.str();
}

// ---------------------------------------------------------------- fixtures

std::vector<std::string> fixture_search_path(const std::vector<std::string>& explicit_paths) {
    if (!explicit_paths.empty()) return explicit_paths;
    std::vector<std::string> out;
    if (const char* env = std::getenv("KS7_FIXTURE_PATH"))
        for (const auto& p : split(env, ':'))
            if (!p.empty()) out.push_back(p);
    if (out.empty()) out.push_back("data");
    return out;
}

std::vector<std::string> expand_fixture_files(const std::vector<std::string>& paths) {
    std::vector<std::string> files;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<std::string> in_dir;
            for (const auto& e : fs::directory_iterator(p))
                if (e.is_regular_file() && e.path().extension() == ".txt") in_dir.push_back(e.path().string());
            std::sort(in_dir.begin(), in_dir.end());
            files.insert(files.end(), in_dir.begin(), in_dir.end());
        } else {
            files.push_back(p);
        }
    }
    return files;
}

std::string find_table_file(const std::vector<std::string>& paths, const std::string& name) {
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            auto f = fs::path(p) / name;
            if (fs::exists(f)) return f.string();
        } else if (fs::path(p).filename() == name || paths.size() == 1) {
            return p;
        }
    }
    throw Error(ErrorCode::MissingFixture, name + " not found on the fixture path");
}

EschenburgFixture find_fixture(const std::vector<std::string>& paths, const std::string& id) {
    for (const auto& f : expand_fixture_files(paths))
        for (auto& fx : load_fixture_file(f))
            if (fx.has("id") && fx.annotations.at("id") == id) return fx;
    throw Error(ErrorCode::MissingFixture, "no fixture with id=" + id);
}

// --------------------------------------------------------------- subjects

struct Subject {
    std::string descriptor;
    InvariantProfile profile;
    std::optional<BundleSpec> spec;
};

std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    for (const auto& item : split(body, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return kv;
}

BundleSpec make_spec(Family f, const std::optional<std::string>& a, const std::optional<std::string>& b,
                     const std::optional<std::string>& t) {
    if (!a || !b) throw UsageError("both a and b are required");
    BundleSpec spec{f, parse_big(*a, "a"), parse_big(*b, "b"), 0};
    if (spec.has_t()) {
        if (!t) throw UsageError(std::string(family_name(f)) + " requires t");
        spec.t = parse_big(*t, "t");
    } else if (t) {
        throw UsageError("t is only valid for circle families");
    }
    return spec;
}

// "sphere:a=2,b=-1", "circle:t=1,a=1,b=1", "fixture:W1_1"
Subject parse_subject(const std::string& text, const std::vector<std::string>& fixture_paths) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("expected family:key=value,..., got '" + text + "'");
    std::string head = text.substr(0, colon), body = text.substr(colon + 1);
    if (head == "fixture") {
        auto fx = find_fixture(fixture_paths, body);
        return {"fixture:" + body, profile_eschenburg(fx), std::nullopt};
    }
    auto kv = parse_kv(body);
    auto get = [&](const char* k) -> std::optional<std::string> {
        auto it = kv.find(k);
        if (it == kv.end()) return std::nullopt;
        return it->second;
    };
    for (const auto& [k, v] : kv)
        if (k != "a" && k != "b" && k != "t") throw UsageError("unknown key '" + k + "'");
    auto spec = make_spec(parse_family(head), get("a"), get("b"), get("t"));
    return {spec.str(), profile(spec), spec};
}

// ------------------------------------------------------------------ grids

struct Range {
    BigInt lo, hi;
};

Range parse_range(const std::string& s, const std::string& key) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        BigInt v = parse_big(s, key);
        return {v, v};
    }
    Range r{parse_big(s.substr(0, dots), key), parse_big(s.substr(dots + 2), key)};
    if (r.lo > r.hi) throw UsageError(key + ": empty range");
    return r;
}

// "circle:t=-5..5,a=-50..50,b=-50..50", "sphere:a=0..503,r=3", "chen:q1=1..30,q2=1..30", "fixtures:path"
std::vector<std::pair<std::string, InvariantProfile>> build_grid(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("expected grid family:key=range,..., got '" + text + "'");
    std::string head = text.substr(0, colon), body = text.substr(colon + 1);
    std::vector<std::pair<std::string, InvariantProfile>> out;
    if (head == "fixtures") {
        for (const auto& f : expand_fixture_files({body})) {
            auto fxs = load_fixture_file(f);
            for (size_t i = 0; i < fxs.size(); ++i) {
                std::string id = fxs[i].has("id") ? fxs[i].annotations.at("id") : f + ":" + std::to_string(fxs[i].line);
                out.emplace_back("fixture:" + id, profile_eschenburg(fxs[i]));
            }
        }
        return out;
    }
    auto kv = parse_kv(body);
    std::map<std::string, Range> ranges;
    for (const auto& [k, v] : kv) ranges[k] = parse_range(v, k);
    auto need = [&](const char* k) -> const Range& {
        auto it = ranges.find(k);
        if (it == ranges.end()) throw UsageError(head + " grid requires " + k);
        return it->second;
    };
    auto add = [&](const BundleSpec& spec) {
        try {
            out.emplace_back(spec.str(), profile(spec));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotCoprime && e.code() != ErrorCode::DegenerateOrder) throw;
        }
    };
    if (head == "chen") {
        const auto& q1 = need("q1");
        const auto& q2 = need("q2");
        for (BigInt x = q1.lo; x <= q1.hi; ++x)
            for (BigInt y = q2.lo; y <= q2.hi; ++y)
                if (x != 0 && y != 0) {
                    auto spec = chen_bundle({x, y});
                    out.emplace_back("chen(q1=" + x.get_str() + ",q2=" + y.get_str() + ")", profile(spec));
                }
        return out;
    }
    Family fam = parse_family(head);
    BundleSpec proto{fam, 0, 0, 0};
    if (!proto.has_t() && ranges.count("t")) throw UsageError("t is only valid for circle families");
    std::vector<BigInt> ts{0};
    if (proto.has_t()) {
        ts.clear();
        for (BigInt t = need("t").lo; t <= need("t").hi; ++t) ts.push_back(t);
    }
    const auto& ar = need("a");
    bool by_r = !proto.has_t() && ranges.count("r");
    for (const auto& t : ts)
        for (BigInt a = ar.lo; a <= ar.hi; ++a) {
            const auto& second = by_r ? need("r") : need("b");
            for (BigInt v = second.lo; v <= second.hi; ++v) {
                BigInt b = by_r ? BigInt(a - v) : v;
                add(BundleSpec{fam, a, b, t});
            }
        }
    return out;
}

// ---------------------------------------------------------------- commands

void emit(std::ostream& out, Format f, const json& j, const std::string& tsv, const std::string& text) {
    if (f == Format::Json) out << j.dump(2) << '\n';
    else if (f == Format::Tsv) out << tsv;
    else out << text;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Kreck-Stolz invariants and classification of 7-manifold families", "ks7"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format_s = "text";
    app.add_option("--format", format_s, "Output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();
    std::vector<std::string> fixture_opt;
    app.add_option("--fixtures", fixture_opt, "Fixture file or directory (default: $KS7_FIXTURE_PATH, then ./data)");

    // invariants
    auto* inv = app.add_subcommand("invariants", "Invariant profile of one manifold");
    std::string family;
    std::optional<std::string> a_s, b_s, t_s, k_s, l_s, s_s;
    inv->add_option("--family", family, "sphere | spin-sphere | circle | spin-circle | eschenburg")->required();
    inv->add_option("-a,--a", a_s, "Parameter a");
    inv->add_option("-b,--b", b_s, "Parameter b");
    inv->add_option("-t,--t", t_s, "Parameter t (circle families)");
    inv->add_option("--k", k_s, "Eschenburg weights k1,k2,k3");
    inv->add_option("--l", l_s, "Eschenburg weights l1,l2,l3");
    inv->add_option("--s", s_s, "Eschenburg s-invariants s1,s2,s3 (fractions)");

    // classify
    auto* cls = app.add_subcommand("classify", "Diffeomorphism, homeomorphism and homotopy verdicts for two manifolds");
    std::string left_s, right_s;
    cls->add_option("left", left_s, "e.g. sphere:a=2,b=-1 or fixture:W1_1")->required();
    cls->add_option("right", right_s, "e.g. circle:t=1,a=1,b=1")->required();

    // ediffeo
    auto* ed = app.add_subcommand("ediffeo", "Sphere bundles S_{a,a-r} with the given invariants");
    std::string r_s, s1_s, s2_s, s3_s, orient_s = "both";
    ed->add_option("-r,--r", r_s, "Order r of H^4")->required();
    ed->add_option("--s1", s1_s)->required();
    ed->add_option("--s2", s2_s)->required();
    ed->add_option("--s3", s3_s)->required();
    ed->add_option("--orientation", orient_s)
        ->check(CLI::IsMember({"preserving", "reversing", "both"}))
        ->capture_default_str();

    // enumerate
    auto* en = app.add_subcommand("enumerate", "Positively curved Eschenburg spaces with r < r_max");
    long long r_max = 0;
    unsigned threads = 0;
    bool count_only = false;
    en->add_option("--r-max", r_max)->required()->check(CLI::Range(3LL, 1000000LL));
    en->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
    en->add_flag("--count-only", count_only);

    // match
    auto* ma = app.add_subcommand("match", "Diffeomorphic pairs between two grids or fixture sets");
    std::string left_g, right_g;
    bool ignore_pi4 = false;
    ma->add_option("--left", left_g, "Grid, e.g. circle:t=-5..5,a=-50..50,b=-50..50")->required();
    ma->add_option("--right", right_g, "Grid or fixtures:PATH")->required();
    ma->add_flag("--ignore-pi4", ignore_pi4, "Do not require compatible pi4");

    // tables
    auto* tb = app.add_subcommand("tables", "Reproduce Table A or B from fixtures");
    std::string which;
    tb->add_option("table", which)->required()->check(CLI::IsMember({"A", "B", "a", "b"}));

    try {
        // argv[0] is the program name; CLI11 wants a reversed vector of the remaining arguments.
        std::vector<std::string> args;
        for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    Format fmt = format_s == "json" ? Format::Json : format_s == "tsv" ? Format::Tsv : Format::Text;
    auto fixture_paths = fixture_search_path(fixture_opt);

    try {
        if (*inv) {
            if (family == "eschenburg") {
                if (a_s || b_s || t_s) throw UsageError("eschenburg takes --k, --l and optional --s");
                if (!k_s || !l_s) throw UsageError("eschenburg requires --k and --l");
                EschenburgSpace e{parse_weights(*k_s, "--k"), parse_weights(*l_s, "--l")};
                auto ei = invariants(e);
                json lk = json::array();
                std::string lk_t;
                for (const auto& c : ei.lk_pair) {
                    lk.push_back(c.str());
                    lk_t += (lk_t.empty() ? "" : ",") + c.value.get_str();
                }
                json j{{"subject", "eschenburg(" + e.str() + ")"},
                       {"eschenburg",
                        {{"r", jint(ei.r)},
                         {"s_signed", jint(ei.s_signed)},
                         {"p1", ei.p1.str()},
                         {"lk_pair", lk},
                         {"free", ei.free},
                         {"positively_curved", ei.positively_curved},
                         {"normal_form", normalize(e).str()}}}};
                std::ostringstream tsv, text;
                tsv << "eschenburg(" << e.str() << ")\t" << ei.r.get_str() << '\t' << ei.s_signed.get_str() << '\t'
                    << ei.p1.value.get_str() << '\t' << (lk_t.empty() ? "-" : lk_t) << '\t' << ei.free << '\t'
                    << ei.positively_curved << '\n';
                text << "eschenburg " << e.str() << "\n  r     " << ei.r.get_str() << "\n  s     "
                     << ei.s_signed.get_str() << "\n  p1    " << ei.p1.str() << "\n  lk    +-"
                     << (lk_t.empty() ? "-" : lk_t) << "\n  free  " << (ei.free ? "yes" : "no")
                     << "\n  positively curved  " << (ei.positively_curved ? "yes" : "no") << "\n  normal form  "
                     << normalize(e).str() << '\n';
                if (s_s) {
                    auto parts = split(*s_s, ',');
                    if (parts.size() != 3) throw UsageError("--s expects three fractions");
                    auto p = profile_eschenburg(e, mod_one(parse_fraction(parts[0], "--s")),
                                                mod_one(parse_fraction(parts[1], "--s")),
                                                mod_one(parse_fraction(parts[2], "--s")));
                    j["profile"] = profile_json(p);
                    text << profile_text("profile", p);
                }
                emit(out, fmt, j, tsv.str(), text.str());
            } else {
                if (k_s || l_s || s_s) throw UsageError("--k/--l/--s are only valid for eschenburg");
                auto spec = make_spec(parse_family(family), a_s, b_s, t_s);
                auto p = profile(spec);
                json j{{"subject", spec.str()}, {"profile", profile_json(p)}};
                if (auto partner = natural_partner(spec)) j["natural_partner"] = partner->str();
                emit(out, fmt, j, profile_tsv(spec.str(), p), profile_text(spec.str(), p));
            }
        } else if (*cls) {
            auto L = parse_subject(left_s, fixture_paths);
            auto R = parse_subject(right_s, fixture_paths);
            Verdict d = ks_diffeomorphic(L.profile, R.profile);
            Verdict h = ks_homeomorphic(L.profile, R.profile);
            HomotopyVerdict ht = kruggel_homotopy(L.profile, R.profile);
            json j{{"left", L.descriptor},
                   {"right", R.descriptor},
                   {"diffeomorphic", std::string(verdict_name(d))},
                   {"homeomorphic", std::string(verdict_name(h))},
                   {"homotopy", std::string(homotopy_name(ht))},
                   {"left_profile", profile_json(L.profile)},
                   {"right_profile", profile_json(R.profile)}};
            std::ostringstream tsv, text;
            tsv << L.descriptor << '\t' << R.descriptor << '\t' << verdict_name(d) << '\t' << verdict_name(h) << '\t'
                << homotopy_name(ht) << '\n';
            text << L.descriptor << " vs " << R.descriptor << "\n  diffeomorphic  " << verdict_name(d)
                 << "\n  homeomorphic   " << verdict_name(h) << "\n  homotopy       " << homotopy_name(ht) << '\n';
            if (L.spec && R.spec && L.spec->family == R.spec->family &&
                (L.spec->family == Family::Sphere || L.spec->family == Family::SpinSphere) &&
                abs(L.spec->a - L.spec->b) == abs(R.spec->a - R.spec->b)) {
                auto c = sphere_congruence_classify(L.spec->a, L.spec->b, R.spec->a, R.spec->b,
                                                    L.spec->family == Family::SpinSphere);
                j["congruence"] = {{"homeo_preserving", c.homeo_preserving},
                                   {"homeo_reversing", c.homeo_reversing},
                                   {"diffeo_preserving", c.diffeo_preserving},
                                   {"diffeo_reversing", c.diffeo_reversing}};
                text << "  congruences    homeo+ " << c.homeo_preserving << " homeo- " << c.homeo_reversing
                     << " diffeo+ " << c.diffeo_preserving << " diffeo- " << c.diffeo_reversing << '\n';
            }
            emit(out, fmt, j, tsv.str(), text.str());
        } else if (*ed) {
            BigInt r = parse_big(r_s, "-r");
            if (sgn(r) <= 0) throw UsageError("-r must be positive");
            EdiffeoProblem prob(r, mod_one(parse_fraction(s1_s, "--s1")), mod_one(parse_fraction(s2_s, "--s2")),
                                mod_one(parse_fraction(s3_s, "--s3")));
            std::vector<Orientation> wanted;
            if (orient_s != "reversing") wanted.push_back(Orientation::Preserving);
            if (orient_s != "preserving") wanted.push_back(Orientation::Reversing);
            json sols = json::array(), fails = json::array();
            std::ostringstream tsv, text;
            text << "r = " << r.get_str() << ", E = (" << prob.E1().get_str() << ", " << prob.E2().get_str() << ", "
                 << prob.E3().get_str() << ")\n";
            std::optional<Error> first_error;
            for (auto o : wanted) {
                try {
                    auto sol = ediffeo_solve(prob, o);
                    json res = json::array(), roots = json::array();
                    for (const auto& rc : sol.residues) {
                        res.push_back(rc.str());
                        tsv << orientation_name(o) << '\t' << rc.value.get_str() << '\t' << rc.modulus.get_str() << '\n';
                    }
                    for (const auto& s : sol.witness_roots) roots.push_back(jint(s));
                    sols.push_back({{"orientation", std::string(orientation_name(o))},
                                    {"residues", res},
                                    {"admissible_roots", roots},
                                    {"root_count", sol.root_count}});
                    text << orientation_name(o) << ": " << sol.root_count << " square roots, "
                         << sol.witness_roots.size() << " admissible\n";
                    for (const auto& rc : sol.residues) text << "  a = " << rc.str() << '\n';
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::ParityFailure && e.code() != ErrorCode::CongruenceFailure) throw;
                    if (!first_error) first_error = e;
                    fails.push_back({{"orientation", std::string(orientation_name(o))}, {"error", std::string(e.name())}});
                    text << orientation_name(o) << ": " << e.what() << '\n';
                }
            }
            if (sols.empty()) throw *first_error;
            json j{{"r", jint(r)},
                   {"E", {jint(prob.E1()), jint(prob.E2()), jint(prob.E3())}},
                   {"solutions", sols},
                   {"failures", fails}};
            emit(out, fmt, j, tsv.str(), text.str());
        } else if (*en) {
            auto spaces = enumerate_positively_curved(r_max, threads);
            json arr = json::array();
            std::ostringstream tsv, text;
            text << spaces.size() << " positively curved Eschenburg spaces with r < " << r_max << '\n';
            for (const auto& e : spaces) {
                auto ei = invariants(e);
                if (!count_only) {
                    arr.push_back({{"k", e.k}, {"l", e.l}, {"r", jint(ei.r)}});
                    tsv << e.k[0] << ' ' << e.k[1] << ' ' << e.k[2] << '\t' << e.l[0] << ' ' << e.l[1] << ' ' << e.l[2]
                        << '\t' << ei.r.get_str() << '\n';
                    text << "  r=" << ei.r.get_str() << "  " << e.str() << '\n';
                }
            }
            json j{{"r_max", r_max}, {"count", spaces.size()}};
            if (!count_only) j["spaces"] = arr;
            if (count_only) tsv << spaces.size() << '\n';
            emit(out, fmt, j, tsv.str(), text.str());
        } else if (*ma) {
            auto li = build_index(build_grid(left_g));
            auto ri = build_index(build_grid(right_g));
            auto recs = match_all(li, ri, !ignore_pi4);
            json arr = json::array();
            std::ostringstream text;
            text << recs.size() << " matches (" << li.size() << " x " << ri.size() << " profiles)\n";
            for (const auto& m : recs) {
                arr.push_back({{"left", m.left},
                               {"right", m.right},
                               {"orientation", std::string(orientation_name(m.orientation))},
                               {"r", jint(m.r)},
                               {"s1", m.s1.str()},
                               {"s2", m.s2.str()},
                               {"s3", m.s3.str()},
                               {"p1_coherent", m.p1_coherent}});
                text << "  " << m.left << "  ~  " << m.right << "  (" << orientation_name(m.orientation) << ", r="
                     << m.r.get_str() << ")" << (m.p1_coherent ? "" : "  p1 MISMATCH") << '\n';
            }
            json j{{"count", recs.size()}, {"matches", arr}};
            emit(out, fmt, j, matches_tsv(recs), text.str());
        } else if (*tb) {
            bool is_a = which == "A" || which == "a";
            auto file = find_table_file(fixture_paths, is_a ? "table_a.txt" : "table_b.txt");
            auto rep = reproduce_table(is_a ? Table::A : Table::B, load_fixture_file(file));
            json rows = json::array();
            for (const auto& row : rep.rows) {
                json checks = json::array();
                for (const auto& c : row.checks)
                    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                rows.push_back({{"id", row.id}, {"r", jint(row.r)}, {"pass", row.pass()}, {"checks", checks}});
            }
            json j{{"table", is_a ? "A" : "B"}, {"pass", rep.pass()}, {"rows", rows}};
            emit(out, fmt, j, rep.tsv(), rep.text());
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << e.name() << '\n' << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace ks7::cli
