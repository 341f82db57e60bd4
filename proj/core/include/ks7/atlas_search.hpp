#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "ks7/classification.hpp"

namespace ks7 {

/// Orientation-free lookup key: the smaller of the s-triple and its negation.
struct ProfileKey {
    CohomologyType type = CohomologyType::E;
    BigInt r;
    ModOneValue s1, s2, s3;
    bool reversed = false; // the profile's own triple is the negation of the stored one

    static ProfileKey of(const InvariantProfile& p);
};

struct BucketKey {
    CohomologyType type;
    BigInt r;
    ModOneValue s1, s2, s3;

    friend bool operator<(const BucketKey& x, const BucketKey& y);
};

struct IndexEntry {
    std::string descriptor;
    InvariantProfile profile;
    bool reversed = false;
};

struct ProfileIndex {
    std::map<BucketKey, std::vector<IndexEntry>> buckets;

    size_t size() const;
    bool empty() const { return buckets.empty(); }
};

ProfileIndex build_index(const std::vector<std::pair<std::string, InvariantProfile>>& profiles);

struct MatchRecord {
    std::string left;
    std::string right;
    Orientation orientation = Orientation::Preserving;
    BigInt r;
    ModOneValue s1, s2, s3; // the left profile's triple
    bool p1_coherent = true;
};

std::vector<MatchRecord> match_all(const ProfileIndex& left, const ProfileIndex& right, bool require_pi4_compat);

std::string matches_tsv(const std::vector<MatchRecord>& records);

enum class Table { A, B };

struct RowCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RowReport {
    std::string id;
    BigInt r;
    std::vector<RowCheck> checks;
    /// Orientation in which each listed bundle matched, in listed order (Table A: one per a; Table B: one).
    std::vector<Orientation> orientations;

    bool pass() const;
};

struct TableReport {
    Table table = Table::A;
    std::vector<RowReport> rows;

    bool pass() const;
    std::string text() const;
    std::string tsv() const; // id, r, check, pass, detail
};

/// Table A rows need "a=a1,a2,..." annotations; Table B rows need "a=", "b=", "t=" and an optional "star" flag.
TableReport reproduce_table(Table which, const std::vector<EschenburgFixture>& fixtures);

std::vector<BigInt> parse_int_list(const std::string& csv);

} // namespace ks7
