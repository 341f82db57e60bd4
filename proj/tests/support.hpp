#pragma once

#include <string>

#include "ks7/bundle_families.hpp"

namespace ks7::test {

inline ModOneValue mo(const char* text) { return mod_one(Rational::parse(text)); }

inline std::string data_file(const char* name) { return std::string(KS7_DATA_DIR) + "/" + name; }

inline bool same_s(const InvariantProfile& p, const InvariantProfile& q) {
    return p.s1 == q.s1 && p.s2 == q.s2 && p.s3 == q.s3;
}

inline bool s_is(const InvariantProfile& p, const char* s1, const char* s2, const char* s3) {
    return p.s1 == mo(s1) && p.s2 == mo(s2) && p.s3 == mo(s3);
}

} // namespace ks7::test
