#include <doctest.h>

#include "ks7/exact_arith.hpp"

using namespace ks7;

TEST_CASE("sqrt_mod equals enumeration for every m <= 10^4 and a < m") {
    for (long m = 1; m <= 10000; ++m) {
        std::vector<std::vector<BigInt>> brute(m);
        for (long x = 0; x < m; ++x) brute[(x * x) % m].push_back(big(x));
        Factorization f = factorize(m);
        long bad = 0;
        for (long a = 0; a < m; ++a)
            if (sqrt_mod(big(a), f) != brute[a]) ++bad;
        INFO("m = " << m);
        REQUIRE(bad == 0);
    }
}
