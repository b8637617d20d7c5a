#include <doctest.h>

#include "trop/oracle.hpp"

using namespace trop;

TEST_CASE("kontsevich base cases and first degrees") {
    CHECK(kontsevich(1) == 1);
    CHECK(kontsevich(2) == 1);
    CHECK(kontsevich(3) == 12);
    CHECK(kontsevich(4) == 620);
    CHECK(kontsevich(5) == mpz_class("87304"));
}

TEST_CASE("memoized and unmemoized evaluation agree") {
    for (int d = 1; d <= 6; ++d) CHECK(kontsevich(d) == kontsevich_unmemoized(d));
}

TEST_CASE("d <= 0 rejected") {
    CHECK_THROWS_AS(kontsevich(0), std::domain_error);
}
