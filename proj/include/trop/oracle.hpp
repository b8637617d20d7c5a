#pragma once

#include <gmpxx.h>

namespace trop {

// Count of rational plane curves of degree d through 3d-1 general points, by
// the WDVV recursion. Deliberately shares no code with the tropical modules;
// it is the independent q -> 1 cross-check.
//
//   N_1 = 1
//   N_d = sum_{d1+d2=d} N_{d1} N_{d2} ( d1^2 d2^2 C(3d-4,3d1-2)
//                                       - d1^3 d2  C(3d-4,3d1-1) )
mpz_class kontsevich(int d);

// same recursion without the memo table, for the agreement test
mpz_class kontsevich_unmemoized(int d);

}  // namespace trop
