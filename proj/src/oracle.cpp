#include "trop/oracle.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace trop {

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class recurse(int d, std::map<int, mpz_class>* memo) {
    if (d <= 0) throw std::domain_error("kontsevich needs d >= 1");
    if (d == 1) return 1;
    if (memo) {
        if (auto it = memo->find(d); it != memo->end()) return it->second;
    }
    mpz_class total = 0;
    for (int d1 = 1; d1 < d; ++d1) {
        int d2 = d - d1;
        mpz_class n1 = recurse(d1, memo), n2 = recurse(d2, memo);
        mpz_class a = mpz_class(d1) * d1 * d2 * d2 * binom(3 * d - 4, 3 * d1 - 2);
        mpz_class b = mpz_class(d1) * d1 * d1 * d2 * binom(3 * d - 4, 3 * d1 - 1);
        total += n1 * n2 * (a - b);
    }
    if (memo) (*memo)[d] = total;
    return total;
}

}  // namespace

mpz_class kontsevich(int d) {
    static std::map<int, mpz_class> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return recurse(d, &memo);
}

mpz_class kontsevich_unmemoized(int d) {
    return recurse(d, nullptr);
}

}  // namespace trop
