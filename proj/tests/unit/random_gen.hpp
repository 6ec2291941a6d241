#ifndef DEGENLIFT_TESTS_RANDOM_GEN_HPP
#define DEGENLIFT_TESTS_RANDOM_GEN_HPP

#include <random>
#include <string>
#include <vector>

#include "degenlift/poly.hpp"

namespace testgen {

inline degenlift::Rat small_rat(std::mt19937_64& rng, int bound = 5)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 3);
    return degenlift::Rat(num(rng), den(rng));
}

inline degenlift::Rat nonzero_rat(std::mt19937_64& rng, int bound = 5)
{
    for (;;) {
        const auto r = small_rat(rng, bound);
        if (!r.is_zero()) {
            return r;
        }
    }
}

inline degenlift::Poly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars,
                                   int max_deg, int max_terms)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    degenlift::Poly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        std::map<std::string, int> powers;
        int budget = deg(rng);
        for (const auto& v : vars) {
            std::uniform_int_distribution<int> e(0, budget);
            const int k = e(rng);
            budget -= k;
            powers[v] = k;
        }
        p += degenlift::Poly::monomial(small_rat(rng), powers);
    }
    return p;
}

}  // namespace testgen

#endif
