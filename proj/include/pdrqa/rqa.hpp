#ifndef PDRQA_RQA_HPP
#define PDRQA_RQA_HPP

#include <cstdint>
#include <map>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "pdrqa/rplines.hpp"

// Finite-n recurrence quantifiers from a diagonal-line histogram.
// Everything except the entropy is exact rational arithmetic; undefined
// quantifiers are absent, never NaN or 0.

namespace pdrqa {

using Rational = boost::multiprecision::cpp_rational;

double to_double(const Rational& r);

struct RqaReport {
    std::uint64_t n = 0;
    std::uint32_t m = 1;
    std::uint64_t lmin = 1;
    std::map<std::uint64_t, Rational> dens;  // DENS_l(n) for l >= lmin
    Rational denss = 0;                      // DENSS_lmin(n)
    Rational rr = 0;                         // RR_lmin(n)
    std::optional<Rational> det;             // absent when RR_1(n) = 0
    std::optional<Rational> lavg;            // absent when DENSS = 0
    std::optional<double> entr;              // nats; absent when DENSS = 0
};

// Eqs. over denominator n^2-n; hist must be a diagonal histogram with n >= 2.
RqaReport quantify(const LineHistogram& hist, std::uint64_t lmin);

// Distance threshold eps -> effective embedding dimension m' = m + h_eps,
// where 2^{-h} <= eps < 2^{-h+1} and h_eps = max(h, 0).  Rejects eps <= 0.
std::uint32_t eps_to_embedding(double eps, std::uint32_t m);

}  // namespace pdrqa

#endif
