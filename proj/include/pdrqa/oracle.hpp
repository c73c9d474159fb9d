#ifndef PDRQA_ORACLE_HPP
#define PDRQA_ORACLE_HPP

#include <cstdint>
#include <utility>

#include "pdrqa/pdseq.hpp"
#include "pdrqa/rqa.hpp"

// Closed-form (asymptotic, n -> infinity) recurrence quantifiers of the
// period-doubling sequence, plus the arithmetic characterization of the
// start points of diagonal lines in the infinite plot.

namespace pdrqa {
namespace oracle {

// Case parameters of a line length l:
//   k is the smallest integer >= 0 with 3*2^{k-1}-1 < l <= 3*2^k-1,
//   case I  (a=2)  when l <= 2^{k+1}-1,
//   case II (a=1)  when l >  2^{k+1}-1.
struct OracleParams {
    std::uint64_t length = 0;
    unsigned k = 0;
    int a = 2;
    enum class Case { I, II } case_tag = Case::I;
};

OracleParams params(std::uint64_t length);

// Admissible line lengths: 2^{k+1}-1 or 3*2^k-1, mutually exclusive.
struct LengthClass {
    enum class Kind { pow2, three_pow2, none } kind = Kind::none;
    unsigned k = 0;
};

LengthClass classify_length(std::uint64_t length);

// DENS_l: 1/(9*4^k) for l = 2^{k+1}-1, 1/(18*4^k) for l = 3*2^k-1, else 0.
Rational dens_asymptotic(std::uint64_t length);

// DENSS_l = sum_{l' >= l} DENS_l' = a_l / (9*4^{k_l}).
Rational denss_asymptotic(std::uint64_t length);

// RR^m_l = (2a+3)/(9*2^k) - a/(9*4^k) with (k,a) = params(l+m-1).
Rational rr(std::uint32_t m, std::uint64_t lmin);

// DET^m_l = RR^m_l / RR^m_1.
Rational det(std::uint32_t m, std::uint64_t lmin);

// Membership in the DET partition N = A1 (det = 1, density 1)
// ⊔ A2 (det -> 5/7) ⊔ A3 (det -> 7/10 along its tail).
enum class DetClass { A1, A2, A3 };
DetClass det_class(std::uint32_t m, std::uint64_t lmin);

// LAVG^m_l = (2 + 3/a)*2^k - 1 with (k,a) = params(l+m-1).
Rational lavg(std::uint32_t m, std::uint64_t lmin);

// ENTR^m_l = 2 log 2, independent of m and l.
double entr(std::uint32_t m, std::uint64_t lmin);

// -sum_{l' >= l} DENS_l' log DENS_l' = ((a k + 1) log2 + a log3) / (18*4^{k-1}).
double entropy_sum(std::uint64_t lmin);

// The unique word repeated by every diagonal line of an admissible length:
// x_1^l when l = 2^{k+1}-1, and x_1^{2^k} x_1^{2^{k+1}-1} when l = 3*2^k-1.
// Rejects non-admissible lengths.
BinaryWord determining_word(std::uint64_t length);

// Whether (i,j) starts a diagonal line of length exactly l in the infinite
// plot RP^1, decided purely arithmetically from the sets A, B, C built on M1.
bool is_line_start(std::uint64_t i, std::uint64_t j, std::uint64_t length);

// K_l ∩ [1,n]^2 nonempty iff l is admissible and n >= l+2.
bool nonempty_threshold(std::uint64_t length, std::uint64_t n);

// Proof-derived coefficients c with count(K_l ∩ [1,n]^2) in
// [lower*n^2/(l+1)^2, upper*n^2/(l+1)^2]: lower = 1/32 always,
// upper = 32 (pow2 case) or 81/2 (three_pow2 case).  Rejects other l.
std::pair<Rational, Rational> density_bounds(std::uint64_t length);

// i in J^{ab}_w = { i >= 2 : x_{i-1}^{|w|+2} = a w b }, decided directly on
// the sequence; when w has a known closed form (w in {empty, 0, 00} or
// w = x_1^l with l admissible) the affine closed form is evaluated too and
// the two routes are required to agree.  Verification API.
bool jset_member(Symbol a, Symbol b, const BinaryWord& w, std::uint64_t i);

// i in H^b_w = { i >= 2 : x_i^{|w|+1} = w b, x_1^{|w|+1} = w b̄ }; dual-route
// like jset_member, closed form H^b_w = 2^k H^0_0 - (2^k - 1) when
// w = x_1^{2^{k+1}-1} and b matches the parity rule (b = 0 iff k even).
bool hset_member(Symbol b, const BinaryWord& w, std::uint64_t i);

}  // namespace oracle
}  // namespace pdrqa

#endif
