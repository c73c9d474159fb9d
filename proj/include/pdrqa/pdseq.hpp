#ifndef PDRQA_PDSEQ_HPP
#define PDRQA_PDSEQ_HPP

#include <cstdint>
#include <string>
#include <vector>

// Period-doubling sequence generators and arithmetic position predicates.
// All public indices are 1-based, matching the usual convention for
// symbolic sequences: x_1 is the first letter.

namespace pdrqa {

using Symbol = std::uint8_t;            // 0 or 1
using BinaryWord = std::vector<Symbol>; // finite word over {0,1}

BinaryWord word_from_string(const std::string& s);
std::string word_to_string(const BinaryWord& w);

// x_i = (2-adic valuation of i) mod 2.  Rejects i = 0.
Symbol pd_letter(std::uint64_t i);

// 2-adic valuation of i >= 1.
int valuation2(std::uint64_t i);

// Prefix x_1..x_n via iterating the substitution xi(0)=01, xi(1)=00 on "0".
BinaryWord pd_prefix_substitution(std::uint64_t n);

// Prefix x_1..x_n via the Toeplitz hole-filling construction with
// patterns (0*), (1*), (0*), ... alternating per round.
BinaryWord pd_prefix_toeplitz(std::uint64_t n);

// xi^iterations(w); output length |w| * 2^iterations.
BinaryWord substitution_apply(const BinaryWord& w, unsigned iterations);

// i in M_1 = { i : x_i = 1 }  <=>  valuation2(i) odd.
bool in_m1(std::uint64_t i);

// Affine image c*S + d of a base set S, with membership decided
// arithmetically: i in c*S+d iff c | (i-d), (i-d)/c >= 1, (i-d)/c in S.
struct PositionSetSpec {
    enum class Base { M1, Nk };
    Base base = Base::M1;
    unsigned k = 0;       // parameter of N_k, ignored for M1
    std::int64_t scale = 1;   // c > 0
    std::int64_t offset = 0;  // d > -c

    bool contains(std::uint64_t i) const;

    static PositionSetSpec m1(std::int64_t c, std::int64_t d) {
        return {Base::M1, 0, c, d};
    }
    static PositionSetSpec nk(unsigned k, std::int64_t c, std::int64_t d) {
        return {Base::Nk, k, c, d};
    }
};

// i in N_k = { n : n == 2^k (mod 2^{k+1}) }  <=>  valuation2(i) == k.
bool in_nk(unsigned k, std::uint64_t i);

enum class Recognizability {
    recognizable_odd,
    recognizable_even,
    not_recognizable,
    not_in_language,
};

// Occurrence-parity classification of w within x_1..x_horizon.
// The caller must pick a horizon large enough that w occurs there whenever
// w is in the language; default_recognize_horizon(|w|) = 4|w|+16 was
// validated against exhaustive occurrence scans up to |w| = 64.
Recognizability is_recognizable(const BinaryWord& w, std::uint64_t search_horizon);

std::uint64_t default_recognize_horizon(std::size_t word_length);

}  // namespace pdrqa

#endif
