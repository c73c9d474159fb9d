#ifndef PDRQA_RPLINES_HPP
#define PDRQA_RPLINES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "pdrqa/pdseq.hpp"

// Diagonal/vertical line histograms of the symbolic recurrence plot
// RP^m(n): the n x n 0-1 matrix with R_{ij} = 1 iff x_i^m = x_j^m.
// The diagonal scanner streams one diagonal at a time (O(n) memory);
// reference_scan is a naive O(n^2) enumerator used as a testing oracle.

namespace pdrqa {

enum class LineKind { diagonal, vertical };

struct LineHistogram {
    std::uint64_t n = 0;
    std::uint32_t m = 1;
    LineKind kind = LineKind::diagonal;
    std::map<std::uint64_t, std::uint64_t> counts;  // exact length -> NLINES

    std::uint64_t total_lines() const;
    std::uint64_t total_recurrences() const;  // sum of l * counts(l)
};

struct StartPoint {
    std::uint64_t i = 0;  // row, 1-based
    std::uint64_t j = 0;  // column, 1-based
    std::uint64_t length = 0;

    friend bool operator==(const StartPoint&, const StartPoint&) = default;
    friend auto operator<=>(const StartPoint&, const StartPoint&) = default;
};

// Exact counts of maximal diagonal lines of RP^m(n), both triangles,
// boundary-truncated lines counted at their truncated length.
// Requires n >= 2 and |x| >= n+m-1.  threads > 1 splits the diagonals
// across workers; the merged result is deterministic.
LineHistogram diagonal_histogram(const BinaryWord& x, std::uint64_t n,
                                 std::uint32_t m, unsigned threads = 1);

// Exact counts of maximal vertical runs per column.  Runs may cross the
// main-diagonal cell (j,j), which is always a recurrence.
LineHistogram vertical_histogram(const BinaryWord& x, std::uint64_t n,
                                 std::uint32_t m);

// Largest length with nonzero count; 0 for an empty histogram.
std::uint64_t lmax(const LineHistogram& hist);

// Naive enumeration of all maximal diagonal lines with start points,
// sorted by (i, j).  Intended for moderate n (testing oracle).
std::vector<StartPoint> reference_scan(const BinaryWord& x, std::uint64_t n,
                                       std::uint32_t m);

LineHistogram histogram_of(const std::vector<StartPoint>& lines,
                           std::uint64_t n, std::uint32_t m);

}  // namespace pdrqa

#endif
