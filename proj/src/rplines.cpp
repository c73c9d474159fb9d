#include "pdrqa/rplines.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace pdrqa {

std::uint64_t LineHistogram::total_lines() const {
    std::uint64_t t = 0;
    for (const auto& [len, cnt] : counts) t += cnt;
    return t;
}

std::uint64_t LineHistogram::total_recurrences() const {
    std::uint64_t t = 0;
    for (const auto& [len, cnt] : counts) t += len * cnt;
    return t;
}

namespace {

void check_input(const BinaryWord& x, std::uint64_t n, std::uint32_t m) {
    if (n < 2) throw std::invalid_argument("recurrence plot needs n >= 2");
    if (m < 1) throw std::invalid_argument("embedding dimension must be >= 1");
    if (x.size() < n + m - 1)
        throw std::invalid_argument("word too short: need |x| >= n+m-1");
}

// m-gram equality at 1-based positions i, j.
inline bool match_m(const BinaryWord& x, std::uint64_t i, std::uint64_t j,
                    std::uint32_t m) {
    for (std::uint32_t h = 0; h < m; ++h)
        if (x[i - 1 + h] != x[j - 1 + h]) return false;
    return true;
}

// Run lengths of maximal lines on the upper-triangle diagonal with offset d
// (cells (t, t+d), t = 1..n-d), accumulated into hist with multiplicity 2
// for the transposed diagonal.
void scan_diagonal(const BinaryWord& x, std::uint64_t n, std::uint32_t m,
                   std::uint64_t d,
                   std::map<std::uint64_t, std::uint64_t>& counts) {
    const std::uint64_t tmax = n - d;
    // mismatches in the sliding window of m single-symbol comparisons
    std::uint32_t bad = 0;
    for (std::uint32_t h = 0; h < m; ++h)
        bad += (x[h] != x[d + h]) ? 1 : 0;
    std::uint64_t run = 0;
    for (std::uint64_t t = 1; t <= tmax; ++t) {
        if (bad == 0) {
            ++run;
        } else if (run > 0) {
            counts[run] += 2;
            run = 0;
        }
        if (t < tmax) {  // slide window from t to t+1
            bad -= (x[t - 1] != x[t + d - 1]) ? 1 : 0;
            bad += (x[t + m - 1] != x[t + d + m - 1]) ? 1 : 0;
        }
    }
    if (run > 0) counts[run] += 2;
}

}  // namespace

LineHistogram diagonal_histogram(const BinaryWord& x, std::uint64_t n,
                                 std::uint32_t m, unsigned threads) {
    check_input(x, n, m);
    LineHistogram hist{n, m, LineKind::diagonal, {}};
    if (threads <= 1) {
        for (std::uint64_t d = 1; d < n; ++d) scan_diagonal(x, n, m, d, hist.counts);
        return hist;
    }
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n - 1));
    std::vector<std::map<std::uint64_t, std::uint64_t>> parts(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t d = 1 + w; d < n; d += workers)
                scan_diagonal(x, n, m, d, parts[w]);
        });
    }
    for (auto& t : pool) t.join();
    // ordered reduction: identical result for any worker count
    for (const auto& part : parts)
        for (const auto& [len, cnt] : part) hist.counts[len] += cnt;
    return hist;
}

LineHistogram vertical_histogram(const BinaryWord& x, std::uint64_t n,
                                 std::uint32_t m) {
    check_input(x, n, m);
    LineHistogram hist{n, m, LineKind::vertical, {}};
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t run = 0;
        for (std::uint64_t i = 1; i <= n; ++i) {
            if (match_m(x, i, j, m)) {
                ++run;
            } else if (run > 0) {
                ++hist.counts[run];
                run = 0;
            }
        }
        if (run > 0) ++hist.counts[run];
    }
    return hist;
}

std::uint64_t lmax(const LineHistogram& hist) {
    for (auto it = hist.counts.rbegin(); it != hist.counts.rend(); ++it)
        if (it->second > 0) return it->first;
    return 0;
}

std::vector<StartPoint> reference_scan(const BinaryWord& x, std::uint64_t n,
                                       std::uint32_t m) {
    check_input(x, n, m);
    std::vector<StartPoint> lines;
    for (std::uint64_t i = 1; i <= n; ++i) {
        for (std::uint64_t j = 1; j <= n; ++j) {
            if (i == j) continue;
            if (!match_m(x, i, j, m)) continue;
            if (std::min(i, j) >= 2 && match_m(x, i - 1, j - 1, m)) continue;
            std::uint64_t len = 1;
            while (i + len <= n && j + len <= n && match_m(x, i + len, j + len, m))
                ++len;
            lines.push_back({i, j, len});
        }
    }
    return lines;
}

LineHistogram histogram_of(const std::vector<StartPoint>& lines,
                           std::uint64_t n, std::uint32_t m) {
    LineHistogram hist{n, m, LineKind::diagonal, {}};
    for (const auto& ln : lines) ++hist.counts[ln.length];
    return hist;
}

}  // namespace pdrqa
