// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "pdrqa/oracle.hpp"
#include "pdrqa/pdseq.hpp"
#include "pdrqa/rplines.hpp"
#include "pdrqa/rqa.hpp"

using namespace pdrqa;
namespace orc = pdrqa::oracle;

namespace {

int failures = 0;

void report(int num, const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << num << "] " << name;
    if (!detail.empty()) std::cout << "  (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::vector<std::uint64_t> admissible_lengths(std::uint64_t cap) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t l = 1; l <= cap; ++l)
        if (orc::classify_length(l).kind != orc::LengthClass::Kind::none)
            out.push_back(l);
    return out;
}

void criterion1_start_point_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t grid = 512;
    const std::uint64_t n = 1200;
    const BinaryWord x = pd_prefix_substitution(n);
    std::set<StartPoint> observed;
    for (const auto& ln : reference_scan(x, n, 1))
        if (ln.i <= grid && ln.j <= grid && ln.length <= grid &&
            std::max(ln.i, ln.j) + ln.length <= n)
            observed.insert(ln);

    std::uint64_t mismatches = 0;
    std::uint64_t predicted = 0;
    for (std::uint64_t i = 1; i <= grid; ++i) {
        for (std::uint64_t j = 1; j <= grid; ++j) {
            if (i == j) continue;
            for (std::uint64_t l : admissible_lengths(grid)) {
                const bool pred = orc::is_line_start(i, j, l);
                if (pred) ++predicted;
                if (pred != (observed.count({i, j, l}) > 0)) ++mismatches;
            }
        }
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    report(1, "start-point oracle == brute force on 512 grid",
           mismatches == 0 && predicted == observed.size() && secs < 60.0,
           "mismatches=" + std::to_string(mismatches) +
               ", lines=" + std::to_string(observed.size()) + ", " +
               std::to_string(secs).substr(0, 5) + "s");
}

void criterion2_allowed_lengths() {
    const std::uint64_t n = std::uint64_t{1} << 13;
    const BinaryWord x = pd_prefix_substitution(n);
    std::uint64_t bad = 0;
    for (const auto& ln : reference_scan(x, n, 1)) {
        if (std::min(ln.i, ln.j) < 2 || std::max(ln.i, ln.j) + ln.length > n)
            continue;  // boundary-truncated
        if (orc::classify_length(ln.length).kind == orc::LengthClass::Kind::none)
            ++bad;
    }
    report(2, "interior line lengths in {2^{k+1}-1, 3*2^k-1} at n=2^13", bad == 0,
           "exceptions=" + std::to_string(bad));
}

void criterion3_densities() {
    bool ok = true;
    std::string detail;
    const std::uint64_t n = std::uint64_t{1} << 13;
    const BinaryWord x = pd_prefix_substitution(n);
    const LineHistogram h = diagonal_histogram(x, n, 1, 4);
    const double denom = static_cast<double>(n) * n - n;
    for (std::uint64_t l : {1, 2, 3, 5, 7, 11, 15, 23}) {
        const auto it = h.counts.find(l);
        const double emp = it == h.counts.end() ? 0.0 : it->second / denom;
        const double lim = to_double(orc::dens_asymptotic(l));
        const double rel = std::abs(emp - lim) / lim;
        if (rel >= 0.03) {
            ok = false;
            detail = "l=" + std::to_string(l) + " relerr=" + std::to_string(rel);
        }
    }
    // error for l=1 shrinks from n=2^9 to n=2^13; the intermediate values
    // oscillate (the plot boundary interacts with powers of two), so the
    // comparison is between the endpoints
    double err_first = 0.0;
    double err_last = 0.0;
    for (unsigned p = 9; p <= 13; ++p) {
        const std::uint64_t np = std::uint64_t{1} << p;
        const BinaryWord xp = pd_prefix_substitution(np);
        const LineHistogram hp = diagonal_histogram(xp, np, 1, 4);
        const double dn = static_cast<double>(np) * np - np;
        const double emp = hp.counts.at(1) / dn;
        const double err = std::abs(emp - 1.0 / 9.0);
        if (p == 9) err_first = err;
        if (p == 13) err_last = err;
    }
    if (err_last >= err_first) {
        ok = false;
        detail = "dens_1 error did not shrink: " + std::to_string(err_first) +
                 " -> " + std::to_string(err_last);
    }
    report(3, "empirical DENS_l within 3% at n=2^13, error shrinking", ok, detail);
}

void criterion4_rr() {
    const std::uint64_t n = std::uint64_t{1} << 13;
    const BinaryWord x = pd_prefix_substitution(n);
    const RqaReport rep = quantify(diagonal_histogram(x, n, 1, 4), 1);
    const double rel = std::abs(to_double(rep.rr) - 5.0 / 9.0) / (5.0 / 9.0);
    report(4, "RR(2^13) within 1% of 5/9", rel < 0.01,
           "relerr=" + std::to_string(rel));
}

void criterion5_lavg() {
    const std::uint64_t n = std::uint64_t{1} << 13;
    const BinaryWord x = pd_prefix_substitution(n);
    const RqaReport rep = quantify(diagonal_histogram(x, n, 1, 4), 1);
    bool ok = rep.lavg.has_value();
    double rel = -1.0;
    if (ok) {
        rel = std::abs(to_double(*rep.lavg) - 2.5) / 2.5;
        ok = rel < 0.01;
    }
    // sandwich bounds as exact rationals for all effective lengths <= 2^16
    std::uint64_t violations = 0;
    for (std::uint64_t lp = 2; lp <= (std::uint64_t{1} << 16); ++lp) {
        const Rational v = orc::lavg(1, lp);
        if (3 * v < Rational(5 * lp) + 2 || 2 * v > Rational(5 * lp) - 2) ++violations;
    }
    report(5, "LAVG(2^13) within 1% of 5/2; exact sandwich to 2^16",
           ok && violations == 0,
           "relerr=" + std::to_string(rel) +
               ", bound violations=" + std::to_string(violations));
}

void criterion6_entr() {
    const std::uint64_t n = std::uint64_t{1} << 13;
    const BinaryWord x = pd_prefix_substitution(n);
    const RqaReport rep = quantify(diagonal_histogram(x, n, 1, 4), 1);
    const double target = 2.0 * std::log(2.0);
    bool ok = rep.entr.has_value() && std::abs(*rep.entr - target) < 0.03;
    double worst = 0.0;
    for (std::uint64_t l = 1; l <= 64; ++l) {
        const double s = to_double(orc::denss_asymptotic(l));
        const double rec = std::log(s) + orc::entropy_sum(l) / s;
        worst = std::max(worst, std::abs(rec - target));
    }
    report(6, "ENTR(2^13) within 0.03 of 2log2; closed forms to 1e-10",
           ok && worst < 1e-10,
           "empirical diff=" +
               std::to_string(rep.entr ? std::abs(*rep.entr - target) : -1.0) +
               ", closed-form diff=" + std::to_string(worst));
}

void criterion7_det_limits() {
    const std::uint64_t l = 2;
    std::uint32_t last_a2 = 0, last_a3 = 0;
    std::uint64_t a1_count = 0, a1_violations = 0;
    const std::uint32_t mmax = std::uint32_t{1} << 16;
    for (std::uint32_t m = 1; m <= mmax; ++m) {
        switch (orc::det_class(m, l)) {
            case orc::DetClass::A1:
                ++a1_count;
                if (orc::det(m, l) != 1) ++a1_violations;
                break;
            case orc::DetClass::A2: last_a2 = m; break;
            case orc::DetClass::A3: last_a3 = m; break;
        }
    }
    const double d2 = std::abs(to_double(orc::det(last_a2, l)) - 5.0 / 7.0);
    const double d3 = std::abs(to_double(orc::det(last_a3, l)) - 7.0 / 10.0);
    const double a1_density = static_cast<double>(a1_count) / mmax;
    report(7, "DET limits: A1=1, A2->5/7, A3->7/10, A1 density > 0.95",
           a1_violations == 0 && d2 < 1e-3 && d3 < 1e-3 && a1_density > 0.95,
           "A2 diff=" + std::to_string(d2) + ", A3 diff=" + std::to_string(d3) +
               ", A1 density=" + std::to_string(a1_density));
}

void criterion8_vertical() {
    // runs cut off by the plot boundary at row n are only required to be
    // truncations of an allowed run; complete runs must match exactly
    const std::uint64_t n = std::uint64_t{1} << 12;
    const BinaryWord x = pd_prefix_substitution(n + 2);
    std::uint64_t bad = 0;
    auto check = [&](std::uint32_t m, auto&& allowed, std::uint64_t cap) {
        auto match = [&](std::uint64_t i, std::uint64_t j) {
            for (std::uint32_t h = 0; h < m; ++h)
                if (x[i - 1 + h] != x[j - 1 + h]) return false;
            return true;
        };
        for (std::uint64_t j = 1; j <= n; ++j) {
            std::uint64_t i = 1;
            while (i <= n) {
                if (!match(i, j)) { ++i; continue; }
                std::uint64_t end = i;
                while (end < n && match(end + 1, j)) ++end;
                const std::uint64_t len = end - i + 1;
                if (end == n ? len > cap : !allowed(len)) ++bad;
                i = end + 1;
            }
        }
    };
    check(1, [](std::uint64_t l) { return l == 1 || l == 3; }, 3);
    check(3, [](std::uint64_t l) { return l == 1; }, 1);
    report(8, "vertical lengths: {1,3} at m=1, {1} at m=3 (n=2^12)", bad == 0,
           "exceptions=" + std::to_string(bad));
}

void criterion9_generators() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t n = std::uint64_t{1} << 20;
    const BinaryWord sub = pd_prefix_substitution(n);
    const BinaryWord toe = pd_prefix_toeplitz(n);
    bool agree = sub == toe;
    for (std::uint64_t i = 1; agree && i <= n; ++i) agree = sub[i - 1] == pd_letter(i);
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    report(9, "three generators identical at n=2^20", agree && secs < 5.0,
           std::to_string(secs).substr(0, 5) + "s");
}

void criterion10_threshold() {
    bool ok = true;
    std::string detail;
    for (std::uint64_t l : {1, 2, 3, 5, 7, 11, 23}) {
        const std::uint64_t n = 3 * l + 24;
        const BinaryWord x = pd_prefix_substitution(n);
        std::uint64_t min_max = n;
        for (const auto& ln : reference_scan(x, n, 1)) {
            if (ln.length != l || std::max(ln.i, ln.j) + ln.length > n) continue;
            min_max = std::min(min_max, std::max(ln.i, ln.j));
        }
        if (min_max != l + 2) {
            ok = false;
            detail = "l=" + std::to_string(l) +
                     ": first start at max coordinate " + std::to_string(min_max);
        }
    }
    report(10, "first start point appears exactly at max coordinate l+2", ok, detail);
}

}  // namespace

int main() {
    criterion1_start_point_oracle();
    criterion2_allowed_lengths();
    criterion3_densities();
    criterion4_rr();
    criterion5_lavg();
    criterion6_entr();
    criterion7_det_limits();
    criterion8_vertical();
    criterion9_generators();
    criterion10_threshold();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(failures) + " CRITERIA FAILED")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
