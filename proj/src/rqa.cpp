#include "pdrqa/rqa.hpp"

#include <cmath>
#include <stdexcept>

namespace pdrqa {

double to_double(const Rational& r) { return r.convert_to<double>(); }

RqaReport quantify(const LineHistogram& hist, std::uint64_t lmin) {
    if (hist.kind != LineKind::diagonal)
        throw std::invalid_argument("quantify expects a diagonal histogram");
    if (hist.n < 2) throw std::invalid_argument("quantify: n >= 2 required");
    if (lmin < 1) throw std::invalid_argument("quantify: lmin >= 1 required");

    const Rational denom = Rational(hist.n) * hist.n - hist.n;
    RqaReport rep;
    rep.n = hist.n;
    rep.m = hist.m;
    rep.lmin = lmin;

    Rational rr1 = 0;  // RR_1(n), the DET denominator
    for (const auto& [len, cnt] : hist.counts) {
        if (cnt == 0) continue;
        const Rational d = Rational(cnt) / denom;
        rr1 += Rational(len) * d;
        if (len >= lmin) {
            rep.dens.emplace(len, d);
            rep.denss += d;
            rep.rr += Rational(len) * d;
        }
    }
    if (rr1 != 0) rep.det = rep.rr / rr1;
    if (rep.denss != 0) {
        rep.lavg = rep.rr / rep.denss;
        double e = 0.0;
        for (const auto& [len, d] : rep.dens) {
            const Rational p = d / rep.denss;
            if (p != 0) e -= to_double(p) * std::log(to_double(p));
        }
        rep.entr = e;
    }
    return rep;
}

std::uint32_t eps_to_embedding(double eps, std::uint32_t m) {
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
    const int h = -std::ilogb(eps);  // 2^{-h} <= eps < 2^{-h+1}
    return m + static_cast<std::uint32_t>(std::max(h, 0));
}

}  // namespace pdrqa
