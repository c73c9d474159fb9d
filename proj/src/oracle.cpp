#include "pdrqa/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace pdrqa {
namespace oracle {

namespace {

Rational pow4(unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 4;
    return r;
}

Rational pow2r(unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 2;
    return r;
}

}  // namespace

OracleParams params(std::uint64_t length) {
    if (length < 1) throw std::invalid_argument("params: length >= 1 required");
    OracleParams p;
    p.length = length;
    // smallest k >= 0 with l <= 3*2^k - 1; the lower bound 3*2^{k-1}-1 < l
    // (with 3*2^{-1}-1 = 1/2) then holds automatically
    unsigned k = 0;
    while (length > 3 * (std::uint64_t{1} << k) - 1) ++k;
    p.k = k;
    const std::uint64_t pow2_bound = (std::uint64_t{1} << (k + 1)) - 1;
    if (length <= pow2_bound) {
        p.a = 2;
        p.case_tag = OracleParams::Case::I;
    } else {
        p.a = 1;
        p.case_tag = OracleParams::Case::II;
    }
    return p;
}

LengthClass classify_length(std::uint64_t length) {
    if (length < 1) throw std::invalid_argument("classify_length: length >= 1 required");
    const std::uint64_t v = length + 1;
    if ((v & (v - 1)) == 0 && v >= 2) {
        unsigned k = 0;
        while ((std::uint64_t{1} << (k + 1)) != v) ++k;
        return {LengthClass::Kind::pow2, k};
    }
    if (v % 3 == 0) {
        const std::uint64_t q = v / 3;
        if ((q & (q - 1)) == 0) {
            unsigned k = 0;
            while ((std::uint64_t{1} << k) != q) ++k;
            return {LengthClass::Kind::three_pow2, k};
        }
    }
    return {LengthClass::Kind::none, 0};
}

Rational dens_asymptotic(std::uint64_t length) {
    const LengthClass c = classify_length(length);
    Rational d;
    Rational coeff;  // c_l of the (l+1)^-2 form, cross-checked below
    switch (c.kind) {
        case LengthClass::Kind::pow2:
            d = Rational(1) / (9 * pow4(c.k));
            coeff = Rational(4, 9);
            break;
        case LengthClass::Kind::three_pow2:
            d = Rational(1) / (18 * pow4(c.k));
            coeff = Rational(1, 2);
            break;
        case LengthClass::Kind::none:
            return 0;
    }
    const Rational lp1 = Rational(length) + 1;
    if (d != coeff / (lp1 * lp1))
        throw std::logic_error("dens_asymptotic: piecewise and c_l/(l+1)^2 forms disagree");
    return d;
}

Rational denss_asymptotic(std::uint64_t length) {
    const OracleParams p = params(length);
    return Rational(p.a) / (9 * pow4(p.k));
}

Rational rr(std::uint32_t m, std::uint64_t lmin) {
    if (m < 1 || lmin < 1) throw std::invalid_argument("rr: m, lmin >= 1 required");
    const OracleParams p = params(lmin + m - 1);
    return Rational(2 * p.a + 3) / (9 * pow2r(p.k)) - Rational(p.a) / (9 * pow4(p.k));
}

Rational det(std::uint32_t m, std::uint64_t lmin) {
    return rr(m, lmin) / rr(m, 1);
}

DetClass det_class(std::uint32_t m, std::uint64_t lmin) {
    if (lmin < 2) throw std::invalid_argument("det_class: defined for lmin >= 2");
    const OracleParams pm = params(m);
    const OracleParams pl = params(lmin + m - 1);
    if (pl.k == pm.k && pl.a == pm.a) return DetClass::A1;
    if (pm.a == 2 && pl.k == pm.k && pl.a == 1) return DetClass::A2;
    return DetClass::A3;
}

Rational lavg(std::uint32_t m, std::uint64_t lmin) {
    const OracleParams p = params(lmin + m - 1);
    return Rational(2 * p.a + 3) * pow2r(p.k) / p.a - 1;
}

double entr(std::uint32_t, std::uint64_t) { return 2.0 * std::log(2.0); }

double entropy_sum(std::uint64_t lmin) {
    const OracleParams p = params(lmin);
    const double num = (p.a * static_cast<double>(p.k) + 1.0) * std::log(2.0) +
                       p.a * std::log(3.0);
    return num / (4.5 * std::ldexp(1.0, 2 * static_cast<int>(p.k)));
}

namespace {

// 2^{k+1} M1 - (2^{k+1}-1), i.e. 2^k (2M1 - 1) - (2^k - 1)
bool in_scaled_2m1_minus1(unsigned k, std::uint64_t i) {
    const std::int64_t c = std::int64_t{1} << (k + 1);
    return PositionSetSpec::m1(c, -(c - 1)).contains(i);
}
// 2^k (2M1 + 1) - (2^k - 1) = 2^{k+1} M1 + 1
bool in_scaled_2m1_plus1(unsigned k, std::uint64_t i) {
    const std::int64_t c = std::int64_t{1} << (k + 1);
    return PositionSetSpec::m1(c, 1).contains(i);
}
// 2^k (2M1) - (2^k - 1) = 2^{k+1} M1 - (2^k - 1)
bool in_scaled_2m1(unsigned k, std::uint64_t i) {
    const std::int64_t c = std::int64_t{1} << (k + 1);
    const std::int64_t s = std::int64_t{1} << k;
    return PositionSetSpec::m1(c, -(s - 1)).contains(i);
}
// 2^k (4M1 - 1) - (2^k - 1) = 2^{k+2} M1 - (2^{k+1} - 1)
bool in_scaled_4m1_minus1(unsigned k, std::uint64_t i) {
    const std::int64_t c = std::int64_t{1} << (k + 2);
    const std::int64_t s = std::int64_t{1} << (k + 1);
    return PositionSetSpec::m1(c, -(s - 1)).contains(i);
}
// 2^k (4M1 + 1) - (2^k - 1) = 2^{k+2} M1 + 1
bool in_scaled_4m1_plus1(unsigned k, std::uint64_t i) {
    const std::int64_t c = std::int64_t{1} << (k + 2);
    return PositionSetSpec::m1(c, 1).contains(i);
}

// (i,j) in 2^k A - (2^k-1) with
// A = (2M1-1)x(2M1+1)  ⊔  (2M1)x((4M1-1)⊔(4M1+1))
bool in_scaled_A(unsigned k, std::uint64_t i, std::uint64_t j) {
    if (in_scaled_2m1_minus1(k, i) && in_scaled_2m1_plus1(k, j)) return true;
    return in_scaled_2m1(k, i) &&
           (in_scaled_4m1_minus1(k, j) || in_scaled_4m1_plus1(k, j));
}

// i in 2^k B - (2^k-1) with B = (2M1-1) ⊔ (2M1)
bool in_scaled_B(unsigned k, std::uint64_t i) {
    return in_scaled_2m1_minus1(k, i) || in_scaled_2m1(k, i);
}

// (i,j) in 2^k C - (2^k-1) with C = (2M1-1)x(2M1)
bool in_scaled_C(unsigned k, std::uint64_t i, std::uint64_t j) {
    return in_scaled_2m1_minus1(k, i) && in_scaled_2m1(k, j);
}

}  // namespace

bool is_line_start(std::uint64_t i, std::uint64_t j, std::uint64_t length) {
    if (i < 1 || j < 1 || length < 1)
        throw std::invalid_argument("is_line_start: positive i, j, length required");
    if (i == j) throw std::invalid_argument("is_line_start: main diagonal excluded");
    const LengthClass c = classify_length(length);
    switch (c.kind) {
        case LengthClass::Kind::pow2:
            if (in_scaled_A(c.k, i, j) || in_scaled_A(c.k, j, i)) return true;
            if (j == 1 && in_scaled_B(c.k, i)) return true;
            if (i == 1 && in_scaled_B(c.k, j)) return true;
            return false;
        case LengthClass::Kind::three_pow2:
            return in_scaled_C(c.k, i, j) || in_scaled_C(c.k, j, i);
        case LengthClass::Kind::none:
            return false;
    }
    return false;
}

bool nonempty_threshold(std::uint64_t length, std::uint64_t n) {
    return classify_length(length).kind != LengthClass::Kind::none && n >= length + 2;
}

std::pair<Rational, Rational> density_bounds(std::uint64_t length) {
    const LengthClass c = classify_length(length);
    switch (c.kind) {
        case LengthClass::Kind::pow2:
            return {Rational(1, 32), Rational(32)};
        case LengthClass::Kind::three_pow2:
            return {Rational(1, 32), Rational(81, 2)};
        case LengthClass::Kind::none:
            throw std::invalid_argument("density_bounds: length not admissible");
    }
    throw std::invalid_argument("density_bounds: length not admissible");
}

namespace {

// J^{ab}_w membership for the base words w in {empty, 0, 00}, as affine
// images of M1.
bool jset_base(Symbol a, Symbol b, std::size_t wlen, std::uint64_t i) {
    using S = PositionSetSpec;
    if (wlen == 0) {
        if (a == 0 && b == 0) return S::m1(2, 0).contains(i) || S::m1(2, 1).contains(i);
        if (a == 1 && b == 1) return false;
        if (a == 0 && b == 1) return in_m1(i);
        return S::m1(1, 1).contains(i);  // a=1, b=0
    }
    if (wlen == 1) {  // w = "0"
        if (a == 0 && b == 0) return S::m1(2, 0).contains(i);
        if (a == 1 && b == 1) return S::m1(4, -1).contains(i) || S::m1(4, 1).contains(i);
        if (a == 0 && b == 1) return S::m1(2, 1).contains(i);
        return S::m1(2, -1).contains(i);  // a=1, b=0
    }
    // w = "00"
    if (a == b) return false;
    if (a == 0) return S::m1(2, 0).contains(i);
    return S::m1(2, -1).contains(i);
}

}  // namespace

BinaryWord determining_word(std::uint64_t length) {
    const LengthClass c = classify_length(length);
    if (c.kind == LengthClass::Kind::none)
        throw std::invalid_argument("determining_word: length not admissible");
    if (c.kind == LengthClass::Kind::pow2) return pd_prefix_substitution(length);
    const std::uint64_t half = std::uint64_t{1} << c.k;
    BinaryWord w = pd_prefix_substitution(half);
    const BinaryWord tail = pd_prefix_substitution(2 * half - 1);
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

bool jset_member(Symbol a, Symbol b, const BinaryWord& w, std::uint64_t i) {
    if (i < 2) throw std::invalid_argument("jset_member: i >= 2 required");
    // direct route: x_{i-1}^{|w|+2} = a w b
    bool direct = pd_letter(i - 1) == a && pd_letter(i + w.size()) == b;
    for (std::size_t h = 0; direct && h < w.size(); ++h)
        direct = pd_letter(i + h) == w[h];

    // closed-form route where available
    bool have_closed = false;
    bool closed = false;
    if (w.size() <= 2 && (w.empty() || (w[0] == 0 && (w.size() == 1 || w[1] == 0)))) {
        have_closed = true;
        closed = jset_base(a, b, w.size(), i);
    } else if (!w.empty()) {
        const LengthClass c = classify_length(w.size());
        if (c.kind != LengthClass::Kind::none && w == determining_word(w.size())) {
            // J^{ab}_w = 2^k J^{a~ b~}_{w~} - (2^k-1), complementing a,b per level
            have_closed = true;
            const std::uint64_t s = std::uint64_t{1} << c.k;
            const std::uint64_t shifted = i + s - 1;
            if (shifted % s == 0) {
                const std::uint64_t t = shifted / s;
                const Symbol ta = (c.k % 2 == 0) ? a : static_cast<Symbol>(1 - a);
                const Symbol tb = (c.k % 2 == 0) ? b : static_cast<Symbol>(1 - b);
                const std::size_t base_len =
                    c.kind == LengthClass::Kind::pow2 ? 1 : 2;
                closed = t >= 2 && jset_base(ta, tb, base_len, t);
            }
        }
    }
    if (have_closed && closed != direct)
        throw std::logic_error("jset_member: direct and closed-form routes disagree");
    return direct;
}

bool hset_member(Symbol b, const BinaryWord& w, std::uint64_t i) {
    if (i < 2) throw std::invalid_argument("hset_member: i >= 2 required");
    // direct route: x_i^{|w|+1} = w b and x_1^{|w|+1} = w b̄
    bool direct = pd_letter(i + w.size()) == b &&
                  pd_letter(1 + w.size()) == static_cast<Symbol>(1 - b);
    for (std::size_t h = 0; direct && h < w.size(); ++h)
        direct = pd_letter(i + h) == w[h] && pd_letter(1 + h) == w[h];

    const LengthClass c = w.empty() ? LengthClass{} : classify_length(w.size());
    if (c.kind == LengthClass::Kind::pow2 && w == determining_word(w.size())) {
        // closed form: empty unless b matches the parity rule (b=0 iff k even)
        bool closed = false;
        if (b == (c.k % 2 == 0 ? 0 : 1)) {
            const std::uint64_t s = std::uint64_t{1} << c.k;
            const std::uint64_t shifted = i + s - 1;
            if (shifted % s == 0) {
                const std::uint64_t t = shifted / s;
                using S = PositionSetSpec;
                closed = t >= 2 &&
                         (S::m1(2, -1).contains(t) || S::m1(2, 0).contains(t));
            }
        }
        if (closed != direct)
            throw std::logic_error("hset_member: direct and closed-form routes disagree");
    }
    return direct;
}

}  // namespace oracle
}  // namespace pdrqa
