#include "pdrqa/pdseq.hpp"

#include <bit>
#include <stdexcept>

namespace pdrqa {

BinaryWord word_from_string(const std::string& s) {
    BinaryWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("word_from_string: symbol not in {0,1}");
        w.push_back(static_cast<Symbol>(c - '0'));
    }
    return w;
}

std::string word_to_string(const BinaryWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Symbol a : w) s.push_back(static_cast<char>('0' + a));
    return s;
}

int valuation2(std::uint64_t i) {
    if (i == 0) throw std::invalid_argument("valuation2: i must be positive");
    return std::countr_zero(i);
}

Symbol pd_letter(std::uint64_t i) {
    return static_cast<Symbol>(valuation2(i) & 1);
}

BinaryWord pd_prefix_substitution(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("pd_prefix_substitution: n must be >= 1");
    BinaryWord w{0};
    while (w.size() < n) {
        BinaryWord next;
        next.reserve(2 * w.size());
        for (Symbol a : w) {
            next.push_back(0);
            next.push_back(static_cast<Symbol>(1 - a));
        }
        w.swap(next);
    }
    w.resize(n);
    return w;
}

BinaryWord pd_prefix_toeplitz(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("pd_prefix_toeplitz: n must be >= 1");
    BinaryWord w(n, 2);  // 2 marks a hole
    std::vector<std::uint64_t> holes(n);
    for (std::uint64_t i = 0; i < n; ++i) holes[i] = i;
    Symbol pattern = 0;
    while (!holes.empty()) {
        std::vector<std::uint64_t> next;
        next.reserve(holes.size() / 2);
        for (std::size_t h = 0; h < holes.size(); ++h) {
            if (h % 2 == 0)
                w[holes[h]] = pattern;
            else
                next.push_back(holes[h]);
        }
        holes.swap(next);
        pattern = static_cast<Symbol>(1 - pattern);
    }
    return w;
}

BinaryWord substitution_apply(const BinaryWord& w, unsigned iterations) {
    BinaryWord cur = w;
    for (unsigned it = 0; it < iterations; ++it) {
        BinaryWord next;
        next.reserve(2 * cur.size());
        for (Symbol a : cur) {
            next.push_back(0);
            next.push_back(static_cast<Symbol>(1 - a));
        }
        cur.swap(next);
    }
    return cur;
}

bool in_m1(std::uint64_t i) { return (valuation2(i) & 1) != 0; }

bool in_nk(unsigned k, std::uint64_t i) {
    if (i == 0) return false;
    return static_cast<unsigned>(valuation2(i)) == k;
}

bool PositionSetSpec::contains(std::uint64_t i) const {
    const std::int64_t v = static_cast<std::int64_t>(i) - offset;
    if (v < scale || v % scale != 0) return false;
    const std::uint64_t s = static_cast<std::uint64_t>(v / scale);
    return base == Base::M1 ? in_m1(s) : in_nk(k, s);
}

std::uint64_t default_recognize_horizon(std::size_t word_length) {
    return 4 * static_cast<std::uint64_t>(word_length) + 16;
}

Recognizability is_recognizable(const BinaryWord& w, std::uint64_t search_horizon) {
    if (w.empty()) return Recognizability::not_recognizable;
    const std::uint64_t needed = search_horizon + w.size() - 1;
    const BinaryWord x = pd_prefix_substitution(needed);
    std::uint64_t first = 0;
    for (std::uint64_t i = 1; i <= search_horizon; ++i) {
        bool hit = true;
        for (std::size_t h = 0; h < w.size(); ++h) {
            if (x[i - 1 + h] != w[h]) { hit = false; break; }
        }
        if (hit) { first = i; break; }
    }
    if (first == 0) return Recognizability::not_in_language;
    if (w.size() <= 2 && w[0] == 0 && (w.size() == 1 || w[1] == 0))
        return Recognizability::not_recognizable;  // w in {0, 00}
    return first % 2 == 1 ? Recognizability::recognizable_odd
                          : Recognizability::recognizable_even;
}

}  // namespace pdrqa
