#include "sdc/perm.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sdc {

std::size_t cycle_type::degree() const {
    std::size_t s = 0;
    for (auto [len, cnt] : parts) s += len * cnt;
    return s;
}

cycle_type cycle_type::parse(std::string_view spec) {
    std::map<std::size_t, std::size_t, std::greater<>> acc;
    std::size_t pos = 0;
    if (spec.empty()) throw std::invalid_argument("cycle_type: empty spec");
    while (pos < spec.size()) {
        auto read_num = [&]() {
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(spec.data() + pos, spec.data() + spec.size(), v);
            if (ec != std::errc() || ptr == spec.data() + pos || v == 0)
                throw std::invalid_argument("cycle_type: bad number in '" + std::string(spec) + "'");
            pos = std::size_t(ptr - spec.data());
            return v;
        };
        std::size_t len = read_num();
        std::size_t cnt = 1;
        if (pos < spec.size() && spec[pos] == '^') {
            ++pos;
            cnt = read_num();
        }
        acc[len] += cnt;
        if (pos < spec.size()) {
            if (spec[pos] != ',')
                throw std::invalid_argument("cycle_type: expected ',' in '" + std::string(spec) + "'");
            ++pos;
            if (pos == spec.size())
                throw std::invalid_argument("cycle_type: trailing ',' in '" + std::string(spec) + "'");
        }
    }
    cycle_type t;
    for (auto [len, cnt] : acc) t.parts.emplace_back(len, cnt);
    return t;
}

std::string cycle_type::str() const {
    std::string s;
    for (auto [len, cnt] : parts) {
        if (!s.empty()) s += ',';
        s += std::to_string(len);
        if (cnt > 1) s += '^' + std::to_string(cnt);
    }
    return s.empty() ? "0" : s;
}

permutation::permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), 0u);
}

permutation permutation::from_images(std::vector<std::uint32_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (std::uint32_t v : images) {
        if (v >= images.size() || seen[v])
            throw std::invalid_argument("permutation: image table is not a bijection");
        seen[v] = true;
    }
    permutation p;
    p.img_ = std::move(images);
    return p;
}

permutation permutation::from_cycles(std::size_t n, std::string_view s) {
    permutation p(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip_ws();
    while (pos < s.size()) {
        if (s[pos] != '(')
            throw std::invalid_argument("permutation: expected '(' in cycle notation");
        ++pos;
        std::vector<std::size_t> cyc;
        for (;;) {
            skip_ws();
            std::size_t v = 0;
            auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
            if (ec != std::errc() || ptr == s.data() + pos)
                throw std::invalid_argument("permutation: expected point in cycle notation");
            pos = std::size_t(ptr - s.data());
            if (v < 1 || v > n)
                throw std::invalid_argument("permutation: point " + std::to_string(v) +
                                            " out of range 1.." + std::to_string(n));
            cyc.push_back(v - 1);
            skip_ws();
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            throw std::invalid_argument("permutation: expected ',' or ')' in cycle notation");
        }
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            std::size_t from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            if (p.img_[from] != from)
                throw std::invalid_argument("permutation: point repeated across cycles");
            p.img_[from] = std::uint32_t(to);
        }
        skip_ws();
    }
    // re-validate: overlapping cycles can slip through the repeat check above
    return from_images(std::move(p.img_));
}

bool permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != i) return false;
    return true;
}

permutation permutation::inverse() const {
    std::vector<std::uint32_t> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = std::uint32_t(i);
    permutation p;
    p.img_ = std::move(inv);
    return p;
}

std::vector<std::vector<std::size_t>> permutation::cycles() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::size_t> cyc;
        std::size_t j = i;
        do {
            seen[j] = true;
            cyc.push_back(j);
            j = img_[j];
        } while (j != i);
        out.push_back(std::move(cyc));
    }
    return out;
}

std::size_t permutation::order() const {
    std::size_t l = 1;
    for (const auto& c : cycles()) l = std::lcm(l, c.size());
    return l;
}

cycle_type permutation::type() const {
    std::map<std::size_t, std::size_t, std::greater<>> acc;
    for (const auto& c : cycles()) ++acc[c.size()];
    cycle_type t;
    for (auto [len, cnt] : acc) t.parts.emplace_back(len, cnt);
    return t;
}

std::string permutation::to_cycles() const {
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() == 1) continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

bit_vector permutation::apply(const bit_vector& v) const {
    if (v.size() != img_.size())
        throw std::invalid_argument("permutation::apply: length mismatch");
    bit_vector r(v.size());
    for (std::size_t j : v.support()) r.set(img_[j], true);
    return r;
}

permutation operator*(const permutation& p, const permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("permutation: degree mismatch in composition");
    std::vector<std::uint32_t> img(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) img[i] = p.img_[q.img_[i]];
    permutation r;
    r.img_ = std::move(img);
    return r;
}

}  // namespace sdc
