#include "sdc/autsearch.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sdc {

bool verify_automorphism(const linear_code& c, const permutation& p) {
    if (p.size() != c.n())
        throw std::invalid_argument("verify_automorphism: permutation degree differs from code length");
    for (std::size_t i = 0; i < c.k(); ++i)
        if (!c.contains(p.apply(c.generator().row(i)))) return false;
    return true;
}

permutation orbit_quotient_action(const permutation& h, const permutation& g) {
    std::size_t n = g.size();
    if (h.size() != n)
        throw std::invalid_argument("orbit_quotient_action: degree mismatch");
    if (h * g != g * h)
        throw std::invalid_argument("orbit_quotient_action: h does not commute with g");

    std::vector<std::uint32_t> orbit_of(n);
    std::vector<std::uint32_t> orbit_min;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = g(i);
        if (j == i || g(j) != i)
            throw std::invalid_argument("orbit_quotient_action: g is not a fixed-point-free involution");
        if (j < i) continue;
        orbit_of[i] = orbit_of[j] = std::uint32_t(orbit_min.size());
        orbit_min.push_back(std::uint32_t(i));
    }
    std::vector<std::uint32_t> img(orbit_min.size());
    for (std::size_t t = 0; t < orbit_min.size(); ++t) img[t] = orbit_of[h(orbit_min[t])];
    return permutation::from_images(std::move(img));
}

namespace {

std::vector<bit_vector> words_of_weight(const linear_code& c, std::size_t w) {
    std::vector<bit_vector> out;
    for_each_nonzero_codeword(c, [&](const bit_vector& v) {
        if (v.weight() == w) out.push_back(v);
    });
    std::sort(out.begin(), out.end(), bit_vector_lex{});
    return out;
}

// incidence statistics of one weight class of codewords
struct word_census {
    std::size_t weight = 0;
    std::vector<bit_vector> words;
    std::vector<std::vector<std::uint32_t>> supports;
    std::unordered_set<bit_vector, bit_vector_hash> set;
    std::vector<std::uint32_t> incidence;                // per coordinate
    std::vector<std::vector<std::uint32_t>> pairs;       // n x n incidence counts
    std::vector<std::vector<std::uint32_t>> words_at;    // per coordinate: word indices
};

word_census build_census(std::size_t n, std::size_t weight, std::vector<bit_vector> words) {
    word_census cs;
    cs.weight = weight;
    cs.words = std::move(words);
    cs.incidence.assign(n, 0);
    cs.pairs.assign(n, std::vector<std::uint32_t>(n, 0));
    cs.words_at.assign(n, {});
    cs.supports.reserve(cs.words.size());
    for (std::size_t wi = 0; wi < cs.words.size(); ++wi) {
        cs.set.insert(cs.words[wi]);
        std::vector<std::size_t> supp = cs.words[wi].support();
        std::vector<std::uint32_t> s(supp.begin(), supp.end());
        for (std::size_t a = 0; a < s.size(); ++a) {
            ++cs.incidence[s[a]];
            cs.words_at[s[a]].push_back(std::uint32_t(wi));
            for (std::size_t b = a + 1; b < s.size(); ++b) {
                ++cs.pairs[s[a]][s[b]];
                ++cs.pairs[s[b]][s[a]];
            }
        }
        cs.supports.push_back(std::move(s));
    }
    return cs;
}

std::vector<coordinate_signature> signatures_from_census(const word_census& cs) {
    std::size_t n = cs.incidence.size();
    std::vector<coordinate_signature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        sig[i].incidence = cs.incidence[i];
        sig[i].pair_profile.reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sig[i].pair_profile.push_back(cs.pairs[i][j]);
        std::sort(sig[i].pair_profile.begin(), sig[i].pair_profile.end());
    }
    return sig;
}

// Backtracking over whole cycles: pick the most constrained signature
// class, pick a start coordinate in it (fail-first), then branch over the
// remaining cycle lengths and the cycle's images. Pruning never discards a
// genuine automorphism: signatures, pair incidences and anchor-class images
// are all preserved by any automorphism; a full membership verification
// guards the leaves.
struct cycle_searcher {
    cycle_searcher(const linear_code& c, const word_census& census) : code(c), cs(census) {}

    const linear_code& code;
    const word_census& cs;
    std::size_t n = 0;

    std::vector<std::uint32_t> class_of;
    std::vector<std::vector<std::uint32_t>> class_members;  // ascending coordinates
    std::vector<std::size_t> class_unassigned;
    std::vector<std::pair<std::size_t, std::size_t>> lengths;  // (len, count) descending

    std::vector<std::int32_t> img;
    std::vector<char> busy;
    std::vector<std::uint32_t> mapped;  // per word: mapped support coordinates
    std::vector<std::uint32_t> srcs;    // coordinates with an image, in order
    std::uint64_t nodes = 0;
    std::optional<permutation> found;

    void init(std::size_t points) {
        n = points;
        img.assign(n, -1);
        busy.assign(n, 0);
        mapped.assign(cs.words.size(), 0);
    }

    // can `size` be written as a sum of available cycle lengths?
    bool feasible(std::size_t size) const {
        __uint128_t reach = 1;
        const __uint128_t cap = (size >= 127) ? ~__uint128_t(0) : ((__uint128_t(1) << (size + 1)) - 1);
        for (auto [len, cnt] : lengths)
            for (std::size_t i = 0; i < cnt; ++i) {
                if (len > size) break;
                reach |= (reach << len) & cap;
            }
        return (reach >> size) & 1;
    }

    bool all_classes_feasible() const {
        for (std::size_t ci = 0; ci < class_members.size(); ++ci)
            if (!feasible(class_unassigned[ci])) return false;
        return true;
    }

    bool assign(std::uint32_t u, std::uint32_t v) {
        ++nodes;
        for (std::uint32_t u2 : srcs)
            if (cs.pairs[u][u2] != cs.pairs[v][std::uint32_t(img[u2])]) return false;
        img[u] = std::int32_t(v);
        srcs.push_back(u);
        bool ok = true;
        for (std::uint32_t wi : cs.words_at[u]) {
            if (++mapped[wi] == cs.weight && ok) {
                bit_vector image(n);
                for (std::uint32_t j : cs.supports[wi]) image.set(std::size_t(img[j]), true);
                if (!cs.set.count(image)) ok = false;
            }
        }
        if (!ok) {
            for (std::uint32_t wi : cs.words_at[u]) --mapped[wi];
            srcs.pop_back();
            img[u] = -1;
        }
        return ok;
    }

    void unassign(std::uint32_t u) {
        for (std::uint32_t wi : cs.words_at[u]) --mapped[wi];
        srcs.pop_back();
        img[u] = -1;
    }

    bool dfs() {
        if (srcs.size() == n) {
            permutation p =
                permutation::from_images(std::vector<std::uint32_t>(img.begin(), img.end()));
            if (verify_automorphism(code, p)) {
                found = std::move(p);
                return true;
            }
            return false;
        }

        // most constrained class first
        std::size_t ci = class_members.size();
        for (std::size_t i = 0; i < class_members.size(); ++i)
            if (class_unassigned[i] > 0 &&
                (ci == class_members.size() || class_unassigned[i] < class_unassigned[ci]))
                ci = i;

        // fail-first start: highest total mapped count over incident words
        std::uint32_t x = 0;
        std::int64_t best = -1;
        for (std::uint32_t u : class_members[ci]) {
            if (busy[u]) continue;
            std::int64_t score = 0;
            for (std::uint32_t wi : cs.words_at[u]) score += mapped[wi];
            if (score > best) {
                best = score;
                x = u;
            }
        }

        std::vector<std::uint32_t> cyc;
        for (auto& [len, cnt] : lengths) {
            if (cnt == 0 || len > class_unassigned[ci]) continue;
            --cnt;
            // the whole cycle stays inside x's class; account for it before
            // asking whether every class can still be tiled
            class_unassigned[ci] -= len;
            bool viable = all_classes_feasible();
            class_unassigned[ci] += len;
            if (viable) {
                busy[x] = 1;
                --class_unassigned[ci];
                cyc.assign(1, x);
                if (extend_cycle(cyc, len, ci)) return true;
                busy[x] = 0;
                ++class_unassigned[ci];
            }
            ++cnt;
        }
        return false;
    }

    bool extend_cycle(std::vector<std::uint32_t>& cyc, std::size_t len, std::size_t ci) {
        if (cyc.size() == len) {
            if (assign(cyc.back(), cyc.front())) {
                if (dfs()) return true;
                unassign(cyc.back());
            }
            return false;
        }
        for (std::uint32_t y : class_members[ci]) {
            if (busy[y]) continue;
            busy[y] = 1;
            --class_unassigned[ci];
            if (assign(cyc.back(), y)) {
                cyc.push_back(y);
                if (extend_cycle(cyc, len, ci)) return true;
                cyc.pop_back();
                unassign(cyc.back());
            }
            busy[y] = 0;
            ++class_unassigned[ci];
        }
        return false;
    }
};

permutation canonical_permutation_of_type(std::size_t n, const cycle_type& t) {
    std::vector<std::uint32_t> img(n);
    std::size_t next = 0;
    for (auto [len, cnt] : t.parts)
        for (std::size_t c = 0; c < cnt; ++c) {
            for (std::size_t i = 0; i < len; ++i)
                img[next + i] = std::uint32_t(next + (i + 1) % len);
            next += len;
        }
    return permutation::from_images(std::move(img));
}

}  // namespace

std::vector<bit_vector> min_weight_words(const linear_code& c) {
    if (c.k() == 0)
        throw std::invalid_argument("min_weight_words: zero code has no nonzero codeword");
    return words_of_weight(c, min_distance_bruteforce(c));
}

std::vector<coordinate_signature> coordinate_signatures(const linear_code& c) {
    std::vector<bit_vector> w = min_weight_words(c);
    std::size_t weight = w.front().weight();
    return signatures_from_census(build_census(c.n(), weight, std::move(w)));
}

std::optional<permutation> find_automorphism_with_cycle_type(const linear_code& c,
                                                             const cycle_type& t,
                                                             autsearch_stats* stats) {
    std::size_t n = c.n();
    if (t.degree() != n)
        throw std::invalid_argument("find_automorphism_with_cycle_type: cycle type does not sum to n");
    if (stats) *stats = {};

    if (c.k() == 0) {
        // every permutation stabilizes the zero code
        return canonical_permutation_of_type(n, t);
    }

    // anchor weight class: the minimum weight, or the next class whose size
    // fits the cap
    std::vector<std::uint64_t> we = weight_enumerator(c);  // also enforces the k guard
    std::size_t anchor = 0;
    bool fallback = false;
    for (std::size_t w = 1; w <= n; ++w) {
        if (we[w] == 0) continue;
        if (anchor == 0) anchor = w;  // minimum weight class
        if (we[w] <= autsearch_word_cap) {
            fallback = (w != anchor);
            anchor = w;
            break;
        }
    }
    if (we[anchor] > autsearch_word_cap)
        throw std::invalid_argument(
            "find_automorphism_with_cycle_type: every weight class exceeds the word cap");

    word_census cs = build_census(n, anchor, words_of_weight(c, anchor));
    if (stats) {
        stats->anchor_weight = anchor;
        stats->fallback_used = fallback;
    }

    std::vector<coordinate_signature> sig = signatures_from_census(cs);

    cycle_searcher s(c, cs);
    s.init(n);
    // classes in first-occurrence order, members ascending
    s.class_of.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t ci = s.class_members.size();
        for (std::size_t j = 0; j < s.class_members.size(); ++j)
            if (sig[s.class_members[j].front()] == sig[i]) {
                ci = j;
                break;
            }
        if (ci == s.class_members.size()) s.class_members.emplace_back();
        s.class_of[i] = std::uint32_t(ci);
        s.class_members[ci].push_back(std::uint32_t(i));
    }
    s.class_unassigned.resize(s.class_members.size());
    for (std::size_t i = 0; i < s.class_members.size(); ++i)
        s.class_unassigned[i] = s.class_members[i].size();
    for (auto [len, cnt] : t.parts) s.lengths.emplace_back(len, cnt);

    std::optional<permutation> result;
    if (s.all_classes_feasible() && s.dfs()) result = s.found;
    if (stats) stats->nodes = s.nodes;
    return result;
}

}  // namespace sdc
