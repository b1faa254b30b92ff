#ifndef SDC_REVDOOR_HPP
#define SDC_REVDOOR_HPP

#include <cstddef>
#include <vector>

namespace sdc {

// Revolving-door enumeration of the t-element subsets of {0..n-1}
// (Knuth 7.2.1.3 Algorithm R): consecutive subsets differ by removing one
// element and inserting another, so incremental state needs exactly two
// updates per step.
//
//   first(c)        called once with the initial subset {0,..,t-1}
//                   (c is ascending, length t)
//   step(out, in)   called once per subsequent subset
//
// Nothing is called when t > n.
template <class First, class Step>
void revolving_door(std::size_t n, std::size_t t, First&& first, Step&& step) {
    if (t > n) return;
    std::vector<std::size_t> init(t);
    for (std::size_t i = 0; i < t; ++i) init[i] = i;
    first(static_cast<const std::vector<std::size_t>&>(init));
    if (t == 0 || t == n) return;
    if (t == 1) {
        for (std::size_t i = 1; i < n; ++i) step(i - 1, i);
        return;
    }

    // 1-based c[1..t], sentinels c[t+1] = n, c[t+2] = 0
    std::vector<std::size_t> c(t + 3);
    for (std::size_t j = 1; j <= t; ++j) c[j] = j - 1;
    c[t + 1] = n;
    c[t + 2] = 0;

    for (;;) {
        std::size_t j;
        if (t & 1u) {
            if (c[1] + 1 < c[2]) {
                step(c[1], c[1] + 1);
                ++c[1];
                continue;
            }
            j = 2;
            // fall through to the decrease attempt
        } else {
            if (c[1] > 0) {
                step(c[1], c[1] - 1);
                --c[1];
                continue;
            }
            j = 2;
            goto try_increase;
        }

    try_decrease:  // here c[j] = c[j-1] + 1
        if (c[j] >= j) {
            step(c[j], j - 2);
            c[j] = c[j - 1];
            c[j - 1] = j - 2;
            continue;
        }
        ++j;

    try_increase:  // here c[j-1] = j - 2
        if (c[j] + 1 < c[j + 1]) {
            step(j - 2, c[j] + 1);
            c[j - 1] = c[j];
            ++c[j];
            continue;
        }
        ++j;
        if (j <= t) goto try_decrease;
        return;
    }
}

}  // namespace sdc

#endif
