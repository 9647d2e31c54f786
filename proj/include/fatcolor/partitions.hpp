#pragma once

#include <algorithm>
#include <vector>

namespace fatcolor {

/// Visits every restricted growth string of length n that extends `prefix`
/// and uses at most `max_blocks` blocks. Each string is a set partition of
/// 0..n-1 labelled by first appearance. `fn(rgs, blocks)`.
///
/// `prefix` must itself be a valid restricted growth string.
template <typename Fn>
void for_each_rgs(int n, int max_blocks, std::vector<int> prefix, Fn&& fn)
{
    if (static_cast<int>(prefix.size()) > n)
        return;
    std::vector<int> rgs = std::move(prefix);
    int blocks = 0;
    for (int c : rgs)
        blocks = std::max(blocks, c + 1);
    if (blocks > max_blocks)
        return;

    const int fixed = static_cast<int>(rgs.size());
    rgs.resize(static_cast<std::size_t>(n), 0);
    // prefix_max[i] = blocks used by rgs[0..i)
    std::vector<int> prefix_max(static_cast<std::size_t>(n) + 1, 0);
    prefix_max[static_cast<std::size_t>(fixed)] = blocks;

    auto recurse = [&](auto&& self, int pos) -> void {
        const int used = prefix_max[static_cast<std::size_t>(pos)];
        if (pos == n) {
            fn(static_cast<const std::vector<int>&>(rgs), used);
            return;
        }
        const int limit = std::min(used, max_blocks - 1);
        for (int c = 0; c <= limit; ++c) {
            rgs[static_cast<std::size_t>(pos)] = c;
            prefix_max[static_cast<std::size_t>(pos) + 1] = std::max(used, c + 1);
            self(self, pos + 1);
        }
    };
    recurse(recurse, fixed);
}

/// All restricted growth strings of exactly `length` entries (prefixes for
/// splitting an enumeration into independent chunks).
inline std::vector<std::vector<int>> rgs_prefixes(int length, int max_blocks)
{
    std::vector<std::vector<int>> out;
    for_each_rgs(length, max_blocks, {}, [&](const std::vector<int>& rgs, int) { out.push_back(rgs); });
    return out;
}

} // namespace fatcolor
