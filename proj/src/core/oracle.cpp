#include "core/oracle.hpp"

#include <algorithm>
#include <cstring>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/packing.hpp"
#include "core/unit_solver.hpp"
#include "core/zero_solver.hpp"

namespace cbp {

namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
    return (a + b - 1) / b;
}

// Open bin: topmost color plus free slots. In zero mode free is always 0
// and ignored; unit-mode bins leave the open set once full.
struct OpenBin {
    std::uint32_t top;
    std::uint32_t free;

    bool operator==(const OpenBin& o) const { return top == o.top && free == o.free; }
    bool operator<(const OpenBin& o) const {
        return top != o.top ? top < o.top : free < o.free;
    }
};

struct Searcher {
    bool zero_mode;
    std::uint32_t capacity;
    std::size_t k;
    std::vector<std::uint32_t> remaining;
    std::uint32_t rem_total = 0;
    std::vector<OpenBin> open;
    std::uint64_t used = 0;
    std::uint64_t best = 0;
    std::unordered_map<std::string, std::uint64_t> seen;

    // Per-color signature: remaining count plus the sorted frees of the
    // bins the color currently tops. Colors with equal signatures are
    // interchangeable.
    std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> signatures() const {
        std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>> sig(k);
        for (std::size_t c = 0; c < k; ++c) {
            sig[c].first = remaining[c];
        }
        for (const OpenBin& b : open) {
            sig[b.top].second.push_back(b.free);
        }
        for (auto& s : sig) {
            std::sort(s.second.begin(), s.second.end());
        }
        return sig;
    }

    // Canonical fingerprint: relabel colors by signature order, then encode
    // remaining counts and the sorted open-bin multiset.
    std::string canonical(
        const std::vector<std::pair<std::uint64_t, std::vector<std::uint32_t>>>& sig) const {
        std::vector<std::uint32_t> order(k);
        for (std::uint32_t c = 0; c < k; ++c) {
            order[c] = c;
        }
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
        std::vector<std::uint32_t> rank(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            rank[order[i]] = i;
        }

        std::vector<std::uint32_t> data;
        data.reserve(k + 2 * open.size());
        for (std::uint32_t i = 0; i < k; ++i) {
            data.push_back(remaining[order[i]]);
        }
        std::vector<OpenBin> bins(open);
        for (OpenBin& b : bins) {
            b.top = rank[b.top];
        }
        std::sort(bins.begin(), bins.end());
        for (const OpenBin& b : bins) {
            data.push_back(b.top);
            data.push_back(b.free);
        }
        std::string key(data.size() * sizeof(std::uint32_t), '\0');
        std::memcpy(key.data(), data.data(), key.size());
        return key;
    }

    // Admissible bound on the bins still to be opened: capacity pressure
    // (unit mode) and the alternation bound (each bin absorbs at most one
    // more item of a color than of all other colors together).
    std::uint64_t lower_bound() const {
        std::int64_t lb = 0;
        const std::int64_t opens = static_cast<std::int64_t>(open.size());
        std::vector<std::int64_t> topped(k, 0);
        for (const OpenBin& b : open) {
            ++topped[b.top];
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (remaining[c] == 0) {
                continue;
            }
            const std::int64_t v = 2 * static_cast<std::int64_t>(remaining[c]) -
                                   static_cast<std::int64_t>(rem_total) -
                                   (opens - topped[c]);
            lb = std::max(lb, v);
        }
        if (!zero_mode) {
            std::uint64_t free_total = 0;
            for (const OpenBin& b : open) {
                free_total += b.free;
            }
            if (rem_total > free_total) {
                lb = std::max(lb, static_cast<std::int64_t>(
                                      ceil_div(rem_total - free_total, capacity)));
            }
            const std::uint64_t per_bin = (capacity + 1) / 2;
            for (std::size_t c = 0; c < k; ++c) {
                if (remaining[c] == 0) {
                    continue;
                }
                std::uint64_t budget = 0;
                for (const OpenBin& b : open) {
                    budget += b.top == c ? b.free / 2 : (b.free + 1) / 2;
                }
                if (remaining[c] > budget) {
                    lb = std::max(lb, static_cast<std::int64_t>(
                                          ceil_div(remaining[c] - budget, per_bin)));
                }
            }
        }
        return lb < 0 ? 0 : static_cast<std::uint64_t>(lb);
    }

    void place_and_recurse(std::uint32_t color, std::size_t bin_index) {
        const OpenBin old = open[bin_index];
        --remaining[color];
        --rem_total;
        const std::uint32_t new_free = zero_mode ? 0 : old.free - 1;
        if (!zero_mode && new_free == 0) {
            open[bin_index] = open.back();
            open.pop_back();
            dfs();
            open.push_back(old);
        } else {
            open[bin_index] = {color, new_free};
            dfs();
            open[bin_index] = old;
        }
        ++remaining[color];
        ++rem_total;
    }

    void open_and_recurse(std::uint32_t color) {
        --remaining[color];
        --rem_total;
        ++used;
        if (!zero_mode && capacity == 1) {
            dfs();  // the bin is full on arrival
        } else {
            open.push_back({color, zero_mode ? 0u : capacity - 1});
            dfs();
            open.pop_back();
        }
        --used;
        ++remaining[color];
        ++rem_total;
    }

    void dfs() {
        if (used >= best) {
            return;
        }
        if (rem_total == 0) {
            best = used;
            return;
        }
        if (used + lower_bound() >= best) {
            return;
        }
        auto sig = signatures();
        {
            std::string key = canonical(sig);
            auto [it, inserted] = seen.try_emplace(std::move(key), used);
            if (!inserted) {
                if (it->second <= used) {
                    return;
                }
                it->second = used;
            }
        }

        for (std::uint32_t c = 0; c < k; ++c) {
            if (remaining[c] == 0) {
                continue;
            }
            // Skip colors interchangeable with an earlier one.
            bool duplicate = false;
            for (std::uint32_t prior = 0; prior < c; ++prior) {
                if (remaining[prior] > 0 && sig[prior] == sig[c]) {
                    duplicate = true;
                    break;
                }
            }
            if (duplicate) {
                continue;
            }

            std::vector<OpenBin> targets;
            for (const OpenBin& b : open) {
                if (b.top != c) {
                    targets.push_back(b);
                }
            }
            std::sort(targets.begin(), targets.end(), [](const OpenBin& a, const OpenBin& b) {
                return a.free != b.free ? a.free < b.free : a.top < b.top;
            });
            targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
            for (const OpenBin& t : targets) {
                for (std::size_t i = 0; i < open.size(); ++i) {
                    if (open[i] == t) {
                        place_and_recurse(c, i);
                        break;
                    }
                }
            }
            open_and_recurse(c);
        }
    }
};

}  // namespace

std::uint64_t optimal_bins(const Instance& instance, std::uint32_t item_limit) {
    const std::uint64_t n = instance.total_items();
    if (n > item_limit) {
        throw Error(Status::LimitExceeded,
                    "instance has " + std::to_string(n) + " items, oracle limit is " +
                        std::to_string(item_limit));
    }
    if (n == 0) {
        return 0;
    }

    // One bin per item is always feasible; the solver's packing tightens
    // the bound when it independently validates.
    std::uint64_t ub = n;
    Packing solved = instance.zero_weight() ? pack_zero(instance) : pack_unit(instance);
    if (validate_packing(instance, solved).valid()) {
        ub = std::min<std::uint64_t>(ub, solved.bin_count());
    }

    Searcher s;
    s.zero_mode = instance.zero_weight();
    s.capacity = static_cast<std::uint32_t>(
        std::min<std::uint64_t>(instance.capacity(), 0xffffffffu));
    s.k = instance.num_colors();
    s.remaining.reserve(s.k);
    for (std::uint64_t c : instance.counts()) {
        s.remaining.push_back(static_cast<std::uint32_t>(c));
        s.rem_total += static_cast<std::uint32_t>(c);
    }
    s.best = ub;
    s.dfs();
    return s.best;
}

}  // namespace cbp
