// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. Exits non-zero when anything fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "core/colors.hpp"
#include "core/generator.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/packing.hpp"
#include "core/predictor.hpp"
#include "core/unit_solver.hpp"
#include "core/zero_solver.hpp"

namespace {

using cbp::CountBreakdown;
using cbp::Instance;
using cbp::Packing;
using cbp::SplitMix64;

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!pass) {
        ++g_failures;
    }
}

Instance crafted(std::uint64_t capacity, const std::vector<std::uint64_t>& counts,
                 const char* names = "ABCDEFGH") {
    std::vector<std::pair<std::string, std::uint64_t>> colors;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        colors.emplace_back(std::string(1, names[i]), counts[i]);
    }
    return Instance::create(capacity, std::move(colors));
}

Packing solve(const Instance& inst) {
    return inst.zero_weight() ? cbp::pack_zero(inst) : cbp::pack_unit(inst);
}

double solve_ms(const Instance& inst, std::uint64_t& bins_out) {
    auto t0 = std::chrono::steady_clock::now();
    Packing p = solve(inst);
    auto t1 = std::chrono::steady_clock::now();
    bins_out = p.bin_count();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

// All count vectors with exactly k positive entries summing to <= max_n.
void enumerate_vectors(std::size_t k, std::uint64_t max_n,
                       std::vector<std::vector<std::uint64_t>>& out) {
    std::vector<std::uint64_t> current(k, 1);
    while (true) {
        std::uint64_t total = 0;
        for (std::uint64_t c : current) {
            total += c;
        }
        if (total <= max_n) {
            out.push_back(current);
        }
        // Odometer over entries bounded by the remaining budget.
        std::size_t pos = 0;
        while (pos < k) {
            ++current[pos];
            std::uint64_t sum = 0;
            for (std::uint64_t c : current) {
                sum += c;
            }
            if (sum <= max_n) {
                break;
            }
            current[pos] = 1;
            ++pos;
        }
        if (pos == k) {
            break;
        }
    }
}

// ---- criterion 1: golden bin counts ------------------------------------

void criterion_golden() {
    struct Golden {
        Instance instance;
        std::uint64_t bins;
    };
    const char* wbyr = "WBYR";
    const char* wby = "WBY";
    const char* wbyg = "WBYG";
    std::vector<Golden> cases;
    cases.push_back({crafted(0, {3, 2, 2, 1}, wbyr), 1});
    cases.push_back({crafted(0, {8, 2, 2}, wby), 4});
    cases.push_back({crafted(3, {4, 3, 2}, wby), 3});
    cases.push_back({crafted(6, {15, 4, 3, 3}, wbyg), 5});
    cases.push_back({crafted(5, {11, 2, 2, 3}, wbyg), 4});
    cases.push_back({crafted(5, {10, 4, 2, 2}, wbyg), 4});
    cases.push_back({crafted(5, {15, 3, 2, 2}, wbyg), 8});

    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail = "golden bin counts";
    for (std::size_t i = 0; i < cases.size(); ++i) {
        Packing p = solve(cases[i].instance);
        if (p.bin_count() != cases[i].bins ||
            !cbp::validate_packing(cases[i].instance, p).valid()) {
            ok = false;
            detail = "golden case " + std::to_string(i) + " expected " +
                     std::to_string(cases[i].bins) + " bins, got " +
                     std::to_string(p.bin_count());
            break;
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ok && ms >= 1000.0) {
        ok = false;
        detail = "golden suite took " + std::to_string(ms) + " ms (limit 1000)";
    }
    report(1, ok, ok ? "golden bin counts (7 instances, " + std::to_string(ms) + " ms)" : detail);
}

// ---- criteria 2..5, 7 (sweep part) --------------------------------------

struct SweepOutcome {
    bool oracle_ok = true;
    bool predictor_ok = true;
    bool valid_ok = true;
    bool zero_formula_ok = true;
    bool never_stuck_ok = true;
    std::uint64_t instances = 0;
    std::string first_failure;
};

bool sequence_valid(const std::vector<cbp::ColorId>& seq, const Instance& inst) {
    if (seq.size() != inst.total_items()) {
        return false;
    }
    std::vector<std::uint64_t> used(inst.num_colors(), 0);
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i > 0 && seq[i] == seq[i - 1]) {
            return false;
        }
        if (seq[i] >= inst.num_colors()) {
            return false;
        }
        ++used[seq[i]];
    }
    return used == inst.counts();
}

SweepOutcome run_sweep() {
    SweepOutcome out;
    std::vector<std::vector<std::uint64_t>> vectors;
    for (std::size_t k = 2; k <= 4; ++k) {
        enumerate_vectors(k, 10, vectors);
    }
    for (const auto& counts : vectors) {
        for (std::uint64_t capacity = 0; capacity <= 6; ++capacity) {
            Instance inst = crafted(capacity, counts);
            ++out.instances;
            Packing p = solve(inst);
            const std::uint64_t bins = p.bin_count();

            if (!cbp::validate_packing(inst, p).valid()) {
                out.valid_ok = false;
            }
            std::uint64_t opt = cbp::optimal_bins(inst, 12);
            if (opt != bins) {
                out.oracle_ok = false;
            }
            CountBreakdown pred = cbp::predicted_bins(inst);
            if (pred.total != bins) {
                out.predictor_ok = false;
            }
            if (capacity == 0) {
                std::int64_t d = cbp::discrepancy(inst);
                std::uint64_t expect = d > 0 ? static_cast<std::uint64_t>(d) : 1;
                if (bins != expect) {
                    out.zero_formula_ok = false;
                }
                if (d <= 0) {
                    auto seq = cbp::zero_sequence(inst.counts(), inst.table());
                    if (!sequence_valid(seq, inst)) {
                        out.never_stuck_ok = false;
                    }
                }
            }
            if (out.first_failure.empty() &&
                (!out.oracle_ok || !out.predictor_ok || !out.valid_ok ||
                 !out.zero_formula_ok || !out.never_stuck_ok)) {
                out.first_failure = "first failure at " + cbp::serialize_instance(inst) +
                                    " solver=" + std::to_string(bins) +
                                    " oracle=" + std::to_string(opt) +
                                    " predicted=" + std::to_string(pred.total);
            }
        }
    }
    return out;
}

// ---- criterion 3 (random stratified part) -------------------------------

struct RandomOutcome {
    bool ok = true;
    std::map<cbp::CaseTag, std::uint64_t> tally;
    std::string first_failure;
    std::uint64_t validated = 0;
};

RandomOutcome run_random_predictor() {
    RandomOutcome out;
    SplitMix64 rng(20260811);
    const std::uint64_t kRuns = 10000;
    for (std::uint64_t i = 0; i < kRuns; ++i) {
        const int recipe = static_cast<int>(i % 9);
        Instance inst;
        switch (recipe) {
            case 0:  // zero weight, balanced
                inst = cbp::generate({3 + static_cast<std::uint32_t>(rng.below(3)),
                                      2 + rng.below(40), 0, rng.next(), cbp::Skew::Balanced});
                break;
            case 1:  // zero weight, forced discrepancy
                inst = cbp::generate({2 + static_cast<std::uint32_t>(rng.below(4)),
                                      1 + rng.below(40), 0, rng.next(), cbp::Skew::MaxHeavy});
                break;
            case 2:  // capacity 1
                inst = cbp::generate({1 + static_cast<std::uint32_t>(rng.below(4)),
                                      1 + rng.below(30), 1, rng.next(), cbp::Skew::Uniform});
                break;
            case 3:  // capacity bound, even L
                inst = cbp::generate({3 + static_cast<std::uint32_t>(rng.below(3)),
                                      2 + rng.below(60), 2 + 2 * rng.below(4), rng.next(),
                                      cbp::Skew::Balanced});
                break;
            case 4:  // capacity bound, odd L
                inst = cbp::generate({3 + static_cast<std::uint32_t>(rng.below(3)),
                                      2 + rng.below(60), 3 + 2 * rng.below(3), rng.next(),
                                      cbp::Skew::Balanced});
                break;
            case 5:  // even combine
                inst = cbp::generate({2 + static_cast<std::uint32_t>(rng.below(4)),
                                      1 + rng.below(60), 2 + 2 * rng.below(4), rng.next(),
                                      cbp::Skew::MaxHeavy});
                break;
            case 6:  // odd L, skewed either way
                inst = cbp::generate({2 + static_cast<std::uint32_t>(rng.below(4)),
                                      1 + rng.below(60), 3 + 2 * rng.below(3), rng.next(),
                                      cbp::Skew::MaxHeavy});
                break;
            case 7: {  // odd L, discrepancy certainly irreducible
                std::uint64_t k = 2 + rng.below(3);
                std::uint64_t n = 4 * k + rng.below(30);
                std::vector<std::uint64_t> counts(k, 1);
                counts[0] = n - (k - 1);
                inst = crafted(3 + 2 * rng.below(3), counts);
                break;
            }
            default: {  // odd L, discrepancy 1, certainly reducible
                std::uint64_t m = 1 + rng.below(25);
                std::uint64_t k = 2 + rng.below(3);
                std::vector<std::uint64_t> counts(k, 0);
                counts[0] = m + 1;
                for (std::uint64_t j = 0; j < m; ++j) {
                    counts[1 + j % (k - 1)] += 1;
                }
                inst = crafted(3 + 2 * rng.below(3), counts);
                break;
            }
        }

        Packing p = solve(inst);
        CountBreakdown pred = cbp::predicted_bins(inst);
        ++out.tally[pred.case_tag];
        bool valid = cbp::validate_packing(inst, p).valid();
        if (valid) {
            ++out.validated;
        }
        if (pred.total != p.bin_count() || !valid) {
            out.ok = false;
            if (out.first_failure.empty()) {
                out.first_failure = "recipe " + std::to_string(recipe) + ": " +
                                    cbp::serialize_instance(inst) + " solver=" +
                                    std::to_string(p.bin_count()) + " predicted=" +
                                    std::to_string(pred.total) +
                                    (valid ? "" : " (invalid packing)");
            }
        }
    }

    // Every unit/zero case must actually fire.
    const cbp::CaseTag required[] = {
        cbp::CaseTag::SingleBin,       cbp::CaseTag::DiscrepancyBound,
        cbp::CaseTag::UnitCapacity,    cbp::CaseTag::CapacityBound,
        cbp::CaseTag::EvenCombine,     cbp::CaseTag::OddReducible,
        cbp::CaseTag::OddDiscrepancyBound,
    };
    for (cbp::CaseTag tag : required) {
        if (out.tally[tag] < 100) {
            out.ok = false;
            if (out.first_failure.empty()) {
                out.first_failure = std::string("case ") + cbp::case_tag_name(tag) +
                                    " fired only " + std::to_string(out.tally[tag]) + " times";
            }
        }
    }
    return out;
}

// ---- criterion 6: linear time -------------------------------------------

// Fixed-proportion shapes so the work grows homogeneously with n and
// doubling ratios are meaningful.
Instance bench_instance(int branch, std::uint64_t n, std::uint64_t /*seed*/) {
    auto skewed = [&](std::uint64_t capacity, std::uint64_t share) {
        std::vector<std::uint64_t> counts(5, 0);
        counts[0] = n * share / 100;
        std::uint64_t rest = n - counts[0];
        for (int i = 1; i < 5; ++i) {
            counts[i] = rest / 4;
        }
        counts[4] += rest % 4;
        return crafted(capacity, counts);
    };
    switch (branch) {
        case 0: return skewed(0, 20);   // discrepancy <= 0, one bin
        case 1: return skewed(0, 70);   // discrepancy bound
        case 2: return skewed(8, 20);   // capacity bound, even L
        case 3: return skewed(7, 20);   // capacity bound, odd L
        case 4: return skewed(6, 60);   // even combine
        case 5: return skewed(7, 52);   // odd, discrepancy reducible
        case 6: return skewed(7, 90);   // odd, leftover singletons
        default: return skewed(1, 20);  // single-slot bins
    }
}

void criterion_bench() {
    const char* tags[] = {"zero-single-bin",  "zero-discrepancy",  "unit-capacity-even",
                          "unit-capacity-odd", "unit-even-combine", "unit-odd-reducible",
                          "unit-odd-singletons", "unit-single-slot"};
    const std::uint64_t sizes[] = {100000, 200000, 400000, 800000};
    const int kTrials = 5;
    bool ok = true;
    std::string detail;
    double worst_ratio = 0.0;

    for (int branch = 0; branch < 8 && ok; ++branch) {
        double times[4];
        for (int s = 0; s < 4; ++s) {
            Instance inst = bench_instance(branch, sizes[s], 7);
            Packing warm = solve(inst);
            if (!cbp::validate_packing(inst, warm).valid()) {
                ok = false;
                detail = std::string(tags[branch]) + ": invalid packing";
                break;
            }
            double best = 0.0;
            for (int t = 0; t < kTrials; ++t) {
                std::uint64_t bins = 0;
                double ms = solve_ms(inst, bins);
                if (t == 0 || ms < best) {
                    best = ms;
                }
            }
            times[s] = best;
        }
        for (int s = 1; s < 4 && ok; ++s) {
            double ratio = times[s - 1] > 0.0 ? times[s] / times[s - 1] : 0.0;
            worst_ratio = std::max(worst_ratio, ratio);
            if (ratio > 2.5) {
                ok = false;
                detail = std::string(tags[branch]) + ": doubling ratio " +
                         std::to_string(ratio) + " from n=" + std::to_string(sizes[s - 1]);
            }
        }
    }

    double worst_million = 0.0;
    for (int branch = 0; branch < 8 && ok; ++branch) {
        Instance inst = bench_instance(branch, 1000000, 7);
        std::uint64_t bins = 0;
        double ms = solve_ms(inst, bins);
        double ms2 = solve_ms(inst, bins);
        ms = std::min(ms, ms2);
        worst_million = std::max(worst_million, ms);
        if (ms >= 2000.0) {
            ok = false;
            detail = std::string(tags[branch]) + ": n=10^6 took " + std::to_string(ms) + " ms";
        }
    }

    report(6, ok,
           ok ? "linear scaling (worst doubling ratio " + std::to_string(worst_ratio) +
                    ", worst 10^6 solve " + std::to_string(worst_million) + " ms)"
              : detail);
}

// ---- criterion 7 (random balanced part) ----------------------------------

bool never_stuck_random() {
    SplitMix64 rng(777);
    for (int i = 0; i < 10000; ++i) {
        std::uint32_t k = 3 + static_cast<std::uint32_t>(rng.below(6));
        std::uint64_t n = 2 + rng.below(200);
        Instance inst = cbp::generate({k, n, 0, rng.next(), cbp::Skew::Balanced});
        auto seq = cbp::zero_sequence(inst.counts(), inst.table());
        if (!sequence_valid(seq, inst)) {
            return false;
        }
    }
    return true;
}

// ---- criterion 8: X-formula erratum ---------------------------------------

void criterion_erratum() {
    Instance inst = crafted(6, {15, 4, 3, 3}, "WBYG");
    CountBreakdown b = cbp::predicted_bins_unit(inst);
    Packing p = cbp::pack_unit(inst);

    // The formula as printed elsewhere omits the P pairs absorbed by the
    // P-bin: X' = M - C*ceil((L-1)/2), giving one phantom singleton here.
    const std::uint64_t printed_x =
        b.singleton_bins - b.combined_bins * ((6 - 1 + 1) / 2);
    const std::uint64_t printed_total = b.full_bins + (b.leftover_others > 0 ? 1 : 0) +
                                        b.combined_bins + (b.leftover_tops > 0 ? 1 : 0) +
                                        printed_x;

    bool ok = b.total == 5 && p.bin_count() == 5 && b.leftover_singletons == 0 &&
              printed_x == 1 && printed_total == 6;
    report(8, ok,
           ok ? "corrected X gives 5 bins, un-corrected formula gives 6"
              : "expected corrected=5/printed=6, got corrected=" + std::to_string(b.total) +
                    " printed=" + std::to_string(printed_total) + " solver=" +
                    std::to_string(p.bin_count()));
}

}  // namespace

int main() {
    criterion_golden();

    SweepOutcome sweep = run_sweep();
    report(2, sweep.oracle_ok,
           sweep.oracle_ok
               ? "solver matches exact oracle on " + std::to_string(sweep.instances) +
                     " sweep instances"
               : sweep.first_failure);

    RandomOutcome random = run_random_predictor();
    {
        bool ok = sweep.predictor_ok && random.ok;
        std::string detail;
        if (ok) {
            detail = "predictor matches solver on sweep + 10000 stratified instances (";
            for (const auto& [tag, count] : random.tally) {
                detail += std::string(cbp::case_tag_name(tag)) + "=" + std::to_string(count) + " ";
            }
            detail.back() = ')';
        } else {
            detail = !sweep.predictor_ok ? sweep.first_failure : random.first_failure;
        }
        report(3, ok, detail);
    }

    report(4, sweep.valid_ok && random.validated == 10000,
           sweep.valid_ok && random.validated == 10000
               ? "every solver packing validates with zero violations"
               : "at least one packing failed validation: " + sweep.first_failure);

    report(5, sweep.zero_formula_ok,
           sweep.zero_formula_ok ? "zero-weight bin count equals max(1, discrepancy)"
                                 : sweep.first_failure);

    criterion_bench();

    bool stuck_ok = sweep.never_stuck_ok && never_stuck_random();
    report(7, stuck_ok,
           stuck_ok ? "alternation never got stuck (sweep + 10000 balanced instances)"
                    : "alternation dead end detected");

    criterion_erratum();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
