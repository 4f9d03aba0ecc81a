// Command-line front end for the cbp shared library. Talks to the solver
// exclusively through the C API in cbp.h.
//
// Exit codes: 0 ok, 1 verification failed, 2 parse error, 3 internal
// solver invariant breach, 4 oracle item limit exceeded.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitOracleLimit = 4;

struct InstanceHandle {
    cbp_instance* ptr = nullptr;
    ~InstanceHandle() { cbp_instance_free(ptr); }
};

struct PackingHandle {
    cbp_packing* ptr = nullptr;
    ~PackingHandle() { cbp_packing_free(ptr); }
};

int load_instance(const std::string& path, InstanceHandle& inst) {
    cbp_status st = cbp_instance_parse_file(path.c_str(), &inst.ptr);
    if (st != CBP_OK) {
        std::cerr << "error: " << path << ": " << cbp_last_error() << "\n";
        return kExitParse;
    }
    return kExitOk;
}

std::string color_label(const cbp_instance* inst, uint32_t color) {
    const char* name = cbp_instance_color_name(inst, color);
    return name != nullptr ? std::string(name) : "id#" + std::to_string(color);
}

void print_violations(const cbp_instance* inst, const cbp_packing* packing) {
    size_t count = 0;
    cbp_validate(inst, packing, nullptr, 0, &count);
    std::vector<cbp_violation> violations(count);
    cbp_validate(inst, packing, violations.data(), violations.size(), &count);
    for (const cbp_violation& v : violations) {
        switch (v.kind) {
            case CBP_VIOLATION_ADJACENCY:
                std::cout << "adjacency: bin " << v.bin << " position " << v.position
                          << " repeats color " << color_label(inst, v.color) << "\n";
                break;
            case CBP_VIOLATION_CAPACITY:
                std::cout << "capacity: bin " << v.bin << " holds " << v.found
                          << " items, limit " << v.expected << "\n";
                break;
            case CBP_VIOLATION_CONSERVATION:
                std::cout << "conservation: color " << color_label(inst, v.color)
                          << " expected " << v.expected << " found " << v.found << "\n";
                break;
            case CBP_VIOLATION_EMPTY_BIN:
                std::cout << "empty-bin: bin " << v.bin << "\n";
                break;
        }
    }
}

int cmd_solve(const std::string& path, const std::string& format) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != kExitOk) {
        return rc;
    }
    PackingHandle packing;
    if (cbp_solve(inst.ptr, &packing.ptr) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    // Emitting an invalid packing is a solver bug, never user error.
    if (cbp_validate(inst.ptr, packing.ptr, nullptr, 0, nullptr) != CBP_OK) {
        std::cerr << "internal error: solver produced an invalid packing: " << cbp_last_error()
                  << "\n";
        return kExitInternal;
    }
    char* text = nullptr;
    cbp_packing_format fmt = format == "structured" ? CBP_FORMAT_STRUCTURED : CBP_FORMAT_TEXT;
    if (cbp_packing_serialize(packing.ptr, inst.ptr, fmt, &text) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    std::cout << text;
    if (fmt == CBP_FORMAT_TEXT) {
        std::cout << "\nbins: " << cbp_packing_bin_count(packing.ptr) << "\n";
    }
    cbp_string_free(text);
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& packing_path) {
    InstanceHandle inst;
    if (int rc = load_instance(instance_path, inst); rc != kExitOk) {
        return rc;
    }
    std::ifstream in(packing_path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read '" << packing_path << "'\n";
        return kExitParse;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();

    PackingHandle packing;
    if (cbp_packing_parse(inst.ptr, text.c_str(), text.size(), &packing.ptr) != CBP_OK) {
        std::cerr << "error: " << packing_path << ": " << cbp_last_error() << "\n";
        return kExitParse;
    }
    size_t count = 0;
    cbp_status st = cbp_validate(inst.ptr, packing.ptr, nullptr, 0, &count);
    if (st == CBP_OK) {
        std::cout << "valid (" << cbp_packing_bin_count(packing.ptr) << " bins)\n";
        return kExitOk;
    }
    print_violations(inst.ptr, packing.ptr);
    std::cout << "invalid (" << count << " violation" << (count == 1 ? "" : "s") << ")\n";
    return kExitVerifyFailed;
}

int cmd_predict(const std::string& path) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != kExitOk) {
        return rc;
    }
    cbp_breakdown b{};
    if (cbp_predict(inst.ptr, &b) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    std::cout << "mode: " << (b.zero_mode ? "zero" : "unit") << "\n";
    std::cout << "case: " << cbp_case_tag_name(b.case_tag) << "\n";
    std::cout << "D: " << b.discrepancy << "\n";
    if (b.case_tag == CBP_CASE_EVEN_COMBINE) {
        std::cout << "F: " << b.full_bins << "\n";
        std::cout << "R: " << b.leftover_others << "\n";
        std::cout << "P: " << b.pair_capacity << "\n";
        std::cout << "M: " << b.singleton_bins << "\n";
        std::cout << "C: " << b.combined_bins << "\n";
        std::cout << "RO: " << b.leftover_tops << "\n";
        std::cout << "X: " << b.leftover_singletons << "\n";
    }
    std::cout << "total: " << b.total << "\n";
    return kExitOk;
}

int cmd_oracle(const std::string& path, uint32_t max_items) {
    InstanceHandle inst;
    if (int rc = load_instance(path, inst); rc != kExitOk) {
        return rc;
    }
    uint64_t optimum = 0;
    cbp_status st = cbp_oracle(inst.ptr, max_items, &optimum);
    if (st == CBP_ERR_LIMIT) {
        std::cerr << "error: " << cbp_last_error() << " (raise --max-items to force)\n";
        return kExitOracleLimit;
    }
    if (st != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    PackingHandle packing;
    if (cbp_solve(inst.ptr, &packing.ptr) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    uint64_t solver_bins = cbp_packing_bin_count(packing.ptr);
    std::cout << "optimal: " << optimum << "\n";
    std::cout << "solver: " << solver_bins << "\n";
    std::cout << "match: " << (optimum == solver_bins ? "yes" : "no") << "\n";
    if (optimum != solver_bins) {
        std::cerr << "internal error: solver disagrees with the exact oracle\n";
        return kExitInternal;
    }
    return kExitOk;
}

int cmd_gen(uint32_t colors, uint64_t items, uint64_t capacity, uint64_t seed,
            const std::string& skew) {
    cbp_genspec spec{};
    spec.colors = colors;
    spec.items = items;
    spec.capacity = capacity;
    spec.seed = seed;
    if (skew == "uniform") {
        spec.skew = CBP_SKEW_UNIFORM;
    } else if (skew == "max-heavy") {
        spec.skew = CBP_SKEW_MAX_HEAVY;
    } else if (skew == "balanced") {
        spec.skew = CBP_SKEW_BALANCED;
    } else {
        std::cerr << "error: unknown skew '" << skew << "'\n";
        return kExitParse;
    }
    InstanceHandle inst;
    if (cbp_generate(&spec, &inst.ptr) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitParse;
    }
    char* text = nullptr;
    if (cbp_instance_to_text(inst.ptr, &text) != CBP_OK) {
        std::cerr << "error: " << cbp_last_error() << "\n";
        return kExitInternal;
    }
    std::cout << "# generated: colors=" << colors << " items=" << items
              << " capacity=" << capacity << " seed=" << seed << " skew=" << skew << "\n";
    std::cout << "# populated_colors: " << cbp_populated_colors(inst.ptr) << "\n";
    std::cout << text;
    cbp_string_free(text);
    return kExitOk;
}

// ---- bench ------------------------------------------------------------

struct BenchBranch {
    const char* tag;
    // Builds a deterministic instance of n items exercising one solver path.
    cbp_instance* (*build)(uint64_t n);
};

// One heavy color plus four light ones; the heavy share picks the solver
// branch. Fixed proportions keep the work proportional to n so the
// doubling ratios in the report are meaningful.
cbp_instance* build_skewed(uint64_t n, uint64_t capacity, uint64_t max_share_percent) {
    static const char* names[] = {"A", "B", "C", "D", "E"};
    uint64_t counts[5];
    counts[0] = n * max_share_percent / 100;
    uint64_t rest = n - counts[0];
    for (int i = 1; i < 5; ++i) {
        counts[i] = rest / 4;
    }
    counts[4] += rest % 4;
    cbp_instance* out = nullptr;
    if (cbp_instance_create(capacity, names, counts, 5, &out) != CBP_OK) {
        return nullptr;
    }
    return out;
}

const BenchBranch kBranches[] = {
    {"zero-single-bin", [](uint64_t n) { return build_skewed(n, 0, 20); }},
    {"zero-discrepancy", [](uint64_t n) { return build_skewed(n, 0, 70); }},
    {"unit-capacity-even", [](uint64_t n) { return build_skewed(n, 8, 20); }},
    {"unit-capacity-odd", [](uint64_t n) { return build_skewed(n, 7, 20); }},
    {"unit-even-combine", [](uint64_t n) { return build_skewed(n, 6, 60); }},
    {"unit-odd-reducible", [](uint64_t n) { return build_skewed(n, 7, 52); }},
    {"unit-odd-singletons", [](uint64_t n) { return build_skewed(n, 7, 90); }},
    {"unit-single-slot", [](uint64_t n) { return build_skewed(n, 1, 20); }},
};

struct BenchRow {
    const char* tag;
    uint64_t n;
    uint64_t capacity;
    uint64_t bins;
    double millis;  // fastest trial
};

int cmd_bench(const std::string& sizes_csv, uint32_t trials, uint64_t seed, bool no_validate) {
    (void)seed;  // instances are shaped deterministically from n alone
    std::vector<uint64_t> sizes;
    {
        std::stringstream ss(sizes_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) {
                continue;
            }
            uint64_t value = std::strtoull(item.c_str(), nullptr, 10);
            if (value == 0) {
                std::cerr << "error: bench sizes must be >= 1\n";
                return kExitParse;
            }
            sizes.push_back(value);
        }
    }
    if (trials == 0 || sizes.empty()) {
        std::cout << "bench: no trials requested\n";
        return kExitOk;
    }

    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    std::printf("%-22s %10s %4s %10s %10s %10s\n", "branch", "n", "L", "bins", "ms",
                "ns/item");
    for (const BenchBranch& branch : kBranches) {
        for (uint64_t n : sizes) {
            InstanceHandle inst;
            inst.ptr = branch.build(n);
            if (inst.ptr == nullptr) {
                std::cerr << "error: " << cbp_last_error() << "\n";
                return kExitInternal;
            }
            double best_ms = 0.0;
            uint64_t bins = 0;
            for (uint32_t t = 0; t < trials; ++t) {
                PackingHandle packing;
                auto t0 = clock::now();
                if (cbp_solve(inst.ptr, &packing.ptr) != CBP_OK) {
                    std::cerr << "error: " << cbp_last_error() << "\n";
                    return kExitInternal;
                }
                auto t1 = clock::now();
                double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
                if (t == 0 || ms < best_ms) {
                    best_ms = ms;
                }
                bins = cbp_packing_bin_count(packing.ptr);
                // Validation happens outside the timed region.
                if (!no_validate && t == 0 &&
                    cbp_validate(inst.ptr, packing.ptr, nullptr, 0, nullptr) != CBP_OK) {
                    std::cerr << "internal error: invalid packing in bench: " << cbp_last_error()
                              << "\n";
                    return kExitInternal;
                }
            }
            uint64_t total = cbp_instance_total_items(inst.ptr);
            rows.push_back({branch.tag, total, cbp_instance_capacity(inst.ptr), bins, best_ms});
            std::printf("%-22s %10" PRIu64 " %4" PRIu64 " %10" PRIu64 " %10.3f %10.2f\n",
                        branch.tag, total, cbp_instance_capacity(inst.ptr), bins, best_ms,
                        total > 0 ? best_ms * 1e6 / static_cast<double>(total) : 0.0);
        }
        // Doubling ratios and a least-squares ns/item slope per branch.
        if (sizes.size() >= 2) {
            std::printf("%-22s ratios:", branch.tag);
            const BenchRow* base = &rows[rows.size() - sizes.size()];
            double sum_nt = 0.0;
            double sum_nn = 0.0;
            for (size_t i = 0; i < sizes.size(); ++i) {
                sum_nt += static_cast<double>(base[i].n) * base[i].millis;
                sum_nn += static_cast<double>(base[i].n) * static_cast<double>(base[i].n);
                if (i > 0) {
                    double ratio = base[i - 1].millis > 0.0
                                       ? base[i].millis / base[i - 1].millis
                                       : 0.0;
                    std::printf(" %.2f", ratio);
                }
            }
            std::printf("  slope: %.2f ns/item\n", sum_nn > 0.0 ? sum_nt / sum_nn * 1e6 : 0.0);
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cbp — colored bin packing solver (library version " +
                 std::string(cbp_version()) + ")"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string packing_path;
    std::string format = "text";
    uint32_t max_items = 12;

    auto* solve = app.add_subcommand("solve", "pack an instance and print the packing");
    solve->add_option("file", instance_path, "instance file")->required();
    solve->add_option("--format", format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* verify = app.add_subcommand("verify", "check a packing against an instance");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("packing", packing_path, "packing file")->required();

    auto* predict = app.add_subcommand("predict", "closed-form optimal bin count");
    predict->add_option("file", instance_path, "instance file")->required();

    auto* oracle = app.add_subcommand("oracle", "exact optimum by exhaustive search");
    oracle->add_option("file", instance_path, "instance file")->required();
    oracle->add_option("--max-items", max_items, "refuse instances above this size");

    uint32_t gen_colors = 3;
    uint64_t gen_items = 10;
    uint64_t gen_capacity = 0;
    uint64_t gen_seed = 0;
    std::string gen_skew = "uniform";
    auto* gen = app.add_subcommand("gen", "emit a reproducible random instance");
    gen->add_option("--colors", gen_colors, "number of colors (k >= 1)");
    gen->add_option("--items", gen_items, "number of items");
    gen->add_option("--capacity", gen_capacity, "bin capacity (0 = zero-weight)");
    gen->add_option("--seed", gen_seed, "PRNG seed");
    gen->add_option("--skew", gen_skew, "uniform|max-heavy|balanced")
        ->check(CLI::IsMember({"uniform", "max-heavy", "balanced"}));

    std::string bench_sizes = "100000,200000,400000,800000";
    uint32_t bench_trials = 3;
    uint64_t bench_seed = 1;
    bool bench_no_validate = false;
    auto* bench = app.add_subcommand("bench", "time the solver across sizes and branches");
    bench->add_option("--sizes", bench_sizes, "comma-separated item counts");
    bench->add_option("--trials", bench_trials, "trials per point (fastest wins)");
    bench->add_option("--seed", bench_seed, "instance generation seed");
    bench->add_flag("--no-validate", bench_no_validate, "skip the untimed validation pass");

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed()) {
        return cmd_solve(instance_path, format);
    }
    if (verify->parsed()) {
        return cmd_verify(instance_path, packing_path);
    }
    if (predict->parsed()) {
        return cmd_predict(instance_path);
    }
    if (oracle->parsed()) {
        return cmd_oracle(instance_path, max_items);
    }
    if (gen->parsed()) {
        return cmd_gen(gen_colors, gen_items, gen_capacity, gen_seed, gen_skew);
    }
    if (bench->parsed()) {
        return cmd_bench(bench_sizes, bench_trials, bench_seed, bench_no_validate);
    }
    return kExitOk;
}
