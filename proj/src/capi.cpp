// extern "C" layer: opaque handles over the core types, exceptions mapped
// onto status codes, messages parked in a thread-local slot.

#include "cbp.h"

#include <cstring>
#include <exception>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "core/colors.hpp"
#include "core/error.hpp"
#include "core/generator.hpp"
#include "core/io.hpp"
#include "core/oracle.hpp"
#include "core/packing.hpp"
#include "core/predictor.hpp"
#include "core/unit_solver.hpp"
#include "core/zero_solver.hpp"

struct cbp_instance {
    cbp::Instance value;
};

struct cbp_packing {
    cbp::Packing value;
};

namespace {

thread_local std::string g_last_error;

cbp_status to_status(cbp::Status status) {
    switch (status) {
        case cbp::Status::Ok: return CBP_OK;
        case cbp::Status::ParseError: return CBP_ERR_PARSE;
        case cbp::Status::InvalidArgument: return CBP_ERR_INVALID_ARGUMENT;
        case cbp::Status::WrongMode: return CBP_ERR_WRONG_MODE;
        case cbp::Status::Infeasible: return CBP_ERR_INFEASIBLE;
        case cbp::Status::LimitExceeded: return CBP_ERR_LIMIT;
        case cbp::Status::ValidationFailed: return CBP_ERR_VALIDATION;
        case cbp::Status::EmptyInstance: return CBP_ERR_EMPTY;
        case cbp::Status::IoError: return CBP_ERR_IO;
    }
    return CBP_ERR_INVALID_ARGUMENT;
}

cbp_status fail(cbp_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs a callable, funnelling exceptions into status codes.
template <typename Fn>
cbp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const cbp::Error& e) {
        return fail(to_status(e.status()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(CBP_ERR_NOMEM, "out of memory");
    } catch (const std::exception& e) {
        return fail(CBP_ERR_INVALID_ARGUMENT, e.what());
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* cbp_status_name(cbp_status status) {
    switch (status) {
        case CBP_OK: return "ok";
        case CBP_ERR_PARSE: return "parse-error";
        case CBP_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case CBP_ERR_WRONG_MODE: return "wrong-mode";
        case CBP_ERR_INFEASIBLE: return "infeasible";
        case CBP_ERR_LIMIT: return "limit-exceeded";
        case CBP_ERR_VALIDATION: return "validation-failed";
        case CBP_ERR_EMPTY: return "empty-instance";
        case CBP_ERR_IO: return "io-error";
        case CBP_ERR_NOMEM: return "out-of-memory";
    }
    return "unknown";
}

const char* cbp_last_error(void) {
    return g_last_error.c_str();
}

const char* cbp_version(void) {
    return "1.0.0";
}

cbp_status cbp_instance_parse(const char* text, size_t len, cbp_instance** out) {
    return guarded([&]() {
        *out = new cbp_instance{cbp::parse_instance(std::string_view(text, len))};
        return CBP_OK;
    });
}

cbp_status cbp_instance_parse_file(const char* path, cbp_instance** out) {
    return guarded([&]() {
        std::ifstream in(path, std::ios::binary);
        if (!in) {
            return fail(CBP_ERR_IO, std::string("cannot read '") + path + "'");
        }
        std::ostringstream buffer;
        buffer << in.rdbuf();
        *out = new cbp_instance{cbp::parse_instance(buffer.str())};
        return CBP_OK;
    });
}

cbp_status cbp_instance_create(uint64_t capacity, const char* const* names,
                               const uint64_t* counts, size_t num_colors, cbp_instance** out) {
    return guarded([&]() {
        std::vector<std::pair<std::string, std::uint64_t>> colors;
        colors.reserve(num_colors);
        for (size_t i = 0; i < num_colors; ++i) {
            colors.emplace_back(names[i], counts[i]);
        }
        *out = new cbp_instance{cbp::Instance::create(capacity, std::move(colors))};
        return CBP_OK;
    });
}

void cbp_instance_free(cbp_instance* instance) {
    delete instance;
}

uint64_t cbp_instance_capacity(const cbp_instance* instance) {
    return instance->value.capacity();
}

size_t cbp_instance_num_colors(const cbp_instance* instance) {
    return instance->value.num_colors();
}

uint64_t cbp_instance_total_items(const cbp_instance* instance) {
    return instance->value.total_items();
}

const char* cbp_instance_color_name(const cbp_instance* instance, uint32_t color) {
    if (color >= instance->value.num_colors()) {
        return nullptr;
    }
    return instance->value.table().name(color).c_str();
}

uint64_t cbp_instance_color_count(const cbp_instance* instance, uint32_t color) {
    if (color >= instance->value.num_colors()) {
        return 0;
    }
    return instance->value.count(color);
}

cbp_status cbp_instance_to_text(const cbp_instance* instance, char** out) {
    return guarded([&]() {
        *out = copy_string(cbp::serialize_instance(instance->value));
        return CBP_OK;
    });
}

cbp_status cbp_instance_stats(const cbp_instance* instance, cbp_stats* out) {
    return guarded([&]() {
        auto stats = cbp::compute_stats(instance->value);
        if (!stats) {
            return fail(CBP_ERR_EMPTY, "instance has no items");
        }
        out->max_color = stats->max_color;
        out->max_count = stats->max_count;
        out->other_count = stats->other_count;
        out->discrepancy = stats->discrepancy;
        return CBP_OK;
    });
}

cbp_status cbp_solve(const cbp_instance* instance, cbp_packing** out) {
    return guarded([&]() {
        *out = new cbp_packing{instance->value.zero_weight() ? cbp::pack_zero(instance->value)
                                                             : cbp::pack_unit(instance->value)};
        return CBP_OK;
    });
}

cbp_status cbp_pack_zero(const cbp_instance* instance, cbp_packing** out) {
    return guarded([&]() {
        *out = new cbp_packing{cbp::pack_zero(instance->value)};
        return CBP_OK;
    });
}

cbp_status cbp_pack_unit(const cbp_instance* instance, cbp_packing** out) {
    return guarded([&]() {
        *out = new cbp_packing{cbp::pack_unit(instance->value)};
        return CBP_OK;
    });
}

cbp_status cbp_zero_sequence(const cbp_instance* instance, uint32_t* colors_out, size_t cap,
                             size_t* len_out) {
    return guarded([&]() {
        auto seq = cbp::zero_sequence(instance->value.counts(), instance->value.table());
        *len_out = seq.size();
        for (size_t i = 0; i < seq.size() && i < cap; ++i) {
            colors_out[i] = seq[i];
        }
        return CBP_OK;
    });
}

void cbp_packing_free(cbp_packing* packing) {
    delete packing;
}

size_t cbp_packing_bin_count(const cbp_packing* packing) {
    return packing->value.bin_count();
}

size_t cbp_packing_bin_size(const cbp_packing* packing, size_t bin) {
    if (bin >= packing->value.bins.size()) {
        return 0;
    }
    return packing->value.bins[bin].size();
}

uint32_t cbp_packing_item(const cbp_packing* packing, size_t bin, size_t pos) {
    if (bin >= packing->value.bins.size() || pos >= packing->value.bins[bin].size()) {
        return 0xffffffffu;
    }
    return packing->value.bins[bin][pos];
}

cbp_status cbp_validate(const cbp_instance* instance, const cbp_packing* packing,
                        cbp_violation* buf, size_t buf_len, size_t* out_count) {
    return guarded([&]() {
        auto report = cbp::validate_packing(instance->value, packing->value);
        if (out_count != nullptr) {
            *out_count = report.violations.size();
        }
        for (size_t i = 0; i < report.violations.size() && i < buf_len; ++i) {
            const cbp::Violation& v = report.violations[i];
            buf[i].kind = static_cast<cbp_violation_kind>(v.kind);
            buf[i].bin = v.bin;
            buf[i].position = v.position;
            buf[i].color = v.color;
            buf[i].expected = v.expected;
            buf[i].found = v.found;
        }
        if (!report.valid()) {
            return fail(CBP_ERR_VALIDATION,
                        report.violations.front().describe(instance->value.table()));
        }
        return CBP_OK;
    });
}

cbp_status cbp_predict(const cbp_instance* instance, cbp_breakdown* out) {
    return guarded([&]() {
        cbp::CountBreakdown b = cbp::predicted_bins(instance->value);
        out->zero_mode = b.mode == cbp::Mode::Zero ? 1 : 0;
        out->case_tag = static_cast<cbp_case_tag>(b.case_tag);
        out->discrepancy = b.discrepancy;
        out->full_bins = b.full_bins;
        out->leftover_others = b.leftover_others;
        out->pair_capacity = b.pair_capacity;
        out->singleton_bins = b.singleton_bins;
        out->combined_bins = b.combined_bins;
        out->leftover_tops = b.leftover_tops;
        out->leftover_singletons = b.leftover_singletons;
        out->total = b.total;
        return CBP_OK;
    });
}

const char* cbp_case_tag_name(cbp_case_tag tag) {
    return cbp::case_tag_name(static_cast<cbp::CaseTag>(tag));
}

cbp_status cbp_oracle(const cbp_instance* instance, uint32_t item_limit, uint64_t* out_bins) {
    return guarded([&]() {
        *out_bins = cbp::optimal_bins(instance->value,
                                      item_limit == 0 ? cbp::kOracleDefaultLimit : item_limit);
        return CBP_OK;
    });
}

cbp_status cbp_packing_serialize(const cbp_packing* packing, const cbp_instance* instance,
                                 cbp_packing_format format, char** out) {
    return guarded([&]() {
        *out = copy_string(cbp::serialize_packing(packing->value, instance->value,
                                                  format == CBP_FORMAT_TEXT
                                                      ? cbp::PackingFormat::Text
                                                      : cbp::PackingFormat::Structured));
        return CBP_OK;
    });
}

cbp_status cbp_packing_parse(const cbp_instance* instance, const char* text, size_t len,
                             cbp_packing** out) {
    return guarded([&]() {
        *out = new cbp_packing{cbp::parse_packing(std::string_view(text, len), instance->value)};
        return CBP_OK;
    });
}

void cbp_string_free(char* str) {
    delete[] str;
}

cbp_status cbp_generate(const cbp_genspec* spec, cbp_instance** out) {
    return guarded([&]() {
        cbp::GenSpec gs;
        gs.colors = spec->colors;
        gs.items = spec->items;
        gs.capacity = spec->capacity;
        gs.seed = spec->seed;
        switch (spec->skew) {
            case CBP_SKEW_UNIFORM: gs.skew = cbp::Skew::Uniform; break;
            case CBP_SKEW_MAX_HEAVY: gs.skew = cbp::Skew::MaxHeavy; break;
            case CBP_SKEW_BALANCED: gs.skew = cbp::Skew::Balanced; break;
        }
        *out = new cbp_instance{cbp::generate(gs)};
        return CBP_OK;
    });
}

uint32_t cbp_populated_colors(const cbp_instance* instance) {
    return cbp::populated_colors(instance->value);
}

}  // extern "C"
