#pragma once

#include <string>

#include "ellcorr/briot.hpp"
#include "ellcorr/fuchs.hpp"

namespace ellcorr {

enum class ReportFormat { JSON, CSV, TEXT };

struct SuiteConfig {
    double tol = 1e-8;
    int samples = 32;
    uint64_t seed = 42;
    int row = 0; // 0 runs all six rows
    RowParams params{};
    bool randomize_m6 = true;
    ReportFormat format = ReportFormat::JSON;
};

struct RowRecord {
    int row = 0;
    std::string family;
    int p = 0;
    double max_residual = 0;
    int sample_count = 0;
    bool pass = false;
    std::string note;
};

struct FuchsRecord {
    int row = 0;
    bool has_balance = false;
    int q = 0;
    Cx u0{};
    std::array<Cx, 4> indicial{};
    std::array<Cx, 3> indices{};
    double K = 0;
    bool pass = false;
    std::string note;
};

struct CorrespondenceRecord {
    int row = 0;
    int k = 0;
    std::string fitted;
    double max_residual = 0;
    bool pass = false;
    std::string note;
};

struct VerificationReport {
    std::vector<RowRecord> schwarzian_rows;
    std::vector<FuchsRecord> fuchs;
    std::vector<CorrespondenceRecord> correspondence;
    uint64_t seed = 0;
    double tol = 0;
    int samples = 0;
    double wall_time_ms = 0;

    bool all_pass() const;
};

/// Parallelism cap: ELLCORR_THREADS when set, hardware concurrency otherwise.
int thread_cap();

/// Nondegenerate Möbius map with entries drawn from the unit square.
Mobius random_mobius(SplitMix64& rng);

/// Runs the row, index, and correspondence certifications with deterministic
/// sampling; per-record failures are recorded, never thrown.
VerificationReport run_suite(const SuiteConfig& cfg);

std::string emit(const VerificationReport& r, ReportFormat format);

} // namespace ellcorr
