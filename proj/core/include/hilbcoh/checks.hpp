#pragma once

#include "hilbcoh/lattice.hpp"
#include "hilbcoh/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbcoh {

struct LatticeConfig {
    std::vector<std::string> labels;
    std::vector<std::vector<long long>> gram;
    int curve_index = 0;
};

struct CheckConfig {
    LatticeConfig lattice;
    int n_min = 2;
    int n_max = 6;
    std::vector<std::string> checks; // empty = all registered checks
    std::uint64_t seed = 1;

    // builds the ring and validates the distinguished curve
    RingPtr make_validated_ring() const;
};

// Throws std::invalid_argument with a message on malformed input.
CheckConfig parse_config(const std::string& json_text);
std::string config_to_json(const CheckConfig& cfg);

struct CheckResult {
    std::string name;
    int n_min = 0, n_max = 0; // the range actually exercised
    std::uint64_t seed = 0;
    std::string status;  // "pass" | "fail" | "error"
    std::string witness; // failing location with both sides, or error text
    double wall_ms = 0;  // reported in the text format only
};

struct CheckReport {
    std::vector<CheckResult> results;
    bool all_pass() const;
    int exit_code() const; // 0 all pass, 1 any fail/error
};

struct CheckInfo {
    std::string name;
    std::string description;
    bool n_independent = false;
    int min_n = 1;
    int max_n = 1 << 20; // documented feasibility bound
};

const std::vector<CheckInfo>& list_checks();

CheckReport run_checks(const CheckConfig& cfg);

// deterministic, timing-free serialization (byte-identical across runs)
std::string report_to_json(const CheckReport& report, const CheckConfig& cfg);
// human-readable table including wall times
std::string report_to_text(const CheckReport& report);
std::string checks_to_json();
std::string checks_to_text();

// splitmix64: tiny deterministic generator for seeded samples
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform-ish in [lo, hi], deterministic across platforms
    long range(long lo, long hi);

  private:
    std::uint64_t state_;
};

// Seeded exact isometries of the Mukai pairing, built from integer-vector
// reflections (each reflection has determinant -1).
class IsometrySampler {
  public:
    IsometrySampler(RingPtr ring, std::uint64_t seed);
    SurfaceEndo reflection();
    SurfaceEndo product(int reflections);
    SurfaceEndo next(); // product of 1..3 reflections
    H2Vector next_h2(int n);

  private:
    RingPtr ring_;
    SplitMix64 rng_;
};

// reflection in a (-2)-divisor: identity on 1 and p, det -1
SurfaceEndo divisor_reflection(const RingPtr& ring, int divisor_index);

} // namespace hilbcoh
