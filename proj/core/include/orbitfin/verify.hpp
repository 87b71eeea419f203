#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "orbitfin/definable.hpp"

namespace orbitfin::verify {

enum class Status { Pass, Fail, Skip };
std::string_view to_string(Status s);

struct Check {
    std::string id;
    Status status = Status::Pass;
    std::string details;
    double seconds = 0;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool passed() const;
    /// Wall times are included only on request so that output stays byte-stable.
    nlohmann::json to_json(bool with_timings = false) const;
    std::string summary() const;
};

struct Options {
    std::uint64_t seed = 0;
    Limits limits;
};

std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all".
Report run_suite(const std::string& name, const Options& options = {});

/// (1/2n) * sum over odd divisors d of n of phi(d) 2^(n/d).
std::uint64_t local_order_growth_formula(int n);

/// Random structure for property checks: up to `max_size` elements, up to three
/// relations of arity at most three.
FinStructure random_structure(std::mt19937_64& rng, int max_size = 8);

/// Random definable structure over a random base, with atoms for A' and a subset A.
struct SamplingCase {
    DefStructure structure;
    AtomSample big;
    AtomSample small;
};
SamplingCase random_sampling_case(std::mt19937_64& rng);

} // namespace orbitfin::verify
