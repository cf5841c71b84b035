#pragma once

#include "ckspectra/graph.hpp"
#include "ckspectra/topology.hpp"

#include <string>
#include <vector>

namespace ckspectra {

struct SuiteOptions {
    std::size_t exhaustive_limit = kDefaultExhaustiveLimit;
    std::uint64_t seed = kDefaultSeed;
    std::size_t samples = 2000;
    std::size_t limit = kDefaultEnumerationLimit;
};

struct CheckOutcome {
    std::string name;
    bool passed = true;
    /// Set when the check does not apply (e.g. it needs Condition (K)).
    bool skipped = false;
    std::string detail;
};

/// Cross-checks between independently computed quantities on one graph.
/// Checks needing Condition (K) are skipped, not failed, when it is absent.
/// Throws SizeLimitExceeded.
std::vector<CheckOutcome> run_property_suite(const Graph& g, const SuiteOptions& options = {});

/// True iff no outcome failed.
bool all_passed(const std::vector<CheckOutcome>& outcomes);

} // namespace ckspectra
