#pragma once

// Brute-force reference miner for small instances. It shares only the gap
// clustering procedure with the production miner (clustering defines which
// time ranges exist); preprocessing, gap collection, support counting and
// candidate enumeration are written independently and without pruning.

#include <cstddef>
#include <vector>

#include "tisp/model.hpp"
#include "tisp/preprocess.hpp"

namespace tisp::oracle {

inline constexpr std::size_t kMaxSequences = 12;
inline constexpr std::size_t kMaxEvents = 10;

struct OracleConfig {
  TargetSpec target;
  MinSupport min_supp;
  std::size_t max_pattern_length = 5;
};

// Throws InstanceTooLarge outside the size guards.
void check_guards(const Dataset& d);

// Enumerates every increasing index tuple of every sequence.
Support naive_support(const Dataset& d, const IntervalPattern& p);

std::vector<PatternSupport> exhaustive_mine(const Dataset& original, const OracleConfig& cfg);

}  // namespace tisp::oracle
