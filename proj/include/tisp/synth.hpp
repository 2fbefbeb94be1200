#pragma once

// Seeded synthetic datasets. Uses only the raw mt19937_64 stream (whose
// output is fixed by the standard) so a seed yields the same data everywhere.

#include <cstdint>

#include "tisp/model.hpp"
#include "tisp/preprocess.hpp"

namespace tisp::synth {

struct SynthParams {
  std::size_t sequences = 4;
  std::size_t items = 4;  // alphabet s1..sN
  std::size_t min_events = 2;
  std::size_t max_events = 6;
  Timestamp max_time = 30;  // timestamps drawn without repetition from [0, max_time]
};

Dataset generate_dataset(const SynthParams& params, std::uint64_t seed);

struct FuzzCase {
  Dataset dataset;
  TargetSpec target;
  MinSupport min_supp;
};

// 2-8 sequences, 3-6 itemsets, 2-6 events each, times in [0,30],
// min_supp from {0.2, 0.3, 0.5}, target drawn from the alphabet.
FuzzCase generate_fuzz_case(std::uint64_t seed);

}  // namespace tisp::synth
