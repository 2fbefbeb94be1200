#include "tisp/synth.hpp"

#include <cstdio>
#include <numeric>
#include <random>

namespace tisp::synth {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant here.
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }

 private:
  std::mt19937_64 engine_;
};

std::string item_name(std::uint64_t i) { return "s" + std::to_string(i); }

Dataset generate(const SynthParams& p, Rng& rng) {
  if (p.sequences == 0 || p.items == 0 || p.min_events == 0 || p.min_events > p.max_events ||
      p.max_time < 0 || static_cast<std::size_t>(p.max_time) + 1 < p.max_events) {
    throw Error(ErrorCode::InvalidValue, "invalid synthetic dataset parameters");
  }
  std::vector<Sequence> seqs;
  for (std::size_t s = 0; s < p.sequences; ++s) {
    const auto m = rng.between(p.min_events, p.max_events);
    std::vector<Timestamp> times(static_cast<std::size_t>(p.max_time) + 1);
    std::iota(times.begin(), times.end(), Timestamp{0});
    // Partial Fisher-Yates: the first m slots become a random sample.
    for (std::size_t i = 0; i < m; ++i) {
      const auto j = rng.between(i, times.size() - 1);
      std::swap(times[i], times[j]);
    }
    std::vector<std::pair<Itemset, Timestamp>> raw;
    for (std::size_t i = 0; i < m; ++i) {
      raw.emplace_back(Itemset::of(item_name(rng.between(1, p.items))), times[i]);
    }
    char id[16];
    std::snprintf(id, sizeof(id), "C%03zu", s + 1);
    seqs.push_back(validate_sequence(std::move(raw), id));
  }
  return Dataset(std::move(seqs));
}

}  // namespace

Dataset generate_dataset(const SynthParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return generate(params, rng);
}

FuzzCase generate_fuzz_case(std::uint64_t seed) {
  Rng rng(seed);
  SynthParams p;
  p.sequences = rng.between(2, 8);
  p.items = rng.between(3, 6);
  p.min_events = 2;
  p.max_events = 6;
  p.max_time = 30;
  static constexpr const char* kThresholds[] = {"0.2", "0.3", "0.5"};
  const auto threshold = MinSupport::parse(kThresholds[rng.between(0, 2)]);
  TargetSpec target{Itemset::of(item_name(rng.between(1, p.items)))};
  return FuzzCase{generate(p, rng), std::move(target), threshold};
}

}  // namespace tisp::synth
