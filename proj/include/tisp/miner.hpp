#pragma once

// Level-wise mining of target-oriented time-interval sequential patterns.
//
// The working dataset is reversed so the target leads every sequence. Plain
// frequent 1- and 2-sequences are found first; each frequent 2-sequence is
// annotated with the time ranges produced by gap clustering; longer patterns
// come from joining frequent (k-1)-patterns whose suffix and prefix overlap.
// Finally patterns without the target are dropped and the rest are
// re-reversed into original time order.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tisp/interval_clustering.hpp"
#include "tisp/model.hpp"
#include "tisp/preprocess.hpp"

namespace tisp {

struct MiningConfig {
  TargetSpec target;
  MinSupport min_supp;
  // Longest pattern to mine; unbounded when empty. Must be >= 2 when set.
  std::optional<std::size_t> max_length;
  // Worker threads for support counting. Output is independent of this.
  unsigned threads = 1;
};

struct LevelResult {
  std::size_t k = 0;
  std::vector<PatternSupport> candidates;
  std::vector<PatternSupport> frequent;
};

struct PairClusters {
  GapList gaps;
  std::vector<GapCluster> clusters;
};

// Everything computed along the way, kept for inspection and dumping.
struct MiningTrace {
  Dataset working;
  LevelResult plain1;                            // CS1 / FS1
  LevelResult plain2;                            // CS2 / FS2
  std::vector<PairClusters> pairs;               // one per FS2 member
  std::vector<LevelResult> interval_levels;      // k = 2 (FTIS2), 3, 4, ...
  std::vector<PatternSupport> patterns;          // final, original orientation
};

Support support_plain(const Dataset& d, std::span<const Itemset> elems);
Support support_interval(const Dataset& d, const IntervalPattern& p);

std::vector<IntervalPattern> gen_cs1(const Dataset& d);
std::vector<IntervalPattern> gen_cs2(std::span<const IntervalPattern> fs1);

std::vector<PatternSupport> filter_frequent(std::span<const PatternSupport> cands, const MinSupport& min_supp);

// Scores every pattern against d, plain or interval as appropriate. Runs on
// up to `threads` workers; results keep the input order.
std::vector<PatternSupport> score(const Dataset& d, std::span<const IntervalPattern> patterns,
                                  unsigned threads = 1);

std::vector<PatternSupport> extend_to_ftis2(std::span<const PatternSupport> fs2, const Dataset& d,
                                            const MinSupport& min_supp,
                                            std::vector<PairClusters>* pairs_out = nullptr);

// Suffix/prefix overlap join of frequent (k-1)-patterns, deduplicated and
// sorted.
std::vector<IntervalPattern> join_ctis(std::span<const IntervalPattern> prev);

MiningTrace mine_with_trace(const Dataset& original, const MiningConfig& cfg);
std::vector<PatternSupport> mine(const Dataset& original, const MiningConfig& cfg);

}  // namespace tisp
