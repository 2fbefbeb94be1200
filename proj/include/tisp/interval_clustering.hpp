#pragma once

// Recursive maximal-gap splitting of the gaps observed for one ordered
// itemset pair. A cluster is split at the largest difference between adjacent
// sorted gaps; children that are not frequent are deleted and frequent
// children are split again until every retained cluster is non-dividable.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tisp/model.hpp"

namespace tisp {

class GapCluster {
 public:
  // gaps must be non-empty and sorted.
  explicit GapCluster(std::vector<GapEntry> gaps);

  const std::vector<GapEntry>& gaps() const noexcept { return gaps_; }
  TimeRange range() const { return TimeRange(gaps_.front().gap, gaps_.back().gap); }
  std::size_t distinct_sequences() const;
  std::vector<Gap> values() const;

  friend bool operator==(const GapCluster&, const GapCluster&) = default;

 private:
  std::vector<GapEntry> gaps_;
};

// Gaps between every `a` event and every later-listed `b` event of a
// reversed dataset (time(a) - time(b), always positive).
GapList collect_gaps(const Dataset& d, const Itemset& a, const Itemset& b);

// nullopt means non-dividable: fewer than two gaps, or all adjacent
// differences equal. Ties on the maximal difference split at the leftmost.
std::optional<std::pair<GapCluster, GapCluster>> split_at_max_gap(const GapCluster& c);

// Final non-dividable clusters sorted by range.lo. Child support is the
// number of distinct contributing sequences over n.
std::vector<GapCluster> cluster(const GapList& gaps, std::size_t n, const MinSupport& min_supp);

// "(s7,s6): gaps=[2,4,5,5,5] clusters=[[5,5,5]]"
std::string format_cluster_debug(const GapList& gaps, std::span<const GapCluster> clusters);

}  // namespace tisp
