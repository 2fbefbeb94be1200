#pragma once

// Target-orientation transforms applied before and after mining: reversal,
// target filtering and truncation on the input, target filtering and
// re-reversal on the output patterns.

#include <vector>

#include "tisp/model.hpp"

namespace tisp {

// The concerned itemset every reported pattern must end with.
struct TargetSpec {
  Itemset target;
};

Sequence reverse_sequence(const Sequence& s);
Dataset reverse_dataset(const Dataset& d);

// Keeps sequences containing the target, in their original relative order.
// Throws EmptyResult when nothing is left.
Dataset filter_by_target(const Dataset& d, const TargetSpec& t);

// Drops the events listed before the first target occurrence of a reversed
// sequence, i.e. everything that happened after the last target in time.
Sequence truncate_before_target(const Sequence& s, const TargetSpec& t);

// Reverse, filter, truncate. The result is the working dataset whose size is
// the support denominator for every later stage.
Dataset prepare_working_dataset(const Dataset& original, const TargetSpec& t);

std::vector<IntervalPattern> filter_patterns_by_target(const std::vector<IntervalPattern>& ps,
                                                       const TargetSpec& t);

IntervalPattern rereverse_pattern(const IntervalPattern& p);

}  // namespace tisp
