#pragma once

// Domain types shared by every stage of the mining pipeline. All types are
// immutable after construction and validate their invariants eagerly, so a
// value that exists is a valid value.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tisp/error.hpp"

namespace tisp {

using Timestamp = std::int64_t;
using Gap = std::int64_t;

// Opaque item token such as "s5". Ordered lexicographically.
class ItemId {
 public:
  explicit ItemId(std::string token);

  const std::string& str() const noexcept { return token_; }

  friend bool operator==(const ItemId&, const ItemId&) = default;
  friend auto operator<=>(const ItemId&, const ItemId&) = default;

 private:
  std::string token_;
};

// Non-empty set of items, stored in canonical (sorted, duplicate-free) form.
// Itemsets are matched by equality and treated as atomic symbols.
class Itemset {
 public:
  explicit Itemset(std::vector<ItemId> items);
  Itemset(std::initializer_list<std::string_view> tokens);

  static Itemset of(std::string_view token) { return Itemset{token}; }

  const std::vector<ItemId>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }

  // Items joined by a single space, e.g. "s1" or "a b".
  std::string str() const;

  friend bool operator==(const Itemset&, const Itemset&) = default;
  friend auto operator<=>(const Itemset&, const Itemset&) = default;

 private:
  std::vector<ItemId> items_;
};

std::ostream& operator<<(std::ostream& os, const Itemset& s);

struct Event {
  Itemset itemset;
  Timestamp time;

  friend bool operator==(const Event&, const Event&) = default;
};

enum class Orientation { Original, Reversed };

const char* to_string(Orientation o);

// Events of one entity. Original orientation lists strictly increasing
// timestamps, Reversed lists strictly decreasing ones.
class Sequence {
 public:
  Sequence(std::string id, std::vector<Event> events, Orientation orientation);

  const std::string& id() const noexcept { return id_; }
  const std::vector<Event>& events() const noexcept { return events_; }
  Orientation orientation() const noexcept { return orientation_; }
  std::size_t size() const noexcept { return events_.size(); }

  bool contains(const Itemset& s) const;

  friend bool operator==(const Sequence&, const Sequence&) = default;

 private:
  std::string id_;
  std::vector<Event> events_;
  Orientation orientation_;
};

// Builds an Original-orientation sequence from unordered (itemset, time)
// pairs. Rejects empty input, negative times and shared timestamps.
Sequence validate_sequence(std::vector<std::pair<Itemset, Timestamp>> raw, std::string id);

// "C001: (s5,8), (s4,15), (s6,20)". Multi-item itemsets render as "(a b,8)".
std::string render_sequence(const Sequence& s);
Sequence parse_sequence(std::string_view text, Orientation orientation = Orientation::Original);

class Dataset {
 public:
  explicit Dataset(std::vector<Sequence> sequences);

  const std::vector<Sequence>& sequences() const noexcept { return sequences_; }
  std::size_t n() const noexcept { return sequences_.size(); }
  Orientation orientation() const noexcept { return sequences_.front().orientation(); }

  friend bool operator==(const Dataset&, const Dataset&) = default;

 private:
  std::vector<Sequence> sequences_;
};

// Sequence-count support: count supporting sequences out of denominator.
struct Support {
  std::int64_t count = 0;
  std::int64_t denominator = 1;

  Support() = default;
  Support(std::int64_t count, std::int64_t denominator);

  double value() const noexcept { return static_cast<double>(count) / static_cast<double>(denominator); }

  friend bool operator==(const Support&, const Support&) = default;
};

// count/denominator rounded half-up to two decimals with trailing zeros
// dropped: 4/6 -> "0.67", 3/6 -> "0.5", 6/6 -> "1", 0/6 -> "0".
std::string render_support(const Support& s);

// Minimum support threshold held as an exact rational in (0, 1]. Parsing a
// decimal string keeps it exact, so 0.3 is 3/10 rather than a binary double.
class MinSupport {
 public:
  MinSupport(std::int64_t numerator, std::int64_t denominator);

  static MinSupport parse(std::string_view decimal);
  static MinSupport from_double(double v);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  // count/denominator >= threshold, compared by cross multiplication.
  bool admits(const Support& s) const noexcept;
  bool admits(std::int64_t count, std::int64_t n) const noexcept;

  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// Closed range [lo, hi] of gap values, 0 < lo <= hi.
struct TimeRange {
  Gap lo;
  Gap hi;

  TimeRange(Gap lo, Gap hi);

  bool contains(Gap g) const noexcept { return lo <= g && g <= hi; }

  friend bool operator==(const TimeRange&, const TimeRange&) = default;
  friend auto operator<=>(const TimeRange&, const TimeRange&) = default;
};

std::string render_range(const TimeRange& r);

// k itemsets, optionally annotated with the k-1 time ranges between
// consecutive elements. Plain sequences carry no intervals.
class IntervalPattern {
 public:
  IntervalPattern(std::vector<Itemset> elements, std::vector<TimeRange> intervals,
                  Orientation orientation = Orientation::Reversed);

  static IntervalPattern plain(std::vector<Itemset> elements,
                               Orientation orientation = Orientation::Reversed) {
    return IntervalPattern(std::move(elements), {}, orientation);
  }

  const std::vector<Itemset>& elements() const noexcept { return elements_; }
  const std::vector<TimeRange>& intervals() const noexcept { return intervals_; }
  Orientation orientation() const noexcept { return orientation_; }
  std::size_t length() const noexcept { return elements_.size(); }
  bool has_intervals() const noexcept { return !intervals_.empty(); }

  bool contains(const Itemset& s) const;

  // Lexicographic on elements, then intervals, then orientation.
  friend bool operator==(const IntervalPattern&, const IntervalPattern&) = default;
  friend std::strong_ordering operator<=>(const IntervalPattern& a, const IntervalPattern& b);

 private:
  std::vector<Itemset> elements_;
  std::vector<TimeRange> intervals_;
  Orientation orientation_;
};

// "<(s2), [1,5], (s1), [15,15], (s7)>"
std::string render_pattern(const IntervalPattern& p);
IntervalPattern parse_pattern(std::string_view text, Orientation orientation = Orientation::Original);

struct PatternSupport {
  IntervalPattern pattern;
  Support support;

  friend bool operator==(const PatternSupport&, const PatternSupport&) = default;
};

// One observed gap and the sequence it came from.
struct GapEntry {
  Gap gap;
  std::string sequence_id;

  friend bool operator==(const GapEntry&, const GapEntry&) = default;
  friend auto operator<=>(const GapEntry&, const GapEntry&) = default;
};

// All gaps observed for an ordered itemset pair, sorted ascending.
struct GapList {
  Itemset first;
  Itemset second;
  std::vector<GapEntry> gaps;

  GapList(Itemset first, Itemset second, std::vector<GapEntry> gaps);

  std::vector<Gap> values() const;
};

std::string join_gaps(std::span<const GapEntry> gaps, std::string_view sep = ",");

}  // namespace tisp
