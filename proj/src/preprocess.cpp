#include "tisp/preprocess.hpp"

#include <algorithm>

namespace tisp {

namespace {

void require(Orientation actual, Orientation expected, const char* what) {
  if (actual != expected) {
    throw Error(ErrorCode::WrongOrientation,
                std::string(what) + " expects " + to_string(expected) + " orientation");
  }
}

}  // namespace

Sequence reverse_sequence(const Sequence& s) {
  require(s.orientation(), Orientation::Original, "reverse_sequence");
  std::vector<Event> events(s.events().rbegin(), s.events().rend());
  return Sequence(s.id(), std::move(events), Orientation::Reversed);
}

Dataset reverse_dataset(const Dataset& d) {
  std::vector<Sequence> out;
  out.reserve(d.n());
  for (const auto& s : d.sequences()) out.push_back(reverse_sequence(s));
  return Dataset(std::move(out));
}

Dataset filter_by_target(const Dataset& d, const TargetSpec& t) {
  require(d.orientation(), Orientation::Reversed, "filter_by_target");
  std::vector<Sequence> kept;
  std::copy_if(d.sequences().begin(), d.sequences().end(), std::back_inserter(kept),
               [&](const Sequence& s) { return s.contains(t.target); });
  if (kept.empty()) {
    throw Error(ErrorCode::EmptyResult, "no sequence contains the target itemset (" + t.target.str() + ")");
  }
  return Dataset(std::move(kept));
}

Sequence truncate_before_target(const Sequence& s, const TargetSpec& t) {
  require(s.orientation(), Orientation::Reversed, "truncate_before_target");
  const auto& ev = s.events();
  auto first = std::find_if(ev.begin(), ev.end(), [&](const Event& e) { return e.itemset == t.target; });
  if (first == ev.end()) {
    throw Error(ErrorCode::TargetAbsent, "sequence " + s.id() + " does not contain (" + t.target.str() + ")");
  }
  return Sequence(s.id(), std::vector<Event>(first, ev.end()), Orientation::Reversed);
}

Dataset prepare_working_dataset(const Dataset& original, const TargetSpec& t) {
  const Dataset kept = filter_by_target(reverse_dataset(original), t);
  std::vector<Sequence> out;
  out.reserve(kept.n());
  for (const auto& s : kept.sequences()) out.push_back(truncate_before_target(s, t));
  return Dataset(std::move(out));
}

std::vector<IntervalPattern> filter_patterns_by_target(const std::vector<IntervalPattern>& ps,
                                                       const TargetSpec& t) {
  std::vector<IntervalPattern> out;
  std::copy_if(ps.begin(), ps.end(), std::back_inserter(out),
               [&](const IntervalPattern& p) { return p.contains(t.target); });
  return out;
}

IntervalPattern rereverse_pattern(const IntervalPattern& p) {
  require(p.orientation(), Orientation::Reversed, "rereverse_pattern");
  std::vector<Itemset> elements(p.elements().rbegin(), p.elements().rend());
  std::vector<TimeRange> intervals(p.intervals().rbegin(), p.intervals().rend());
  return IntervalPattern(std::move(elements), std::move(intervals), Orientation::Original);
}

}  // namespace tisp
