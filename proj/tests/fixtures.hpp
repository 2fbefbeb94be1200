#pragma once

// The ten-customer example dataset and helpers shared by the test binaries.

#include <string>
#include <utility>
#include <vector>

#include "tisp/model.hpp"
#include "tisp/preprocess.hpp"

namespace tisp::testing {

inline Sequence seq(const std::string& id, std::vector<std::pair<const char*, Timestamp>> events,
                    Orientation o = Orientation::Original) {
  std::vector<Event> ev;
  for (auto [item, t] : events) ev.push_back(Event{Itemset::of(item), t});
  return Sequence(id, std::move(ev), o);
}

inline Dataset example_dataset() {
  return Dataset({
      seq("C001", {{"s5", 8}, {"s4", 15}, {"s6", 20}}),
      seq("C002", {{"s1", 2}, {"s3", 7}, {"s2", 11}, {"s6", 18}}),
      seq("C003", {{"s2", 3}, {"s1", 4}, {"s3", 7}, {"s6", 17}, {"s7", 19}}),
      seq("C004", {{"s1", 2}, {"s2", 8}, {"s6", 10}, {"s7", 15}}),
      seq("C005", {{"s5", 4}, {"s6", 16}, {"s1", 20}, {"s3", 24}}),
      seq("C006", {{"s7", 7}, {"s1", 13}, {"s5", 18}, {"s2", 25}, {"s6", 28}}),
      seq("C007", {{"s5", 4}, {"s1", 8}, {"s3", 12}, {"s6", 16}, {"s7", 20}}),
      seq("C008", {{"s1", 3}, {"s5", 6}, {"s2", 9}, {"s4", 18}, {"s6", 21}}),
      seq("C009", {{"s2", 5}, {"s1", 10}, {"s3", 15}, {"s6", 20}, {"s7", 25}}),
      seq("C010", {{"s6", 3}, {"s7", 8}, {"s5", 12}, {"s2", 17}}),
  });
}

inline TargetSpec s7_target() { return TargetSpec{Itemset::of("s7")}; }

// Reversed, filtered and truncated working dataset for target s7.
inline Dataset example_working() {
  return Dataset({
      seq("C003", {{"s7", 19}, {"s6", 17}, {"s3", 7}, {"s1", 4}, {"s2", 3}}, Orientation::Reversed),
      seq("C004", {{"s7", 15}, {"s6", 10}, {"s2", 8}, {"s1", 2}}, Orientation::Reversed),
      seq("C006", {{"s7", 7}}, Orientation::Reversed),
      seq("C007", {{"s7", 20}, {"s6", 16}, {"s3", 12}, {"s1", 8}, {"s5", 4}}, Orientation::Reversed),
      seq("C009", {{"s7", 25}, {"s6", 20}, {"s3", 15}, {"s1", 10}, {"s2", 5}}, Orientation::Reversed),
      seq("C010", {{"s7", 8}, {"s6", 3}}, Orientation::Reversed),
  });
}

inline IntervalPattern rpat(std::string_view text) { return parse_pattern(text, Orientation::Reversed); }
inline IntervalPattern opat(std::string_view text) { return parse_pattern(text, Orientation::Original); }

}  // namespace tisp::testing
