#include "tisp/oracle.hpp"

#include <algorithm>
#include <map>

#include "tisp/interval_clustering.hpp"

namespace tisp::oracle {

void check_guards(const Dataset& d) {
  if (d.n() > kMaxSequences) {
    throw Error(ErrorCode::InstanceTooLarge,
                "oracle handles at most " + std::to_string(kMaxSequences) + " sequences");
  }
  for (const auto& s : d.sequences()) {
    if (s.size() > kMaxEvents) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "oracle handles at most " + std::to_string(kMaxEvents) + " events per sequence");
    }
  }
}

namespace {

// Calls visit(indices) for every strictly increasing k-tuple over [0, m).
template <typename Visit>
bool any_tuple(std::size_t m, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  auto rec = [&](auto&& self, std::size_t pos, std::size_t from) -> bool {
    if (pos == k) return visit(idx);
    for (std::size_t i = from; i < m; ++i) {
      idx[pos] = i;
      if (self(self, pos + 1, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0, 0);
}

bool embeds(const Sequence& s, const IntervalPattern& p) {
  const auto& ev = s.events();
  return any_tuple(ev.size(), p.length(), [&](const std::vector<std::size_t>& idx) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (ev[idx[j]].itemset != p.elements()[j]) return false;
    }
    for (std::size_t j = 0; j < p.intervals().size(); ++j) {
      const Gap g = ev[idx[j]].time - ev[idx[j + 1]].time;
      if (!p.intervals()[j].contains(g)) return false;
    }
    return true;
  });
}

// Steps 1-3 by hand: reversed copies of the target-bearing sequences, cut at
// the first target in reversed order.
Dataset working_dataset(const Dataset& original, const Itemset& target) {
  std::vector<Sequence> out;
  for (const auto& s : original.sequences()) {
    std::vector<Event> rev(s.events().rbegin(), s.events().rend());
    for (std::size_t i = 0; i < rev.size(); ++i) {
      if (rev[i].itemset == target) {
        out.emplace_back(s.id(), std::vector<Event>(rev.begin() + static_cast<std::ptrdiff_t>(i), rev.end()),
                         Orientation::Reversed);
        break;
      }
    }
  }
  if (out.empty()) throw Error(ErrorCode::EmptyResult, "no sequence contains the target itemset");
  return Dataset(std::move(out));
}

}  // namespace

Support naive_support(const Dataset& d, const IntervalPattern& p) {
  check_guards(d);
  std::int64_t count = 0;
  for (const auto& s : d.sequences()) count += embeds(s, p) ? 1 : 0;
  return Support(count, static_cast<std::int64_t>(d.n()));
}

std::vector<PatternSupport> exhaustive_mine(const Dataset& original, const OracleConfig& cfg) {
  if (cfg.max_pattern_length < 2) throw Error(ErrorCode::InvalidValue, "oracle pattern length cap must be >= 2");
  check_guards(original);
  const Dataset d = working_dataset(original, cfg.target.target);

  std::vector<Itemset> alphabet;
  for (const auto& s : d.sequences()) {
    for (const auto& e : s.events()) alphabet.push_back(e.itemset);
  }
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

  // Frequent time ranges for every ordered pair of distinct itemsets whose
  // plain 2-sequence is frequent.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<TimeRange>> ranges;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    for (std::size_t b = 0; b < alphabet.size(); ++b) {
      if (a == b) continue;
      const auto plain = IntervalPattern::plain({alphabet[a], alphabet[b]});
      if (!cfg.min_supp.admits(naive_support(d, plain))) continue;
      std::vector<GapEntry> gaps;
      for (const auto& s : d.sequences()) {
        const auto& ev = s.events();
        any_tuple(ev.size(), 2, [&](const std::vector<std::size_t>& idx) {
          if (ev[idx[0]].itemset == alphabet[a] && ev[idx[1]].itemset == alphabet[b]) {
            gaps.push_back({ev[idx[0]].time - ev[idx[1]].time, s.id()});
          }
          return false;
        });
      }
      for (const auto& c : cluster(GapList(alphabet[a], alphabet[b], std::move(gaps)), d.n(), cfg.min_supp)) {
        ranges[{a, b}].push_back(c.range());
      }
    }
  }

  std::vector<PatternSupport> out;
  auto consider = [&](const std::vector<std::size_t>& word, const std::vector<TimeRange>& chosen) {
    std::vector<Itemset> elems;
    for (auto w : word) elems.push_back(alphabet[w]);
    IntervalPattern p(std::move(elems), chosen, Orientation::Reversed);
    if (!p.contains(cfg.target.target)) return;
    Support s = naive_support(d, p);
    if (cfg.min_supp.admits(s)) out.push_back({rereverse_pattern(p), s});
  };
  // Every word over the alphabet, every choice of range per adjacent pair.
  auto expand = [&](auto&& self, const std::vector<std::size_t>& word, std::size_t pos,
                    std::vector<TimeRange>& chosen) -> void {
    if (pos + 1 == word.size()) {
      consider(word, chosen);
      return;
    }
    auto it = ranges.find({word[pos], word[pos + 1]});
    if (it == ranges.end()) return;
    for (const auto& r : it->second) {
      chosen.push_back(r);
      self(self, word, pos + 1, chosen);
      chosen.pop_back();
    }
  };
  for (std::size_t len = 2; len <= cfg.max_pattern_length; ++len) {
    std::vector<std::size_t> word(len, 0);
    for (;;) {
      std::vector<TimeRange> chosen;
      expand(expand, word, 0, chosen);
      std::size_t i = 0;
      while (i < len && ++word[i] == alphabet.size()) word[i++] = 0;
      if (i == len) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PatternSupport& a, const PatternSupport& b) { return a.pattern < b.pattern; });
  return out;
}

}  // namespace tisp::oracle
