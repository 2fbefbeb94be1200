#include "tisp/miner.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace tisp {

namespace {

void require_reversed(const Dataset& d, const char* what) {
  if (d.orientation() != Orientation::Reversed) {
    throw Error(ErrorCode::WrongOrientation, std::string(what) + " expects the reversed working dataset");
  }
}

Support make_support(std::size_t count, const Dataset& d) {
  return Support(static_cast<std::int64_t>(count), static_cast<std::int64_t>(d.n()));
}

// Greedy leftmost matching is exact for order-only containment.
bool contains_plain(const Sequence& s, std::span<const Itemset> elems) {
  std::size_t j = 0;
  for (const auto& e : s.events()) {
    if (j < elems.size() && e.itemset == elems[j]) ++j;
  }
  return j == elems.size();
}

// Positions reachable by a partial embedding, advanced one element at a time.
// Greedy matching would be wrong here because the gap constraint depends on
// which event matched the previous element.
bool contains_interval(const Sequence& s, const IntervalPattern& p) {
  const auto& ev = s.events();
  const auto& elems = p.elements();
  std::vector<char> reach(ev.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    reach[i] = ev[i].itemset == elems[0];
    any = any || reach[i];
  }
  for (std::size_t k = 1; k < elems.size() && any; ++k) {
    const TimeRange& range = p.intervals()[k - 1];
    std::vector<char> next(ev.size(), 0);
    any = false;
    for (std::size_t j = 0; j < ev.size(); ++j) {
      if (ev[j].itemset != elems[k]) continue;
      for (std::size_t i = 0; i < j; ++i) {
        if (reach[i] && range.contains(ev[i].time - ev[j].time)) {
          next[j] = 1;
          any = true;
          break;
        }
      }
    }
    reach = std::move(next);
  }
  return any;
}

}  // namespace

Support support_plain(const Dataset& d, std::span<const Itemset> elems) {
  require_reversed(d, "support_plain");
  const auto count = std::count_if(d.sequences().begin(), d.sequences().end(),
                                   [&](const Sequence& s) { return contains_plain(s, elems); });
  return make_support(static_cast<std::size_t>(count), d);
}

Support support_interval(const Dataset& d, const IntervalPattern& p) {
  require_reversed(d, "support_interval");
  if (!p.has_intervals()) return support_plain(d, p.elements());
  const auto count = std::count_if(d.sequences().begin(), d.sequences().end(),
                                   [&](const Sequence& s) { return contains_interval(s, p); });
  return make_support(static_cast<std::size_t>(count), d);
}

std::vector<IntervalPattern> gen_cs1(const Dataset& d) {
  std::set<Itemset> seen;
  for (const auto& s : d.sequences()) {
    for (const auto& e : s.events()) seen.insert(e.itemset);
  }
  std::vector<IntervalPattern> out;
  out.reserve(seen.size());
  for (const auto& is : seen) out.push_back(IntervalPattern::plain({is}));
  return out;
}

std::vector<IntervalPattern> gen_cs2(std::span<const IntervalPattern> fs1) {
  std::vector<IntervalPattern> out;
  for (const auto& a : fs1) {
    for (const auto& b : fs1) {
      if (a.elements().front() == b.elements().front()) continue;
      out.push_back(IntervalPattern::plain({a.elements().front(), b.elements().front()}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PatternSupport> filter_frequent(std::span<const PatternSupport> cands, const MinSupport& min_supp) {
  std::vector<PatternSupport> out;
  std::copy_if(cands.begin(), cands.end(), std::back_inserter(out),
               [&](const PatternSupport& c) { return min_supp.admits(c.support); });
  return out;
}

std::vector<PatternSupport> score(const Dataset& d, std::span<const IntervalPattern> patterns, unsigned threads) {
  std::vector<std::optional<Support>> supports(patterns.size());
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) supports[i] = support_interval(d, patterns[i]);
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(patterns.size(), 1));
  if (workers == 1) {
    work(0, patterns.size());
  } else {
    // Each worker owns a disjoint slice of `supports`.
    const std::size_t chunk = (patterns.size() + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(w * chunk, patterns.size());
      const std::size_t end = std::min(begin + chunk, patterns.size());
      pool.emplace_back(work, begin, end);
    }
  }

  std::vector<PatternSupport> out;
  out.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) out.push_back({patterns[i], *supports[i]});
  return out;
}

std::vector<PatternSupport> extend_to_ftis2(std::span<const PatternSupport> fs2, const Dataset& d,
                                            const MinSupport& min_supp, std::vector<PairClusters>* pairs_out) {
  require_reversed(d, "extend_to_ftis2");
  std::vector<PatternSupport> out;
  for (const auto& member : fs2) {
    const auto& elems = member.pattern.elements();
    GapList gaps = collect_gaps(d, elems[0], elems[1]);
    std::vector<GapCluster> clusters = cluster(gaps, d.n(), min_supp);
    for (const auto& c : clusters) {
      IntervalPattern p({elems[0], elems[1]}, {c.range()}, Orientation::Reversed);
      Support s = support_interval(d, p);
      out.push_back({std::move(p), s});
    }
    if (pairs_out) pairs_out->push_back({std::move(gaps), std::move(clusters)});
  }
  std::sort(out.begin(), out.end(),
            [](const PatternSupport& a, const PatternSupport& b) { return a.pattern < b.pattern; });
  return out;
}

std::vector<IntervalPattern> join_ctis(std::span<const IntervalPattern> prev) {
  std::set<IntervalPattern> out;
  for (const auto& a : prev) {
    const auto& ae = a.elements();
    const auto& ai = a.intervals();
    for (const auto& b : prev) {
      const auto& be = b.elements();
      const auto& bi = b.intervals();
      if (be.size() != ae.size() || bi.size() != ai.size()) continue;
      // a[1..] overlaps b[..k-2] on elements and on the intervals between them.
      if (!std::equal(ae.begin() + 1, ae.end(), be.begin())) continue;
      if (!std::equal(ai.begin() + 1, ai.end(), bi.begin())) continue;
      std::vector<Itemset> elems = ae;
      elems.push_back(be.back());
      std::vector<TimeRange> ranges = ai;
      ranges.push_back(bi.back());
      out.emplace(std::move(elems), std::move(ranges), Orientation::Reversed);
    }
  }
  return {out.begin(), out.end()};
}

MiningTrace mine_with_trace(const Dataset& original, const MiningConfig& cfg) {
  if (cfg.max_length && *cfg.max_length < 2) {
    throw Error(ErrorCode::InvalidValue, "maximum pattern length must be at least 2");
  }
  MiningTrace trace{prepare_working_dataset(original, cfg.target), {}, {}, {}, {}, {}};
  const Dataset& d = trace.working;

  auto patterns_of = [](const std::vector<PatternSupport>& v) {
    std::vector<IntervalPattern> out;
    out.reserve(v.size());
    for (const auto& ps : v) out.push_back(ps.pattern);
    return out;
  };

  trace.plain1.k = 1;
  trace.plain1.candidates = score(d, gen_cs1(d), cfg.threads);
  trace.plain1.frequent = filter_frequent(trace.plain1.candidates, cfg.min_supp);

  trace.plain2.k = 2;
  trace.plain2.candidates = score(d, gen_cs2(patterns_of(trace.plain1.frequent)), cfg.threads);
  trace.plain2.frequent = filter_frequent(trace.plain2.candidates, cfg.min_supp);

  LevelResult level2;
  level2.k = 2;
  level2.candidates = extend_to_ftis2(trace.plain2.frequent, d, cfg.min_supp, &trace.pairs);
  level2.frequent = filter_frequent(level2.candidates, cfg.min_supp);
  trace.interval_levels.push_back(std::move(level2));

  for (std::size_t k = 3; !cfg.max_length || k <= *cfg.max_length; ++k) {
    const auto& prev = trace.interval_levels.back().frequent;
    auto candidates = join_ctis(patterns_of(prev));
    if (candidates.empty()) break;
    LevelResult level;
    level.k = k;
    level.candidates = score(d, candidates, cfg.threads);
    level.frequent = filter_frequent(level.candidates, cfg.min_supp);
    const bool done = level.frequent.empty();
    trace.interval_levels.push_back(std::move(level));
    if (done) break;
  }

  for (const auto& level : trace.interval_levels) {
    for (const auto& ps : level.frequent) {
      if (ps.pattern.contains(cfg.target.target)) {
        trace.patterns.push_back({rereverse_pattern(ps.pattern), ps.support});
      }
    }
  }
  std::sort(trace.patterns.begin(), trace.patterns.end(),
            [](const PatternSupport& a, const PatternSupport& b) { return a.pattern < b.pattern; });
  return trace;
}

std::vector<PatternSupport> mine(const Dataset& original, const MiningConfig& cfg) {
  return mine_with_trace(original, cfg).patterns;
}

}  // namespace tisp
