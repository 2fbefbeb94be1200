#include "tisp/interval_clustering.hpp"

#include <algorithm>
#include <set>

namespace tisp {

GapCluster::GapCluster(std::vector<GapEntry> gaps) : gaps_(std::move(gaps)) {
  if (gaps_.empty()) throw Error(ErrorCode::InvalidValue, "gap cluster must be non-empty");
  if (!std::is_sorted(gaps_.begin(), gaps_.end(),
                      [](const GapEntry& a, const GapEntry& b) { return a.gap < b.gap; })) {
    throw Error(ErrorCode::InvalidValue, "gap cluster must be sorted");
  }
}

std::size_t GapCluster::distinct_sequences() const {
  std::set<std::string_view> ids;
  for (const auto& g : gaps_) ids.insert(g.sequence_id);
  return ids.size();
}

std::vector<Gap> GapCluster::values() const {
  std::vector<Gap> out;
  out.reserve(gaps_.size());
  for (const auto& g : gaps_) out.push_back(g.gap);
  return out;
}

GapList collect_gaps(const Dataset& d, const Itemset& a, const Itemset& b) {
  if (d.orientation() != Orientation::Reversed) {
    throw Error(ErrorCode::WrongOrientation, "collect_gaps expects a reversed dataset");
  }
  std::vector<GapEntry> gaps;
  for (const auto& s : d.sequences()) {
    const auto& ev = s.events();
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].itemset != a) continue;
      for (std::size_t j = i + 1; j < ev.size(); ++j) {
        if (ev[j].itemset == b) gaps.push_back(GapEntry{ev[i].time - ev[j].time, s.id()});
      }
    }
  }
  return GapList(a, b, std::move(gaps));
}

std::optional<std::pair<GapCluster, GapCluster>> split_at_max_gap(const GapCluster& c) {
  const auto& g = c.gaps();
  if (g.size() < 2) return std::nullopt;

  const Gap first_diff = g[1].gap - g[0].gap;
  const bool all_equal = std::adjacent_find(g.begin(), g.end(), [&](const GapEntry& x, const GapEntry& y) {
                           return y.gap - x.gap != first_diff;
                         }) == g.end();
  if (all_equal) return std::nullopt;

  // Strict '>' keeps the leftmost of several equal maxima.
  std::size_t best = 0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    if (g[i + 1].gap - g[i].gap > g[best + 1].gap - g[best].gap) best = i;
  }

  std::vector<GapEntry> left(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(best) + 1);
  std::vector<GapEntry> right(g.begin() + static_cast<std::ptrdiff_t>(best) + 1, g.end());
  return std::make_pair(GapCluster(std::move(left)), GapCluster(std::move(right)));
}

namespace {

void refine(const GapCluster& c, std::size_t n, const MinSupport& min_supp, std::vector<GapCluster>& out) {
  auto split = split_at_max_gap(c);
  if (!split) {
    out.push_back(c);
    return;
  }
  auto frequent = [&](const GapCluster& child) {
    return min_supp.admits(static_cast<std::int64_t>(child.distinct_sequences()), static_cast<std::int64_t>(n));
  };
  const bool keep_left = frequent(split->first);
  const bool keep_right = frequent(split->second);
  if (!keep_left && !keep_right) {
    out.push_back(c);
    return;
  }
  if (keep_left) refine(split->first, n, min_supp, out);
  if (keep_right) refine(split->second, n, min_supp, out);
}

}  // namespace

std::vector<GapCluster> cluster(const GapList& gaps, std::size_t n, const MinSupport& min_supp) {
  std::vector<GapCluster> out;
  if (gaps.gaps.empty() || n == 0) return out;
  refine(GapCluster(gaps.gaps), n, min_supp, out);
  std::sort(out.begin(), out.end(),
            [](const GapCluster& a, const GapCluster& b) { return a.range() < b.range(); });
  return out;
}

std::string format_cluster_debug(const GapList& gaps, std::span<const GapCluster> clusters) {
  std::string out = "(" + gaps.first.str() + "," + gaps.second.str() + "): gaps=[" + join_gaps(gaps.gaps) +
                    "] clusters=[";
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (i) out += ",";
    out += "[" + join_gaps(clusters[i].gaps()) + "]";
  }
  out += "]";
  return out;
}

}  // namespace tisp
