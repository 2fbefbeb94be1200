#include "tisp/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace tisp {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySequence: return "EmptySequence";
    case ErrorCode::DuplicateTimestamp: return "DuplicateTimestamp";
    case ErrorCode::NegativeTimestamp: return "NegativeTimestamp";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::EmptyResult: return "EmptyResult";
    case ErrorCode::TargetAbsent: return "TargetAbsent";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

const char* to_string(Orientation o) {
  return o == Orientation::Original ? "original" : "reversed";
}

namespace {

bool is_token_char(char c) {
  return c != '(' && c != ')' && c != ',' && c != ':' && c != '[' && c != ']' && c != '<' && c != '>' &&
         c != ' ' && c != '\t' && c != '\n' && c != '\r';
}

}  // namespace

// ---------------------------------------------------------------------------
// ItemId / Itemset

ItemId::ItemId(std::string token) : token_(std::move(token)) {
  if (token_.empty()) throw Error(ErrorCode::InvalidValue, "item identifier must be non-empty");
  if (!std::all_of(token_.begin(), token_.end(), is_token_char)) {
    throw Error(ErrorCode::InvalidValue, "item identifier '" + token_ + "' contains a reserved character");
  }
}

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error(ErrorCode::InvalidValue, "itemset must be non-empty");
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

Itemset::Itemset(std::initializer_list<std::string_view> tokens)
    : Itemset([&] {
        std::vector<ItemId> ids;
        ids.reserve(tokens.size());
        for (auto t : tokens) ids.emplace_back(std::string(t));
        return ids;
      }()) {}

std::string Itemset::str() const {
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ' ';
    out += items_[i].str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Itemset& s) { return os << s.str(); }

// ---------------------------------------------------------------------------
// Sequence / Dataset

Sequence::Sequence(std::string id, std::vector<Event> events, Orientation orientation)
    : id_(std::move(id)), events_(std::move(events)), orientation_(orientation) {
  if (id_.empty()) throw Error(ErrorCode::InvalidValue, "sequence id must be non-empty");
  if (events_.empty()) throw Error(ErrorCode::EmptySequence, "sequence " + id_ + " has no events");
  for (std::size_t i = 0; i < events_.size(); ++i) {
    if (events_[i].time < 0) {
      throw Error(ErrorCode::NegativeTimestamp, "sequence " + id_ + " has a negative timestamp");
    }
    if (i == 0) continue;
    const Timestamp prev = events_[i - 1].time;
    const Timestamp cur = events_[i].time;
    if (prev == cur) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  "sequence " + id_ + " has two events at time " + std::to_string(cur));
    }
    const bool ordered = orientation_ == Orientation::Original ? prev < cur : prev > cur;
    if (!ordered) {
      throw Error(ErrorCode::ValidationError,
                  "sequence " + id_ + " is not ordered for " + to_string(orientation_) + " orientation");
    }
  }
}

bool Sequence::contains(const Itemset& s) const {
  return std::any_of(events_.begin(), events_.end(), [&](const Event& e) { return e.itemset == s; });
}

Sequence validate_sequence(std::vector<std::pair<Itemset, Timestamp>> raw, std::string id) {
  if (raw.empty()) throw Error(ErrorCode::EmptySequence, "sequence " + id + " has no events");
  std::vector<Event> events;
  events.reserve(raw.size());
  for (auto& [itemset, time] : raw) {
    if (time < 0) throw Error(ErrorCode::NegativeTimestamp, "sequence " + id + " has a negative timestamp");
    events.push_back(Event{std::move(itemset), time});
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) { return a.time < b.time; });
  return Sequence(std::move(id), std::move(events), Orientation::Original);
}

Dataset::Dataset(std::vector<Sequence> sequences) : sequences_(std::move(sequences)) {
  if (sequences_.empty()) throw Error(ErrorCode::EmptyResult, "dataset has no sequences");
  std::set<std::string> ids;
  const Orientation o = sequences_.front().orientation();
  for (const auto& s : sequences_) {
    if (!ids.insert(s.id()).second) {
      throw Error(ErrorCode::ValidationError, "duplicate sequence id " + s.id());
    }
    if (s.orientation() != o) {
      throw Error(ErrorCode::ValidationError, "dataset mixes sequence orientations");
    }
  }
}

// ---------------------------------------------------------------------------
// Support

Support::Support(std::int64_t count, std::int64_t denominator) : count(count), denominator(denominator) {
  if (denominator <= 0 || count < 0 || count > denominator) {
    throw Error(ErrorCode::InvalidValue, "support must satisfy 0 <= count <= denominator, denominator > 0");
  }
}

std::string render_support(const Support& s) {
  // round(100 * count / denominator) with halves rounded up, in integers.
  const std::int64_t hundredths = (200 * s.count + s.denominator) / (2 * s.denominator);
  std::string out = std::to_string(hundredths / 100);
  std::int64_t frac = hundredths % 100;
  if (frac != 0) {
    out += '.';
    out += static_cast<char>('0' + frac / 10);
    if (frac % 10 != 0) out += static_cast<char>('0' + frac % 10);
  }
  return out;
}

MinSupport::MinSupport(std::int64_t numerator, std::int64_t denominator) : num_(numerator), den_(denominator) {
  if (den_ <= 0 || num_ <= 0 || num_ > den_) {
    throw Error(ErrorCode::InvalidValue, "minimum support must lie in (0, 1]");
  }
  const auto g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

MinSupport MinSupport::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::InvalidValue, "invalid minimum support '" + std::string(text) + "'"); };
  if (text.empty()) throw fail();
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool seen_dot = false;
  bool seen_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw fail();
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
      if (num > 100'000'000'000LL || (seen_dot && den > 100'000'000'000LL)) throw fail();
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
    } else {
      throw fail();
    }
  }
  if (!seen_digit) throw fail();
  return MinSupport(num, den);
}

MinSupport MinSupport::from_double(double v) {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidValue, "minimum support must be finite");
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  if (ec != std::errc{}) throw Error(ErrorCode::InvalidValue, "minimum support out of range");
  return parse(std::string_view(buf, static_cast<std::size_t>(end - buf)));
}

bool MinSupport::admits(std::int64_t count, std::int64_t n) const noexcept {
  return count * den_ >= num_ * n;
}

bool MinSupport::admits(const Support& s) const noexcept { return admits(s.count, s.denominator); }

std::string MinSupport::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

// ---------------------------------------------------------------------------
// TimeRange / IntervalPattern

TimeRange::TimeRange(Gap lo, Gap hi) : lo(lo), hi(hi) {
  if (lo <= 0 || lo > hi) {
    throw Error(ErrorCode::InvalidValue,
                "time range [" + std::to_string(lo) + "," + std::to_string(hi) + "] must satisfy 0 < lo <= hi");
  }
}

std::string render_range(const TimeRange& r) {
  return "[" + std::to_string(r.lo) + "," + std::to_string(r.hi) + "]";
}

IntervalPattern::IntervalPattern(std::vector<Itemset> elements, std::vector<TimeRange> intervals,
                                 Orientation orientation)
    : elements_(std::move(elements)), intervals_(std::move(intervals)), orientation_(orientation) {
  if (elements_.empty()) throw Error(ErrorCode::InvalidValue, "pattern must have at least one element");
  if (!intervals_.empty() && intervals_.size() + 1 != elements_.size()) {
    throw Error(ErrorCode::InvalidValue, "pattern with k elements needs k-1 intervals");
  }
}

bool IntervalPattern::contains(const Itemset& s) const {
  return std::find(elements_.begin(), elements_.end(), s) != elements_.end();
}

std::strong_ordering operator<=>(const IntervalPattern& a, const IntervalPattern& b) {
  if (auto c = a.elements_ <=> b.elements_; c != 0) return c;
  if (auto c = a.intervals_ <=> b.intervals_; c != 0) return c;
  return a.orientation_ <=> b.orientation_;
}

std::string render_pattern(const IntervalPattern& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) {
      out += ", ";
      if (p.has_intervals()) out += render_range(p.intervals()[i - 1]) + ", ";
    }
    out += "(" + p.elements()[i].str() + ")";
  }
  out += ">";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing of the canonical renderings

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  std::string token() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_token_char(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a token");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::int64_t integer() {
    skip_ws();
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  // Item tokens up to the closing delimiter (',' or ')').
  Itemset itemset() {
    std::vector<ItemId> ids;
    while (!peek(',') && !peek(')')) {
      if (at_end()) fail("unterminated itemset");
      ids.emplace_back(token());
    }
    if (ids.empty()) fail("empty itemset");
    return Itemset(std::move(ids));
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render_sequence(const Sequence& s) {
  std::string out = s.id() + ":";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += i ? ", (" : " (";
    out += s.events()[i].itemset.str() + "," + std::to_string(s.events()[i].time) + ")";
  }
  return out;
}

Sequence parse_sequence(std::string_view text, Orientation orientation) {
  Cursor cur(text);
  std::string id = cur.token();
  cur.expect(':');
  std::vector<Event> events;
  do {
    cur.expect('(');
    Itemset set = cur.itemset();
    cur.expect(',');
    const Timestamp t = cur.integer();
    cur.expect(')');
    events.push_back(Event{std::move(set), t});
  } while (cur.accept(','));
  if (!cur.at_end()) cur.fail("trailing characters");
  return Sequence(std::move(id), std::move(events), orientation);
}

IntervalPattern parse_pattern(std::string_view text, Orientation orientation) {
  Cursor cur(text);
  cur.expect('<');
  std::vector<Itemset> elements;
  std::vector<TimeRange> intervals;
  bool expect_range = false;
  for (;;) {
    if (cur.peek('[')) {
      if (!expect_range) cur.fail("unexpected time range");
      cur.expect('[');
      const Gap lo = cur.integer();
      cur.expect(',');
      const Gap hi = cur.integer();
      cur.expect(']');
      intervals.emplace_back(lo, hi);
      cur.expect(',');
    }
    cur.expect('(');
    elements.push_back(cur.itemset());
    cur.expect(')');
    if (cur.accept('>')) break;
    cur.expect(',');
    expect_range = true;
  }
  if (!cur.at_end()) cur.fail("trailing characters");
  return IntervalPattern(std::move(elements), std::move(intervals), orientation);
}

// ---------------------------------------------------------------------------
// GapList

GapList::GapList(Itemset first, Itemset second, std::vector<GapEntry> gaps)
    : first(std::move(first)), second(std::move(second)), gaps(std::move(gaps)) {
  std::sort(this->gaps.begin(), this->gaps.end());
  for (const auto& g : this->gaps) {
    if (g.gap <= 0) throw Error(ErrorCode::InvalidValue, "gap values must be positive");
  }
}

std::vector<Gap> GapList::values() const {
  std::vector<Gap> out;
  out.reserve(gaps.size());
  for (const auto& g : gaps) out.push_back(g.gap);
  return out;
}

std::string join_gaps(std::span<const GapEntry> gaps, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(gaps[i].gap);
  }
  return out;
}

}  // namespace tisp
