#include "tisp/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace tisp::io {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Collects (id, time, item) triples, grouping by first appearance of id.
class DatasetBuilder {
 public:
  void add(const std::string& id, Timestamp t, ItemId item) {
    auto [it, inserted] = index_.try_emplace(id, rows_.size());
    if (inserted) rows_.push_back({id, {}});
    rows_[it->second].second[t].push_back(std::move(item));
  }
  void touch(const std::string& id) {
    if (index_.try_emplace(id, rows_.size()).second) rows_.push_back({id, {}});
  }

  Dataset build() && {
    if (rows_.empty()) throw Error(ErrorCode::ValidationError, "input contains no sequences");
    std::vector<Sequence> seqs;
    for (auto& [id, events] : rows_) {
      std::vector<std::pair<Itemset, Timestamp>> raw;
      for (auto& [t, items] : events) raw.emplace_back(Itemset(std::move(items)), t);
      seqs.push_back(validate_sequence(std::move(raw), id));
    }
    return Dataset(std::move(seqs));
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<std::pair<std::string, std::map<Timestamp, std::vector<ItemId>>>> rows_;
};

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "csv") return InputFormat::Csv;
  if (name == "jsonl") return InputFormat::Jsonl;
  throw Error(ErrorCode::InvalidValue, "unknown input format '" + std::string(name) + "'");
}

InputFormat infer_input_format(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? InputFormat::Csv : InputFormat::Jsonl;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "table") return ReportFormat::Table;
  throw Error(ErrorCode::InvalidValue, "unknown report format '" + std::string(name) + "'");
}

Dataset read_csv(std::istream& in) {
  DatasetBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view row = trim(line);
    if (row.empty()) continue;
    std::string_view fields[3];
    std::size_t columns[3];
    std::size_t start = 0;
    for (int f = 0; f < 3; ++f) {
      const std::size_t comma = row.find(',', start);
      if (f < 2 && comma == std::string_view::npos) parse_fail(lineno, row.size() + 1, "expected 3 fields");
      if (f == 2 && comma != std::string_view::npos) parse_fail(lineno, comma + 1, "expected 3 fields");
      const std::size_t end = f < 2 ? comma : row.size();
      fields[f] = trim(row.substr(start, end - start));
      columns[f] = start + 1;
      start = end + 1;
    }
    if (lineno == 1 && fields[0] == "sequence_id" && fields[1] == "timestamp" && fields[2] == "item") continue;
    if (fields[0].empty()) parse_fail(lineno, columns[0], "empty sequence id");
    Timestamp t = 0;
    auto [ptr, ec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), t);
    if (ec != std::errc{} || ptr != fields[1].data() + fields[1].size() || fields[1].empty()) {
      parse_fail(lineno, columns[1], "timestamp '" + std::string(fields[1]) + "' is not an integer");
    }
    try {
      builder.add(std::string(fields[0]), t, ItemId(std::string(fields[2])));
    } catch (const Error& e) {
      parse_fail(lineno, columns[2], e.what());
    }
  }
  return std::move(builder).build();
}

Dataset read_jsonl(std::istream& in) {
  DatasetBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      parse_fail(lineno, e.byte, "malformed JSON");
    }
    try {
      if (!obj.is_object()) parse_fail(lineno, 1, "expected an object");
      const std::string id = obj.at("id").get<std::string>();
      if (id.empty()) parse_fail(lineno, 1, "empty sequence id");
      const auto& events = obj.at("events");
      if (!events.is_array()) parse_fail(lineno, 1, "'events' must be an array");
      builder.touch(id);
      for (const auto& ev : events) {
        if (!ev.at("t").is_number_integer()) parse_fail(lineno, 1, "event time must be an integer");
        const auto t = ev.at("t").get<Timestamp>();
        const auto& items = ev.at("items");
        if (!items.is_array() || items.empty()) parse_fail(lineno, 1, "event items must be a non-empty array");
        for (const auto& item : items) builder.add(id, t, ItemId(item.get<std::string>()));
      }
    } catch (const nlohmann::json::exception& e) {
      parse_fail(lineno, 1, e.what());
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) throw;
      parse_fail(lineno, 1, e.what());
    }
  }
  return std::move(builder).build();
}

Dataset load_dataset(const std::filesystem::path& path, InputFormat fmt) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  return fmt == InputFormat::Csv ? read_csv(in) : read_jsonl(in);
}

void write_csv(std::ostream& out, const Dataset& d) {
  out << "sequence_id,timestamp,item\n";
  for (const auto& s : d.sequences()) {
    for (const auto& e : s.events()) {
      for (const auto& item : e.itemset.items()) out << s.id() << ',' << e.time << ',' << item.str() << '\n';
    }
  }
}

void write_jsonl(std::ostream& out, const Dataset& d) {
  for (const auto& s : d.sequences()) {
    ordered_json obj;
    obj["id"] = s.id();
    obj["events"] = ordered_json::array();
    for (const auto& e : s.events()) {
      ordered_json ev;
      ev["t"] = e.time;
      ev["items"] = ordered_json::array();
      for (const auto& item : e.itemset.items()) ev["items"].push_back(item.str());
      obj["events"].push_back(std::move(ev));
    }
    out << obj.dump() << '\n';
  }
}

void save_dataset(const std::filesystem::path& path, const Dataset& d, InputFormat fmt) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  fmt == InputFormat::Csv ? write_csv(out, d) : write_jsonl(out, d);
  if (!out) throw Error(ErrorCode::IoError, "error writing " + path.string());
}

std::string render_report(const std::vector<PatternSupport>& patterns, ReportFormat fmt) {
  if (fmt == ReportFormat::Table) {
    std::string out;
    for (const auto& [p, s] : patterns) {
      out += render_pattern(p) + "\t" + render_support(s) + "\t" + std::to_string(s.count) + "/" +
             std::to_string(s.denominator) + "\n";
    }
    return out;
  }
  ordered_json arr = ordered_json::array();
  for (const auto& [p, s] : patterns) {
    ordered_json obj;
    obj["elements"] = ordered_json::array();
    for (const auto& e : p.elements()) {
      ordered_json items = ordered_json::array();
      for (const auto& item : e.items()) items.push_back(item.str());
      obj["elements"].push_back(std::move(items));
    }
    obj["intervals"] = ordered_json::array();
    for (const auto& r : p.intervals()) obj["intervals"].push_back({{"lo", r.lo}, {"hi", r.hi}});
    obj["support"] = render_support(s);
    obj["count"] = s.count;
    obj["denominator"] = s.denominator;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "error writing " + path.string());
}

std::string plain_rows(const std::vector<PatternSupport>& rows) {
  std::string out;
  for (const auto& [p, s] : rows) {
    for (const auto& e : p.elements()) out += e.str() + "\t";
    out += render_support(s) + "\n";
  }
  return out;
}

std::string interval_rows(const std::vector<PatternSupport>& rows) {
  std::string out;
  for (const auto& [p, s] : rows) out += render_pattern(p) + "\t" + render_support(s) + "\n";
  return out;
}

}  // namespace

void dump_intermediate(const MiningTrace& trace, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + dir.string() + ": " + ec.message());

  write_file(dir / "cs1.tsv", plain_rows(trace.plain1.candidates));
  write_file(dir / "fs1.tsv", plain_rows(trace.plain1.frequent));
  write_file(dir / "cs2.tsv", plain_rows(trace.plain2.candidates));
  write_file(dir / "fs2.tsv", plain_rows(trace.plain2.frequent));

  std::string gaps;
  std::string clusters;
  std::string debug;
  for (const auto& pc : trace.pairs) {
    const std::string pair = pc.gaps.first.str() + "\t" + pc.gaps.second.str() + "\t";
    gaps += pair + join_gaps(pc.gaps.gaps) + "\n";
    for (const auto& c : pc.clusters) clusters += pair + join_gaps(c.gaps()) + "\n";
    debug += format_cluster_debug(pc.gaps, pc.clusters) + "\n";
  }
  write_file(dir / "gaps.tsv", gaps);
  write_file(dir / "clusters.tsv", clusters);
  write_file(dir / "clusters.txt", debug);

  for (const auto& level : trace.interval_levels) {
    const std::string k = std::to_string(level.k);
    if (level.k >= 3) write_file(dir / ("ctis" + k + ".tsv"), interval_rows(level.candidates));
    write_file(dir / ("ftis" + k + ".tsv"), interval_rows(level.frequent));
  }
}

}  // namespace tisp::io
