#pragma once

// Dataset ingestion (CSV, JSONL), dataset serialization, mining reports and
// the intermediate-table dump.
//
// CSV rows are `sequence_id,timestamp,item`, one item per row; rows sharing a
// sequence id and timestamp form one event. An optional header row with those
// three names is accepted. JSONL holds one sequence per line:
//   {"id": "C001", "events": [{"t": 8, "items": ["s5"]}, ...]}
// Sequences keep the order in which their id first appears.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tisp/miner.hpp"
#include "tisp/model.hpp"

namespace tisp::io {

enum class InputFormat { Csv, Jsonl };
enum class ReportFormat { Json, Table };

InputFormat parse_input_format(std::string_view name);
// By extension: ".csv" is CSV, anything else JSONL.
InputFormat infer_input_format(const std::filesystem::path& path);
ReportFormat parse_report_format(std::string_view name);

Dataset read_csv(std::istream& in);
Dataset read_jsonl(std::istream& in);
Dataset load_dataset(const std::filesystem::path& path, InputFormat fmt);

void write_csv(std::ostream& out, const Dataset& d);
void write_jsonl(std::ostream& out, const Dataset& d);
void save_dataset(const std::filesystem::path& path, const Dataset& d, InputFormat fmt);

std::string render_report(const std::vector<PatternSupport>& patterns, ReportFormat fmt);

// Writes cs1/fs1/cs2/fs2/gaps/clusters/ftis2 and ctisK/ftisK tables (tab
// separated, supports rendered to two decimals) plus clusters.txt.
void dump_intermediate(const MiningTrace& trace, const std::filesystem::path& dir);

}  // namespace tisp::io
