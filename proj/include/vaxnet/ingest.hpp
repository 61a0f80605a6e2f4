#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vaxnet/graph.hpp"

namespace vaxnet {

// One active contact between two people during a 20-second window.
struct ContactRecord {
  std::int64_t timestamp = 0;
  std::int64_t id_a = 0;
  std::int64_t id_b = 0;
  std::string source;  // file the record came from
};

enum class ContactFormat {
  ThreeColumn,  // timestamp <TAB> id_a <TAB> id_b
  TwoColumn,    // id_a <TAB> id_b (one file per day)
};

struct ParseResult {
  std::vector<ContactRecord> records;
  std::vector<std::string> warnings;  // malformed or self-contact lines
};

// Lines starting with '#' and blank lines are ignored. Malformed lines become
// warnings. A line that has the field count of the other format raises
// FormatError with its line number. An unreadable file raises IoError and a
// file without valid records raises Error.
ParseResult parse_contacts(const std::filesystem::path& path,
                           ContactFormat format = ContactFormat::ThreeColumn);
ParseResult parse_contacts(std::istream& in, const std::string& source,
                           ContactFormat format = ContactFormat::ThreeColumn);

struct DailyGraph {
  std::string day;  // "day-<index>" or the source file name
  Graph graph;      // labels hold the external person ids
  std::unordered_map<std::int64_t, NodeId> index_of;
  // Number of contact records behind each edge, aligned with graph.edges().
  std::vector<std::uint32_t> contact_counts;
};

struct DailyGraphSet {
  std::vector<DailyGraph> days;
};

// Buckets records by floor(timestamp / day_length). Within a day, people are
// indexed by ascending external id and repeated contacts collapse into one
// edge.
DailyGraphSet build_daily_graphs(std::span<const ContactRecord> records,
                                 std::int64_t day_length = 86400);

// One graph per source file, in the order the files first appear.
DailyGraphSet build_graphs_per_file(std::span<const ContactRecord> records);

}  // namespace vaxnet
