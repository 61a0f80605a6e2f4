#include "vaxnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <string_view>

namespace vaxnet {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    out.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

DailyGraph build_day(std::string label,
                     const std::vector<const ContactRecord*>& records) {
  std::vector<std::int64_t> ids;
  ids.reserve(records.size() * 2);
  for (const ContactRecord* r : records) {
    ids.push_back(r->id_a);
    ids.push_back(r->id_b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  DailyGraph day;
  day.day = std::move(label);
  for (std::size_t i = 0; i < ids.size(); ++i)
    day.index_of.emplace(ids[i], static_cast<NodeId>(i));

  std::map<std::pair<NodeId, NodeId>, std::uint32_t> counts;
  for (const ContactRecord* r : records) {
    NodeId a = day.index_of.at(r->id_a);
    NodeId b = day.index_of.at(r->id_b);
    if (a > b) std::swap(a, b);
    ++counts[{a, b}];
  }
  std::vector<Edge> edges;
  edges.reserve(counts.size());
  day.contact_counts.reserve(counts.size());
  for (const auto& [pair, count] : counts) {
    edges.push_back({pair.first, pair.second});
    day.contact_counts.push_back(count);
  }
  const std::size_t n = ids.size();
  day.graph = Graph::from_edges(edges, n, std::move(ids));
  return day;
}

}  // namespace

ParseResult parse_contacts(std::istream& in, const std::string& source,
                           ContactFormat format) {
  const std::size_t expected = format == ContactFormat::ThreeColumn ? 3 : 2;
  const std::size_t other = format == ContactFormat::ThreeColumn ? 2 : 3;
  ParseResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    const std::string where = source + ":" + std::to_string(line_no);
    if (fields.size() == other)
      throw FormatError(where + ": found " + std::to_string(other) +
                            " fields, expected " + std::to_string(expected),
                        line_no);
    if (fields.size() != expected) {
      result.warnings.push_back(where + ": expected " +
                                std::to_string(expected) + " fields");
      continue;
    }
    ContactRecord rec;
    rec.source = source;
    std::size_t f = 0;
    bool ok = true;
    if (expected == 3) ok = parse_int(fields[f++], rec.timestamp);
    ok = ok && parse_int(fields[f], rec.id_a) && parse_int(fields[f + 1], rec.id_b);
    if (!ok) {
      result.warnings.push_back(where + ": non-integer field");
      continue;
    }
    if (rec.id_a == rec.id_b) {
      result.warnings.push_back(where + ": self-contact skipped");
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  if (result.records.empty())
    throw Error(source + ": no valid contact records (ZeroRecords)");
  return result;
}

ParseResult parse_contacts(const std::filesystem::path& path,
                           ContactFormat format) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read contact file " + path.string());
  return parse_contacts(in, path.filename().string(), format);
}

DailyGraphSet build_daily_graphs(std::span<const ContactRecord> records,
                                 std::int64_t day_length) {
  if (day_length <= 0) throw InvalidArgument("day_length must be positive");
  std::map<std::int64_t, std::vector<const ContactRecord*>> buckets;
  for (const ContactRecord& r : records) {
    std::int64_t day = r.timestamp / day_length;
    if (r.timestamp < 0 && r.timestamp % day_length != 0) --day;
    buckets[day].push_back(&r);
  }
  DailyGraphSet set;
  for (const auto& [day, bucket] : buckets)
    set.days.push_back(build_day("day-" + std::to_string(day), bucket));
  return set;
}

DailyGraphSet build_graphs_per_file(std::span<const ContactRecord> records) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const ContactRecord*>> buckets;
  for (const ContactRecord& r : records) {
    auto [it, fresh] = buckets.try_emplace(r.source);
    if (fresh) order.push_back(r.source);
    it->second.push_back(&r);
  }
  DailyGraphSet set;
  for (const std::string& source : order)
    set.days.push_back(build_day(source, buckets[source]));
  return set;
}

}  // namespace vaxnet
