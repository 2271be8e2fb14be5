#include "glrect/formats.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace glrect {

OutputFormat parse_output_format(std::string_view text) {
  if (text == "plain") return OutputFormat::Plain;
  if (text == "bfile") return OutputFormat::BFile;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + std::string(text));
}

std::string format_plain(const SequenceRecord& record) {
  std::string out;
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(record.terms[i]);
  }
  return out + "\n";
}

std::string format_bfile(const SequenceRecord& record) {
  std::ostringstream os;
  os << "# family: " << to_string(record.family) << '\n';
  if (record.shifts) os << "# shifts: " << record.shifts->to_string() << '\n';
  os << "# counts: " << (record.total ? "total" : "reduced (first row fixed)") << '\n';
  os << "# provenance: " << to_string(record.provenance) << ", version " << record.engine_version << '\n';
  if (record.oracle_checked > 0) os << "# oracle-checked terms: " << record.oracle_checked << '\n';
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    os << record.offset + i << ' ' << to_string(record.terms[i]) << '\n';
  }
  return os.str();
}

namespace {

nlohmann::json shifts_to_json(const ShiftSpec& spec) {
  auto list = [](const std::set<int>& s) { return std::vector<int>(s.begin(), s.end()); };
  nlohmann::json j;
  j["rows"] = spec.rows();
  j["S12"] = list(spec.shifts(0, 1));
  if (spec.rows() == 3) {
    j["S13"] = list(spec.shifts(0, 2));
    j["S23"] = list(spec.shifts(1, 2));
  }
  return j;
}

ShiftSpec shifts_from_json(const nlohmann::json& j) {
  auto set = [&](const char* key) {
    const auto v = j.at(key).get<std::vector<int>>();
    return std::set<int>(v.begin(), v.end());
  };
  if (j.at("rows").get<int>() == 2) return ShiftSpec::two_row(set("S12"));
  return ShiftSpec::three_row(set("S12"), set("S13"), set("S23"));
}

}  // namespace

nlohmann::json to_json(const SequenceRecord& record) {
  nlohmann::json j;
  j["family"] = std::string(to_string(record.family));
  j["shifts"] = record.shifts ? shifts_to_json(*record.shifts) : nlohmann::json(nullptr);
  j["offset"] = record.offset;
  std::vector<std::string> terms;
  terms.reserve(record.terms.size());
  for (const auto& t : record.terms) terms.push_back(to_string(t));
  j["terms"] = terms;
  j["provenance"] = std::string(to_string(record.provenance));
  j["engine_version"] = record.engine_version;
  j["duration_seconds"] = record.duration_seconds;
  j["oracle_checked"] = record.oracle_checked;
  j["total"] = record.total;
  return j;
}

SequenceRecord record_from_json(const nlohmann::json& j) {
  SequenceRecord record;
  record.family = parse_family(j.at("family").get<std::string>());
  if (!j.at("shifts").is_null()) record.shifts = shifts_from_json(j.at("shifts"));
  record.offset = j.at("offset").get<unsigned>();
  for (const auto& t : j.at("terms")) record.terms.push_back(parse_bigint(t.get<std::string>()));
  record.provenance = parse_provenance(j.at("provenance").get<std::string>());
  record.engine_version = j.at("engine_version").get<std::string>();
  record.duration_seconds = j.at("duration_seconds").get<double>();
  record.oracle_checked = j.value("oracle_checked", 0u);
  record.total = j.value("total", false);
  if (record.terms.empty()) throw std::invalid_argument("sequence record has no terms");
  return record;
}

std::string format_record(const SequenceRecord& record, OutputFormat format) {
  switch (format) {
    case OutputFormat::Plain: return format_plain(record);
    case OutputFormat::BFile: return format_bfile(record);
    case OutputFormat::Json: return to_json(record).dump(2) + "\n";
  }
  throw std::logic_error("unknown output format");
}

BFileEntries parse_bfile(std::string_view text) {
  BFileEntries out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream fields(line);
    std::string index;
    std::string value;
    if (!(fields >> index) || index.front() == '#') continue;
    if (!(fields >> value)) throw std::invalid_argument("b-file line without a value: " + line);
    out.emplace_back(std::stol(index), parse_bigint(value));
  }
  return out;
}

std::set<int> parse_shift_list(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '{' && c != '}') body += c;
  }
  std::set<int> out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t end = body.find(',', pos);
    if (end == std::string::npos) end = body.size();
    const std::string item = body.substr(pos, end - pos);
    if (item.empty()) throw std::invalid_argument("empty entry in shift list");
    std::size_t consumed = 0;
    const int lo = std::stoi(item, &consumed);
    if (consumed == item.size()) {
      out.insert(lo);
    } else if (item.compare(consumed, 2, "..") == 0) {
      const std::string rest = item.substr(consumed + 2);
      std::size_t used = 0;
      const int hi = std::stoi(rest, &used);
      if (used != rest.size() || hi < lo) throw std::invalid_argument("bad shift range: " + item);
      for (int s = lo; s <= hi; ++s) out.insert(s);
    } else {
      throw std::invalid_argument("bad shift entry: " + item);
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace glrect
