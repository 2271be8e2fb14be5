#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "glrect/sequence.hpp"

namespace glrect {

enum class OutputFormat { Plain, BFile, Json };

OutputFormat parse_output_format(std::string_view text);

/// Comma-separated terms on one line.
std::string format_plain(const SequenceRecord& record);

/// OEIS b-file: '#' comment header, then "n a(n)" per line. No timing data,
/// so identical records give identical bytes.
std::string format_bfile(const SequenceRecord& record);

/// Full record, terms as decimal strings.
nlohmann::json to_json(const SequenceRecord& record);
SequenceRecord record_from_json(const nlohmann::json& j);

std::string format_record(const SequenceRecord& record, OutputFormat format);

using BFileEntries = std::vector<std::pair<long, BigInt>>;

/// Reads "n a(n)" lines, skipping blanks and '#' comments.
BFileEntries parse_bfile(std::string_view text);

/// Parses "0,1,-2", "{0,1,-2}", "-3..3" or mixtures like "-3..-1,2"; "" or
/// "{}" is the empty set.
std::set<int> parse_shift_list(std::string_view text);

}  // namespace glrect
