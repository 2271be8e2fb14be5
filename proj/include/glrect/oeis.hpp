#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "glrect/bigint.hpp"
#include "glrect/sequence.hpp"

namespace glrect {

/// "A271", "a000271" or "271" -> "A000271". Throws std::invalid_argument.
std::string normalize_oeis_id(std::string_view id);

/// File name of the b-file for a normalized id: "b000271.txt".
std::string bfile_name(std::string_view oeis_id);

/// $GLRECT_OEIS_CACHE, else $XDG_CACHE_HOME/glrect/oeis, else
/// $HOME/.cache/glrect/oeis, else ./.glrect-oeis.
std::filesystem::path default_oeis_cache();

/// Returns the b-file body, or nullopt on any network failure.
using BFileFetcher = std::function<std::optional<std::string>(const std::string& oeis_id)>;

/// HTTPS GET of https://oeis.org/<id>/b<digits>.txt.
std::optional<std::string> fetch_bfile_http(const std::string& oeis_id);

enum class OeisStatus { Match, Mismatch, Unverifiable };
std::string_view to_string(OeisStatus status);

struct OeisReport {
  std::string oeis_id;
  OeisStatus status = OeisStatus::Unverifiable;
  /// Number of n values present in both record and b-file.
  std::size_t compared = 0;
  std::optional<long> first_divergent_n;
  std::optional<BigInt> expected;
  std::optional<BigInt> actual;
  std::string detail;

  std::string to_string() const;
};

struct OeisOptions {
  std::filesystem::path cache_dir = default_oeis_cache();
  bool offline = false;
  BFileFetcher fetcher = fetch_bfile_http;
};

/// Compares the record against the b-file on the overlapping n range. The
/// b-file is taken from the cache when present, otherwise fetched and cached
/// (never when offline). No b-file, or no overlap, is Unverifiable.
OeisReport oeis_check(const SequenceRecord& record, std::string_view oeis_id, const OeisOptions& options = {});

}  // namespace glrect
