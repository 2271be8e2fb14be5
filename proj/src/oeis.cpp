#include "glrect/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <system_error>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include "glrect/formats.hpp"

namespace glrect {

std::string normalize_oeis_id(std::string_view id) {
  std::string_view digits = id;
  if (!digits.empty() && (digits.front() == 'A' || digits.front() == 'a')) digits.remove_prefix(1);
  if (digits.empty() || digits.size() > 6) throw std::invalid_argument("bad OEIS id: " + std::string(id));
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad OEIS id: " + std::string(id));
  }
  return "A" + std::string(6 - digits.size(), '0') + std::string(digits);
}

std::string bfile_name(std::string_view oeis_id) {
  return "b" + normalize_oeis_id(oeis_id).substr(1) + ".txt";
}

std::filesystem::path default_oeis_cache() {
  if (const char* env = std::getenv("GLRECT_OEIS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "glrect" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "glrect" / "oeis";
  }
  return ".glrect-oeis";
}

std::optional<std::string> fetch_bfile_http(const std::string& oeis_id) {
  const std::string id = normalize_oeis_id(oeis_id);
  try {
    httplib::Client client("https://oeis.org");
    client.set_connection_timeout(10);
    client.set_read_timeout(30);
    client.set_follow_location(true);
    auto res = client.Get("/" + id + "/" + bfile_name(id));
    if (!res || res->status != 200) return std::nullopt;
    return res->body;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::string_view to_string(OeisStatus status) {
  switch (status) {
    case OeisStatus::Match: return "match";
    case OeisStatus::Mismatch: return "mismatch";
    case OeisStatus::Unverifiable: return "unverifiable";
  }
  return "?";
}

std::string OeisReport::to_string() const {
  std::ostringstream os;
  os << oeis_id << ": " << glrect::to_string(status);
  if (status != OeisStatus::Unverifiable) os << " (" << compared << " terms compared)";
  if (first_divergent_n) {
    os << "; first divergence at n=" << *first_divergent_n;
    if (expected && actual) os << ": expected " << glrect::to_string(*expected) << ", got " << glrect::to_string(*actual);
  }
  if (!detail.empty()) os << "; " << detail;
  return os.str();
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Writes via a temporary so that a concurrent reader never sees a torn file.
void write_cache(const std::filesystem::path& path, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) return;
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << body;
    if (!out) return;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

OeisReport oeis_check(const SequenceRecord& record, std::string_view oeis_id, const OeisOptions& options) {
  OeisReport report;
  report.oeis_id = normalize_oeis_id(oeis_id);
  const auto cached = options.cache_dir / bfile_name(report.oeis_id);

  std::optional<std::string> body = read_file(cached);
  if (!body) {
    if (options.offline) {
      report.detail = "offline and no cached b-file at " + cached.string();
      return report;
    }
    body = options.fetcher ? options.fetcher(report.oeis_id) : std::nullopt;
    if (!body) {
      report.detail = "b-file could not be fetched and no cache at " + cached.string();
      return report;
    }
    write_cache(cached, *body);
  }

  BFileEntries entries;
  try {
    entries = parse_bfile(*body);
  } catch (const std::exception& e) {
    report.detail = std::string("unreadable b-file: ") + e.what();
    return report;
  }
  std::map<long, BigInt> reference(entries.begin(), entries.end());

  report.status = OeisStatus::Match;
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    const long n = static_cast<long>(record.offset + i);
    const auto it = reference.find(n);
    if (it == reference.end()) continue;
    ++report.compared;
    if (it->second != record.terms[i]) {
      report.status = OeisStatus::Mismatch;
      report.first_divergent_n = n;
      report.expected = it->second;
      report.actual = record.terms[i];
      return report;
    }
  }
  if (report.compared == 0) {
    report.status = OeisStatus::Unverifiable;
    report.detail = "no overlapping n values";
  }
  return report;
}

}  // namespace glrect
