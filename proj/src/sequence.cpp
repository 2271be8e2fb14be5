#include "glrect/sequence.hpp"

#include <chrono>
#include <stdexcept>
#include <string>

#include "glrect/oracle.hpp"
#include "glrect/tiling_dp.hpp"

namespace glrect {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::GenDer: return "gen-der";
    case Family::Glr3: return "glr3";
    case Family::Trapezoid: return "trapezoid";
    case Family::TriangleOracle: return "triangle-oracle";
  }
  return "?";
}

std::string_view to_string(Provenance provenance) {
  return provenance == Provenance::Engine ? "engine" : "oracle";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::GenDer, Family::Glr3, Family::Trapezoid, Family::TriangleOracle}) {
    if (to_string(f) == text) return f;
  }
  throw std::invalid_argument("unknown family: " + std::string(text));
}

Provenance parse_provenance(std::string_view text) {
  if (text == "engine") return Provenance::Engine;
  if (text == "oracle") return Provenance::Oracle;
  throw std::invalid_argument("unknown provenance: " + std::string(text));
}

unsigned family_offset(Family family) {
  return family == Family::Trapezoid || family == Family::TriangleOracle ? 3 : 1;
}

ShiftSpec trapezoid_shift_spec() { return ShiftSpec::three_row({0, -1}, {0, -2}, {0, -1}); }

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigInt evaluate(const EngineOptions& options, UmbralKind kind, const Polynomial& p, unsigned n,
                const FactorialTable& factorials) {
  return options.umbral ? options.umbral(kind, p, n, factorials) : umbral_eval(kind, p, n, factorials);
}

SequenceRecord rectangle_sequence(Family family, const ShiftSpec& spec, UmbralKind kind, unsigned count,
                                  const EngineOptions& options) {
  if (count < 1) throw std::invalid_argument("sequence length must be at least 1");
  const auto start = Clock::now();
  SequenceRecord record;
  record.family = family;
  record.shifts = spec;
  record.offset = family_offset(family);
  const TileAlphabet tiles = enumerate_tiles(spec);
  const FactorialTable factorials(factorial_bound(kind, count));
  sweep_rectangle(tiles, count, [&](unsigned n, const Polynomial& p) {
    if (n >= record.offset) record.terms.push_back(evaluate(options, kind, p, n, factorials));
  });
  record.duration_seconds = seconds_since(start);
  return record;
}

}  // namespace

SequenceRecord gen_der_seq(const std::set<int>& shifts, unsigned count, const EngineOptions& options) {
  return rectangle_sequence(Family::GenDer, ShiftSpec::two_row(shifts), UmbralKind::TwoRow, count, options);
}

SequenceRecord glr3_seq(const std::set<int>& s12, const std::set<int>& s13, const std::set<int>& s23,
                        unsigned count, const EngineOptions& options) {
  return rectangle_sequence(Family::Glr3, ShiftSpec::three_row(s12, s13, s23), UmbralKind::ThreeRowRectangle,
                            count, options);
}

SequenceRecord trapezoid_seq(unsigned count, const EngineOptions& options) {
  if (count < 1) throw std::invalid_argument("sequence length must be at least 1");
  const auto start = Clock::now();
  SequenceRecord record;
  record.family = Family::Trapezoid;
  record.shifts = trapezoid_shift_spec();
  record.offset = family_offset(Family::Trapezoid);
  const unsigned max_n = record.offset + count - 1;
  const TileAlphabet tiles = enumerate_tiles(*record.shifts);
  const SeriesTable table = weight_series(tiles, BoardShape::trapezoid3(), max_n, options.jobs);
  const FactorialTable factorials(factorial_bound(UmbralKind::ThreeRowTrapezoid, max_n));
  for (unsigned n = record.offset; n <= max_n; ++n) {
    record.terms.push_back(evaluate(options, UmbralKind::ThreeRowTrapezoid, table[n], n, factorials));
  }
  record.duration_seconds = seconds_since(start);
  return record;
}

SequenceRecord triangle_seq(unsigned max_side) {
  const auto start = Clock::now();
  SequenceRecord record;
  record.family = Family::TriangleOracle;
  record.offset = family_offset(Family::TriangleOracle);
  record.provenance = Provenance::Oracle;
  if (max_side < record.offset) throw std::invalid_argument("triangle side must be at least 3");
  for (unsigned n = record.offset; n <= max_side; ++n) {
    record.terms.push_back(oracle::count_latin_triangle(static_cast<int>(n)));
  }
  record.duration_seconds = seconds_since(start);
  return record;
}

void make_total(SequenceRecord& record) {
  if (record.total) return;
  BigInt factorial = 1;
  for (unsigned k = 2; k < record.offset; ++k) factorial *= k;
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    const unsigned n = record.offset + static_cast<unsigned>(i);
    if (n >= 2) factorial *= n;
    record.terms[i] *= factorial;
  }
  record.total = true;
}

}  // namespace glrect
