#include "glrect/job.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "glrect/error.hpp"
#include "glrect/oracle.hpp"
#include "glrect/tiling_dp.hpp"

namespace glrect {

unsigned oracle_limit(Family family) {
  switch (family) {
    case Family::GenDer: return oracle::kMaxPermutationLength;
    case Family::Glr3: return oracle::kMaxRectangleLength;
    case Family::Trapezoid: return oracle::kMaxTrapezoidBase;
    case Family::TriangleOracle: return oracle::kMaxTriangleSide;
  }
  return 0;
}

void validate(const JobSpec& spec) {
  if (spec.count < 1) throw std::invalid_argument("N must be at least 1");
  if (spec.oracle_depth > oracle_limit(spec.family)) {
    throw std::invalid_argument("oracle depth " + std::to_string(spec.oracle_depth) + " exceeds the " +
                                std::string(to_string(spec.family)) + " oracle limit of " +
                                std::to_string(oracle_limit(spec.family)));
  }
  const int rows = spec.family == Family::GenDer ? 2 : spec.family == Family::Glr3 ? 3 : 0;
  if (rows != 0 && (!spec.shifts || spec.shifts->rows() != rows)) {
    throw std::invalid_argument(std::string(to_string(spec.family)) + " needs a " + std::to_string(rows) +
                                "-row shift specification");
  }
  if (spec.family == Family::TriangleOracle && spec.count < family_offset(spec.family)) {
    throw std::invalid_argument("triangle side must be at least 3");
  }
}

namespace {

SequenceRecord compute(const JobSpec& spec) {
  switch (spec.family) {
    case Family::GenDer:
      return gen_der_seq(spec.shifts->shifts(0, 1), spec.count, spec.engine);
    case Family::Glr3:
      return glr3_seq(spec.shifts->shifts(0, 1), spec.shifts->shifts(0, 2), spec.shifts->shifts(1, 2), spec.count,
                      spec.engine);
    case Family::Trapezoid:
      return trapezoid_seq(spec.count, spec.engine);
    case Family::TriangleOracle:
      return triangle_seq(spec.count);
  }
  throw std::logic_error("unknown family");
}

BigInt oracle_term(const SequenceRecord& record, int n) {
  switch (record.family) {
    case Family::GenDer:
      return oracle::count_generalized_perms(record.shifts->shifts(0, 1), n);
    case Family::Glr3:
      return oracle::count_glr3(record.shifts->shifts(0, 1), record.shifts->shifts(0, 2),
                                record.shifts->shifts(1, 2), n);
    case Family::Trapezoid:
      return oracle::count_trapezoid3(n);
    case Family::TriangleOracle:
      return oracle::count_latin_triangle(n);
  }
  throw std::logic_error("unknown family");
}

[[noreturn]] void report_mismatch(const SequenceRecord& record, unsigned n, const BigInt& engine,
                                  const BigInt& expected) {
  std::ostringstream os;
  os << "oracle mismatch for " << to_string(record.family);
  if (record.shifts) os << ' ' << record.shifts->to_string();
  os << " at n=" << n << ": engine " << to_string(engine) << ", oracle " << to_string(expected) << '\n';
  if (record.shifts) {
    const TileAlphabet tiles = enumerate_tiles(*record.shifts);
    const BoardShape board =
        record.family == Family::Trapezoid ? BoardShape::trapezoid3() : BoardShape::rectangle(tiles.rows);
    os << "tiles:\n" << dump_tiles(tiles);
    os << "P_" << n << " = " << board_polynomial(tiles, board.row_lengths(static_cast<int>(n))).to_string() << '\n';
  }
  throw OracleMismatch(os.str());
}

void cross_check(SequenceRecord& record, unsigned depth) {
  if (record.provenance == Provenance::Oracle) return;
  for (std::size_t i = 0; i < record.terms.size(); ++i) {
    const unsigned n = record.offset + static_cast<unsigned>(i);
    if (n > depth) break;
    const BigInt expected = oracle_term(record, static_cast<int>(n));
    if (expected != record.terms[i]) report_mismatch(record, n, record.terms[i], expected);
    record.oracle_checked = static_cast<unsigned>(i + 1);
  }
}

}  // namespace

JobResult run_job(const JobSpec& spec) {
  validate(spec);
  JobResult result;
  result.record = compute(spec);
  cross_check(result.record, spec.oracle_depth);
  if (spec.total) make_total(result.record);
  if (spec.oeis_id) result.oeis = oeis_check(result.record, *spec.oeis_id, spec.oeis);
  result.output = format_record(result.record, spec.format);
  if (!spec.output_path.empty()) {
    std::ofstream out(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open output file " + spec.output_path.string());
    out << result.output;
    if (!out) throw Error("failed writing " + spec.output_path.string());
  }
  return result;
}

}  // namespace glrect
