// glrect: counts of generalized Latin rectangles, trapezoids and triangles.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "glrect/error.hpp"
#include "glrect/job.hpp"
#include "glrect/tiling_dp.hpp"

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kOracleMismatch = 2, kOeisMismatch = 3, kOeisUnverifiable = 4 };

struct CommonFlags {
  std::string format = "plain";
  unsigned oracle_depth = 0;
  std::string oeis;
  bool offline = false;
  bool total = false;
  bool dump_tiles = false;
  int dump_series = -1;
  bool dump_kernel = false;
  unsigned jobs = 1;
  std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"plain", "bfile", "json"}))
      ->capture_default_str();
  cmd->add_option("--oracle-depth", flags.oracle_depth, "Check terms with n <= d against brute force");
  cmd->add_option("--oeis", flags.oeis, "Compare with an OEIS b-file (e.g. A000271)");
  cmd->add_flag("--offline", flags.offline, "Use only the OEIS cache, never the network");
  cmd->add_flag("--total", flags.total, "Multiply each term by n! (first row free)");
  cmd->add_flag("--dump-tiles", flags.dump_tiles, "Print the tile alphabet");
  cmd->add_option("--dump-series", flags.dump_series, "Print the weight enumerator P_n");
  cmd->add_flag("--dump-kernel", flags.dump_kernel, "Print the rational kernel (two-row only)");
  cmd->add_option("--jobs", flags.jobs, "Worker threads for independent n values")->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", flags.output, "Write the sequence to this file instead of stdout");
}

void print_dumps(const CommonFlags& flags, const glrect::JobSpec& spec) {
  if (!spec.shifts) {
    if (flags.dump_tiles || flags.dump_series >= 0 || flags.dump_kernel) {
      throw std::invalid_argument("dumps need an engine family (gen-der, glr3, trapezoid)");
    }
    return;
  }
  const glrect::TileAlphabet tiles = glrect::enumerate_tiles(*spec.shifts);
  if (flags.dump_tiles) std::cout << glrect::dump_tiles(tiles);
  if (flags.dump_series >= 0) {
    const auto board = spec.family == glrect::Family::Trapezoid ? glrect::BoardShape::trapezoid3()
                                                                : glrect::BoardShape::rectangle(tiles.rows);
    std::cout << "P_" << flags.dump_series << " = "
              << glrect::board_polynomial(tiles, board.row_lengths(flags.dump_series)).to_string() << '\n';
  }
  if (flags.dump_kernel) {
    if (spec.shifts->rows() != 2) throw std::invalid_argument("--dump-kernel is only defined for two rows");
    std::cout << glrect::kernel2(spec.shifts->shifts(0, 1)).to_string() << '\n';
  }
}

int run(const CommonFlags& flags, glrect::JobSpec spec) {
  spec.format = glrect::parse_output_format(flags.format);
  spec.oracle_depth = flags.oracle_depth;
  spec.total = flags.total;
  if (!flags.oeis.empty()) spec.oeis_id = flags.oeis;
  spec.oeis.offline = flags.offline;
  spec.engine.jobs = flags.jobs;
  spec.output_path = flags.output;
  glrect::validate(spec);

  print_dumps(flags, spec);
  const glrect::JobResult result = glrect::run_job(spec);
  if (flags.output.empty()) std::cout << result.output;
  std::cerr << "computed " << result.record.terms.size() << " terms in " << result.record.duration_seconds << " s";
  if (result.record.oracle_checked > 0) std::cerr << ", " << result.record.oracle_checked << " oracle-checked";
  std::cerr << '\n';
  if (result.oeis) {
    std::cerr << "oeis " << result.oeis->to_string() << '\n';
    if (result.oeis->status == glrect::OeisStatus::Mismatch) return kOeisMismatch;
    if (result.oeis->status == glrect::OeisStatus::Unverifiable) return kOeisUnverifiable;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counts of generalized Latin rectangles by tiling transfer matrices"};
  app.set_version_flag("--version", std::string(GLRECT_VERSION));
  app.require_subcommand(1);

  CommonFlags flags;
  unsigned count = 0;
  std::string shifts;
  std::string s12;
  std::string s13;
  std::string s23;

  auto* gen_der = app.add_subcommand("gen-der", "Permutations with i - p(i) outside a shift set");
  gen_der->add_option("--shifts", shifts, "Shift set, e.g. 0,1 or -3..3 or {}")->required();
  gen_der->add_option("-N", count, "Number of terms (n = 1..N)")->required();
  add_common(gen_der, flags);

  auto* glr3 = app.add_subcommand("glr3", "Reduced generalized three-row Latin rectangles");
  glr3->add_option("--s12", s12, "Shift set between rows 1 and 2")->required();
  glr3->add_option("--s13", s13, "Shift set between rows 1 and 3")->required();
  glr3->add_option("--s23", s23, "Shift set between rows 2 and 3")->required();
  glr3->add_option("-N", count, "Number of terms (n = 1..N)")->required();
  add_common(glr3, flags);

  auto* trapezoid = app.add_subcommand("trapezoid", "Reduced three-row Latin trapezoids");
  trapezoid->add_option("-N", count, "Number of terms (base n = 3..N+2)")->required();
  add_common(trapezoid, flags);

  auto* triangle = app.add_subcommand("triangle", "Reduced Latin triangles by brute force");
  triangle->add_option("--n", count, "Largest side (sides 3..n)")->required();
  add_common(triangle, flags);

  auto* kernel = app.add_subcommand("kernel", "Rational generating function of a two-row shift set");
  kernel->add_option("--shifts", shifts, "Shift set")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    glrect::JobSpec spec;
    spec.count = count;
    if (kernel->parsed()) {
      std::cout << glrect::kernel2(glrect::parse_shift_list(shifts)).to_string() << '\n';
      return kOk;
    }
    if (gen_der->parsed()) {
      spec.family = glrect::Family::GenDer;
      spec.shifts = glrect::ShiftSpec::two_row(glrect::parse_shift_list(shifts));
    } else if (glr3->parsed()) {
      spec.family = glrect::Family::Glr3;
      spec.shifts = glrect::ShiftSpec::three_row(glrect::parse_shift_list(s12), glrect::parse_shift_list(s13),
                                                 glrect::parse_shift_list(s23));
    } else if (trapezoid->parsed()) {
      spec.family = glrect::Family::Trapezoid;
      spec.shifts = glrect::trapezoid_shift_spec();
    } else {
      spec.family = glrect::Family::TriangleOracle;
    }
    return run(flags, spec);
  } catch (const glrect::OracleMismatch& e) {
    std::cerr << "error: " << e.what();
    return kOracleMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
