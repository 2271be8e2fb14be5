#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "glrect/bigint.hpp"
#include "glrect/tileset.hpp"
#include "glrect/umbra.hpp"

namespace glrect {

inline constexpr std::string_view kEngineVersion = "1.0.0";

enum class Family { GenDer, Glr3, Trapezoid, TriangleOracle };
enum class Provenance { Engine, Oracle };

std::string_view to_string(Family family);
std::string_view to_string(Provenance provenance);
Family parse_family(std::string_view text);
Provenance parse_provenance(std::string_view text);

/// First n each family reports.
unsigned family_offset(Family family);

/// A computed prefix. terms[i] is the count for n = offset + i.
struct SequenceRecord {
  Family family = Family::GenDer;
  std::optional<ShiftSpec> shifts;
  unsigned offset = 1;
  std::vector<BigInt> terms;
  Provenance provenance = Provenance::Engine;
  std::string engine_version{kEngineVersion};
  double duration_seconds = 0.0;
  /// Leading terms confirmed by the brute-force oracle.
  unsigned oracle_checked = 0;
  /// Terms multiplied by n! (first row free) instead of reduced counts.
  bool total = false;
};

/// Replaces the umbral evaluation step; used to inject faults in tests.
using UmbralHook = std::function<BigInt(UmbralKind, const Polynomial&, unsigned n, const FactorialTable&)>;

struct EngineOptions {
  unsigned jobs = 1;
  UmbralHook umbral;
};

/// Shift sets of the three-row Latin trapezoid: row 1 position j meets row 0
/// positions j and j+1, row 2 meets row 1 at j, j+1 and row 0 at j, j+2.
ShiftSpec trapezoid_shift_spec();

/// Permutations with i - p(i) not in S, n = 1..count.
SequenceRecord gen_der_seq(const std::set<int>& shifts, unsigned count, const EngineOptions& options = {});

/// Reduced generalized three-row Latin rectangles, n = 1..count.
SequenceRecord glr3_seq(const std::set<int>& s12, const std::set<int>& s13, const std::set<int>& s23,
                        unsigned count, const EngineOptions& options = {});

/// Reduced three-row Latin trapezoids, base n = 3..count+2.
SequenceRecord trapezoid_seq(unsigned count, const EngineOptions& options = {});

/// Reduced Latin triangles by brute force, sides 3..max_side.
SequenceRecord triangle_seq(unsigned max_side);

/// Multiplies each term by n! (idempotent: no-op when already total).
void make_total(SequenceRecord& record);

}  // namespace glrect
