#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slopecert/fpgroup.hpp"
#include "slopecert/ptbundle.hpp"
#include "slopecert/twobridge.hpp"

namespace slopecert::certify {

enum class Verdict { certified, failed, not_applicable };

std::string to_string(Verdict v);

struct TorusRecord {
  long long degree = 0;
  long long orbit_size = 0;
  // HNF stabilizer basis rows [[a, b], [0, d]]
  long long stab_a = 1, stab_b = 0, stab_d = 1;
};

// Everything needed to re-check condition 3 with independent arithmetic:
// the ambient peripheral image columns, the relator matrix, a spanning set
// of ker i* (denominators cleared), and its projection to the T~ plane.
struct RankEvidence {
  exactlin::IntMatrix istar_columns;
  exactlin::IntMatrix relator_matrix;
  std::vector<std::vector<exactlin::Int>> kernel_vectors;
  exactlin::IntMatrix projected;
  long long kernel_rank = 0;
  long long projected_rank = 0;
};

struct Certificate {
  std::string input_descriptor;
  Verdict verdict = Verdict::failed;
  std::string not_applicable_reason;

  long long cover_index = 0;
  std::vector<TorusRecord> tori;
  long long t_tilde = -1;

  bool condition1 = false;  // at least three boundary tori
  bool condition2 = false;  // T~ covers the base boundary with degree one
  bool condition3 = false;  // ker i* projects onto H1(T~; Q)

  fpgroup::HomologySummary h1_cover;
  std::optional<long long> zero_filled_betti;  // bundles only
  std::optional<RankEvidence> evidence;
};

// The three-condition check against any cover handed over as a subgroup
// presentation plus its peripheral tori. Condition 3 is decided over Q;
// rational rank equals real rank on integral data.
Certificate check_conditions(const fpgroup::Presentation& sub,
                             const std::vector<fpgroup::PeripheralTorus>& tori, int t_tilde);

// Full pipeline for a punctured-torus bundle; |trace| <= 2 inputs come back
// not-applicable. The directly computed condition 3 must agree with the
// zero-filled betti cross-check, else a ConsistencyError is thrown: the two
// routes compute the same fact.
Certificate certify_ptb(const ptbundle::Monodromy& m);

// Full pipeline for a two-bridge knot; alpha < 5 (the trefoil) comes back
// not-applicable. T~ is the unique degree-one torus of the alpha-fold cover.
Certificate certify_twobridge(const twobridge::TwoBridgePair& k);

}  // namespace slopecert::certify
