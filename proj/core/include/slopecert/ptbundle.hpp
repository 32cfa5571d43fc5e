#pragma once

#include <vector>

#include "slopecert/fpgroup.hpp"

namespace slopecert::ptbundle {

// Monodromy of a once-punctured-torus bundle: its action on the homology of
// the fiber, a determinant-one 2x2 integer matrix. The bundle is hyperbolic
// exactly when |trace| > 2.
struct Monodromy {
  exactlin::Mat2 m;

  explicit Monodromy(exactlin::Mat2 mat);
  long long trace() const { return m.trace(); }
  bool pseudo_anosov() const { return trace() > 2 || trace() < -2; }
};

// Elementary factors: R = (1 1; 0 1), L = (1 0; 1 1), and -I.
struct SL2Factor {
  enum class Kind { R, L, NegI };
  Kind kind = Kind::R;
  long long power = 1;  // ignored for NegI
};

// Factorization with exact product contract: multiplying the factors in
// order reproduces the input matrix.
std::vector<SL2Factor> factor_sl2z(const Monodromy& m);

exactlin::Mat2 factor_product(const std::vector<SL2Factor>& factors);

// Automorphism of the free group <x, y>, given by the images of x and y.
struct F2Automorphism {
  fpgroup::Word img_x;
  fpgroup::Word img_y;

  static F2Automorphism identity();
  fpgroup::Word apply(const fpgroup::Word& w) const;
  F2Automorphism after(const F2Automorphism& inner) const;  // this o inner
  exactlin::Mat2 abelianized() const;
};

// Standard lifts R -> (x -> x, y -> yx), L -> (x -> xy, y -> y),
// -I -> (x -> x^-1, y -> y^-1), composed in factor order. The composite
// abelianizes back to the factored matrix.
F2Automorphism lift_to_automorphism(const std::vector<SL2Factor>& factors);

// Post-compose with an inner automorphism so the boundary word [x, y] is
// fixed exactly (free equality). Requires the image of [x, y] to be
// conjugate to [x, y]; a conjugate of the inverse signals an
// orientation-reversing map and is rejected.
F2Automorphism normalize_commutator(const F2Automorphism& f);

// Mapping torus <x, y, t | t x t^-1 f(x)^-1, t y t^-1 f(y)^-1> with the
// peripheral basis m = t, l = [x, y]. Generator indices: x 0, y 1, t 2.
struct BundlePresentation {
  fpgroup::Presentation pres;
  fpgroup::Word m;
  fpgroup::Word l;
};

BundlePresentation bundle_presentation(const F2Automorphism& f);

// The nine-fold cover induced by x -> (1,0), y -> (0,1) in Z_3 + Z_3 and
// t acting on the labels by the mod-3 inverse of the monodromy. Label (a,b)
// is coset index 3a + b; the base label (0,0) is always fixed by t.
fpgroup::CosetTable nine_fold_cover(const Monodromy& m);
fpgroup::CosetTable nine_fold_cover(const BundlePresentation& bp, const Monodromy& m);

// Betti number after adjoining one filling relator per peripheral torus.
long long filled_betti(const fpgroup::Presentation& pres, const std::vector<fpgroup::Word>& fillings);

// First Betti number of the slope-0 filling of the nine-fold cover; the
// filling word on each boundary torus is that torus's stabilizer-lattice
// generator in the l direction.
long long zero_filled_betti(const Monodromy& m);

struct CycleTableRow {
  std::vector<exactlin::Mat2> representatives;
  std::vector<int> cycle_lengths;
  bool identity_misprint_note = false;
};

// The five conjugacy-class rows of cycle lengths of the mod-3 action, with
// the identity row carrying nine fixed points (the printed source shows ten;
// Z_3 x Z_3 has nine elements, so the row is flagged).
std::vector<CycleTableRow> cycle_table();

}  // namespace slopecert::ptbundle
