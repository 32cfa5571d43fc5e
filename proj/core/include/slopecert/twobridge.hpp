#pragma once

#include <vector>

#include "slopecert/fpgroup.hpp"

namespace slopecert::twobridge {

// Two-bridge knot b(alpha, beta): alpha odd (a knot, not a link),
// 0 < beta < alpha, gcd(alpha, beta) = 1. Hyperbolic exactly when
// alpha >= 5; alpha = 3 is the trefoil and is accepted by the constructor
// but refused by certification.
struct TwoBridgePair {
  int alpha = 3;
  int beta = 1;

  TwoBridgePair(int a, int b);
  bool hyperbolic() const { return alpha >= 5; }
};

// Two-generator one-relator normal form of the knot group:
//   < a, b | w a w^-1 b^-1 >,  w = a^e1 b^e2 a^e3 ... b^e(alpha-1),
// e_i = (-1)^floor(i*beta/alpha). The meridian is a (generator 0).
struct SchubertPresentation {
  fpgroup::Presentation pres;
  fpgroup::Word meridian;
  std::vector<int> epsilons;
  fpgroup::Word w;
};

SchubertPresentation schubert_presentation(const TwoBridgePair& k);

// Images of a, b generating D_2alpha: a maps to the base reflection, b to
// the reflection of smallest index that kills the relator and generates.
std::vector<fpgroup::DihedralElement> dihedral_rep(const TwoBridgePair& k);

// Longitude as a word in a, b, built from the reversed relator word and an
// exponent correction, then checked against its defining contract:
// zero total exponent, trivial dihedral image, betti 1 after 0-surgery,
// trivial H1 after meridian filling.
fpgroup::Word longitude_word(const TwoBridgePair& k);

// alpha-fold irregular cover from the preimage of the reflection subgroup
// A = <phi(a)>; (alpha+1)/2 boundary tori, exactly one of degree one.
fpgroup::CosetTable irregular_cover(const TwoBridgePair& k);

// 2alpha-fold regular cover of ker phi; alpha boundary tori of degree two.
fpgroup::CosetTable regular_cover(const TwoBridgePair& k);

// H1 of the double cover of S^3 branched over the knot: the index-2 cover
// from the exponent sum mod 2, filled along the lifted meridian (a^2
// rewritten into subgroup generators). Always Z_alpha.
fpgroup::HomologySummary branched_double_cover_h1(const TwoBridgePair& k);

}  // namespace slopecert::twobridge
