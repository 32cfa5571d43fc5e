#include "slopecert/twobridge.hpp"

#include <numeric>

#include "slopecert/ptbundle.hpp"

namespace slopecert::twobridge {

using fpgroup::CosetTable;
using fpgroup::DihedralElement;
using fpgroup::Presentation;
using fpgroup::Word;

TwoBridgePair::TwoBridgePair(int a, int b) : alpha(a), beta(b) {
  if (alpha < 3 || alpha % 2 == 0) throw InputError("alpha must be odd and at least 3");
  if (beta <= 0 || beta >= alpha) throw InputError("beta must satisfy 0 < beta < alpha");
  if (std::gcd(alpha, beta) != 1) throw InputError("alpha and beta must be coprime");
}

SchubertPresentation schubert_presentation(const TwoBridgePair& k) {
  SchubertPresentation out;
  out.epsilons.reserve(k.alpha - 1);
  std::vector<fpgroup::Letter> letters;
  for (int i = 1; i < k.alpha; ++i) {
    const int eps = (static_cast<long long>(i) * k.beta / k.alpha) % 2 == 0 ? 1 : -1;
    out.epsilons.push_back(eps);
    letters.push_back({i % 2 == 1 ? 0 : 1, eps});  // odd slots a, even slots b
  }
  out.w = Word::from_letters(letters);
  const Word a = Word::gen(0), b = Word::gen(1);
  out.pres = Presentation(2, {out.w * a * out.w.inverse() * b.inverse()});
  out.meridian = a;
  return out;
}

std::vector<DihedralElement> dihedral_rep(const TwoBridgePair& k) {
  const auto sp = schubert_presentation(k);
  const int n = k.alpha;
  const DihedralElement ra = DihedralElement::reflection(n, 0);
  for (int c = 1; c < n; ++c) {
    const DihedralElement rb = DihedralElement::reflection(n, c);
    const std::vector<DihedralElement> images{ra, rb};
    bool ok = true;
    for (const Word& r : sp.pres.relators)
      ok = ok && eval_word_dihedral(r, images).is_id();
    if (!ok) continue;
    if (static_cast<int>(dihedral_generated_subgroup(images, n).size()) != 2 * n) continue;
    return images;
  }
  throw ConsistencyError("no surjective dihedral representation found");
}

Word longitude_word(const TwoBridgePair& k) {
  const auto sp = schubert_presentation(k);
  long long e = 0;
  for (int eps : sp.epsilons) e += eps;
  const Word a = Word::gen(0);
  const Word lam = sp.w.reversed() * sp.w * a.pow(-2 * e);

  if (lam.total_exponent() != 0)
    throw LongitudeError("longitude candidate is not in the commutator subgroup");
  const auto images = dihedral_rep(k);
  if (!eval_word_dihedral(lam, images).is_id())
    throw LongitudeError("longitude candidate has nontrivial dihedral image");
  if (ptbundle::filled_betti(sp.pres, {lam}) != 1)
    throw LongitudeError("0-surgery along the candidate does not have betti 1");
  const auto infinity = fpgroup::abelianization(
      Presentation(2, [&] {
        auto rels = sp.pres.relators;
        rels.push_back(sp.meridian);
        return rels;
      }()));
  if (infinity.betti != 0 || !infinity.torsion.empty())
    throw LongitudeError("meridian filling does not kill H1");
  return lam;
}

CosetTable irregular_cover(const TwoBridgePair& k) {
  const auto sp = schubert_presentation(k);
  const auto images = dihedral_rep(k);
  const std::vector<DihedralElement> a_subgroup{DihedralElement::id(k.alpha), images[0]};
  auto table = coset_table_from_hom(sp.pres, images, a_subgroup);
  if (table.size() != k.alpha) throw ConsistencyError("irregular cover has unexpected index");
  return table;
}

CosetTable regular_cover(const TwoBridgePair& k) {
  const auto sp = schubert_presentation(k);
  const auto images = dihedral_rep(k);
  const std::vector<DihedralElement> trivial{DihedralElement::id(k.alpha)};
  auto table = coset_table_from_hom(sp.pres, images, trivial);
  if (table.size() != 2 * k.alpha) throw ConsistencyError("regular cover has unexpected index");
  return table;
}

fpgroup::HomologySummary branched_double_cover_h1(const TwoBridgePair& k) {
  const auto sp = schubert_presentation(k);
  // both generators are meridians, so the exponent-sum mod 2 swaps the
  // two sheets through each of them
  const exactlin::Permutation swap(std::vector<int>{1, 0});
  const auto table = coset_table_from_action(sp.pres, {swap, swap});
  const auto data = schreier_transversal(table);
  const auto sub = subgroup_presentation(sp.pres, table, data);
  const Word lifted_meridian = rewrite_word(data, table, sp.meridian.pow(2));
  auto rels = sub.relators;
  rels.push_back(lifted_meridian);
  return fpgroup::abelianization(Presentation(sub.num_gens, std::move(rels)));
}

}  // namespace slopecert::twobridge
