#include "slopecert/ptbundle.hpp"

#include <algorithm>

namespace slopecert::ptbundle {

using exactlin::Mat2;
using exactlin::Permutation;
using fpgroup::Letter;
using fpgroup::Presentation;
using fpgroup::Word;

Monodromy::Monodromy(Mat2 mat) : m(mat) {
  if (m.det() != 1) throw InputError("monodromy must have determinant 1");
}

namespace {

Mat2 r_power(long long k) { return Mat2{1, k, 0, 1}; }
Mat2 l_power(long long k) { return Mat2{1, 0, k, 1}; }

Mat2 factor_matrix(const SL2Factor& f) {
  switch (f.kind) {
    case SL2Factor::Kind::R: return r_power(f.power);
    case SL2Factor::Kind::L: return l_power(f.power);
    default: return Mat2{-1, 0, 0, -1};
  }
}

}  // namespace

exactlin::Mat2 factor_product(const std::vector<SL2Factor>& factors) {
  Mat2 p{1, 0, 0, 1};
  for (const SL2Factor& f : factors) p = p * factor_matrix(f);
  return p;
}

namespace {

long long llabs_ll(long long x) { return x < 0 ? -x : x; }

// nearest-integer quotient: |a - q*c| <= |c| / 2
long long nearest_quotient(long long a, long long c) {
  long long q = a / c;
  const long long r = a - q * c;
  if (2 * llabs_ll(r) > llabs_ll(c)) q += ((r > 0) == (c > 0)) ? 1 : -1;
  return q;
}

}  // namespace

std::vector<SL2Factor> factor_sl2z(const Monodromy& mono) {
  // Euclidean reduction of the first column by left multiplications with
  // R^-q and L^-q. If M_j = A_j ... A_1 M then M = A_1^-1 ... A_j^-1 M_j,
  // so the recorded inverse factors already stand in product order.
  Mat2 m = mono.m;
  std::vector<SL2Factor> recorded;
  while (m.c != 0) {
    if (m.a != 0) {
      const long long q = nearest_quotient(m.a, m.c);
      if (q != 0) {
        m = r_power(-q) * m;
        recorded.push_back({SL2Factor::Kind::R, q});
      }
      if (m.c == 0) break;
    } else {
      m = r_power(-1) * m;  // a := -c, nonzero again
      recorded.push_back({SL2Factor::Kind::R, 1});
    }
    if (m.a == 0) continue;
    const long long q2 = nearest_quotient(m.c, m.a);
    if (q2 != 0) {
      m = l_power(-q2) * m;
      recorded.push_back({SL2Factor::Kind::L, q2});
    }
  }

  std::vector<SL2Factor> out;
  if (m.a == -1) {
    out.push_back({SL2Factor::Kind::NegI, 1});
    m = Mat2{-1, 0, 0, -1} * m;
  }
  if (m.a != 1 || m.d != 1 || m.c != 0)
    throw ConsistencyError("factorization did not terminate at R^k");
  out.insert(out.end(), recorded.begin(), recorded.end());
  if (m.b != 0) out.push_back({SL2Factor::Kind::R, m.b});

  if (!(factor_product(out) == mono.m)) throw ConsistencyError("factor product mismatch");
  return out;
}

F2Automorphism F2Automorphism::identity() { return {Word::gen(0), Word::gen(1)}; }

Word F2Automorphism::apply(const Word& w) const {
  std::vector<Letter> out;
  for (const Letter& l : w.letters()) {
    const Word& img = l.gen == 0 ? img_x : img_y;
    if (l.gen > 1) throw InputError("automorphism applies to words over x, y only");
    if (l.exp > 0)
      out.insert(out.end(), img.letters().begin(), img.letters().end());
    else {
      const Word inv = img.inverse();
      out.insert(out.end(), inv.letters().begin(), inv.letters().end());
    }
  }
  return Word::from_letters(out);
}

F2Automorphism F2Automorphism::after(const F2Automorphism& inner) const {
  return {apply(inner.img_x), apply(inner.img_y)};
}

Mat2 F2Automorphism::abelianized() const {
  const auto vx = img_x.exponent_vector(2);
  const auto vy = img_y.exponent_vector(2);
  return Mat2{vx[0], vy[0], vx[1], vy[1]};
}

namespace {

F2Automorphism factor_lift(const SL2Factor& f) {
  switch (f.kind) {
    case SL2Factor::Kind::R:
      return {Word::gen(0), Word::gen(1) * Word::gen(0).pow(f.power)};
    case SL2Factor::Kind::L:
      return {Word::gen(0) * Word::gen(1).pow(f.power), Word::gen(1)};
    default:
      return {Word::gen(0, -1), Word::gen(1, -1)};
  }
}

}  // namespace

F2Automorphism lift_to_automorphism(const std::vector<SL2Factor>& factors) {
  F2Automorphism f = F2Automorphism::identity();
  for (const SL2Factor& factor : factors) f = f.after(factor_lift(factor));
  if (!(f.abelianized() == factor_product(factors)))
    throw ConsistencyError("lift does not abelianize to the factored matrix");
  return f;
}

F2Automorphism normalize_commutator(const F2Automorphism& f) {
  const Word comm = Word::commutator(Word::gen(0), Word::gen(1));
  Word outer;
  const Word core = f.apply(comm).cyclically_reduced(&outer);

  // A cyclically reduced conjugate of [x,y] is one of its four rotations.
  const auto& cl = comm.letters();
  const Word comm_inv = comm.inverse();
  for (int i = 0; i < 4; ++i) {
    std::vector<Letter> rot(cl.begin() + i, cl.end());
    rot.insert(rot.end(), cl.begin(), cl.begin() + i);
    std::vector<Letter> pre(cl.begin(), cl.begin() + i);
    if (core == Word::from_letters(rot)) {
      // f([x,y]) = h [x,y] h^-1 with h = outer * prefix^-1
      const Word h = outer * Word::from_letters(pre).inverse();
      const Word hi = h.inverse();
      F2Automorphism g{hi * f.img_x * h, hi * f.img_y * h};
      if (!(g.apply(comm) == comm)) throw ConsistencyError("commutator normalization failed");
      return g;
    }
    const auto& il = comm_inv.letters();
    std::vector<Letter> irot(il.begin() + i, il.end());
    irot.insert(irot.end(), il.begin(), il.begin() + i);
    if (core == Word::from_letters(irot))
      throw OrientationReversedError("boundary word maps to a conjugate of its inverse");
  }
  throw PreconditionError("image of [x,y] is not conjugate to [x,y]");
}

BundlePresentation bundle_presentation(const F2Automorphism& f) {
  const Word comm = Word::commutator(Word::gen(0), Word::gen(1));
  if (!(f.apply(comm) == comm))
    throw PreconditionError("automorphism must fix the boundary word [x,y] exactly");
  const Word t = Word::gen(2);
  const Word rx = t * Word::gen(0) * t.inverse() * f.img_x.inverse();
  const Word ry = t * Word::gen(1) * t.inverse() * f.img_y.inverse();
  return {Presentation(3, {rx, ry}), t, comm};
}

fpgroup::CosetTable nine_fold_cover(const BundlePresentation& bp, const Monodromy& mono) {
  if (!mono.pseudo_anosov()) throw PreconditionError("monodromy must have |trace| > 2");
  const Mat2 t_action = exactlin::mat2_inverse_mod(mono.m, 3);

  auto label = [](long long a, long long b) { return static_cast<int>(a * 3 + b); };
  std::vector<int> imx(9), imy(9), imt(9);
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b) {
      imx[label(a, b)] = label((a + 1) % 3, b);
      imy[label(a, b)] = label(a, (b + 1) % 3);
      imt[label(a, b)] = label((t_action.a * a + t_action.b * b) % 3,
                               (t_action.c * a + t_action.d * b) % 3);
    }
  auto table = fpgroup::coset_table_from_action(
      bp.pres, {Permutation(imx), Permutation(imy), Permutation(imt)});

  // base-label sanity: x^3, y^3, [x,y] and t stabilize (0,0); x and y do not
  const Word x = Word::gen(0), y = Word::gen(1);
  for (const Word& w : {x.pow(3), y.pow(3), bp.l, bp.m})
    if (table.apply_word(0, w) != 0) throw ConsistencyError("base label is not stabilized");
  if (table.apply_word(0, x) == 0 || table.apply_word(0, y) == 0)
    throw ConsistencyError("fiber generators unexpectedly fix the base label");
  return table;
}

fpgroup::CosetTable nine_fold_cover(const Monodromy& mono) {
  const F2Automorphism f = normalize_commutator(lift_to_automorphism(factor_sl2z(mono)));
  return nine_fold_cover(bundle_presentation(f), mono);
}

long long filled_betti(const Presentation& pres, const std::vector<Word>& fillings) {
  std::vector<Word> rels = pres.relators;
  rels.insert(rels.end(), fillings.begin(), fillings.end());
  return fpgroup::abelianization(Presentation(pres.num_gens, std::move(rels))).betti;
}

long long zero_filled_betti(const Monodromy& mono) {
  const F2Automorphism f = normalize_commutator(lift_to_automorphism(factor_sl2z(mono)));
  const BundlePresentation bp = bundle_presentation(f);
  const auto table = nine_fold_cover(bp, mono);
  const auto data = fpgroup::schreier_transversal(table);
  const auto sub = fpgroup::subgroup_presentation(bp.pres, table, data);
  const auto tori = fpgroup::peripheral_tori(table, data, bp.m, bp.l);
  std::vector<Word> fillings;
  fillings.reserve(tori.size());
  for (const auto& torus : tori) fillings.push_back(torus.gen_second);
  return filled_betti(sub, fillings);
}

std::vector<CycleTableRow> cycle_table() {
  const std::vector<std::vector<Mat2>> reps{
      {Mat2{1, 0, 0, 1}},
      {Mat2{1, 1, 0, 1}, Mat2{1, 2, 0, 1}},
      {Mat2{2, 0, 0, 2}},
      {Mat2{2, 1, 0, 2}, Mat2{2, 2, 0, 2}},
      {Mat2{0, 2, 1, 0}},
  };
  std::vector<CycleTableRow> rows;
  for (size_t i = 0; i < reps.size(); ++i) {
    CycleTableRow row{reps[i], {}, i == 0};
    row.cycle_lengths = exactlin::cycle_decomposition(exactlin::mod_p_permutation(reps[i][0], 3));
    for (size_t j = 1; j < reps[i].size(); ++j)
      if (exactlin::cycle_decomposition(exactlin::mod_p_permutation(reps[i][j], 3)) != row.cycle_lengths)
        throw ConsistencyError("representatives of one class disagree on cycle lengths");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slopecert::ptbundle
