#pragma once

#include <vector>

#include "slopecert/exactlin.hpp"

namespace slopecert::fpgroup {

// One letter of a group word: generator index plus exponent +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;
  bool operator==(const Letter& rhs) const = default;
};

// Freely reduced word over indexed generators. Generators are anonymous by
// design; names live only at the CLI boundary.
class Word {
 public:
  Word() = default;
  static Word from_letters(const std::vector<Letter>& letters);
  static Word gen(int g, int exp = 1);
  static Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  size_t size() const { return letters_.size(); }

  Word inverse() const;
  Word reversed() const;  // letters in reverse order, exponents kept
  Word operator*(const Word& rhs) const;
  Word pow(long long k) const;

  // w = conj * K * conj^-1 with K cyclically reduced; returns K.
  Word cyclically_reduced(Word* conj = nullptr) const;

  std::vector<long long> exponent_vector(int num_gens) const;
  long long total_exponent() const;
  int max_gen() const;  // -1 for the empty word

  bool operator==(const Word& rhs) const = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const std::vector<Letter>& letters);

// Finitely presented group; relators are kept freely and cyclically reduced.
struct Presentation {
  int num_gens = 0;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(int gens, std::vector<Word> rels);
};

// Exponent-sum matrix: one row per relator, one column per generator.
exactlin::IntMatrix relator_matrix(const Presentation& pres);

// Right action of the generators on the cosets of a finite-index subgroup;
// coset 0 is the base coset. Encodes a connected finite cover.
class CosetTable {
 public:
  explicit CosetTable(std::vector<exactlin::Permutation> actions);

  int size() const { return degree_; }
  int num_gens() const { return static_cast<int>(act_.size()); }
  const exactlin::Permutation& action(int g) const { return act_[g]; }

  int apply_letter(int coset, const Letter& l) const;
  int apply_word(int coset, const Word& w) const;
  exactlin::Permutation word_permutation(const Word& w) const;

 private:
  std::vector<exactlin::Permutation> act_;
  std::vector<exactlin::Permutation> inv_;
  int degree_ = 0;
};

// Element of the dihedral group D_2n = Z_2 x| Z_n: a rotation, optionally
// followed by the fixed reflection. The flip acts on rotations by negation.
struct DihedralElement {
  int n = 1;
  int rot = 0;
  bool flip = false;

  static DihedralElement id(int n) { return {n, 0, false}; }
  static DihedralElement rotation(int n, int r);
  static DihedralElement reflection(int n, int r);

  DihedralElement operator*(const DihedralElement& rhs) const;
  DihedralElement inverse() const;
  bool is_id() const { return rot == 0 && !flip; }
  int code() const { return rot + (flip ? n : 0); }  // in [0, 2n)
  bool operator==(const DihedralElement& rhs) const = default;
};

DihedralElement eval_word_dihedral(const Word& w, const std::vector<DihedralElement>& images);

std::vector<DihedralElement> dihedral_all_elements(int n);
std::vector<DihedralElement> dihedral_generated_subgroup(const std::vector<DihedralElement>& gens, int n);

// Coset table of subgroup\<images> acting on the right, for a homomorphism
// into a dihedral group given by generator images. The images must satisfy
// every relator.
CosetTable coset_table_from_hom(const Presentation& pres,
                                const std::vector<DihedralElement>& images,
                                const std::vector<DihedralElement>& subgroup);

// Coset table from an explicit permutation action of the generators; every
// relator must act as the identity.
CosetTable coset_table_from_action(const Presentation& pres,
                                   std::vector<exactlin::Permutation> actions);

// Breadth-first Schreier transversal plus the Schreier generators of the
// subgroup, as words in the base group. edge_gen[c][g] is the index of the
// Schreier generator attached to the edge coset c --g-->, or -1 when that
// edge carries a freely trivial generator (a tree edge).
struct SchreierData {
  std::vector<Word> transversal;
  std::vector<Word> subgroup_gens;
  std::vector<std::vector<int>> edge_gen;
};

SchreierData schreier_transversal(const CosetTable& table);

// Reidemeister rewriting of a word stabilizing the base coset into a word
// over the Schreier generators. Round trip: evaluating the result back into
// the base group is freely equal to w.
Word rewrite_word(const SchreierData& data, const CosetTable& table, const Word& w);

Presentation subgroup_presentation(const Presentation& pres, const CosetTable& table);
Presentation subgroup_presentation(const Presentation& pres, const CosetTable& table,
                                   const SchreierData& data);

// H1 as betti rank plus the invariant-factor torsion chain.
struct HomologySummary {
  long long betti = 0;
  std::vector<exactlin::Int> torsion;
  bool operator==(const HomologySummary& rhs) const = default;
};

HomologySummary abelianization(const Presentation& pres);

// Columns = exponent-sum vectors of the words in the ambient free module
// Z^num_gens, before passing to the quotient by the relator rows.
exactlin::IntMatrix h1_image(const Presentation& sub, const std::vector<Word>& words);

// One boundary torus of the cover: an orbit of the peripheral subgroup
// <m, l> on cosets, the stabilizer lattice in Z^2 = <m> x <l> exponents,
// and the two peripheral generator words rewritten into subgroup generators.
// The covering degree of the torus equals the index of the stabilizer.
struct PeripheralTorus {
  std::vector<int> orbit;  // sorted coset indices
  int base_coset = 0;      // smallest index in the orbit
  exactlin::Lattice2 stabilizer;
  Word gen_first;   // conjugated m^a l^b for HNF basis row (a, b)
  Word gen_second;  // conjugated l^d for HNF basis row (0, d)
  long long degree = 0;
};

std::vector<PeripheralTorus> peripheral_tori(const CosetTable& table, const SchreierData& data,
                                             const Word& m, const Word& l);

// Partition of D_2n into (A,A)-double cosets, A = <fixed reflection>.
// For odd n the count is (n+1)/2 and every class except A itself is the
// union of exactly two right cosets of A.
std::vector<std::vector<DihedralElement>> double_cosets_dihedral(int n);

}  // namespace slopecert::fpgroup
