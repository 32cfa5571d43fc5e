#include "slopecert/fpgroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace slopecert::fpgroup {

using exactlin::Int;
using exactlin::IntMatrix;
using exactlin::Permutation;

Word Word::from_letters(const std::vector<Letter>& letters) {
  Word w;
  for (const Letter& l : letters) {
    if (l.exp != 1 && l.exp != -1) throw InputError("letter exponent must be +1 or -1");
    if (l.gen < 0) throw InputError("negative generator index");
    if (!w.letters_.empty() && w.letters_.back().gen == l.gen && w.letters_.back().exp == -l.exp)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

Word Word::gen(int g, int exp) { return from_letters({Letter{g, exp}}); }

Word Word::commutator(const Word& a, const Word& b) {
  return a * b * a.inverse() * b.inverse();
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(Letter{it->gen, -it->exp});
  return w;  // reversal of a reduced word is reduced
}

Word Word::reversed() const {
  Word w;
  w.letters_.assign(letters_.rbegin(), letters_.rend());
  return w;
}

Word Word::operator*(const Word& rhs) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return from_letters(all);
}

Word Word::pow(long long k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word Word::cyclically_reduced(Word* conj) const {
  std::vector<Letter> ls = letters_;
  std::vector<Letter> prefix;
  while (ls.size() >= 2 && ls.front().gen == ls.back().gen && ls.front().exp == -ls.back().exp) {
    prefix.push_back(ls.front());
    ls.erase(ls.begin());
    ls.pop_back();
  }
  if (conj) *conj = Word::from_letters(prefix);
  Word w;
  w.letters_ = std::move(ls);
  return w;
}

std::vector<long long> Word::exponent_vector(int num_gens) const {
  std::vector<long long> v(num_gens, 0);
  for (const Letter& l : letters_) {
    if (l.gen >= num_gens) throw InputError("word uses generator outside the presentation");
    v[l.gen] += l.exp;
  }
  return v;
}

long long Word::total_exponent() const {
  long long s = 0;
  for (const Letter& l : letters_) s += l.exp;
  return s;
}

int Word::max_gen() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word free_reduce(const std::vector<Letter>& letters) { return Word::from_letters(letters); }

Presentation::Presentation(int gens, std::vector<Word> rels) : num_gens(gens) {
  if (gens < 0) throw InputError("negative generator count");
  relators.reserve(rels.size());
  for (Word& r : rels) {
    if (r.max_gen() >= gens) throw InputError("relator uses generator outside the presentation");
    relators.push_back(r.cyclically_reduced());
  }
}

IntMatrix relator_matrix(const Presentation& pres) {
  IntMatrix m(static_cast<int>(pres.relators.size()), pres.num_gens);
  for (int i = 0; i < m.rows(); ++i) {
    const auto v = pres.relators[i].exponent_vector(pres.num_gens);
    for (int j = 0; j < pres.num_gens; ++j) m.at(i, j) = v[j];
  }
  return m;
}

CosetTable::CosetTable(std::vector<Permutation> actions) : act_(std::move(actions)) {
  if (act_.empty()) throw InputError("coset table needs at least one generator");
  degree_ = act_[0].degree();
  for (const Permutation& p : act_)
    if (p.degree() != degree_) throw InputError("coset table actions of unequal degree");
  if (degree_ == 0) throw InputError("coset table on zero cosets");
  inv_.reserve(act_.size());
  for (const Permutation& p : act_) inv_.push_back(p.inverse());

  // single cover component: the generator edges connect every coset
  std::vector<bool> seen(degree_, false);
  std::deque<int> queue{0};
  seen[0] = true;
  int reached = 1;
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (size_t g = 0; g < act_.size(); ++g)
      for (const Permutation* p : {&act_[g], &inv_[g]}) {
        const int d = p->apply(c);
        if (!seen[d]) {
          seen[d] = true;
          ++reached;
          queue.push_back(d);
        }
      }
  }
  if (reached != degree_) throw InputError("coset action is not transitive");
}

int CosetTable::apply_letter(int coset, const Letter& l) const {
  return l.exp > 0 ? act_[l.gen].apply(coset) : inv_[l.gen].apply(coset);
}

int CosetTable::apply_word(int coset, const Word& w) const {
  for (const Letter& l : w.letters()) coset = apply_letter(coset, l);
  return coset;
}

Permutation CosetTable::word_permutation(const Word& w) const {
  std::vector<int> im(degree_);
  for (int c = 0; c < degree_; ++c) im[c] = apply_word(c, w);
  return Permutation(std::move(im));
}

DihedralElement DihedralElement::rotation(int n, int r) {
  r %= n;
  if (r < 0) r += n;
  return {n, r, false};
}

DihedralElement DihedralElement::reflection(int n, int r) {
  r %= n;
  if (r < 0) r += n;
  return {n, r, true};
}

DihedralElement DihedralElement::operator*(const DihedralElement& rhs) const {
  if (n != rhs.n) throw InputError("dihedral elements from different groups");
  // (r1, f1) * (r2, f2) = (r1 * (-1)^f2 + r2, f1 xor f2)
  int r = ((rhs.flip ? -rot : rot) + rhs.rot) % n;
  if (r < 0) r += n;
  return {n, r, flip != rhs.flip};
}

DihedralElement DihedralElement::inverse() const {
  return flip ? *this : rotation(n, -rot);
}

DihedralElement eval_word_dihedral(const Word& w, const std::vector<DihedralElement>& images) {
  if (images.empty()) throw InputError("no generator images");
  DihedralElement e = DihedralElement::id(images[0].n);
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(images.size())) throw InputError("word uses generator without image");
    e = e * (l.exp > 0 ? images[l.gen] : images[l.gen].inverse());
  }
  return e;
}

std::vector<DihedralElement> dihedral_all_elements(int n) {
  std::vector<DihedralElement> out;
  out.reserve(2 * n);
  for (int f = 0; f < 2; ++f)
    for (int r = 0; r < n; ++r) out.push_back({n, r, f == 1});
  return out;
}

std::vector<DihedralElement> dihedral_generated_subgroup(const std::vector<DihedralElement>& gens, int n) {
  std::set<int> codes;
  std::deque<DihedralElement> queue{DihedralElement::id(n)};
  codes.insert(DihedralElement::id(n).code());
  std::vector<DihedralElement> out{DihedralElement::id(n)};
  while (!queue.empty()) {
    const DihedralElement e = queue.front();
    queue.pop_front();
    for (const DihedralElement& g : gens) {
      const DihedralElement f = e * g;
      if (codes.insert(f.code()).second) {
        out.push_back(f);
        queue.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DihedralElement& a, const DihedralElement& b) { return a.code() < b.code(); });
  return out;
}

namespace {

bool is_dihedral_subgroup(const std::vector<DihedralElement>& sub, int n) {
  std::set<int> codes;
  bool has_id = false;
  for (const DihedralElement& e : sub) {
    codes.insert(e.code());
    has_id = has_id || e.is_id();
  }
  if (!has_id || codes.size() != sub.size()) return false;
  for (const DihedralElement& a : sub) {
    if (!codes.count(a.inverse().code())) return false;
    for (const DihedralElement& b : sub)
      if (!codes.count((a * b).code())) return false;
  }
  return true;
}

}  // namespace

CosetTable coset_table_from_hom(const Presentation& pres,
                                const std::vector<DihedralElement>& images,
                                const std::vector<DihedralElement>& subgroup) {
  if (static_cast<int>(images.size()) != pres.num_gens)
    throw InputError("one image per generator required");
  if (subgroup.empty()) throw InputError("empty subgroup");
  const int n = subgroup[0].n;
  for (const DihedralElement& e : images)
    if (e.n != n) throw InputError("images and subgroup from different dihedral groups");
  if (!is_dihedral_subgroup(subgroup, n)) throw InputError("subgroup set is not a subgroup");

  for (const Word& r : pres.relators)
    if (!eval_word_dihedral(r, images).is_id())
      throw RepresentationInvalidError("generator images do not satisfy a relator");

  // Right cosets (subgroup)\<images>, canonicalized as sorted code sets.
  auto coset_key = [&](const DihedralElement& g) {
    std::vector<int> key;
    key.reserve(subgroup.size());
    for (const DihedralElement& a : subgroup) key.push_back((a * g).code());
    std::sort(key.begin(), key.end());
    return key;
  };

  std::map<std::vector<int>, int> index_of;
  std::vector<DihedralElement> rep{DihedralElement::id(n)};
  index_of[coset_key(rep[0])] = 0;
  std::deque<int> queue{0};
  std::vector<std::vector<int>> edges;  // [coset][gen]
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    if (static_cast<int>(edges.size()) <= c) edges.resize(c + 1);
    edges[c].assign(pres.num_gens, -1);
    for (int g = 0; g < pres.num_gens; ++g) {
      const DihedralElement target = rep[c] * images[g];
      const auto key = coset_key(target);
      auto [it, inserted] = index_of.try_emplace(key, static_cast<int>(rep.size()));
      if (inserted) {
        rep.push_back(target);
        queue.push_back(it->second);
      }
      edges[c][g] = it->second;
    }
  }

  const int count = static_cast<int>(rep.size());
  edges.resize(count);
  std::vector<Permutation> actions;
  actions.reserve(pres.num_gens);
  for (int g = 0; g < pres.num_gens; ++g) {
    std::vector<int> im(count);
    for (int c = 0; c < count; ++c) im[c] = edges[c][g];
    actions.emplace_back(std::move(im));
  }
  return CosetTable(std::move(actions));
}

CosetTable coset_table_from_action(const Presentation& pres, std::vector<Permutation> actions) {
  if (static_cast<int>(actions.size()) != pres.num_gens)
    throw InputError("one permutation per generator required");
  CosetTable table(std::move(actions));
  for (const Word& r : pres.relators)
    if (!table.word_permutation(r).is_identity())
      throw ActionInvalidError("a relator acts nontrivially");
  return table;
}

SchreierData schreier_transversal(const CosetTable& table) {
  const int n = table.size();
  const int gens = table.num_gens();
  SchreierData data;
  data.transversal.assign(n, Word());
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    for (int g = 0; g < gens; ++g)
      for (int exp : {1, -1}) {
        const Letter l{g, exp};
        const int d = table.apply_letter(c, l);
        if (!seen[d]) {
          seen[d] = true;
          data.transversal[d] = data.transversal[c] * Word::gen(g, exp);
          queue.push_back(d);
        }
      }
  }

  data.edge_gen.assign(n, std::vector<int>(gens, -1));
  for (int c = 0; c < n; ++c)
    for (int g = 0; g < gens; ++g) {
      const int d = table.apply_letter(c, Letter{g, 1});
      const Word u = data.transversal[c] * Word::gen(g) * data.transversal[d].inverse();
      if (u.empty()) continue;  // tree edge
      data.edge_gen[c][g] = static_cast<int>(data.subgroup_gens.size());
      data.subgroup_gens.push_back(u);
    }
  return data;
}

Word rewrite_word(const SchreierData& data, const CosetTable& table, const Word& w) {
  if (table.apply_word(0, w) != 0)
    throw NotInSubgroupError("word does not stabilize the base coset");
  std::vector<Letter> out;
  int c = 0;
  for (const Letter& l : w.letters()) {
    if (l.exp > 0) {
      const int idx = data.edge_gen[c][l.gen];
      if (idx >= 0) out.push_back(Letter{idx, 1});
      c = table.apply_letter(c, l);
    } else {
      c = table.apply_letter(c, l);
      const int idx = data.edge_gen[c][l.gen];
      if (idx >= 0) out.push_back(Letter{idx, -1});
    }
  }
  return Word::from_letters(out);
}

Presentation subgroup_presentation(const Presentation& pres, const CosetTable& table) {
  return subgroup_presentation(pres, table, schreier_transversal(table));
}

Presentation subgroup_presentation(const Presentation& pres, const CosetTable& table,
                                   const SchreierData& data) {
  std::vector<Word> rels;
  rels.reserve(pres.relators.size() * table.size());
  for (int c = 0; c < table.size(); ++c)
    for (const Word& r : pres.relators) {
      const Word conj = data.transversal[c] * r * data.transversal[c].inverse();
      rels.push_back(rewrite_word(data, table, conj));
    }
  return Presentation(static_cast<int>(data.subgroup_gens.size()), std::move(rels));
}

HomologySummary abelianization(const Presentation& pres) {
  const auto snf = smith_normal_form(relator_matrix(pres));
  const auto factors = snf.invariant_factors();
  HomologySummary h;
  h.betti = pres.num_gens - static_cast<long long>(factors.size());
  for (const Int& d : factors)
    if (d > 1) h.torsion.push_back(d);
  return h;
}

IntMatrix h1_image(const Presentation& sub, const std::vector<Word>& words) {
  IntMatrix m(sub.num_gens, static_cast<int>(words.size()));
  for (int j = 0; j < m.cols(); ++j) {
    const auto v = words[j].exponent_vector(sub.num_gens);
    for (int i = 0; i < sub.num_gens; ++i) m.at(i, j) = v[i];
  }
  return m;
}

std::vector<PeripheralTorus> peripheral_tori(const CosetTable& table, const SchreierData& data,
                                             const Word& m, const Word& l) {
  const Permutation pm = table.word_permutation(m);
  const Permutation pl = table.word_permutation(l);
  // The peripheral subgroup is Z^2, so its action on any finite fiber must
  // be abelian. This is the finite-quotient check of the commutativity
  // contract on (m, l).
  if (!pm.commutes_with(pl))
    throw ConsistencyError("peripheral words do not commute on the cosets");
  const Permutation pmi = pm.inverse();
  const Permutation pli = pl.inverse();

  std::vector<PeripheralTorus> tori;
  std::vector<bool> claimed(table.size(), false);
  for (int c0 = 0; c0 < table.size(); ++c0) {
    if (claimed[c0]) continue;
    // Orbit of <m, l> with exponent bookkeeping; closing edges generate the
    // stabilizer lattice.
    std::map<int, exactlin::Vec2> reach;
    reach[c0] = {0, 0};
    std::deque<int> queue{c0};
    std::vector<exactlin::Vec2> closing;
    const std::array<std::pair<const Permutation*, exactlin::Vec2>, 4> moves{{
        {&pm, {1, 0}}, {&pmi, {-1, 0}}, {&pl, {0, 1}}, {&pli, {0, -1}}}};
    while (!queue.empty()) {
      const int c = queue.front();
      queue.pop_front();
      const exactlin::Vec2 v = reach[c];
      for (const auto& [perm, step] : moves) {
        const int d = perm->apply(c);
        const exactlin::Vec2 w{v.x + step.x, v.y + step.y};
        auto it = reach.find(d);
        if (it == reach.end()) {
          reach[d] = w;
          queue.push_back(d);
        } else {
          closing.push_back({w.x - it->second.x, w.y - it->second.y});
        }
      }
    }

    PeripheralTorus torus{
        {}, c0, exactlin::hermite_lattice(closing), Word(), Word(), 0};
    for (const auto& [coset, v] : reach) {
      torus.orbit.push_back(coset);
      claimed[coset] = true;
    }
    const exactlin::Int index = torus.stabilizer.index();
    if (index != static_cast<long long>(torus.orbit.size()))
      throw ConsistencyError("stabilizer index does not match orbit size");
    torus.degree = static_cast<long long>(index);

    const Word& tc = data.transversal[c0];
    const auto& basis = torus.stabilizer.basis();
    const long long a = static_cast<long long>(basis.at(0, 0));
    const long long b = static_cast<long long>(basis.at(0, 1));
    const long long d = static_cast<long long>(basis.at(1, 1));
    torus.gen_first = rewrite_word(data, table, tc * m.pow(a) * l.pow(b) * tc.inverse());
    torus.gen_second = rewrite_word(data, table, tc * l.pow(d) * tc.inverse());
    tori.push_back(std::move(torus));
  }

  long long total = 0;
  for (const PeripheralTorus& t : tori) total += t.degree;
  if (total != table.size()) throw ConsistencyError("torus degrees do not sum to the cover index");
  return tori;
}

std::vector<std::vector<DihedralElement>> double_cosets_dihedral(int n) {
  if (n < 1 || n % 2 == 0) throw InputError("dihedral double cosets require odd n >= 1");
  const auto all = dihedral_all_elements(n);
  const DihedralElement s = DihedralElement::reflection(n, 0);
  const std::array<DihedralElement, 2> a_elems{DihedralElement::id(n), s};

  std::vector<std::vector<DihedralElement>> classes;
  std::vector<bool> assigned(2 * n, false);
  for (const DihedralElement& g : all) {
    if (assigned[g.code()]) continue;
    std::set<int> codes;
    std::vector<DihedralElement> cls;
    for (const DihedralElement& x : a_elems)
      for (const DihedralElement& y : a_elems) {
        const DihedralElement e = x * g * y;
        if (codes.insert(e.code()).second) cls.push_back(e);
      }
    std::sort(cls.begin(), cls.end(),
              [](const DihedralElement& p, const DihedralElement& q) { return p.code() < q.code(); });
    for (const DihedralElement& e : cls) assigned[e.code()] = true;
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace slopecert::fpgroup
