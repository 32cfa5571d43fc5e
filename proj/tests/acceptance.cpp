// Acceptance suite: runs every certification-level criterion end to end and
// prints one pass/fail line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "docjson.hpp"
#include "slopecert/certify.hpp"

using namespace slopecert;
using exactlin::Int;
using exactlin::IntMatrix;
using exactlin::Mat2;

namespace {

struct Check {
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::vector<Mat2> pseudo_anosov_box(long long bound) {
  std::vector<Mat2> out;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d) {
          const Mat2 m{a, b, c, d};
          if (m.det() == 1 && (m.trace() > 2 || m.trace() < -2)) out.push_back(m);
        }
  return out;
}

std::vector<twobridge::TwoBridgePair> knot_range(int alpha_min, int alpha_max) {
  std::vector<twobridge::TwoBridgePair> out;
  for (int a = alpha_min; a <= alpha_max; a += 2)
    for (int b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
  return out;
}

std::string fmt_cycles(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// ---- criteria ----

void criterion1_cycle_table(Check& c) {
  const auto rows = ptbundle::cycle_table();
  c.require(rows.size() == 5, "expected five rows");
  const std::vector<std::vector<int>> expected{
      std::vector<int>(9, 1), {1, 1, 1, 3, 3}, {1, 2, 2, 2, 2}, {1, 2, 6}, {1, 4, 4}};
  for (size_t i = 0; i < rows.size() && i < expected.size(); ++i)
    c.require(rows[i].cycle_lengths == expected[i],
              "row " + std::to_string(i) + " is " + fmt_cycles(rows[i].cycle_lengths));
  c.require(rows[0].identity_misprint_note, "identity row must carry the misprint flag");
  for (size_t i = 1; i < rows.size(); ++i)
    c.require(!rows[i].identity_misprint_note, "only the identity row is flagged");

  // the CLI table document carries the same rows
  const auto doc = cli::table_document();
  c.require(doc["cycle_table"].size() == 5, "document row count");
  for (size_t i = 0; i < 5; ++i)
    c.require(doc["cycle_table"][i]["cycle_lengths"].get<std::vector<int>>() == expected[i],
              "document row " + std::to_string(i));
  c.require(doc["cycle_table"][0].contains("note"), "document misprint note");
}

void criterion2_three_boundary_components(Check& c) {
  int classes = 0;
  for (long long a = 0; a < 3; ++a)
    for (long long b = 0; b < 3; ++b)
      for (long long cc = 0; cc < 3; ++cc)
        for (long long d = 0; d < 3; ++d) {
          const Mat2 m{a, b, cc, d};
          if (((m.det() % 3) + 3) % 3 != 1) continue;
          ++classes;
          const auto p = exactlin::mod_p_permutation(m, 3);
          const auto cycles = exactlin::cycle_decomposition(p);
          c.require(cycles.size() >= 3, "cycle count < 3 for a residue class");
          c.require(p.apply(0) == 0, "label (0,0) not fixed");
        }
  c.require(classes == 24, "expected 24 determinant-1 residue classes");
}

void criterion3_bundle_certification(Check& c) {
  const auto box = pseudo_anosov_box(3);
  c.require(!box.empty(), "empty monodromy box");
  for (const Mat2& m : box) {
    const auto cert = certify::certify_ptb(ptbundle::Monodromy(m));
    std::ostringstream tag;
    tag << "ptb[" << m.a << "," << m.b << "," << m.c << "," << m.d << "]";
    c.require(cert.verdict == certify::Verdict::certified, tag.str() + " not certified");
    c.require(cert.condition1 && cert.condition2 && cert.condition3,
              tag.str() + " has a false condition");
    c.require(cert.zero_filled_betti.has_value() && *cert.zero_filled_betti == 1,
              tag.str() + " zero-filled betti != 1");
    c.require(cert.zero_filled_betti.has_value() &&
                  (*cert.zero_filled_betti == 1) == cert.condition3,
              tag.str() + " cross-check disagreement");
  }
}

void criterion4_twobridge_structure(Check& c) {
  for (const auto& k : knot_range(5, 13)) {
    const std::string tag = "b(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ")";
    const auto sp = twobridge::schubert_presentation(k);
    const auto lam = twobridge::longitude_word(k);

    const auto irr = twobridge::irregular_cover(k);
    const auto irr_data = fpgroup::schreier_transversal(irr);
    const auto irr_tori = fpgroup::peripheral_tori(irr, irr_data, sp.meridian, lam);
    c.require(static_cast<int>(irr_tori.size()) == (k.alpha + 1) / 2,
              tag + " irregular torus count");
    int ones = 0;
    for (const auto& t : irr_tori) {
      if (t.degree == 1) ++ones;
      else c.require(t.degree == 2, tag + " irregular torus of degree > 2");
    }
    c.require(ones == 1, tag + " does not have exactly one degree-one torus");

    const auto reg = twobridge::regular_cover(k);
    const auto reg_data = fpgroup::schreier_transversal(reg);
    const auto reg_tori = fpgroup::peripheral_tori(reg, reg_data, sp.meridian, lam);
    c.require(static_cast<int>(reg_tori.size()) == k.alpha, tag + " regular torus count");
    for (const auto& t : reg_tori) c.require(t.degree == 2, tag + " regular torus degree != 2");

    const auto classes = fpgroup::double_cosets_dihedral(k.alpha);
    c.require(static_cast<int>(classes.size()) == (k.alpha + 1) / 2, tag + " double coset count");
    int singletons = 0;
    for (const auto& cls : classes) {
      if (cls.size() == 2) ++singletons;
      else c.require(cls.size() == 4, tag + " double coset not two right cosets");
    }
    c.require(singletons == 1, tag + " A is not the unique single-coset class");
  }
}

void criterion5_twobridge_certification(Check& c) {
  for (const auto& k : knot_range(5, 13)) {
    const auto cert = certify::certify_twobridge(k);
    c.require(cert.verdict == certify::Verdict::certified,
              "b(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ") not certified");
  }
  const auto trefoil = certify::certify_twobridge(twobridge::TwoBridgePair(3, 1));
  c.require(trefoil.verdict == certify::Verdict::not_applicable,
            "b(3,1) must be not-applicable");
}

void criterion6_lens_space_anchor(Check& c) {
  auto pairs = knot_range(5, 13);
  pairs.emplace_back(3, 1);
  for (const auto& k : pairs) {
    const auto h = twobridge::branched_double_cover_h1(k);
    const bool ok = h.betti == 0 && h.torsion.size() == 1 && h.torsion[0] == k.alpha;
    c.require(ok, "H1 of the branched double cover of b(" + std::to_string(k.alpha) + "," +
                      std::to_string(k.beta) + ") is not Z_alpha");
  }
}

void criterion7_knot_exterior_sanity(Check& c) {
  auto pairs = knot_range(5, 13);
  pairs.emplace_back(3, 1);
  for (const auto& k : pairs) {
    const std::string tag = "b(" + std::to_string(k.alpha) + "," + std::to_string(k.beta) + ")";
    const auto sp = twobridge::schubert_presentation(k);
    const auto h = fpgroup::abelianization(sp.pres);
    c.require(h.betti == 1 && h.torsion.empty(), tag + " group does not abelianize to Z");

    auto rels_m = sp.pres.relators;
    rels_m.push_back(sp.meridian);
    const auto hm = fpgroup::abelianization(fpgroup::Presentation(2, rels_m));
    c.require(hm.betti == 0 && hm.torsion.empty(), tag + " meridian filling does not kill H1");

    const auto lam = twobridge::longitude_word(k);
    auto rels_l = sp.pres.relators;
    rels_l.push_back(lam);
    c.require(fpgroup::abelianization(fpgroup::Presentation(2, rels_l)).betti == 1,
              tag + " longitude filling betti != 1");

    c.require(eval_word_dihedral(lam, twobridge::dihedral_rep(k)).is_id(),
              tag + " dihedral image of the longitude is not the identity");
  }
}

void criterion8_algebra_property_suites(Check& c) {
  std::mt19937 rng(0x5105CE27);
  std::uniform_int_distribution<int> entry(-20, 20);
  std::uniform_int_distribution<int> dim(1, 8);

  // Smith form contract on 1000 random matrices up to 8x8
  for (int iter = 0; iter < 1000; ++iter) {
    const int r = dim(rng), cols = dim(rng);
    IntMatrix a(r, cols);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    const auto d = exactlin::smith_normal_form(a);
    if (!(d.u * a * d.v == d.s)) {
      c.require(false, "UAV != S");
      return;
    }
    const Int du = d.u.determinant(), dv = d.v.determinant();
    c.require(du == 1 || du == -1, "U not unimodular");
    c.require(dv == 1 || dv == -1, "V not unimodular");
    const int n = std::min(r, cols);
    for (int i = 0; i + 1 < n; ++i) {
      const Int &di = d.s.at(i, i), &dj = d.s.at(i + 1, i + 1);
      c.require(di >= 0 && dj >= 0, "negative invariant factor");
      c.require(di == 0 ? dj == 0 : dj % di == 0, "divisibility chain broken");
    }
    if (!c.failures.empty()) return;
  }

  // HNF canonicity on random generating sets of random lattices
  std::uniform_int_distribution<long long> small(-7, 7);
  for (int iter = 0; iter < 500; ++iter) {
    const long long a = 1 + (rng() % 6), d = 1 + (rng() % 6), b = small(rng);
    const long long k1 = small(rng), k2 = small(rng);
    const std::vector<exactlin::Vec2> g1{{a, b}, {0, d}};
    const std::vector<exactlin::Vec2> g2{
        {a + k1 * 0, b + k1 * d}, {-a, -b}, {a * k2, b * k2 + d}};
    // g2 spans the same lattice: row1 + k1*row2, -row1, k2*row1 + row2
    if (!(exactlin::hermite_lattice(g1) == exactlin::hermite_lattice(g2))) {
      c.require(false, "HNF canonicity violated");
      return;
    }
  }

  // Nielsen-Schreier rank over sampled transitive actions, g in {2,3}
  int sampled = 0;
  for (int gens : {2, 3})
    for (int n = 1; n <= 6; ++n)
      for (int iter = 0; iter < 10; ++iter) {
        std::vector<exactlin::Permutation> acts;
        for (int g = 0; g < gens; ++g) {
          std::vector<int> im(n);
          std::iota(im.begin(), im.end(), 0);
          std::shuffle(im.begin(), im.end(), rng);
          acts.emplace_back(std::move(im));
        }
        fpgroup::Presentation free_g(gens, {});
        try {
          const auto table = fpgroup::coset_table_from_action(free_g, acts);
          const auto data = fpgroup::schreier_transversal(table);
          c.require(static_cast<int>(data.subgroup_gens.size()) == n * (gens - 1) + 1,
                    "Nielsen-Schreier rank mismatch");
          // Reidemeister-Schreier round trip for every Schreier generator
          for (size_t i = 0; i < data.subgroup_gens.size(); ++i) {
            c.require(table.apply_word(0, data.subgroup_gens[i]) == 0,
                      "Schreier generator does not stabilize the base coset");
            c.require(fpgroup::rewrite_word(data, table, data.subgroup_gens[i]) ==
                          fpgroup::Word::gen(static_cast<int>(i)),
                      "Schreier generator round trip failed");
          }
          ++sampled;
        } catch (const InputError&) {
          // intransitive sample; skip
        }
        if (!c.failures.empty()) return;
      }
  c.require(sampled >= 40, "too few transitive actions sampled");
}

void criterion9_determinism(Check& c) {
  std::vector<cli::BatchInput> inputs = cli::enumerate_ptb_inputs(3);
  for (const auto& in : cli::enumerate_tb_inputs(5, 13)) inputs.push_back(in);
  const cli::DocOptions opts{/*evidence=*/true, /*timing=*/false};
  const int threads = cli::batch_threads_from_env();
  const std::string run1 = cli::dump_json(cli::run_batch(inputs, opts, threads));
  const std::string run2 = cli::dump_json(cli::run_batch(inputs, opts, threads));
  c.require(run1 == run2, "batch runs differ byte-for-byte");
  const std::string serial = cli::dump_json(cli::run_batch(inputs, opts, 1));
  c.require(serial == run1, "threaded and serial batch runs differ");
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> fn;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cycle table reproduction", 1.0, criterion1_cycle_table},
      {2, "three-boundary-component guarantee mod 3", 1.0, criterion2_three_boundary_components},
      {3, "bundle certification, entries in [-3,3]", 30.0, criterion3_bundle_certification},
      {4, "two-bridge cover structure, alpha 5..13", 60.0, criterion4_twobridge_structure},
      {5, "two-bridge certification and trefoil exclusion", 60.0, criterion5_twobridge_certification},
      {6, "lens-space anchor H1 = Z_alpha", 60.0, criterion6_lens_space_anchor},
      {7, "knot-exterior homology sanity", 60.0, criterion7_knot_exterior_sanity},
      {8, "algebra property suites", 60.0, criterion8_algebra_property_suites},
      {9, "batch determinism", 120.0, criterion9_determinism},
  };

  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.fn(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.budget_seconds)
      check.failures.push_back("time budget exceeded: " + std::to_string(secs) + " s > " +
                               std::to_string(cr.budget_seconds) + " s");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    if (check.failures.empty()) {
      line << "[PASS] criterion " << cr.id << ": " << cr.name << " (" << secs << " s)";
    } else {
      ++failed;
      line << "[FAIL] criterion " << cr.id << ": " << cr.name << " (" << secs
           << " s) -- " << check.failures.front();
      if (check.failures.size() > 1)
        line << " (+" << check.failures.size() - 1 << " more)";
    }
    std::cout << line.str() << std::endl;
  }
  if (failed == 0) std::cout << "all " << criteria.size() << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
