#include "docjson.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "slopecert/ptbundle.hpp"
#include "slopecert/twobridge.hpp"

namespace slopecert::cli {

using certify::Certificate;
using certify::Verdict;
using exactlin::Int;
using exactlin::IntMatrix;
using exactlin::Mat2;

namespace {

long long checked_ll(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw Error("evidence entry exceeds the JSON integer range");
  return static_cast<long long>(x);
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(checked_ll(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json header() {
  ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool"] = kToolName;
  doc["tool_version"] = kToolVersion;
  return doc;
}

}  // namespace

ordered_json certificate_json(const Certificate& cert, const DocOptions& opts) {
  ordered_json c;
  c["input"] = cert.input_descriptor;
  c["verdict"] = certify::to_string(cert.verdict);
  if (cert.verdict == Verdict::not_applicable) {
    c["reason"] = cert.not_applicable_reason;
    return c;
  }
  c["cover_index"] = cert.cover_index;
  ordered_json tori = ordered_json::array();
  for (const auto& t : cert.tori) {
    ordered_json tj;
    tj["degree"] = t.degree;
    tj["orbit_size"] = t.orbit_size;
    tj["stabilizer"] = {{t.stab_a, t.stab_b}, {0, t.stab_d}};
    tori.push_back(std::move(tj));
  }
  c["boundary_tori"] = std::move(tori);
  c["t_tilde"] = cert.t_tilde;
  c["conditions"] = {
      {"at_least_three_boundary_tori", cert.condition1},
      {"t_tilde_degree_one", cert.condition2},
      {"rho_surjective", cert.condition3},
  };
  if (cert.evidence) {
    c["rank_evidence"] = {
        {"kernel_rank", cert.evidence->kernel_rank},
        {"projected_rank", cert.evidence->projected_rank},
    };
  }
  ordered_json h1;
  h1["betti"] = cert.h1_cover.betti;
  ordered_json torsion = ordered_json::array();
  for (const Int& d : cert.h1_cover.torsion) torsion.push_back(checked_ll(d));
  h1["torsion"] = std::move(torsion);
  c["h1_cover"] = std::move(h1);
  if (cert.zero_filled_betti) c["zero_filled_betti"] = *cert.zero_filled_betti;

  if (opts.evidence && cert.evidence) {
    ordered_json ev;
    ev["istar_columns"] = matrix_json(cert.evidence->istar_columns);
    ev["relator_matrix"] = matrix_json(cert.evidence->relator_matrix);
    ordered_json kernel = ordered_json::array();
    for (const auto& v : cert.evidence->kernel_vectors) {
      ordered_json vec = ordered_json::array();
      for (const Int& x : v) vec.push_back(checked_ll(x));
      kernel.push_back(std::move(vec));
    }
    ev["kernel_vectors"] = std::move(kernel);
    ev["projected_vectors"] = matrix_json(cert.evidence->projected);
    c["evidence"] = std::move(ev);
  }
  return c;
}

namespace {

ordered_json finish_document(ordered_json doc, const Certificate& cert, const DocOptions& opts,
                             double elapsed_ms) {
  doc["certificate"] = certificate_json(cert, opts);
  if (opts.timing) doc["timing_ms"] = elapsed_ms;
  return doc;
}

template <typename F>
ordered_json timed_document(ordered_json doc, const DocOptions& opts, F&& make_cert) {
  const auto start = std::chrono::steady_clock::now();
  const Certificate cert = make_cert();
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return finish_document(std::move(doc), cert, opts, ms);
}

}  // namespace

ordered_json ptb_document(const Mat2& m, const DocOptions& opts) {
  ordered_json doc = header();
  doc["input"] = {{"type", "ptb"}, {"matrix", {m.a, m.b, m.c, m.d}}};
  return timed_document(std::move(doc), opts,
                        [&] { return certify::certify_ptb(ptbundle::Monodromy(m)); });
}

ordered_json tb_document(int alpha, int beta, const DocOptions& opts) {
  ordered_json doc = header();
  doc["input"] = {{"type", "tb"}, {"alpha", alpha}, {"beta", beta}};
  return timed_document(std::move(doc), opts,
                        [&] { return certify::certify_twobridge(twobridge::TwoBridgePair(alpha, beta)); });
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream os;
  os << cert.input_descriptor << ": " << certify::to_string(cert.verdict) << "\n";
  if (cert.verdict == Verdict::not_applicable) {
    os << "  reason: " << cert.not_applicable_reason << "\n";
    return os.str();
  }
  os << "  cover index: " << cert.cover_index << "\n";
  os << "  boundary tori:";
  for (const auto& t : cert.tori)
    os << " (degree " << t.degree << ", stabilizer [[" << t.stab_a << "," << t.stab_b << "],[0,"
       << t.stab_d << "]])";
  os << "\n  T~: torus " << cert.t_tilde << "\n";
  os << "  conditions: >=3 tori " << (cert.condition1 ? "yes" : "NO") << " | T~ degree one "
     << (cert.condition2 ? "yes" : "NO") << " | rho surjective "
     << (cert.condition3 ? "yes" : "NO") << "\n";
  os << "  H1(cover): betti " << cert.h1_cover.betti;
  if (!cert.h1_cover.torsion.empty()) {
    os << ", torsion";
    for (const Int& d : cert.h1_cover.torsion) os << " " << d;
  }
  os << "\n";
  if (cert.zero_filled_betti) os << "  zero-filled betti: " << *cert.zero_filled_betti << "\n";
  return os.str();
}

namespace {

std::string mat2_str(const Mat2& m) {
  std::ostringstream os;
  os << "(" << m.a << " " << m.b << "; " << m.c << " " << m.d << ")";
  return os.str();
}

std::string cycles_str(const std::vector<int>& lengths) {
  std::ostringstream os;
  for (size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  return os.str();
}

constexpr const char* kIdentityRowNote =
    "identity row: nine 1s (Z_3 x Z_3 has nine elements; the printed table shows ten)";

}  // namespace

ordered_json table_document() {
  ordered_json doc = header();
  ordered_json rows = ordered_json::array();
  for (const auto& row : ptbundle::cycle_table()) {
    ordered_json rj;
    ordered_json reps = ordered_json::array();
    for (const Mat2& m : row.representatives) reps.push_back({{m.a, m.b}, {m.c, m.d}});
    rj["representatives"] = std::move(reps);
    rj["cycle_lengths"] = row.cycle_lengths;
    if (row.identity_misprint_note) rj["note"] = kIdentityRowNote;
    rows.push_back(std::move(rj));
  }
  doc["cycle_table"] = std::move(rows);
  return doc;
}

std::string table_text() {
  std::ostringstream os;
  os << "conjugacy class of the monodromy mod 3 | cycle lengths on Z_3 x Z_3\n";
  for (const auto& row : ptbundle::cycle_table()) {
    std::string reps;
    for (const Mat2& m : row.representatives) reps += (reps.empty() ? "" : " ") + mat2_str(m);
    os << "  " << reps << " : " << cycles_str(row.cycle_lengths);
    if (row.identity_misprint_note) os << "   [" << kIdentityRowNote << "]";
    os << "\n";
  }
  return os.str();
}

namespace {

std::string dihedral_str(const fpgroup::DihedralElement& e) {
  std::ostringstream os;
  if (e.flip) os << "s";
  if (e.rot != 0 || !e.flip) os << "r^" << e.rot;
  return os.str();
}

}  // namespace

ordered_json doublecosets_document(int n) {
  const auto classes = fpgroup::double_cosets_dihedral(n);
  ordered_json doc = header();
  doc["n"] = n;
  doc["count"] = classes.size();
  ordered_json cj = ordered_json::array();
  for (const auto& cls : classes) {
    ordered_json entry;
    ordered_json elems = ordered_json::array();
    for (const auto& e : cls) elems.push_back(dihedral_str(e));
    entry["elements"] = std::move(elems);
    entry["right_cosets"] = cls.size() / 2;
    cj.push_back(std::move(entry));
  }
  doc["double_cosets"] = std::move(cj);
  return doc;
}

std::string doublecosets_text(int n) {
  const auto classes = fpgroup::double_cosets_dihedral(n);
  std::ostringstream os;
  os << "(A,A)-double cosets of D_" << 2 * n << ", A = <s>: " << classes.size() << " = (n+1)/2\n";
  for (const auto& cls : classes) {
    os << " ";
    for (const auto& e : cls) os << " " << dihedral_str(e);
    os << "   (" << cls.size() / 2 << " right coset" << (cls.size() / 2 == 1 ? "" : "s") << ")\n";
  }
  return os.str();
}

std::vector<BatchInput> enumerate_ptb_inputs(long long max_entry) {
  std::vector<BatchInput> out;
  for (long long a = -max_entry; a <= max_entry; ++a)
    for (long long b = -max_entry; b <= max_entry; ++b)
      for (long long c = -max_entry; c <= max_entry; ++c)
        for (long long d = -max_entry; d <= max_entry; ++d) {
          const Mat2 m{a, b, c, d};
          if (m.det() != 1) continue;
          if (m.trace() <= 2 && m.trace() >= -2) continue;
          out.push_back(BatchInput{BatchInput::Type::ptb, m, 0, 0});
        }
  return out;
}

std::vector<BatchInput> enumerate_tb_inputs(int alpha_min, int alpha_max) {
  std::vector<BatchInput> out;
  if (alpha_min % 2 == 0) ++alpha_min;
  for (int a = std::max(3, alpha_min); a <= alpha_max; a += 2)
    for (int b = 1; b < a; ++b)
      if (std::gcd(a, b) == 1) out.push_back(BatchInput{BatchInput::Type::tb, Mat2{}, a, b});
  return out;
}

std::vector<BatchInput> parse_batch_spec(const std::string& json_text) {
  ordered_json spec;
  try {
    spec = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed batch spec: ") + e.what());
  }
  std::vector<BatchInput> out;
  if (!spec.is_object()) throw InputError("batch spec must be a JSON object");
  if (!spec.contains("inputs")) return out;
  if (!spec["inputs"].is_array()) throw InputError("batch spec field 'inputs' must be an array");
  for (const auto& item : spec["inputs"]) {
    if (!item.is_object() || !item.contains("type"))
      throw InputError("batch input without a type");
    const std::string type = item["type"].get<std::string>();
    if (type == "ptb") {
      if (!item.contains("matrix") || !item["matrix"].is_array() || item["matrix"].size() != 4)
        throw InputError("ptb input needs a 4-entry matrix");
      const auto& mj = item["matrix"];
      const Mat2 m{mj[0].get<long long>(), mj[1].get<long long>(), mj[2].get<long long>(),
                   mj[3].get<long long>()};
      if (m.det() != 1) throw InputError("ptb matrix must have determinant 1");
      out.push_back(BatchInput{BatchInput::Type::ptb, m, 0, 0});
    } else if (type == "tb") {
      if (!item.contains("alpha") || !item.contains("beta"))
        throw InputError("tb input needs alpha and beta");
      const int a = item["alpha"].get<int>(), b = item["beta"].get<int>();
      twobridge::TwoBridgePair validate(a, b);  // throws InputError when invalid
      out.push_back(BatchInput{BatchInput::Type::tb, Mat2{}, a, b});
    } else {
      throw InputError("unknown batch input type: " + type);
    }
  }
  return out;
}

int batch_threads_from_env() {
  if (const char* env = std::getenv("SLOPECERT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

ordered_json run_batch(const std::vector<BatchInput>& inputs, const DocOptions& opts, int threads) {
  std::vector<ordered_json> documents(inputs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= inputs.size()) return;
      const BatchInput& in = inputs[i];
      documents[i] = in.type == BatchInput::Type::ptb ? ptb_document(in.matrix, opts)
                                                      : tb_document(in.alpha, in.beta, opts);
    }
  };
  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(inputs.size())));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int certified = 0, failed = 0, not_applicable = 0;
  for (const auto& doc : documents) {
    const std::string v = doc["certificate"]["verdict"].get<std::string>();
    if (v == "certified") ++certified;
    else if (v == "failed") ++failed;
    else ++not_applicable;
  }

  ordered_json doc = header();
  doc["summary"] = {
      {"total", inputs.size()},
      {"certified", certified},
      {"failed", failed},
      {"not_applicable", not_applicable},
  };
  doc["documents"] = documents;
  return doc;
}

std::string dump_json(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace slopecert::cli
