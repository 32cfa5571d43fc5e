#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "docjson.hpp"

namespace {

using namespace slopecert;
using cli::DocOptions;
using cli::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotCertified = 2;

struct OutputOptions {
  bool text = false;
  std::string out_file;
};

void emit(const std::string& payload, const OutputOptions& out) {
  if (out.out_file.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(out.out_file, std::ios::binary);
  if (!f) throw InputError("cannot open output file: " + out.out_file);
  f << payload;
}

int verdict_exit_code(const ordered_json& doc) {
  return doc["certificate"]["verdict"].get<std::string>() == "certified" ? kExitOk
                                                                         : kExitNotCertified;
}

exactlin::Mat2 parse_matrix(const std::string& text) {
  std::vector<long long> entries;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    entries.push_back(std::stoll(tok, &pos));
    if (pos != tok.size()) throw InputError("bad matrix entry: " + tok);
  }
  if (entries.size() != 4) throw InputError("matrix needs four comma-separated entries a,b,c,d");
  const exactlin::Mat2 m{entries[0], entries[1], entries[2], entries[3]};
  if (m.det() != 1) throw InputError("matrix must have determinant 1");
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slopecert: certifies, with exact arithmetic, that specific finite covers of\n"
               "hyperbolic punctured-torus bundles and two-bridge knot exteriors have at\n"
               "least three boundary tori, a degree-one boundary torus, and surjective\n"
               "projection of ker i* onto that torus's first homology."};
  app.require_subcommand(1);
  app.fallthrough();

  DocOptions doc_opts;
  OutputOptions out_opts;
  app.add_flag("--evidence", doc_opts.evidence, "include the full evidence block (matrices)");
  app.add_flag("--timing", doc_opts.timing, "include a timing_ms field (breaks byte stability)");
  bool want_json = false, want_text = false;
  app.add_flag("--json", want_json, "JSON output (default)");
  app.add_flag("--text", want_text, "human-readable output");
  app.add_option("-o,--output", out_opts.out_file, "write output to a file instead of stdout");

  auto* ptb = app.add_subcommand("ptb", "certify a punctured-torus bundle by its monodromy");
  std::string matrix_str;
  ptb->add_option("-m,--matrix", matrix_str, "monodromy entries a,b,c,d (row-major, det 1)")
      ->required();

  auto* tb = app.add_subcommand("tb", "certify a two-bridge knot b(alpha,beta)");
  int alpha = 0, beta = 0;
  tb->add_option("-a,--alpha", alpha, "odd alpha >= 3")->required();
  tb->add_option("-b,--beta", beta, "0 < beta < alpha, coprime to alpha")->required();

  auto* table = app.add_subcommand("table", "cycle lengths of the mod-3 monodromy classes");

  auto* dc = app.add_subcommand("doublecosets", "(A,A)-double cosets of a dihedral group");
  int dc_n = 0;
  dc->add_option("-n,--n", dc_n, "odd n >= 1 (the group is D_2n)")->required();

  auto* batch = app.add_subcommand("batch", "certify a family of inputs");
  std::string spec_file;
  long long ptb_max_entry = -1;
  int tb_alpha_min = -1, tb_alpha_max = -1;
  batch->add_option("--spec", spec_file, "JSON file with explicit inputs");
  batch->add_option("--ptb-max-entry", ptb_max_entry,
                    "all pseudo-Anosov monodromies with |entries| <= N");
  batch->add_option("--tb-alpha-min", tb_alpha_min, "two-bridge range: smallest alpha");
  batch->add_option("--tb-alpha-max", tb_alpha_max, "two-bridge range: largest alpha");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitInputError;
  }
  const bool text_mode = want_text && !want_json;

  try {
    if (*ptb) {
      const auto m = parse_matrix(matrix_str);
      const ordered_json doc = cli::ptb_document(m, doc_opts);
      if (text_mode) {
        const auto cert = certify::certify_ptb(ptbundle::Monodromy(m));
        emit(cli::certificate_text(cert), out_opts);
      } else {
        emit(cli::dump_json(doc), out_opts);
      }
      return verdict_exit_code(doc);
    }
    if (*tb) {
      const ordered_json doc = cli::tb_document(alpha, beta, doc_opts);
      if (text_mode) {
        const auto cert = certify::certify_twobridge(twobridge::TwoBridgePair(alpha, beta));
        emit(cli::certificate_text(cert), out_opts);
      } else {
        emit(cli::dump_json(doc), out_opts);
      }
      return verdict_exit_code(doc);
    }
    if (*table) {
      emit(text_mode ? cli::table_text() : cli::dump_json(cli::table_document()), out_opts);
      return kExitOk;
    }
    if (*dc) {
      emit(text_mode ? cli::doublecosets_text(dc_n) : cli::dump_json(cli::doublecosets_document(dc_n)),
           out_opts);
      return kExitOk;
    }
    if (*batch) {
      std::vector<cli::BatchInput> inputs;
      if (!spec_file.empty()) {
        std::ifstream f(spec_file);
        if (!f) throw InputError("cannot read batch spec: " + spec_file);
        std::stringstream buf;
        buf << f.rdbuf();
        inputs = cli::parse_batch_spec(buf.str());
      }
      if (ptb_max_entry >= 0)
        for (auto& in : cli::enumerate_ptb_inputs(ptb_max_entry)) inputs.push_back(in);
      if (tb_alpha_min >= 0 || tb_alpha_max >= 0) {
        if (tb_alpha_min < 0 || tb_alpha_max < 0)
          throw InputError("both --tb-alpha-min and --tb-alpha-max are required");
        for (auto& in : cli::enumerate_tb_inputs(tb_alpha_min, tb_alpha_max)) inputs.push_back(in);
      }
      const ordered_json doc = cli::run_batch(inputs, doc_opts, cli::batch_threads_from_env());
      emit(cli::dump_json(doc), out_opts);
      return kExitOk;
    }
  } catch (const InputError& e) {
    std::cerr << "slopecert: input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    std::cerr << "slopecert: internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
