#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "slopecert/certify.hpp"

namespace slopecert::cli {

// Insertion order is the canonical key order of emitted documents.
using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "slopecert";
inline constexpr const char* kToolVersion = "0.1.0";

struct DocOptions {
  bool evidence = false;
  bool timing = false;
};

ordered_json certificate_json(const certify::Certificate& cert, const DocOptions& opts);

// One self-contained certificate document per input, echoing the input.
ordered_json ptb_document(const exactlin::Mat2& m, const DocOptions& opts);
ordered_json tb_document(int alpha, int beta, const DocOptions& opts);

std::string certificate_text(const certify::Certificate& cert);

ordered_json table_document();
std::string table_text();

ordered_json doublecosets_document(int n);
std::string doublecosets_text(int n);

struct BatchInput {
  enum class Type { ptb, tb };
  Type type = Type::ptb;
  exactlin::Mat2 matrix;
  int alpha = 0;
  int beta = 0;
};

// All pseudo-Anosov determinant-one matrices with |entries| <= max_entry,
// in lexicographic (a, b, c, d) order.
std::vector<BatchInput> enumerate_ptb_inputs(long long max_entry);
// All pairs (alpha, beta), alpha odd in [alpha_min, alpha_max],
// 0 < beta < alpha coprime, in (alpha, beta) order.
std::vector<BatchInput> enumerate_tb_inputs(int alpha_min, int alpha_max);

// Explicit inputs from a JSON spec {"inputs": [...]}; throws InputError on
// malformed content.
std::vector<BatchInput> parse_batch_spec(const std::string& json_text);

// Batch document: summary plus one document per input in input order.
// Inputs are evaluated concurrently up to the thread cap; output order and
// bytes are independent of the schedule.
ordered_json run_batch(const std::vector<BatchInput>& inputs, const DocOptions& opts, int threads);

// Thread cap from SLOPECERT_THREADS, defaulting to the hardware count.
int batch_threads_from_env();

std::string dump_json(const ordered_json& doc);

}  // namespace slopecert::cli
