#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wordmaps/laurent.hpp"
#include "wordmaps/magnus.hpp"
#include "wordmaps/matrix2.hpp"
#include "wordmaps/univariate.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

enum class PSL2Verdict { Unknown, Surjective };
/// Ordered: a later value is a stronger statement.
enum class SL2Verdict { Unknown, SurjectiveOrProperPower, AlmostSurjective, Surjective };
std::string to_string(PSL2Verdict v);
std::string to_string(SL2Verdict v);

struct Criterion {
  std::string name;
  bool applicable = false;
  std::string outcome;
  nlohmann::json certificate;  // null when there is nothing to show
  std::string note;
};

struct MinusIdStatus {
  bool in_image = false;
  /// Phi_w(1, i) when the two-letter criterion was evaluated.
  std::optional<long> N;
  std::string source;
};

struct AnalysisReport {
  std::string word;
  int num_generators = 2;
  std::string normal_form;
  std::vector<long> exponent_sums;
  std::optional<DerivedLevel> derived_level;
  std::optional<std::string> obstruction;
  std::vector<Criterion> criteria;
  PSL2Verdict psl2 = PSL2Verdict::Unknown;
  SL2Verdict sl2 = SL2Verdict::Unknown;
  MinusIdStatus minus_id;
  /// One entry per verdict upgrade: {"criterion", "claim", "data"}.
  std::vector<nlohmann::json> certificates;
  std::vector<std::string> notes;

  const Criterion* find(const std::string& name) const;
};

struct AnalyzeOptions {
  /// Values of t for the trace-map criterion; empty skips it.
  std::vector<Rational> big_samples;
  bool do_ff = false;
  int prime = 5;
  /// Run the two-letter criteria on all 16 generator/inversion variants.
  bool use_orbit = true;
  std::uint64_t seed = 0;
};

/// Every criterion whose precondition fails is recorded as inapplicable; never throws
/// for a well-formed word.
AnalysisReport analyze(const Word& w, const AnalyzeOptions& opts = {});

nlohmann::json rational_json(const Rational& q);
nlohmann::json matrix_json(const RationalMatrix& m);
nlohmann::json matrix_json(const ComplexMatrix& m);
nlohmann::json report_json(const AnalysisReport& r);
std::string render_report(const AnalysisReport& r, bool json);

// Reference exact computations (golden transcripts).

struct MinusIdTranscript {
  /// Entries of W over Q[t], row-major.
  std::array<LaurentPoly, 4> q;
  /// Remainders mod t^2 + 1/2.
  std::array<UniPoly, 4> reduced;
  /// The same W from evaluating the word with exact inverses.
  bool matches_word = false;
};
MinusIdTranscript minus_id_transcript();

struct ChainResult {
  PolyMatrix C, D, B, A;
};
/// C = x y adj(x) adj(y), D = C x adj(C) adj(x), B = C y adj(C) adj(y), A = D B adj(D) adj(B).
ChainResult adjugate_chain(const PolyMatrix& x, const PolyMatrix& y);
RationalMatrix adjugate_chain_value(const RationalMatrix& x, const RationalMatrix& y);

struct TracePoint {
  int sign;  // tr A = 2 * sign
  Rational b, c, d;
  std::complex<double> t;
  std::complex<double> trace_A;
  std::complex<double> q12;
};
/// Points with bc = -1 and tr A = +-2 and q12 != 0 for x = [[0, b], [c, d]],
/// y = [[1, t], [0, 1]], found by fixing b, d and solving for t.
std::vector<TracePoint> transcript_points(std::uint64_t seed);

struct FamilyCheck {
  int trace_degree = 0;
  bool trace_divisible = false;
  int trace_quotient_degree = 0;
  std::array<bool, 2> offdiag_divisible{};     // q12, q21
  std::array<int, 2> offdiag_quotient_degree{};
  bool minus_identity_mod = false;   // A = -id in Q[d]/(d^2 - d + 1/3)
  bool scalar_is_one_mod = false;    // (det x det y)^10 = 1 there
};
FamilyCheck family_check();

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};
std::vector<SuiteCheck> verify_paper_suite(std::uint64_t seed = 1);

}  // namespace wordmaps
