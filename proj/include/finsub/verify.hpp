#pragma once

#include "finsub/cache.hpp"
#include "finsub/pipeline.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace finsub {

enum class Verdict { match, mismatch, adjudicated };

std::string to_string(Verdict v);

struct Expectation {
  /// Short name of the prediction, e.g. "stated" or "rational prediction".
  std::string label;
  std::string value;
  /// "claim" when the value is part of the statement under test, "oracle" when
  /// it is computed by an independent route (bar resolution, second model).
  std::string origin;
};

struct VerificationReport {
  std::string claim;
  /// The mathematical statement being checked, in words.
  std::string anchor;
  std::map<std::string, std::string> parameters;
  std::vector<Expectation> expected;
  std::string computed;
  Verdict verdict = Verdict::mismatch;
  std::string note;
  double seconds = 0;
};

struct VerifyOptions {
  unsigned jobs = 1;
  Budget budget;
  /// Ceiling on n*d for explicitly requested cases.
  std::size_t max_nd = 8;
  const BoundaryCache* cache = nullptr;
  /// Base space for lemma-quo; the other claims are about spheres.
  std::optional<SpaceSpec> space;
};

std::vector<std::string> claim_ids();

/// Runs one claim. Without n (and d) a claim runs its built-in suite of cases.
/// Throws std::invalid_argument for unknown claims or parameters outside the
/// claim's hypotheses and BudgetError past the ceilings.
std::vector<VerificationReport> verify(const std::string& claim, std::optional<std::size_t> n,
                                       std::optional<std::size_t> d, const VerifyOptions& opts = {});

/// 0 when every verdict is match or adjudicated, 1 otherwise.
int exit_code(const std::vector<VerificationReport>& reports);

}  // namespace finsub
