#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morphic/ring.hpp"

namespace morphic {

enum class Verdict { Verified, Refuted, Vacuous, Indeterminate };
const char* verdict_name(Verdict v);

/// Outcome of one theorem check on one ring (or one bound, for qz).
struct VerificationReport {
  std::string theorem;
  std::string expression;
  Verdict status = Verdict::Verified;
  std::size_t checked = 0;   // instances where the claim was tested
  std::size_t skipped = 0;   // instances without the needed witnesses
  std::size_t vacuous = 0;   // implications whose hypothesis failed
  std::vector<std::string> facts;
  std::vector<std::string> failures;
  std::vector<Element> witness;  // elements of the first failure
  double elapsed_ms = 0.0;

  /// Records a failed instance and marks the report refuted.
  void fail(std::string what, std::vector<Element> elements = {});
  /// Marks indeterminate unless already refuted.
  void undecided(std::string why);
};

}  // namespace morphic
