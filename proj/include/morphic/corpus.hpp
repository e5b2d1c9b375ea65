#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "morphic/classifier.hpp"

namespace morphic {

/// Expressions of the built-in corpus with order <= max_order, in a fixed
/// order: z n (n <= 64), poly over z p and gf(p,k), trivext(z n, ideal(d))
/// for proper divisors d, then tri and mat over z2, z3, z4.
std::vector<std::string> default_corpus(std::size_t max_order);

/// One expected classification result.
struct WorkedExample {
  std::string expression;
  std::string predicate;  // flag name from ClassProfile
  Status expected;
  std::string claim;
};

const std::vector<WorkedExample>& worked_examples();

}  // namespace morphic
