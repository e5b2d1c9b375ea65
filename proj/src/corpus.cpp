#include "morphic/corpus.hpp"

#include "morphic/constructions.hpp"

namespace morphic {

std::vector<std::string> default_corpus(std::size_t max_order) {
  std::vector<std::string> out;
  auto add = [&](std::size_t order, std::string expr) {
    if (order <= max_order) out.push_back(std::move(expr));
  };

  for (std::size_t n = 1; n <= 64; ++n) add(n, "z" + std::to_string(n));

  for (std::size_t p = 2; p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t len = 2; saturating_pow(p, len) <= max_order; ++len) {
      add(saturating_pow(p, len), "poly(z" + std::to_string(p) + "," + std::to_string(len) + ")");
    }
  }
  for (std::size_t p = 2; p * p * p * p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    for (std::size_t k = 2; saturating_pow(p, 2 * k) <= max_order; ++k) {
      const std::size_t q = saturating_pow(p, k);
      for (std::size_t len = 2; saturating_pow(q, len) <= max_order; ++len) {
        add(saturating_pow(q, len), "poly(gf(" + std::to_string(p) + "," + std::to_string(k) +
                                        ")," + std::to_string(len) + ")");
      }
    }
  }

  for (std::size_t n = 2; n <= 64; ++n) {
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      add(n * (n / d), "trivext(z" + std::to_string(n) + ",ideal(" + std::to_string(d) + "))");
    }
  }

  for (std::size_t q : {2, 3, 4}) {
    for (std::size_t k = 2; saturating_pow(q, k * (k + 1) / 2) <= max_order; ++k) {
      add(saturating_pow(q, k * (k + 1) / 2),
          "tri(z" + std::to_string(q) + "," + std::to_string(k) + ")");
    }
    for (std::size_t k = 2; saturating_pow(q, k * k) <= max_order; ++k) {
      add(saturating_pow(q, k * k), "mat(z" + std::to_string(q) + "," + std::to_string(k) + ")");
    }
  }
  return out;
}

const std::vector<WorkedExample>& worked_examples() {
  static const std::vector<WorkedExample> table = {
      {"z4", "left_morphic", Status::True, "Z4 is morphic"},
      {"z4", "right_morphic", Status::True, "Z4 is morphic"},
      {"trivext(z4,ideal(2))", "left_morphic", Status::True, "Z4 x 2Z4 is morphic"},
      {"trivext(z4,ideal(2))", "right_morphic", Status::True, "Z4 x 2Z4 is morphic"},
      {"trivext(z4,self)", "left_generalized_morphic", Status::False, "l(2x) = 2R + xR is not principal"},
      {"trivext(z4,self)", "left_pseudo_morphic", Status::False, "2xR is no single annihilator"},
      {"poly(z4,2)", "left_generalized_morphic", Status::False, "l(2x) = 2R + xR is not principal"},
      {"poly(z4,2)", "left_pseudo_morphic", Status::False, "2xR is no single annihilator"},
      {"tri(z2,2)", "left_generalized_morphic", Status::True, "l(E21) is principal"},
      {"tri(z2,2)", "left_pseudo_morphic", Status::False, "R E21 is no single annihilator"},
      {"poly(z2,2)", "symmetric", Status::True, "Z2[x]/(x^2) is symmetric"},
      {"poly(z2,2)", "left_pseudo_morphic", Status::True, "Z2[x]/(x^2) is pseudo-morphic"},
      {"poly(z2,2)", "right_pseudo_morphic", Status::True, "Z2[x]/(x^2) is pseudo-morphic"},
      {"poly(z2,2)", "regular", Status::False, "Z2[x]/(x^2) is not regular"},
  };
  return table;
}

}  // namespace morphic
