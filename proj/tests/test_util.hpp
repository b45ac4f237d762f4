#pragma once

#include <random>
#include <vector>

#include "qcong/qpoly.hpp"

namespace testutil {

/// Random polynomial of degree <= max_degree with small rational coefficients.
inline qcong::QPoly random_qpoly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<qcong::Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& v : c) {
    v = qcong::Rational(num(rng), den(rng));
    v.canonicalize();
  }
  return qcong::QPoly(std::move(c));
}

}  // namespace testutil
