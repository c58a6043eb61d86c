#pragma once

#include <cstdint>

namespace detsing {

enum class Arithmetic { Rational, Modular };

// Knobs shared by every randomized computation.  Seeds are passed
// separately so that one Settings value can serve many independent runs.
struct Settings {
  Arithmetic arithmetic = Arithmetic::Rational;
  unsigned trials = 8;
  unsigned retries = 16;
  long coefficient_bound = 7;
  unsigned jobs = 1;
  // Recompute polar multiplicities with a second smoothing family.
  bool cross_check = true;
};

}  // namespace detsing
