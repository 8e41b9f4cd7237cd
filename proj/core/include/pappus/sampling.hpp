#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pappus/big_rational.hpp"

namespace pappus {

struct ParamPair {
  BigRational a;
  BigRational b;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

/// a, b not in {0, 1} and the six Pappus lines pairwise distinct.
bool is_nondegenerate(const BigRational& a, const BigRational& b);

/// Non-degenerate and no glue condition vanishes, so S lies on no Pappus line.
bool is_general_position(const BigRational& a, const BigRational& b);

/// Seeded source of random rational parameters p/q with |p| <= max_num,
/// 1 <= q <= max_den. Reproducible for a given seed on every platform.
class ParameterSampler {
 public:
  explicit ParameterSampler(std::uint64_t seed, long max_num = 40, long max_den = 12);

  BigRational next_rational();
  ParamPair next_nondegenerate();
  ParamPair next_general();

 private:
  long uniform(long lo, long hi);

  std::mt19937_64 rng_;
  long max_num_;
  long max_den_;
};

std::vector<ParamPair> sample_nondegenerate(std::uint64_t seed, std::size_t count);
std::vector<ParamPair> sample_general(std::uint64_t seed, std::size_t count);

}  // namespace pappus
