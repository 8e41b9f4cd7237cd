#include "pappus/sampling.hpp"

#include "pappus/analysis.hpp"
#include "pappus/error.hpp"
#include "pappus/scene.hpp"

namespace pappus {

bool is_nondegenerate(const BigRational& a, const BigRational& b) {
  try {
    canonical_scene(Scalar(a), Scalar(b), {.strict = true});
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateParameters) return false;
    throw;
  }
}

bool is_general_position(const BigRational& a, const BigRational& b) {
  return is_nondegenerate(a, b) && vanishing_glue(a, b).empty();
}

ParameterSampler::ParameterSampler(std::uint64_t seed, long max_num, long max_den)
    : rng_(seed), max_num_(max_num), max_den_(max_den) {}

long ParameterSampler::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng_() % span);
}

BigRational ParameterSampler::next_rational() {
  const long num = uniform(-max_num_, max_num_);
  const long den = uniform(1, max_den_);
  return BigRational(num, den);
}

ParamPair ParameterSampler::next_nondegenerate() {
  for (;;) {
    ParamPair p{next_rational(), next_rational()};
    if (is_nondegenerate(p.a, p.b)) return p;
  }
}

ParamPair ParameterSampler::next_general() {
  for (;;) {
    ParamPair p{next_rational(), next_rational()};
    if (is_general_position(p.a, p.b)) return p;
  }
}

std::vector<ParamPair> sample_nondegenerate(std::uint64_t seed, std::size_t count) {
  ParameterSampler sampler(seed);
  std::vector<ParamPair> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(sampler.next_nondegenerate());
  return out;
}

std::vector<ParamPair> sample_general(std::uint64_t seed, std::size_t count) {
  ParameterSampler sampler(seed);
  std::vector<ParamPair> out;
  out.reserve(count);
  while (out.size() < count) out.push_back(sampler.next_general());
  return out;
}

}  // namespace pappus
