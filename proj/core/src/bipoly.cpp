#include "pappus/bipoly.hpp"

#include <algorithm>
#include <vector>

#include "pappus/error.hpp"

namespace pappus {

namespace {

bool graded_lex_less(const Monomial& x, const Monomial& y) {
  if (x.total() != y.total()) return x.total() < y.total();
  return x.a < y.a;
}

}  // namespace

BiPoly::BiPoly(const BigRational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

BiPoly BiPoly::monomial(Monomial m, const BigRational& coeff) {
  BiPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(m, coeff);
  p.check_degree();
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

BigRational BiPoly::constant_value() const { return coefficient(Monomial{}); }

BigRational BiPoly::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::uint32_t BiPoly::degree_a() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.a);
  return d;
}

std::uint32_t BiPoly::degree_b() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.b);
  return d;
}

std::uint32_t BiPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

BigRational BiPoly::eval(const BigRational& a0, const BigRational& b0) const {
  // Powers are cached per exponent; the maps stay small (degree <= bound).
  std::vector<BigRational> pa{BigRational(1)};
  std::vector<BigRational> pb{BigRational(1)};
  const auto power = [](std::vector<BigRational>& cache, const BigRational& base, std::uint32_t e) {
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  BigRational sum;
  for (const auto& [m, c] : terms_) sum += c * power(pa, a0, m.a) * power(pb, b0, m.b);
  return sum;
}

BiPoly BiPoly::substitute_a(const BigRational& a0) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out += monomial({0, m.b}, c * monomial({m.a, 0}, 1).eval(a0, 0));
  return out;
}

BiPoly BiPoly::substitute_b(const BigRational& b0) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out += monomial({m.a, 0}, c * monomial({0, m.b}, 1).eval(0, b0));
  return out;
}

BigRational BiPoly::content() const {
  std::vector<BigRational> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [m, c] : terms_) coeffs.push_back(c);
  return rational_content(coeffs);
}

Monomial BiPoly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial low{~0u, ~0u};
  for (const auto& [m, c] : terms_) {
    low.a = std::min(low.a, m.a);
    low.b = std::min(low.b, m.b);
  }
  return low;
}

BiPoly BiPoly::divide_monomial(Monomial d) const {
  BiPoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Monomial{m.a - d.a, m.b - d.b}, c);
  return out;
}

std::optional<BiPoly> BiPoly::exact_divide(const BiPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by 0");
  // Lex order (a, then b) is the map's own order, so the leading term is the last entry.
  const auto& [dm, dc] = *divisor.terms_.rbegin();
  BiPoly quotient;
  BiPoly rest = *this;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = *rest.terms_.rbegin();
    if (rm.a < dm.a || rm.b < dm.b) return std::nullopt;
    const BiPoly step = monomial({rm.a - dm.a, rm.b - dm.b}, rc / dc);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::pair<Monomial, BigRational> BiPoly::leading_term() const {
  if (terms_.empty()) return {Monomial{}, BigRational(0)};
  auto best = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (graded_lex_less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return {};
  BigRational scale = content().inverse();
  if (leading_term().second.sign() < 0) scale = -scale;
  return *this * scale;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, BigRational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return graded_lex_less(y.first, x.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const BigRational mag = c.abs();
    std::string mono;
    const auto append = [&mono](const char* var, std::uint32_t e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append("a", m.a);
    append("b", m.b);
    if (mono.empty()) {
      out += mag.to_string();
    } else if (mag.is_one()) {
      out += mono;
    } else {
      out += mag.to_string() + "*" + mono;
    }
  }
  return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  check_degree();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  check_degree();
  return *this;
}

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  BiPoly out;
  for (const auto& [mx, cx] : x.terms_) {
    for (const auto& [my, cy] : y.terms_) {
      const Monomial m{mx.a + my.a, mx.b + my.b};
      auto [it, inserted] = out.terms_.try_emplace(m, cx * cy);
      if (!inserted) it->second += cx * cy;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  out.check_degree();
  return out;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs) { return *this = *this * rhs; }

BiPoly& BiPoly::operator*=(const BigRational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

BiPoly operator-(const BiPoly& x) {
  BiPoly out = x;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void BiPoly::check_degree() const {
  if (terms_.empty()) return;
  if (degree_a() > kMaxPolyDegree || degree_b() > kMaxPolyDegree) {
    throw Error(ErrorCode::DegreeOverflow,
                "degree (" + std::to_string(degree_a()) + ", " + std::to_string(degree_b()) +
                    ") exceeds bound " + std::to_string(kMaxPolyDegree));
  }
}

}  // namespace pappus
