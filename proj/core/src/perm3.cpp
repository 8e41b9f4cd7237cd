#include "pappus/perm3.hpp"

#include <algorithm>
#include <cctype>

#include "pappus/error.hpp"

namespace pappus {

namespace {

constexpr std::array<std::string_view, 6> kNames{"id", "t2", "t3", "t3^2", "t2t3", "t2t3^2"};

}  // namespace

Perm3::Perm3(std::array<int, 3> images) : images_(images) {
  std::array<int, 3> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{1, 2, 3}) throw Error(ErrorCode::ParseError, "not a permutation of {1,2,3}");
}

const std::array<Perm3, 6>& Perm3::all() {
  static const std::array<Perm3, 6> elements = [] {
    const Perm3 t2 = tau2();
    const Perm3 t3 = tau3();
    return std::array<Perm3, 6>{identity(), t2, t3, t3 * t3, t2 * t3, t2 * t3 * t3};
  }();
  return elements;
}

std::size_t Perm3::index() const {
  const auto& e = all();
  return static_cast<std::size_t>(std::find(e.begin(), e.end(), *this) - e.begin());
}

Perm3 Perm3::parse(std::string_view text) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (text == kNames[i]) return all()[i];
  }
  std::array<int, 3> images{};
  std::size_t n = 0;
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (n == 3) throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
      images[n++] = c - '0';
    } else if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',') {
      throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
    }
  }
  if (n != 3) throw Error(ErrorCode::ParseError, "bad permutation '" + std::string(text) + "'");
  return Perm3(images);
}

Perm3 Perm3::inverse() const {
  std::array<int, 3> inv{};
  for (int i = 1; i <= 3; ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Perm3(inv);
}

bool Perm3::is_even() const {
  int inversions = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) inversions += images_[i] > images_[j] ? 1 : 0;
  }
  return inversions % 2 == 0;
}

std::string Perm3::name() const { return std::string(kNames[index()]); }

std::string Perm3::one_line() const {
  return "(" + std::to_string(images_[0]) + " " + std::to_string(images_[1]) + " " + std::to_string(images_[2]) + ")";
}

Perm3 operator*(const Perm3& s, const Perm3& t) {
  return Perm3({s(t(1)), s(t(2)), s(t(3))});
}

}  // namespace pappus
