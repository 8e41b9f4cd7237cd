#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace pappus {

/// Permutation of {1,2,3} in one-line notation: images = (s(1), s(2), s(3)).
/// Products compose right-to-left: (s * t)(i) = s(t(i)).
class Perm3 {
 public:
  constexpr Perm3() = default;
  /// Throws ParseError unless images is a permutation of {1,2,3}.
  explicit Perm3(std::array<int, 3> images);

  static Perm3 identity() { return Perm3(); }
  /// (2 1 3)
  static Perm3 tau2() { return Perm3({2, 1, 3}); }
  /// (3 1 2)
  static Perm3 tau3() { return Perm3({3, 1, 2}); }

  /// All six elements in the fixed order id, t2, t3, t3^2, t2t3, t2t3^2.
  static const std::array<Perm3, 6>& all();
  /// Position in all().
  std::size_t index() const;

  /// Accepts a word name ("id", "t2", "t3", "t3^2", "t2t3", "t2t3^2") or
  /// one-line notation "(2 1 3)" / "213".
  static Perm3 parse(std::string_view text);

  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::array<int, 3>& images() const { return images_; }

  Perm3 inverse() const;
  bool is_even() const;

  /// Word in the generators t2, t3 (see all()).
  std::string name() const;
  /// "(a b c)"
  std::string one_line() const;

  friend Perm3 operator*(const Perm3& s, const Perm3& t);
  friend auto operator<=>(const Perm3&, const Perm3&) = default;

 private:
  std::array<int, 3> images_{1, 2, 3};
};

}  // namespace pappus
