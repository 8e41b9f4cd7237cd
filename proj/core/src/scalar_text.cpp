#include "pappus/scalar_text.hpp"

#include <cctype>

#include "pappus/error.hpp"

namespace pappus {

namespace {

class Parser {
 public:
  Parser(std::string_view text, FieldTag field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar value = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value.promoted(field_);
  }

 private:
  Scalar expression() {
    Scalar value = term();
    for (;;) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  Scalar term() {
    Scalar value = unary();
    for (;;) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const Scalar divisor = unary();
        if (divisor.is_zero()) fail("division by zero");
        value /= divisor;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 4 * kMaxPolyDegree) fail("exponent too large");
    Scalar out = Scalar::one(base.field());
    for (unsigned long i = 0; i < e; ++i) out *= base;
    return out;
  }

  Scalar atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar(BigRational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (field_ == FieldTag::symbolic && name == "a") return Scalar::var_a();
      if (field_ == FieldTag::symbolic && name == "b") return Scalar::var_b();
      if (field_ == FieldTag::quadext && name == "w") return Scalar::omega();
      fail("unknown symbol '" + std::string(name) + "' for field " + std::string(to_string(field_)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " in '" + std::string(text_) + "' at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  FieldTag field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, FieldTag field) {
  try {
    return Parser(text, field).parse();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::DegreeOverflow) throw;
    throw Error(ErrorCode::ParseError, std::string(e.what()) + " while parsing '" + std::string(text) + "'");
  }
}

}  // namespace pappus
