#ifndef LFDL_VALUE_HPP
#define LFDL_VALUE_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lfdl {

/// A scalar constant: a signed 64-bit integer or an interned symbol.
///
/// Values form a strict total order: every integer precedes every symbol,
/// integers compare numerically, symbols compare by the bytes of their
/// original text. Interning the same text twice yields equal Values.
class Value {
 public:
  enum class Kind : uint8_t { Int, Sym };

  Value() = default;  // the integer 0

  static Value integer(int64_t v) { return Value(v, nullptr); }
  static Value symbol(std::string_view text);

  Kind kind() const { return sym_ ? Kind::Sym : Kind::Int; }
  bool is_int() const { return sym_ == nullptr; }
  bool is_sym() const { return sym_ != nullptr; }

  int64_t as_int() const {
    assert(is_int());
    return int_;
  }
  std::string_view text() const {
    assert(is_sym());
    return *sym_;
  }

  friend bool operator==(const Value& a, const Value& b) {
    return a.sym_ == b.sym_ && (a.sym_ != nullptr || a.int_ == b.int_);
  }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.sym_ == nullptr && b.sym_ == nullptr) return a.int_ <=> b.int_;
    if (a.sym_ == nullptr) return std::strong_ordering::less;
    if (b.sym_ == nullptr) return std::strong_ordering::greater;
    if (a.sym_ == b.sym_) return std::strong_ordering::equal;
    return a.sym_->compare(*b.sym_) <=> 0;
  }

 private:
  Value(int64_t i, const std::string* s) : int_(i), sym_(s) {}

  int64_t int_ = 0;
  const std::string* sym_ = nullptr;  // null means Int; interned, never freed
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace lfdl

#endif
