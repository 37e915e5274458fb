#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace flagorbits {

// Extended positive integer: a finite value or the single point at infinity.
// Infinity compares above every finite value, so sequences of ExtInt can be
// sorted nonincreasingly with infinite entries first.
class ExtInt {
public:
  static ExtInt infinity() { return ExtInt(kInf); }
  static ExtInt finite(std::int64_t v) {
    if (v <= 0) throw std::invalid_argument("ExtInt: finite value must be positive");
    return ExtInt(v);
  }

  bool is_infinite() const { return v_ == kInf; }
  bool is_finite() const { return v_ != kInf; }

  // Only valid for finite values.
  std::int64_t value() const {
    if (is_infinite()) throw std::logic_error("ExtInt: value() on infinity");
    return v_;
  }

  friend bool operator==(const ExtInt&, const ExtInt&) = default;
  friend std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    if (a.v_ == kInf) return std::strong_ordering::greater;
    if (b.v_ == kInf) return std::strong_ordering::less;
    return a.v_ <=> b.v_;
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

  // Accepts "inf" or a positive decimal integer; nullopt on anything else.
  static std::optional<ExtInt> parse(const std::string& s) {
    if (s == "inf") return infinity();
    if (s.empty()) return std::nullopt;
    std::int64_t v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      v = v * 10 + (c - '0');
      if (v > kMaxFinite) return std::nullopt;
    }
    if (v <= 0) return std::nullopt;
    return finite(v);
  }

private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t kMaxFinite = std::int64_t(1) << 40;

  explicit ExtInt(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

}  // namespace flagorbits
