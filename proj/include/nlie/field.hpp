// Arithmetic in GF(2^m), 1 <= m <= 8.
//
// Elements are m-bit polynomial residues stored in a byte. Each extension
// degree has one fixed reduction polynomial so that files written by one
// build can be read by any other:
//
//   m:        1     2     3     4     5     6     7     8
//   modulus:  0x3   0x7   0xb   0x13  0x25  0x43  0x83  0x11b
//
// (m = 1 is GF(2) itself; its "modulus" x+1 never reduces anything.)

#ifndef NLIE_FIELD_HPP_
#define NLIE_FIELD_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace nlie {

using elem = std::uint8_t;

namespace detail {

inline constexpr std::array<unsigned, 9> kModulus = {
    0, 0x3, 0x7, 0xb, 0x13, 0x25, 0x43, 0x83, 0x11b};

// Schoolbook carry-less product followed by reduction.
constexpr unsigned poly_mulmod(unsigned a, unsigned b, int m) {
  unsigned prod = 0;
  for (int i = 0; i < 8; ++i)
    if (b >> i & 1)
      prod ^= a << i;
  const unsigned mod = kModulus[m];
  for (int bit = 15; bit >= m; --bit)
    if (prod >> bit & 1)
      prod ^= mod << (bit - m);
  return prod;
}

struct FieldTables {
  int m = 0;
  unsigned q = 0;
  std::vector<elem> mul;  // q*q, row-major
  std::array<elem, 256> inv{};
  std::array<elem, 256> sqrt{};
};

inline FieldTables build_tables(int m) {
  FieldTables t;
  t.m = m;
  t.q = 1u << m;
  t.mul.resize(t.q * t.q);
  for (unsigned a = 0; a < t.q; ++a)
    for (unsigned b = 0; b < t.q; ++b)
      t.mul[a * t.q + b] = static_cast<elem>(poly_mulmod(a, b, m));
  auto pow = [&](unsigned a, std::uint64_t k) {
    unsigned r = 1;
    while (k) {
      if (k & 1)
        r = t.mul[r * t.q + a];
      a = t.mul[a * t.q + a];
      k >>= 1;
    }
    return r;
  };
  // a^(q-2) is the inverse on the multiplicative group; a^(2^(m-1)) undoes
  // the Frobenius square.
  for (unsigned a = 1; a < t.q; ++a)
    t.inv[a] = static_cast<elem>(pow(a, t.q - 2));
  for (unsigned a = 0; a < t.q; ++a)
    t.sqrt[a] = static_cast<elem>(pow(a, std::uint64_t{1} << (m - 1)));
  return t;
}

inline const FieldTables& tables(int m) {
  static const std::array<FieldTables, 9> all = [] {
    std::array<FieldTables, 9> a;
    for (int i = 1; i <= 8; ++i)
      a[i] = build_tables(i);
    return a;
  }();
  return all[m];
}

} // namespace detail

/// The field GF(2^m). Cheap to copy; all instances with the same degree
/// share one set of lookup tables.
class Field {
public:
  Field() : Field(1) {}
  explicit Field(int m) {
    if (m < 1 || m > 8)
      throw Error("unsupported extension degree " + std::to_string(m) +
                  " (expected 1..8)");
    t_ = &detail::tables(m);
  }

  int degree() const { return t_->m; }
  unsigned order() const { return t_->q; }
  unsigned modulus() const { return detail::kModulus[t_->m]; }
  bool contains(unsigned bits) const { return bits < t_->q; }

  elem add(elem a, elem b) const { return a ^ b; }
  elem mul(elem a, elem b) const { return t_->mul[a * t_->q + b]; }
  elem inv(elem a) const {
    if (a == 0)
      throw DivisionByZero("inverse of zero in GF(" + name() + ")");
    return t_->inv[a];
  }
  elem div(elem a, elem b) const { return mul(a, inv(b)); }
  elem sqrt(elem a) const { return t_->sqrt[a]; }
  // 0^0 is taken to be 1.
  elem pow(elem a, std::uint64_t k) const {
    elem r = 1;
    while (k) {
      if (k & 1)
        r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }

  /// Text form "2^m".
  std::string name() const { return "2^" + std::to_string(t_->m); }

  static Field parse(std::string_view s) {
    if (s.size() < 3 || s.substr(0, 2) != "2^")
      throw Error("unknown field '" + std::string(s) + "'");
    std::string_view digits = s.substr(2);
    int m = 0;
    for (char c : digits) {
      if (c < '0' || c > '9' || m > 8)
        throw Error("unknown field '" + std::string(s) + "'");
      m = m * 10 + (c - '0');
    }
    if (m < 1 || m > 8)
      throw Error("unknown field '" + std::string(s) + "'");
    return Field(m);
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.t_ == b.t_;
  }

private:
  const detail::FieldTables* t_;
};

/// Lowercase 0x-prefixed hex, e.g. 0x1b.
inline std::string format_scalar(elem a) {
  static const char* digits = "0123456789abcdef";
  std::string s = "0x";
  if (a >= 16)
    s += digits[a >> 4];
  s += digits[a & 15];
  return s;
}

/// Parses 0x-hex; returns false on syntax error or value >= 2^16.
inline bool parse_hex(std::string_view s, unsigned& out) {
  if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
    return false;
  unsigned v = 0;
  for (char c : s.substr(2)) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else return false;
    v = v * 16 + static_cast<unsigned>(d);
    if (v >= 0x10000)
      return false;
  }
  out = v;
  return true;
}

/// A field element that remembers its field. Mixing fields throws
/// FieldMismatch.
struct Scalar {
  Field field;
  elem bits = 0;

  Scalar() = default;
  Scalar(Field f, unsigned b) : field(f), bits(static_cast<elem>(b)) {
    if (!f.contains(b))
      throw Error(format_scalar(static_cast<elem>(b & 0xff)) +
                  " is not an element of GF(" + f.name() + ")");
  }

  bool is_zero() const { return bits == 0; }
  std::string str() const { return format_scalar(bits); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field == b.field && a.bits == b.bits;
  }
};

namespace detail {
inline void same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field == b.field))
    throw FieldMismatch("operands from GF(" + a.field.name() + ") and GF(" +
                        b.field.name() + ")");
}
} // namespace detail

inline Scalar add(const Scalar& a, const Scalar& b) {
  detail::same_field(a, b);
  return {a.field, a.field.add(a.bits, b.bits)};
}
inline Scalar mul(const Scalar& a, const Scalar& b) {
  detail::same_field(a, b);
  return {a.field, a.field.mul(a.bits, b.bits)};
}
inline Scalar inv(const Scalar& a) { return {a.field, a.field.inv(a.bits)}; }
inline Scalar sqrt(const Scalar& a) { return {a.field, a.field.sqrt(a.bits)}; }
inline Scalar pow(const Scalar& a, std::uint64_t k) {
  return {a.field, a.field.pow(a.bits, k)};
}

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }

} // namespace nlie

#endif
