#pragma once

#include <gsf/error.hpp>

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gsf {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; unlike std::uniform_int_distribution
/// the stream is identical across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

enum class FieldKind { rationals, prime, extension };

class Scalar;

namespace detail {
struct FieldData;
}

/// Handle to an interned, immutable field descriptor. Copies are cheap and two
/// handles compare equal iff they name the same field.
///
/// Descriptor syntax:
///   q                      rationals
///   gf(p)                  prime field F_p
///   gf(p,k;c0,c1,...,ck)   GF(p^k) = F_p[x]/(c0 + c1 x + ... + ck x^k), ck = 1
class Field {
 public:
  static constexpr int kMaxDegree = 4;
  static constexpr std::uint32_t kMaxExtensionPrime = 97;

  static Field parse(std::string_view descriptor);
  static Field rationals();
  static Field prime(std::uint32_t p);
  /// `modulus` lists coefficients constant term first, including the leading 1.
  static Field extension(std::uint32_t p, std::vector<std::uint32_t> modulus);

  FieldKind kind() const;
  /// Prime modulus; 0 for the rationals.
  std::uint32_t p() const;
  /// Extension degree k (1 for prime fields, 0 for the rationals).
  int degree() const;
  std::span<const std::uint32_t> modulus() const;
  std::uint32_t characteristic() const;
  /// Number of elements, or nullopt for the rationals.
  std::optional<std::uint64_t> order() const;
  const std::string& descriptor() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  /// Rationals: integer uniform in [-bound, bound]. Finite fields: uniform element.
  Scalar random(Rng& rng, int rational_bound = 9) const;
  /// Text form used by the CLI: "a/b" or "a" (rationals), decimal residue (prime),
  /// "c0:c1:...:c(k-1)" (extension, constant term first).
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) { return a.d_ == b.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  friend class Scalar;
  const detail::FieldData* d_;
};

using Poly = std::array<std::uint32_t, Field::kMaxDegree>;

/// Exact field element in canonical form, so == is representation equality.
class Scalar {
 public:
  Scalar(Field f, mpq_class q);
  Scalar(Field f, std::uint32_t residue);
  Scalar(Field f, const Poly& coeffs);

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inverse() const;
  /// Re-reduces the stored value; the identity on any Scalar built through the API.
  Scalar canonical() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;
  const Poly& coeffs() const;

  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<mpq_class, std::uint32_t, Poly> value_;
};

}  // namespace gsf
