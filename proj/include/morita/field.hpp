#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace morita {

struct FieldMismatchError : std::runtime_error {
  FieldMismatchError() : std::runtime_error("mixed field modes in one computation") {}
};

struct DivisionByZeroError : std::runtime_error {
  DivisionByZeroError() : std::runtime_error("division by zero") {}
};

enum class FieldMode { rationals, prime };

// The ground field of a computation: exact rationals, or GF(p) for a prime p.
// Every value in one computation carries the same Field.
struct Field {
  FieldMode mode{FieldMode::rationals};
  std::uint64_t p{0};

  static Field Q() { return Field{FieldMode::rationals, 0}; }
  static Field Fp(std::uint64_t p);

  friend bool operator==(const Field&, const Field&) = default;

  std::string str() const;
  // Accepts "Q" or "Fp:<p>".
  static Field parse(const std::string& s);
};

// One exact field element. Arithmetic between scalars of different fields
// throws FieldMismatchError.
class Scalar {
 public:
  Scalar() : Scalar(Field::Q()) {}
  explicit Scalar(const Field& f) : f_(f) {}

  static Scalar zero(const Field& f) { return Scalar(f); }
  static Scalar one(const Field& f) { return from_int(f, 1); }
  static Scalar from_int(const Field& f, long long v);
  // Rationals: "a" or "a/b" (any sign placement, reduced on input).
  // GF(p): a decimal integer, reduced into [0, p).
  static Scalar parse(const Field& f, const std::string& s);

  const Field& field() const { return f_; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;

  // Canonical form: rationals as "a" / "a/b" with positive denominator in
  // lowest terms, prime-field elements as the representative in [0, p).
  std::string str() const;

 private:
  void check(const Scalar& o) const {
    if (f_ != o.f_) throw FieldMismatchError{};
  }

  Field f_;
  mpq_class q_{0};
  std::uint64_t r_{0};
};

}  // namespace morita
