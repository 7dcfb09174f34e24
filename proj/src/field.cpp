#include "morita/field.hpp"

namespace morita {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t addm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

std::uint64_t subm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint64_t mulm(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t invm(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DivisionByZeroError{};
  // extended Euclid over signed 128-bit to avoid overflow for large p
  __int128 t = 0, newt = 1;
  __int128 r = static_cast<__int128>(p), newr = static_cast<__int128>(a);
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::Fp(std::uint64_t p) {
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("Fp modulus must be prime, got " + std::to_string(p));
  }
  return Field{FieldMode::prime, p};
}

std::string Field::str() const {
  return mode == FieldMode::rationals ? "Q" : "Fp:" + std::to_string(p);
}

Field Field::parse(const std::string& s) {
  if (s == "Q") return Q();
  if (s.rfind("Fp:", 0) == 0) {
    return Fp(std::stoull(s.substr(3)));
  }
  throw std::invalid_argument("unknown field descriptor: " + s);
}

Scalar Scalar::from_int(const Field& f, long long v) {
  Scalar s(f);
  if (f.mode == FieldMode::rationals) {
    s.q_ = mpq_class(static_cast<long>(v));
  } else {
    long long m = v % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    s.r_ = static_cast<std::uint64_t>(m);
  }
  return s;
}

Scalar Scalar::parse(const Field& f, const std::string& str) {
  Scalar s(f);
  if (f.mode == FieldMode::rationals) {
    mpq_class q;
    if (q.set_str(str, 10) != 0) {
      throw std::invalid_argument("bad rational literal: " + str);
    }
    if (q.get_den() == 0) throw DivisionByZeroError{};
    q.canonicalize();
    s.q_ = q;
  } else {
    mpz_class z;
    if (z.set_str(str, 10) != 0) {
      throw std::invalid_argument("bad integer literal: " + str);
    }
    mpz_class m = z % mpz_class(static_cast<unsigned long>(f.p));
    if (m < 0) m += mpz_class(static_cast<unsigned long>(f.p));
    s.r_ = m.get_ui();
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  Scalar s(f_);
  if (f_.mode == FieldMode::rationals) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = addm(r_, o.r_, f_.p);
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  Scalar s(f_);
  if (f_.mode == FieldMode::rationals) {
    s.q_ = q_ - o.q_;
  } else {
    s.r_ = subm(r_, o.r_, f_.p);
  }
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  Scalar s(f_);
  if (f_.mode == FieldMode::rationals) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mulm(r_, o.r_, f_.p);
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
  Scalar s(f_);
  if (f_.mode == FieldMode::rationals) {
    s.q_ = -q_;
  } else {
    s.r_ = r_ == 0 ? 0 : f_.p - r_;
  }
  return s;
}

Scalar Scalar::inv() const {
  Scalar s(f_);
  if (f_.mode == FieldMode::rationals) {
    if (q_ == 0) throw DivisionByZeroError{};
    s.q_ = 1 / q_;
  } else {
    s.r_ = invm(r_, f_.p);
  }
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  check(o);
  return f_.mode == FieldMode::rationals ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::is_zero() const {
  return f_.mode == FieldMode::rationals ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return f_.mode == FieldMode::rationals ? q_ == 1 : r_ == 1;
}

std::string Scalar::str() const {
  return f_.mode == FieldMode::rationals ? q_.get_str() : std::to_string(r_);
}

}  // namespace morita
