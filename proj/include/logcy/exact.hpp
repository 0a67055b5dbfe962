#pragma once

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "logcy/errors.hpp"

// Eigen glue for GMP scalars.  All arithmetic in this library is exact;
// no floating point enters any computation path.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace logcy {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
using Vec2z = Vec2<Int>;
using Vec2q = Vec2<Rat>;

using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

/// 2x2 determinant of the column pair (a, b).  Accepts any Eigen expression
/// pair over a common scalar and forces evaluation to that scalar.
template <typename A, typename B>
typename A::Scalar det2(const Eigen::MatrixBase<A>& a,
                        const Eigen::MatrixBase<B>& b) {
  return a(0) * b(1) - a(1) * b(0);
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Exact quotient; caller guarantees divisibility.
inline Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline int pow_neg1(const Int& exponent) { return mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1; }

inline bool is_zero(const Vec2z& v) { return v(0) == 0 && v(1) == 0; }
inline bool is_zero(const Vec2q& v) { return v(0) == 0 && v(1) == 0; }

/// gcd of the two entries; 0 for the zero vector.
inline Int content(const Vec2z& v) { return gcd(abs(v(0)), abs(v(1))); }

inline bool is_primitive(const Vec2z& v) { return content(v) == 1; }

/// Splits an integer vector into (primitive direction, positive multiplier).
/// Throws MalformedCurveError on the zero vector.
inline std::pair<Vec2z, Int> primitive_part(const Vec2z& v) {
  Int c = content(v);
  if (c == 0) throw MalformedCurveError("zero vector has no primitive part");
  return {Vec2z(exact_div(v(0), c), exact_div(v(1), c)), c};
}

/// Writes a rational difference as weight * primitive integer direction.
inline std::pair<Vec2z, Rat> primitive_direction(const Vec2q& delta) {
  if (is_zero(delta)) throw MalformedCurveError("zero displacement");
  // Clear denominators, then strip content.
  Int den = lcm(delta(0).get_den(), delta(1).get_den());
  Vec2z w(Int(delta(0).get_num() * exact_div(den, delta(0).get_den())),
          Int(delta(1).get_num() * exact_div(den, delta(1).get_den())));
  auto [dir, mult] = primitive_part(w);
  return {dir, Rat(mult, den)};
}

inline int cmp_rat(const Rat& a, const Rat& b) { return ::cmp(a, b); }

inline bool lex_less(const Vec2q& a, const Vec2q& b) {
  int c = ::cmp(a(0), b(0));
  if (c != 0) return c < 0;
  return ::cmp(a(1), b(1)) < 0;
}

inline bool lex_less(const Vec2z& a, const Vec2z& b) {
  int c = ::cmp(a(0), b(0));
  if (c != 0) return c < 0;
  return ::cmp(a(1), b(1)) < 0;
}

/// Parses "p" or "p/q" (decimal-free) into an exact rational.
Rat parse_rat(const std::string& text);

/// Canonical "p" / "p/q" rendering; inverse of parse_rat.
std::string format_rat(const Rat& q);

/// Deterministic RNG for generic-position sampling and property tests.
/// All draws go through raw engine output with explicit modular reduction,
/// so sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Rational with numerator in [-span, span] and the given denominator.
  Rat rational(long span, long den) {
    Rat r(integer(-span, span), den);
    r.canonicalize();
    return r;
  }

  Vec2q point(long span, long den) { return Vec2q(rational(span, den), rational(span, den)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace logcy
