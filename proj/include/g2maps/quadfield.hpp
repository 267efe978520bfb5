#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace g2maps {

bool is_squarefree(long n);
/// The squarefree s (same sign as n) with n = s*k^2.
long squarefree_part(long n);

/// Discriminant of an imaginary quadratic order: negative, 0 or 1 mod 4.
class Disc {
 public:
  explicit Disc(long value);

  long value() const { return value_; }
  /// Squarefree d < 0 with Q(sqrt(value)) = Q(sqrt(d)).
  long radicand() const { return radicand_; }
  /// k > 0 with sqrt(value) = k*sqrt(d).
  long sqrt_scale() const { return scale_; }
  long fundamental() const;
  long conductor() const;
  bool is_fundamental() const { return conductor() == 1; }

  friend auto operator<=>(const Disc&, const Disc&) = default;

 private:
  long value_;
  long radicand_;
  long scale_;
};

/// a + b*sqrt(d) in Q(sqrt(d)), d < 0 squarefree. sqrt(d) is embedded with
/// positive imaginary part, so Im(x) = b*sqrt(|d|).
class KElem {
 public:
  /// Zero of Q(i); lets containers default-construct.
  KElem() : d_(-1), a_(0), b_(0) {}
  KElem(long d, mpq_class a, mpq_class b = 0);

  static KElem sqrt_d(long d) { return KElem(d, 0, 1); }

  long radicand() const { return d_; }
  const mpq_class& re() const { return a_; }
  const mpq_class& im_coeff() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  KElem conj() const { return KElem(d_, a_, -b_, Trusted{}); }
  /// a^2 - d*b^2 = |x|^2.
  mpq_class norm() const { return a_ * a_ - d_ * b_ * b_; }
  mpq_class trace() const { return 2 * a_; }
  KElem inverse() const;

  KElem operator-() const { return KElem(d_, -a_, -b_, Trusted{}); }
  friend KElem operator+(const KElem& x, const KElem& y);
  friend KElem operator-(const KElem& x, const KElem& y);
  friend KElem operator*(const KElem& x, const KElem& y);
  friend KElem operator/(const KElem& x, const KElem& y);
  friend KElem operator*(const mpq_class& s, const KElem& x) { return KElem(x.d_, s * x.a_, s * x.b_, Trusted{}); }
  friend KElem operator+(const KElem& x, const mpq_class& s) { return KElem(x.d_, x.a_ + s, x.b_, Trusted{}); }
  friend KElem operator-(const KElem& x, const mpq_class& s) { return KElem(x.d_, x.a_ - s, x.b_, Trusted{}); }

  friend bool operator==(const KElem& x, const KElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Total order used only for canonical sorting of outputs.
  friend bool operator<(const KElem& x, const KElem& y);

  /// "(p + q*sqrt(d))/r" with r > 0 minimal; exact and parseable.
  std::string to_string() const;
  static KElem parse(const std::string& text);
  /// Shorter rendering for tables, e.g. "(1 + sqrt(-5))/2", "5*sqrt(-1)".
  std::string pretty() const;
  /// Display-only decimal approximation of the embedded complex number.
  std::string approx(int digits = 6) const;

 private:
  struct Trusted {};
  KElem(long d, mpq_class a, mpq_class b, Trusted) : d_(d), a_(std::move(a)), b_(std::move(b)) {}
  void require_same_field(const KElem& other) const;

  long d_;
  mpq_class a_;
  mpq_class b_;
};

/// Integer 2x2 matrix acting by Moebius transformations.
struct Mat2 {
  mpz_class a = 1, b = 0, c = 0, d = 1;

  static Mat2 identity() { return {}; }
  mpz_class det() const { return a * d - b * c; }
  /// Inverse of a determinant +-1 matrix.
  Mat2 inverse() const;
  bool congruent_mod2(const Mat2& other) const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

/// (a z + b)/(c z + d). Requires det = +-1; throws std::domain_error on a
/// zero denominator.
KElem mobius(const Mat2& m, const KElem& z);

}  // namespace g2maps
