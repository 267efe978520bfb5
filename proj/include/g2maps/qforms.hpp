#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "g2maps/intlinalg.hpp"

namespace g2maps {

using Vec4 = std::array<long, 4>;

/// Positive definite quaternary form with integral Gram matrix:
/// q(v) = v^T G v, G(i,i) the square coefficients, G(i,j) half the cross terms.
class QForm4 {
 public:
  explicit QForm4(IntMat gram);

  const IntMat& gram() const { return gram_; }
  RatMat rational_gram() const { return to_rational(gram_); }
  mpz_class determinant() const;

 private:
  IntMat gram_;
};

/// q1..q4 in the variables (w, x, y, z); id in 1..4.
const QForm4& reference_form(int id);
std::string reference_form_text(int id);

long evaluate(const QForm4& f, const Vec4& v);

/// Nonzero values q(v) <= bound.
std::set<long> represented(const QForm4& f, long bound);

/// counts[n] = #{v : q(v) = n} for 1 <= n <= max_n.
std::map<long, long> theta_prefix(const QForm4& f, long max_n = 12);

/// U with U^T G1 U = G2, if the forms are equivalent.
std::optional<IntMat> equivalent(const QForm4& f1, const QForm4& f2);

bool is_witness(const QForm4& f1, const QForm4& f2, const IntMat& u);

/// Converts an integral rational Gram matrix (throws std::domain_error
/// otherwise).
QForm4 to_qform(const RatMat& gram);

/// Id of the unique reference form equivalent to f, with the witness U
/// (U^T G_ref U = G_f).
struct Classification {
  int form_id = 0;
  IntMat witness;
};
std::optional<Classification> classify_form(const QForm4& f);

}  // namespace g2maps
