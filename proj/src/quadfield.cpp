#include "g2maps/quadfield.hpp"

#include <cmath>
#include <iomanip>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace g2maps {

bool is_squarefree(long n) {
  if (n == 0) return false;
  unsigned long m = n < 0 ? -static_cast<unsigned long>(n) : n;
  for (unsigned long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

long squarefree_part(long n) {
  if (n == 0) throw std::invalid_argument("squarefree_part(0)");
  long sign = n < 0 ? -1 : 1;
  long m = n < 0 ? -n : n;
  long s = 1;
  for (long p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) s *= p;
  }
  return sign * s * m;
}

Disc::Disc(long value) : value_(value) {
  if (value >= 0) throw std::invalid_argument("discriminant must be negative: " + std::to_string(value));
  long r = ((value % 4) + 4) % 4;
  if (r != 0 && r != 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4: " + std::to_string(value));
  radicand_ = squarefree_part(value);
  scale_ = std::lround(std::sqrt(static_cast<double>(value / radicand_)));
  if (scale_ * scale_ * radicand_ != value) throw std::logic_error("Disc: square root scale mismatch");
}

long Disc::fundamental() const {
  long r = ((radicand_ % 4) + 4) % 4;
  return r == 1 ? radicand_ : 4 * radicand_;
}

long Disc::conductor() const {
  long f = std::lround(std::sqrt(static_cast<double>(value_ / fundamental())));
  if (f * f * fundamental() != value_) throw std::logic_error("Disc: conductor mismatch");
  return f;
}

KElem::KElem(long d, mpq_class a, mpq_class b) : d_(d), a_(std::move(a)), b_(std::move(b)) {
  if (d >= 0 || !is_squarefree(d)) throw std::invalid_argument("KElem: radicand must be negative and squarefree");
  a_.canonicalize();
  b_.canonicalize();
}

void KElem::require_same_field(const KElem& other) const {
  if (d_ != other.d_) throw std::invalid_argument("KElem: mixed fields");
}

KElem KElem::inverse() const {
  mpq_class n = norm();
  if (n == 0) throw std::domain_error("KElem: division by zero");
  return KElem(d_, a_ / n, -b_ / n, Trusted{});
}

KElem operator+(const KElem& x, const KElem& y) {
  x.require_same_field(y);
  return KElem(x.d_, x.a_ + y.a_, x.b_ + y.b_, KElem::Trusted{});
}

KElem operator-(const KElem& x, const KElem& y) {
  x.require_same_field(y);
  return KElem(x.d_, x.a_ - y.a_, x.b_ - y.b_, KElem::Trusted{});
}

KElem operator*(const KElem& x, const KElem& y) {
  x.require_same_field(y);
  return KElem(x.d_, x.a_ * y.a_ + x.d_ * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, KElem::Trusted{});
}

KElem operator/(const KElem& x, const KElem& y) {
  x.require_same_field(y);
  return x * y.inverse();
}

bool operator<(const KElem& x, const KElem& y) {
  if (x.d_ != y.d_) return x.d_ < y.d_;
  if (x.b_ != y.b_) return x.b_ < y.b_;
  return x.a_ < y.a_;
}

namespace {

struct Integral {
  mpz_class p, q, r;
};

Integral integral_form(const mpq_class& a, const mpq_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpq_class pa = a * r, qb = b * r;
  return {pa.get_num(), qb.get_num(), r};
}

}  // namespace

std::string KElem::to_string() const {
  auto [p, q, r] = integral_form(a_, b_);
  std::ostringstream os;
  os << "(" << p << (q < 0 ? " - " : " + ") << abs(q) << "*sqrt(" << d_ << "))/" << r;
  return os.str();
}

KElem KElem::parse(const std::string& text) {
  // Accepts to_string() and pretty() output: "(p + q*sqrt(d))/r",
  // "p - sqrt(d)", "q*sqrt(d)/r", "sqrt(d)", ...
  static const std::regex outer(R"(^\s*\((.*)\)\s*/\s*(\d+)\s*$)");
  static const std::regex over(R"(^(.*?)\s*/\s*(\d+)\s*$)");
  static const std::regex body(
      R"(^\s*(?:(-?\d+)\s*([+-])\s*)?(-)?\s*(?:(\d+)\s*\*\s*)?sqrt\(\s*(-\d+)\s*\)\s*$)");
  auto malformed = [&] { return std::invalid_argument("KElem::parse: malformed '" + text + "'"); };
  std::smatch m;
  std::string inner = text;
  mpz_class r = 1;
  if (std::regex_match(text, m, outer) || std::regex_match(text, m, over)) {
    inner = m[1].str();
    r = mpz_class(m[2].str());
  }
  if (r == 0) throw std::invalid_argument("KElem::parse: zero denominator");
  if (!std::regex_match(inner, m, body)) throw malformed();
  mpz_class p = m[1].matched ? mpz_class(m[1].str()) : mpz_class(0);
  mpz_class q = m[4].matched ? mpz_class(m[4].str()) : mpz_class(1);
  if (m[2].matched && m[3].matched) throw malformed();
  if ((m[2].matched && m[2].str() == "-") || m[3].matched) q = -q;
  long d = std::stol(m[5].str());
  return KElem(d, mpq_class(p, r), mpq_class(q, r));
}

std::string KElem::pretty() const {
  auto [p, q, r] = integral_form(a_, b_);
  std::ostringstream os;
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  auto imag = [&](const mpz_class& c) {
    mpz_class m = abs(c);
    return (m == 1 ? std::string() : m.get_str() + "*") + root;
  };
  if (q == 0) {
    os << p;
    if (r != 1) os << "/" << r;
    return os.str();
  }
  if (p == 0) {
    os << (q < 0 ? "-" : "") << imag(q);
    if (r != 1) os << "/" << r;
    return os.str();
  }
  std::string body = p.get_str() + (q < 0 ? " - " : " + ") + imag(q);
  if (r == 1) return body;
  os << "(" << body << ")/" << r;
  return os.str();
}

std::string KElem::approx(int digits) const {
  std::ostringstream os;
  double re = a_.get_d();
  double im = b_.get_d() * std::sqrt(static_cast<double>(-d_));
  os << std::setprecision(digits) << re << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

Mat2 Mat2::inverse() const {
  mpz_class dt = det();
  if (dt == 1) return {d, -b, -c, a};
  if (dt == -1) return {-d, b, c, -a};
  throw std::domain_error("Mat2::inverse: determinant is not +-1");
}

bool Mat2::congruent_mod2(const Mat2& o) const {
  auto even = [](const mpz_class& x) { return mpz_even_p(x.get_mpz_t()) != 0; };
  return even(a - o.a) && even(b - o.b) && even(c - o.c) && even(d - o.d);
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

KElem mobius(const Mat2& m, const KElem& z) {
  mpz_class dt = m.det();
  if (dt != 1 && dt != -1) throw std::invalid_argument("mobius: determinant must be +-1");
  KElem num = mpq_class(m.a) * z + mpq_class(m.b);
  KElem den = mpq_class(m.c) * z + mpq_class(m.d);
  if (den.is_zero()) throw std::domain_error("mobius: zero denominator");
  return num / den;
}

}  // namespace g2maps
