#include "g2maps/intlinalg.hpp"

#include <utility>

namespace g2maps {

namespace {

void swap_columns(IntMat& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

mpz_class common_denominator(const RatMat& m) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

void require_square_full_rank(const RatMat& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": basis must be square");
  if (det(m) == 0) throw std::invalid_argument(std::string(what) + ": rank-deficient basis");
}

RatMat hstack(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  RatMat out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

RatMat dual(const RatMat& b) { return inverse(b).transpose(); }

}  // namespace

RatMat to_rational(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = mpq_class(m(i, j));
  return r;
}

IntMat to_integer(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::domain_error("to_integer: non-integral entry " + to_string(m(i, j)));
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

mpz_class floor_div(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class ceil_div(const mpq_class& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

mpz_class floor_sqrt(const mpq_class& q) {
  if (q < 0) throw std::domain_error("floor_sqrt of a negative value");
  mpz_class f = floor_div(q);
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
  return r;
}

IntMat hnf(const IntMat& m) {
  IntMat h = m;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t k = 0;
  for (std::size_t i = 0; i < rows && k < cols; ++i) {
    for (std::size_t j = k + 1; j < cols; ++j) {
      if (h(i, j) == 0) continue;
      mpz_class a = h(i, k), b = h(i, j), g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_class ag = a / g, bg = b / g;
      for (std::size_t r = 0; r < rows; ++r) {
        mpz_class ck = h(r, k), cj = h(r, j);
        h(r, k) = x * ck + y * cj;
        h(r, j) = ag * cj - bg * ck;
      }
    }
    if (h(i, k) == 0) continue;  // no pivot in this row
    if (h(i, k) < 0)
      for (std::size_t r = 0; r < rows; ++r) h(r, k) = -h(r, k);
    for (std::size_t j = 0; j < k; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(i, k).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t r = 0; r < rows; ++r) h(r, j) -= q * h(r, k);
    }
    ++k;
  }
  // Columns k.. are zero; earlier pivots already occupy 0..k-1.
  for (std::size_t j = k; j < cols; ++j)
    for (std::size_t r = 0; r < rows; ++r)
      if (h(r, j) != 0) {
        swap_columns(h, j, k);
        break;
      }
  return h;
}

RatMat lattice_basis(const RatMat& generators) {
  const mpz_class scale = common_denominator(generators);
  IntMat scaled(generators.rows(), generators.cols());
  for (std::size_t i = 0; i < generators.rows(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) scaled(i, j) = mpq_class(generators(i, j) * scale).get_num();
  IntMat h = hnf(scaled);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < h.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows() && zero; ++i) zero = h(i, j) == 0;
    if (!zero) rank = j + 1;
  }
  RatMat out(h.rows(), rank);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < rank; ++j) {
      out(i, j) = mpq_class(h(i, j), scale);
      out(i, j).canonicalize();
    }
  return out;
}

mpq_class det(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix must be square");
  RatMat a = m;
  const std::size_t n = a.rows();
  mpq_class d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      mpq_class f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

RatMat inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  RatMat a = m, inv = RatMat::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    mpq_class piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      mpq_class f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

RatVec solve(const RatMat& b, const RatVec& v) {
  RatMat inv = inverse(b);
  RatVec x(b.cols());
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < inv.cols(); ++j) x[i] += inv(i, j) * v[j];
  return x;
}

bool in_lattice(const RatMat& basis, const RatVec& v) {
  for (const auto& x : solve(basis, v))
    if (x.get_den() != 1) return false;
  return true;
}

bool contains(const RatMat& super, const RatMat& sub) {
  RatMat coords = inverse(super) * sub;
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = 0; j < coords.cols(); ++j)
      if (coords(i, j).get_den() != 1) return false;
  return true;
}

RatMat lattice_intersect(const RatMat& b1, const RatMat& b2) {
  require_square_full_rank(b1, "lattice_intersect");
  require_square_full_rank(b2, "lattice_intersect");
  if (b1.rows() != b2.rows()) throw std::invalid_argument("lattice_intersect: ambient dimension mismatch");
  // (L1 ∩ L2)^* = L1^* + L2^*
  RatMat dual_sum = lattice_basis(hstack(dual(b1), dual(b2)));
  return lattice_basis(dual(dual_sum));
}

mpz_class lattice_index(const RatMat& sub, const RatMat& super) {
  require_square_full_rank(sub, "lattice_index");
  require_square_full_rank(super, "lattice_index");
  if (!contains(super, sub)) throw std::domain_error("lattice_index: sublattice not contained in superlattice");
  mpq_class ratio = det(sub) / det(super);
  if (ratio < 0) ratio = -ratio;
  if (ratio.get_den() != 1) throw std::logic_error("lattice_index: non-integral index");
  return ratio.get_num();
}

RatMat canonical_basis(const RatMat& basis) { return lattice_basis(basis); }

namespace {

// Cohen's quadratic-form decomposition: q(x) = sum_i Q(i,i) (x_i + sum_{j>i} Q(i,j) x_j)^2.
RatMat decompose(const RatMat& gram) {
  const std::size_t n = gram.rows();
  RatMat q = gram;
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw std::domain_error("quadratic form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) = q(i, j) / q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

struct Enumerator {
  const RatMat& q;
  const mpq_class& bound;
  std::vector<long> x;
  std::vector<ShortVector> out;

  void run(std::size_t i, const mpq_class& budget) {
    mpq_class centre = 0;
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[j] != 0) centre -= q(i, j) * x[j];
    const mpz_class radius = floor_sqrt(budget / q(i, i));
    const long lo = mpz_class(floor_div(centre) - radius - 1).get_si();
    const long hi = mpz_class(ceil_div(centre) + radius + 1).get_si();
    for (long k = lo; k <= hi; ++k) {
      mpq_class diff = k - centre;
      mpq_class used = q(i, i) * diff * diff;
      if (used > budget) continue;
      x[i] = k;
      mpq_class rest = budget - used;
      if (i == 0) {
        bool zero = true;
        for (long c : x) zero = zero && c == 0;
        if (!zero) out.push_back({x, bound - rest});
      } else {
        run(i - 1, rest);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

void check_positive_definite(const RatMat& gram) {
  if (gram.rows() != gram.cols()) throw std::invalid_argument("gram matrix must be square");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (gram(i, j) != gram(j, i)) throw std::domain_error("gram matrix is not symmetric");
  decompose(gram);
}

std::vector<ShortVector> short_vectors(const RatMat& gram, const mpq_class& bound) {
  check_positive_definite(gram);
  if (bound < 0 || gram.rows() == 0) return {};
  RatMat q = decompose(gram);
  Enumerator e{q, bound, std::vector<long>(gram.rows(), 0), {}};
  e.run(gram.rows() - 1, bound);
  return std::move(e.out);
}

IntMat lll_reduce(const RatMat& gram) {
  check_positive_definite(gram);
  const std::size_t n = gram.rows();
  IntMat v = IntMat::identity(n);
  if (n < 2) return v;
  const mpq_class delta(3, 4);
  auto add_column = [&](std::size_t k, std::size_t j, const mpz_class& r) {
    for (std::size_t i = 0; i < n; ++i) v(i, k) -= r * v(i, j);
  };
  std::size_t k = 1;
  while (k < n) {
    const RatMat g = to_rational(v).transpose() * gram * to_rational(v);
    // Gram-Schmidt: mu(i, j) and squared lengths b(i)
    RatMat mu(n, n);
    std::vector<mpq_class> b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        mpq_class s = g(i, j);
        for (std::size_t l = 0; l < j; ++l) s -= mu(j, l) * mu(i, l) * b[l];
        mu(i, j) = s / b[j];
      }
      b[i] = g(i, i);
      for (std::size_t l = 0; l < i; ++l) b[i] -= mu(i, l) * mu(i, l) * b[l];
    }
    for (std::size_t j = k; j-- > 0;) {
      mpz_class r = floor_div(mu(k, j) + mpq_class(1, 2));
      if (r == 0) continue;
      add_column(k, j, r);
      for (std::size_t l = 0; l <= j; ++l) mu(k, l) -= r * (l == j ? mpq_class(1) : mu(j, l));
    }
    if (b[k] >= (delta - mu(k, k - 1) * mu(k, k - 1)) * b[k - 1]) {
      ++k;
    } else {
      for (std::size_t i = 0; i < n; ++i) std::swap(v(i, k), v(i, k - 1));
      k = k > 1 ? k - 1 : 1;
    }
  }
  return v;
}

mpq_class quadratic_value(const RatMat& gram, const std::vector<long>& v) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += gram(i, j) * v[i] * v[j];
  return s;
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace g2maps
