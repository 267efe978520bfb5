#include "g2maps/qforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace g2maps {

QForm4::QForm4(IntMat gram) : gram_(std::move(gram)) {
  if (gram_.rows() != 4 || gram_.cols() != 4) throw std::invalid_argument("QForm4: Gram matrix must be 4x4");
  check_positive_definite(to_rational(gram_));
}

mpz_class QForm4::determinant() const { return det(to_rational(gram_)).get_num(); }

const QForm4& reference_form(int id) {
  static const std::array<QForm4, 4> forms{{
      // 2w^2 + 3x^2 + 3y^2 + 4z^2 + 2xy
      QForm4(IntMat{{2, 0, 0, 0}, {0, 3, 1, 0}, {0, 1, 3, 0}, {0, 0, 0, 4}}),
      // 2w^2 + 2x^2 + 3y^2 + 3z^2 + 2wz + 2xy
      QForm4(IntMat{{2, 0, 0, 1}, {0, 2, 1, 0}, {0, 1, 3, 0}, {1, 0, 0, 3}}),
      // 2w^2 + 3x^2 + 3y^2 + 4z^2 + 2wx + 2wy + 2xz + 2yz
      QForm4(IntMat{{2, 1, 1, 0}, {1, 3, 0, 1}, {1, 0, 3, 1}, {0, 1, 1, 4}}),
      // 2w^2 + 3x^2 + 4y^2 + 6z^2 - 2wx + 2wz + 2xy + 4yz
      QForm4(IntMat{{2, -1, 0, 1}, {-1, 3, 1, 0}, {0, 1, 4, 2}, {1, 0, 2, 6}}),
  }};
  if (id < 1 || id > 4) throw std::invalid_argument("reference_form: id must be 1..4");
  return forms[id - 1];
}

std::string reference_form_text(int id) {
  static const std::array<const char*, 4> text{
      "2w^2 + 3x^2 + 3y^2 + 4z^2 + 2xy",
      "2w^2 + 2x^2 + 3y^2 + 3z^2 + 2wz + 2xy",
      "2w^2 + 3x^2 + 3y^2 + 4z^2 + 2wx + 2wy + 2xz + 2yz",
      "2w^2 + 3x^2 + 4y^2 + 6z^2 - 2wx + 2wz + 2xy + 4yz",
  };
  if (id < 1 || id > 4) throw std::invalid_argument("reference_form_text: id must be 1..4");
  return text[id - 1];
}

long evaluate(const QForm4& f, const Vec4& v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += f.gram()(i, j) * v[i] * v[j];
  if (!s.fits_slong_p()) throw std::overflow_error("evaluate: value out of range");
  return s.get_si();
}

std::set<long> represented(const QForm4& f, long bound) {
  std::set<long> out;
  for (const auto& v : short_vectors(f.rational_gram(), bound)) out.insert(v.value.get_num().get_si());
  return out;
}

std::map<long, long> theta_prefix(const QForm4& f, long max_n) {
  std::map<long, long> counts;
  for (long n = 1; n <= max_n; ++n) counts[n] = 0;
  for (const auto& v : short_vectors(f.rational_gram(), max_n)) ++counts[v.value.get_num().get_si()];
  return counts;
}

namespace {

using IVec = std::vector<long>;

long inner(const IntMat& g, const IVec& u, const IVec& v) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s += g(i, j) * u[i] * v[j];
  return s.get_si();
}

struct Search {
  const IntMat& g1;
  const IntMat& g2;
  // candidates[j]: vectors u with q1(u) = G2(j,j)
  std::array<std::vector<IVec>, 4> candidates;
  std::array<IVec, 4> chosen;

  bool run(std::size_t j) {
    if (j == 4) return true;
    for (const auto& u : candidates[j]) {
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i) ok = inner(g1, chosen[i], u) == g2(i, j);
      if (!ok) continue;
      chosen[j] = u;
      if (run(j + 1)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_witness(const QForm4& f1, const QForm4& f2, const IntMat& u) {
  if (u.rows() != 4 || u.cols() != 4) return false;
  mpz_class d = det(to_rational(u)).get_num();
  if (d != 1 && d != -1) return false;
  return u.transpose() * f1.gram() * u == f2.gram();
}

namespace {

std::optional<IntMat> equivalent_reduced(const QForm4& f1, const QForm4& f2) {
  if (f1.determinant() != f2.determinant()) return std::nullopt;
  long max_diag = 0;
  for (std::size_t i = 0; i < 4; ++i) max_diag = std::max(max_diag, f2.gram()(i, i).get_si());
  if (theta_prefix(f1, 2 * max_diag) != theta_prefix(f2, 2 * max_diag)) return std::nullopt;

  Search s{f1.gram(), f2.gram(), {}, {}};
  const auto vectors = short_vectors(f1.rational_gram(), max_diag);
  for (std::size_t j = 0; j < 4; ++j)
    for (const auto& v : vectors)
      if (v.value == f2.gram()(j, j)) s.candidates[j].push_back(v.coords);
  for (auto& c : s.candidates) std::sort(c.begin(), c.end());
  if (!s.run(0)) return std::nullopt;

  IntMat u(4, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 4; ++i) u(i, j) = s.chosen[j][i];
  return u;
}

}  // namespace

std::optional<IntMat> equivalent(const QForm4& f1, const QForm4& f2) {
  if (f1.determinant() != f2.determinant()) return std::nullopt;
  // search on LLL-reduced bases, then transport back
  const IntMat v1 = lll_reduce(f1.rational_gram());
  const IntMat v2 = lll_reduce(f2.rational_gram());
  const QForm4 r1(v1.transpose() * f1.gram() * v1), r2(v2.transpose() * f2.gram() * v2);
  auto w = equivalent_reduced(r1, r2);
  if (!w) return std::nullopt;
  const IntMat u = v1 * *w * to_integer(inverse(to_rational(v2)));
  // Equal determinants make U unimodular; checked anyway.
  if (!is_witness(f1, f2, u)) throw std::logic_error("equivalent: backtracking produced an invalid witness");
  return u;
}

QForm4 to_qform(const RatMat& gram) { return QForm4(to_integer(gram)); }

std::optional<Classification> classify_form(const QForm4& f) {
  std::optional<Classification> found;
  for (int id = 1; id <= 4; ++id) {
    auto u = equivalent(reference_form(id), f);
    if (!u) continue;
    if (found) throw std::logic_error("classify_form: form matches two reference forms");
    found = Classification{id, *u};
  }
  return found;
}

}  // namespace g2maps
