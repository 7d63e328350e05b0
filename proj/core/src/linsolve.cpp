#include "fgv/linsolve.hpp"

#include <stdexcept>
#include <utility>

namespace fgv {

LinearSolution solve_fraction_free(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m) throw std::invalid_argument("right-hand side size mismatch");

  // Integer augmented matrix [A | b], each row cleared of denominators.
  std::vector<std::vector<Integer>> M(m, std::vector<Integer>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    Integer l = b[i].get_den();
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      M[i][j] = a(i, j).get_num() * (l / a(i, j).get_den());
    }
    M[i][n] = b[i].get_num() * (l / b[i].get_den());
  }

  LinearSolution out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    const Integer& piv = M[r][c];
    for (std::size_t i = r + 1; i < m; ++i) {
      const Integer lead = M[i][c];
      for (std::size_t j = c + 1; j <= n; ++j) {
        Integer v = piv * M[i][j];
        if (lead != 0) v -= lead * M[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = std::move(v);
      }
      M[i][c] = 0;
    }
    prev = piv;
    out.pivot_columns.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < m; ++i) {
    if (M[i][n] != 0) return out;
  }

  out.consistent = true;
  out.values.assign(n, Rational(0));
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = out.pivot_columns[k];
    Rational s(M[k][n]);
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (M[k][j] != 0 && out.values[j] != 0) s -= Rational(M[k][j]) * out.values[j];
    }
    out.values[pc] = s / Rational(M[k][pc]);
  }
  return out;
}

}  // namespace fgv
