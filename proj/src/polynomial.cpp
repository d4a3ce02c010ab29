#include "rposet/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "rposet/labeling.hpp"

namespace rposet {

AbPolynomial make_ab(const std::vector<std::pair<std::string, Int>>& terms) {
  AbPolynomial p;
  for (const auto& [w, c] : terms) p.add_term(AbWord::parse(w), c);
  return p;
}

CdPolynomial make_cd(const std::vector<std::pair<std::string, Int>>& terms) {
  CdPolynomial p;
  for (const auto& [w, c] : terms) p.add_term(CdWord::parse(w), c);
  return p;
}

AbPolynomial ab_index_from_flag_h(const FlagVector& h) {
  AbPolynomial psi;
  const int n = h.n();
  for (std::uint32_t mask = 0; mask < h.mask_count(); ++mask) {
    AbWord u;
    u.length = static_cast<std::uint32_t>(n - 1);
    u.bits = mask;  // bit i-1 of the mask is rank i, i.e. letter position i-1
    psi.add_term(u, h.at(mask));
  }
  return psi;
}

AbPolynomial expand_cd(const CdPolynomial& q) {
  const AbPolynomial c = make_ab({{"a", 1}, {"b", 1}});
  const AbPolynomial d = make_ab({{"ab", 1}, {"ba", 1}});
  AbPolynomial out;
  for (const auto& [word, coeff] : q.terms()) {
    AbPolynomial term = AbPolynomial::constant(coeff);
    for (std::uint32_t j = 0; j < word.length; ++j)
      term = term * (word.second_at(j) ? d : c);
    out += term;
  }
  return out;
}

std::vector<CdWord> cd_words_of_degree(int m) {
  std::vector<CdWord> out;
  CdWord w;
  // try c before d at every position: lexicographic emission
  auto extend = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(w);
      return;
    }
    if (remaining >= 1) {
      CdWord saved = w;
      w = w.append(false);
      self(self, remaining - 1);
      w = saved;
    }
    if (remaining >= 2) {
      CdWord saved = w;
      w = w.append(true);
      self(self, remaining - 2);
      w = saved;
    }
  };
  if (m >= 0) extend(extend, m);
  return out;
}

std::optional<CdPolynomial> to_cd_index(const AbPolynomial& p) {
  using Rational = boost::multiprecision::cpp_rational;

  CdPolynomial result;
  // group the target by degree and solve each homogeneous layer on its own
  std::map<int, std::map<AbWord, Int>> layers;
  for (const auto& [w, c] : p.terms()) layers[static_cast<int>(word_degree(w))][w] = c;

  for (const auto& [degree, target] : layers) {
    const std::vector<CdWord> basis = cd_words_of_degree(degree);
    std::vector<AbPolynomial> expanded;
    expanded.reserve(basis.size());
    std::map<AbWord, int> row_of;
    for (const CdWord& w : basis) {
      expanded.push_back(expand_cd(CdPolynomial::monomial(w)));
      for (const auto& [aw, c] : expanded.back().terms()) row_of.emplace(aw, 0);
    }
    for (const auto& [aw, c] : target) row_of.emplace(aw, 0);
    int rows = 0;
    for (auto& [aw, r] : row_of) r = rows++;

    const int cols = static_cast<int>(basis.size());
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (int j = 0; j < cols; ++j)
      for (const auto& [aw, c] : expanded[j].terms()) m[row_of[aw]][j] = Rational(c);
    for (const auto& [aw, c] : target) m[row_of[aw]][cols] = Rational(c);

    // forward elimination with partial pivoting by first nonzero row
    int pivot_row = 0;
    std::vector<int> pivot_of_col(cols, -1);
    for (int j = 0; j < cols && pivot_row < rows; ++j) {
      int pr = -1;
      for (int i = pivot_row; i < rows; ++i)
        if (m[i][j] != 0) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[pivot_row], m[pr]);
      const Rational inv = m[pivot_row][j];
      for (int k = j; k <= cols; ++k) m[pivot_row][k] /= inv;
      for (int i = 0; i < rows; ++i) {
        if (i == pivot_row || m[i][j] == 0) continue;
        const Rational factor = m[i][j];
        for (int k = j; k <= cols; ++k) m[i][k] -= factor * m[pivot_row][k];
      }
      pivot_of_col[j] = pivot_row++;
    }
    // residual rows mean the target is outside the cd span
    for (int i = pivot_row; i < rows; ++i)
      if (m[i][cols] != 0) return std::nullopt;

    for (int j = 0; j < cols; ++j) {
      Rational x = pivot_of_col[j] >= 0 ? m[pivot_of_col[j]][cols] : Rational(0);
      if (x == 0) continue;
      if (boost::multiprecision::denominator(x) != 1)
        return std::nullopt;  // consistent systems solve integrally; defensive
      result.add_term(basis[j], Int(boost::multiprecision::numerator(x)));
    }
  }
  return result;
}

AbPolynomial ab_index_from_assignment(const TripleAssignment& t) {
  AbPolynomial psi;
  for (const auto& chain : maximal_chains(t.poset)) {
    AbWord w;
    for (std::size_t j = 0; j + 2 < chain.size(); ++j)
      w = w.append(t.at(chain[j], chain[j + 1], chain[j + 2]) == Letter::B);
    psi.add_term(w, 1);
  }
  return psi;
}

}  // namespace rposet
