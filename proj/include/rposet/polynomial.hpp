#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rposet/flag.hpp"
#include "rposet/words.hpp"

namespace rposet {

/// Integer polynomial in noncommuting variables, stored as word -> coefficient
/// with zero coefficients never kept. Multiplication concatenates words.
template <typename W>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::pair<const W, Int>> terms) {
    for (const auto& [w, c] : terms) add_term(w, c);
  }

  static Polynomial constant(Int c) {
    Polynomial p;
    p.add_term(W{}, std::move(c));
    return p;
  }
  static Polynomial monomial(const W& w, Int c = 1) {
    Polynomial p;
    p.add_term(w, std::move(c));
    return p;
  }

  const std::map<W, Int>& terms() const { return terms_; }
  Int coefficient(const W& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Int(0) : it->second;
  }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const W& w, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Degree when every term has the same one; nullopt for mixed degrees.
  /// The zero polynomial reports degree 0.
  std::optional<int> homogeneous_degree() const {
    int deg = 0;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const int d = static_cast<int>(word_degree(w));
      if (first) {
        deg = d;
        first = false;
      } else if (d != deg) {
        return std::nullopt;
      }
    }
    return deg;
  }

  Int evaluate_ones() const {
    Int s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  Polynomial& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= k;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Int& k) { return a *= k; }
  friend Polynomial operator*(const Int& k, Polynomial a) { return a *= k; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [w, c] : a.terms()) r.add_term(w, -c);
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add_term(wa.concat(wb), ca * cb);
    return r;
  }

  Polynomial pow(unsigned k) const {
    Polynomial r = constant(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Polynomial&) const = default;

 private:
  std::map<W, Int> terms_;
};

using AbPolynomial = Polynomial<AbWord>;
using CdPolynomial = Polynomial<CdWord>;

/// Builds a polynomial from (word string, coefficient) pairs; summed terms,
/// zeros dropped.
AbPolynomial make_ab(const std::vector<std::pair<std::string, Int>>& terms);
CdPolynomial make_cd(const std::vector<std::pair<std::string, Int>>& terms);

/// Sum over subsets S of h_S * u_S where u_S writes b at the ranks in S and
/// a elsewhere. A rank-0 vector gives the zero polynomial; rank 1 gives a
/// constant.
AbPolynomial ab_index_from_flag_h(const FlagVector& h);

/// Substitutes c = a + b and d = ab + ba.
AbPolynomial expand_cd(const CdPolynomial& q);

/// Rewrites p in the cd basis if possible: enumerates the cd-monomials of
/// each degree present, expands them, and solves the exact linear system by
/// elimination over rationals. nullopt when p is not in the span.
std::optional<CdPolynomial> to_cd_index(const AbPolynomial& p);

/// All cd-words of weighted degree m, lexicographic (Fibonacci-many).
std::vector<CdWord> cd_words_of_degree(int m);

struct TripleAssignment;

/// Sum of chain weights wt(c) for a verified-or-not letter assignment; equals
/// ab_index_from_flag_h exactly when the assignment is a triple assignment.
AbPolynomial ab_index_from_assignment(const TripleAssignment& t);

}  // namespace rposet
