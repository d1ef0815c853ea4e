#pragma once

// Linear word rewriting for finitely presented algebras with a declared finite basis.

#include "isotypic/findim.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace isotypic {

struct PresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Reduction of one word exceeded the step budget.
struct DivergenceError : PresentationError {
  using PresentationError::PresentationError;
};
/// A reduced product is not a combination of the declared basis words.
struct ClosureError : PresentationError {
  using PresentationError::PresentationError;
};
/// The closed structure constants are not associative, so the rules are not confluent.
struct ConfluenceError : PresentationError {
  using PresentationError::PresentationError;
};

/// A word is a string of generator indices.
using Word = std::string;
template <class S> using WordCombination = std::vector<std::pair<Word, S>>;

template <class S> struct RewriteRule {
  Word lhs;
  WordCombination<S> rhs;
};

/// Rules are applied at the leftmost position where any rule matches, trying rules in
/// declared order there. Termination is not assumed: each top-level reduction has a
/// budget of kStepBudget rule applications.
template <class S> class RewriteSystem {
 public:
  static constexpr int kStepBudget = 10000;

  RewriteSystem(std::vector<std::string> generators, std::vector<RewriteRule<S>> rules,
                std::vector<Word> normal_basis, std::vector<std::string> labels)
      : generators_(std::move(generators)), rules_(std::move(rules)), basis_(std::move(normal_basis)),
        labels_(std::move(labels)) {
    if (generators_.empty() || generators_.size() > 120) throw std::invalid_argument("rewrite system: bad generator count");
    if (labels_.size() != basis_.size()) throw std::invalid_argument("rewrite system: one label per basis word");
    for (const auto& r : rules_) {
      if (r.lhs.empty()) throw std::invalid_argument("rewrite rule with empty left side");
      check_word(r.lhs);
      for (const auto& [w, c] : r.rhs) check_word(w);
    }
    for (const auto& w : basis_) check_word(w);
    build_change_of_basis();
  }

  const std::vector<std::string>& generators() const { return generators_; }
  const std::vector<RewriteRule<S>>& rules() const { return rules_; }
  const std::vector<Word>& normal_basis() const { return basis_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  int generator(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
      if (generators_[i] == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  }

  /// Parses space-separated generator names; "1" or "" is the empty word.
  Word parse(std::string_view text) const { return parse_word(generators_, text); }

  static Word parse_word(const std::vector<std::string>& gens, std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
      if (text[i] == ' ' || text[i] == '*') {
        ++i;
        continue;
      }
      const std::size_t j = std::min(text.find_first_of(" *", i), text.size());
      const std::string_view tok = text.substr(i, j - i);
      i = j;
      if (tok == "1") continue;
      bool found = false;
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (gens[g] == tok) {
          w.push_back(static_cast<char>(g));
          found = true;
          break;
        }
      if (!found) throw std::invalid_argument("unknown generator '" + std::string(tok) + "'");
    }
    return w;
  }

  std::string spell(const Word& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (char c : w) {
      if (!s.empty()) s += ' ';
      s += generators_[static_cast<std::size_t>(c)];
    }
    return s;
  }

  /// Irreducible combination equal to w, in map form keyed by irreducible word.
  std::map<Word, S> reduce(const Word& w) const {
    int budget = kStepBudget;
    return reduce_word(w, budget);
  }

  std::map<Word, S> reduce(const WordCombination<S>& combo) const {
    std::map<Word, S> out;
    for (const auto& [w, c] : combo)
      for (const auto& [u, d] : reduce(w)) accumulate(out, u, c * d);
    return out;
  }

  bool is_irreducible(const Word& w) const { return !find_redex(w).has_value(); }

  /// Coordinates over the declared basis of the reduced form of `combo`.
  Vec<S> normal_form(const WordCombination<S>& combo) const { return coordinates(reduce(combo)); }

  Vec<S> coordinates(const std::map<Word, S>& irreducible) const {
    const int k = static_cast<int>(irreducible_index_.size());
    const int n = dim();
    Vec<S> r = zero_vec<S>(k + n);
    for (const auto& [w, c] : irreducible) {
      auto it = irreducible_index_.find(w);
      if (it == irreducible_index_.end())
        throw ClosureError("reduced word '" + spell(w) + "' lies outside the span of the declared basis");
      r(it->second) += c;
    }
    for (int i = 0; i < change_.rank(); ++i) {
      const S f = r(change_.pivots[static_cast<std::size_t>(i)]);
      if (is_zero(f)) continue;
      for (int j = 0; j < k + n; ++j)
        if (!is_zero(change_.rref(i, j))) r(j) -= f * change_.rref(i, j);
    }
    for (int j = 0; j < k; ++j)
      if (!is_zero(r(j))) throw ClosureError("reduced form is not a combination of the declared basis words");
    Vec<S> x = zero_vec<S>(n);
    for (int j = 0; j < n; ++j) x(j) = -r(k + j);
    return x;
  }

 private:
  void check_word(const Word& w) const {
    for (char c : w)
      if (c < 0 || static_cast<std::size_t>(c) >= generators_.size()) throw std::invalid_argument("word uses an unknown generator");
  }

  static void accumulate(std::map<Word, S>& m, const Word& w, const S& c) {
    if (is_zero(c)) return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) m.erase(it);
    }
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos)
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        const Word& lhs = rules_[r].lhs;
        if (w.compare(pos, lhs.size(), lhs) == 0 && pos + lhs.size() <= w.size()) return std::make_pair(pos, r);
      }
    return std::nullopt;
  }

  std::map<Word, S> reduce_word(const Word& w, int& budget) const {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    std::map<Word, S> out;
    const auto redex = find_redex(w);
    if (!redex) {
      out.emplace(w, S(1));
    } else {
      if (--budget < 0) throw DivergenceError("reduction of '" + spell(w) + "' exceeded the step budget");
      const auto [pos, r] = *redex;
      const Word prefix = w.substr(0, pos);
      const Word suffix = w.substr(pos + rules_[r].lhs.size());
      for (const auto& [u, c] : rules_[r].rhs)
        for (const auto& [v, d] : reduce_word(prefix + u + suffix, budget)) accumulate(out, v, c * d);
    }
    cache_.emplace(w, out);
    return out;
  }

  void build_change_of_basis() {
    std::vector<std::map<Word, S>> forms;
    for (const auto& w : basis_) {
      forms.push_back(reduce(w));
      for (const auto& [u, c] : forms.back()) irreducible_index_.try_emplace(u, 0);
    }
    int next = 0;
    for (auto& [u, idx] : irreducible_index_) idx = next++;
    const int k = next, n = dim();
    Mat<S> aug = zero_mat<S>(n, k + n);
    for (int i = 0; i < n; ++i) {
      for (const auto& [u, c] : forms[static_cast<std::size_t>(i)]) aug(i, irreducible_index_.at(u)) = c;
      aug(i, k + i) = S(1);
    }
    change_ = unit_pivot_echelon(aug);
    for (int p : change_.pivots)
      if (p >= k) throw ClosureError("declared basis words are linearly dependent after reduction");
  }

  std::vector<std::string> generators_;
  std::vector<RewriteRule<S>> rules_;
  std::vector<Word> basis_;
  std::vector<std::string> labels_;
  std::map<Word, int> irreducible_index_;
  Echelon<S> change_;
  mutable std::map<Word, std::map<Word, S>> cache_;
};

template <class S> struct PresentedAlgebra {
  RewriteSystem<S> rewrite;
  FinDimAlgebra<S> result;
  bool closure_certificate = false;
};

/// Structure constants from normal forms of all basis products, released only after an
/// exhaustive associativity check. The unit defaults to the empty word.
template <class S> PresentedAlgebra<S> close_presentation(RewriteSystem<S> rs, const WordCombination<S>& unit) {
  const int n = rs.dim();
  StructureTensor<S> mult(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Word w = rs.normal_basis()[static_cast<std::size_t>(i)] + rs.normal_basis()[static_cast<std::size_t>(j)];
      mult.set(i, j, to_sparse(rs.normal_form(WordCombination<S>{{w, S(1)}})));
    }
  const Vec<S> u = rs.normal_form(unit);
  FinDimAlgebra<S> alg(rs.labels(), std::move(mult), u);
  const CheckResult assoc = check_associativity(alg);
  if (!assoc.passed) throw ConfluenceError("closed presentation is not associative at " + assoc.witness);
  const CheckResult unit_check = check_unit(alg);
  if (!unit_check.passed) throw ConfluenceError("declared unit fails at " + unit_check.witness);
  return PresentedAlgebra<S>{std::move(rs), std::move(alg), true};
}

template <class S> PresentedAlgebra<S> close_presentation(RewriteSystem<S> rs) {
  return close_presentation(std::move(rs), WordCombination<S>{{Word{}, S(1)}});
}

/// Extends generator images in A (x) A multiplicatively over each basis word, giving
/// Delta on the whole basis. Images are sparse over pair indices i*n+j.
template <class S>
std::vector<SparseVec<S>> extend_to_tensor_square(const PresentedAlgebra<S>& pa,
                                                  const std::vector<SparseVec<S>>& generator_images) {
  const int n = pa.result.dim();
  if (generator_images.size() != pa.rewrite.generators().size())
    throw std::invalid_argument("one tensor-square image per generator is required");
  SparseVec<S> unit2;
  for (const auto& [i, c] : to_sparse(pa.result.unit()))
    for (const auto& [j, d] : to_sparse(pa.result.unit())) unit2.emplace_back(pair_index(n, i, j), c * d);
  TensorSquareMultiplier<S> mul(pa.result);
  std::map<Word, SparseVec<S>> memo;
  std::vector<SparseVec<S>> out;
  for (const Word& w : pa.rewrite.normal_basis()) {
    // Reuse the longest memoised prefix.
    SparseVec<S> acc = unit2;
    std::size_t start = 0;
    for (std::size_t len = w.size(); len > 0; --len)
      if (auto it = memo.find(w.substr(0, len)); it != memo.end()) {
        acc = it->second;
        start = len;
        break;
      }
    for (std::size_t k = start; k < w.size(); ++k) {
      acc = mul(acc, generator_images[static_cast<std::size_t>(w[k])]);
      memo.emplace(w.substr(0, k + 1), acc);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

/// Extends generator values of a character multiplicatively over each basis word.
template <class S> Vec<S> extend_multiplicative_functional(const PresentedAlgebra<S>& pa, const std::vector<S>& generator_values) {
  Vec<S> out = zero_vec<S>(pa.result.dim());
  for (int i = 0; i < pa.result.dim(); ++i) {
    S v(1);
    for (char c : pa.rewrite.normal_basis()[static_cast<std::size_t>(i)]) v *= generator_values[static_cast<std::size_t>(c)];
    out(i) = v;
  }
  return out;
}

}  // namespace isotypic
