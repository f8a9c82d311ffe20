#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iex/iet.hpp"

namespace iex {

/// Words are strings of alphabet letters; "" is the empty word.
using Word = std::string;

/// Compares words by the position of their letters in a reference order
/// (length-insensitive lexicographic).
struct WordLess {
  std::vector<char> letters;
  bool operator()(const Word& a, const Word& b) const;
};

/// Factorial set of words grouped by length, each level sorted by the
/// alphabet order it was built with.
class FactorSet {
public:
  FactorSet(std::vector<char> letters, std::vector<std::vector<Word>> by_len);

  const std::vector<char>& letters() const { return letters_; }
  size_t max_len() const { return by_len_.size() - 1; }
  const std::vector<Word>& of_length(size_t k) const;
  size_t count_at(size_t k) const { return of_length(k).size(); }
  bool contains(const Word& w) const;
  std::vector<Word> all_nonempty() const;

  friend bool operator==(const FactorSet& a, const FactorSet& b) {
    return a.by_len_ == b.by_len_;
  }

private:
  std::vector<char> letters_;
  std::vector<std::vector<Word>> by_len_;
};

/// Letter-to-word substitution; doubles as the record of a free-group
/// automorphism when the images form a basis.
class Morphism {
public:
  Morphism() = default;
  Morphism(std::vector<char> domain, std::vector<Word> images);
  static Morphism identity(const std::vector<char>& letters);

  const std::vector<char>& domain() const { return domain_; }
  const Word& image(char a) const;
  Word apply(const Word& w) const;
  bool operator==(const Morphism& o) const = default;
  std::vector<Word> image_set() const;  // sorted copies of the images
  std::string str() const;

private:
  std::vector<char> domain_;
  std::vector<Word> images_;
};

/// compose(f, g)(x) = f(g(x)).
Morphism compose(const Morphism& f, const Morphism& g);

/// incidence()[i][j] counts domain()[i] inside image(domain()[j]).
std::vector<std::vector<Int>> incidence_matrix(const Morphism& f);

/// Some power of the incidence matrix is entrywise positive. Checked up
/// to the Wielandt exponent s^2 - 2s + 2.
bool is_primitive(const Morphism& f);

/// First n letters of the forward coding of z.
Word natural_coding(const Iet& T, const QuadNum& z, size_t n);

/// Points whose coding starts with w (nullopt when there are none).
std::optional<SemiInterval> interval_I(const Iet& T, const Word& w);

/// T^{|w|}(I_w): points whose last |w| letters of backward coding read w.
std::optional<SemiInterval> interval_J(const Iet& T, const Word& w);

/// Sum of the translation values of the letters of w; J_w = I_w + this.
QuadNum word_translation(const Iet& T, const Word& w);

/// All words of length <= n with nonempty I_w, by breadth-first interval
/// refinement. Requires an indecomposable permutation.
FactorSet factors(const Iet& T, size_t n);

enum class ReturnSide { right, left };

/// First return words to w, computed from the first-return map on J_w
/// (right) or I_w (left).
std::vector<Word> return_words(const Iet& T, const Word& w, ReturnSide side);

/// Derived language of F(T) to length n under a coding morphism f for
/// the right return words to w. Computed both combinatorially and via
/// the induced transformation on J_w; the two must agree.
FactorSet derived_set(const Iet& T, const Word& w, const Morphism& f, size_t n);

FactorSet derived_factors_combinatorial(const Iet& T, const Word& w, const Morphism& f, size_t n);
FactorSet derived_factors_geometric(const Iet& T, const Word& w, const Morphism& f, size_t n);

}  // namespace iex
