#include "iex/coding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iex/induction.hpp"

namespace iex {

namespace {

size_t letter_rank(const std::vector<char>& letters, char a) {
  auto it = std::find(letters.begin(), letters.end(), a);
  if (it == letters.end())
    throw AlphabetMismatch(std::string("letter '") + a + "' is not in the alphabet");
  return static_cast<size_t>(it - letters.begin());
}

}  // namespace

bool WordLess::operator()(const Word& a, const Word& b) const {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    size_t ra = letter_rank(letters, a[i]);
    size_t rb = letter_rank(letters, b[i]);
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

FactorSet::FactorSet(std::vector<char> letters, std::vector<std::vector<Word>> by_len)
    : letters_(std::move(letters)), by_len_(std::move(by_len)) {
  if (by_len_.empty() || by_len_[0] != std::vector<Word>{""})
    throw std::logic_error("factor set must start with the empty word level");
}

const std::vector<Word>& FactorSet::of_length(size_t k) const {
  if (k >= by_len_.size())
    throw OutOfDomain("factor set only extends to length " + std::to_string(max_len()));
  return by_len_[k];
}

bool FactorSet::contains(const Word& w) const {
  const std::vector<Word>& level = of_length(w.size());
  return std::binary_search(level.begin(), level.end(), w, WordLess{letters_});
}

std::vector<Word> FactorSet::all_nonempty() const {
  std::vector<Word> out;
  for (size_t k = 1; k < by_len_.size(); ++k)
    out.insert(out.end(), by_len_[k].begin(), by_len_[k].end());
  return out;
}

Morphism::Morphism(std::vector<char> domain, std::vector<Word> images)
    : domain_(std::move(domain)), images_(std::move(images)) {
  if (domain_.size() != images_.size())
    throw AlphabetMismatch("morphism needs one image per domain letter");
  for (const Word& im : images_)
    if (im.empty()) throw NotACodingMorphism("morphism images must be nonempty");
}

Morphism Morphism::identity(const std::vector<char>& letters) {
  std::vector<Word> images;
  images.reserve(letters.size());
  for (char a : letters) images.emplace_back(1, a);
  return Morphism(letters, std::move(images));
}

const Word& Morphism::image(char a) const {
  return images_[letter_rank(domain_, a)];
}

Word Morphism::apply(const Word& w) const {
  Word out;
  for (char a : w) out += image(a);
  return out;
}

std::vector<Word> Morphism::image_set() const {
  std::vector<Word> out = images_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string Morphism::str() const {
  std::string out;
  for (size_t i = 0; i < domain_.size(); ++i) {
    if (i) out += ", ";
    out += domain_[i];
    out += " -> ";
    out += images_[i];
  }
  return out;
}

Morphism compose(const Morphism& f, const Morphism& g) {
  std::vector<Word> images;
  images.reserve(g.domain().size());
  for (char a : g.domain()) images.push_back(f.apply(g.image(a)));
  return Morphism(g.domain(), std::move(images));
}

std::vector<std::vector<Int>> incidence_matrix(const Morphism& f) {
  const std::vector<char>& letters = f.domain();
  const size_t s = letters.size();
  std::vector<std::vector<Int>> m(s, std::vector<Int>(s, 0));
  for (size_t j = 0; j < s; ++j)
    for (char a : f.image(letters[j])) m[letter_rank(letters, a)][j] += 1;
  return m;
}

bool is_primitive(const Morphism& f) {
  const size_t s = f.domain().size();
  auto m = incidence_matrix(f);
  std::vector<std::vector<bool>> b(s, std::vector<bool>(s));
  for (size_t i = 0; i < s; ++i)
    for (size_t j = 0; j < s; ++j) b[i][j] = m[i][j] > 0;
  long bound = static_cast<long>(s * s) - 2 * static_cast<long>(s) + 2;
  std::vector<std::vector<bool>> p = b;
  for (long k = 1; k <= std::max<long>(bound, 1); ++k) {
    bool all = true;
    for (size_t i = 0; i < s && all; ++i)
      for (size_t j = 0; j < s && all; ++j)
        if (!p[i][j]) all = false;
    if (all) return true;
    std::vector<std::vector<bool>> q(s, std::vector<bool>(s, false));
    for (size_t i = 0; i < s; ++i)
      for (size_t l = 0; l < s; ++l)
        if (p[i][l])
          for (size_t j = 0; j < s; ++j)
            if (b[l][j]) q[i][j] = true;
    p = std::move(q);
  }
  return false;
}

Word natural_coding(const Iet& T, const QuadNum& z, size_t n) {
  Word out;
  out.reserve(n);
  QuadNum cur = z;
  for (size_t k = 0; k < n; ++k) {
    size_t i = T.locate_index(cur);
    out += T.letter(i);
    cur = cur + T.alpha(i);
  }
  return out;
}

namespace {

// Forward refinement: tracks J of the processed prefix; extending by a
// letter intersects with I_a and translates by alpha_a.
std::optional<SemiInterval> refine_J(const Iet& T, const Word& w) {
  std::optional<SemiInterval> cur = T.domain();
  for (char a : w) {
    size_t i = T.rank1(a);
    cur = intersect(*cur, SemiInterval(T.gamma(i), T.mu(i)));
    if (!cur) return std::nullopt;
    cur = SemiInterval(cur->lo + T.alpha(i), cur->hi + T.alpha(i));
  }
  return cur;
}

}  // namespace

std::optional<SemiInterval> interval_J(const Iet& T, const Word& w) { return refine_J(T, w); }

std::optional<SemiInterval> interval_I(const Iet& T, const Word& w) {
  std::optional<SemiInterval> j = refine_J(T, w);
  if (!j) return std::nullopt;
  QuadNum shift = word_translation(T, w);
  return SemiInterval(j->lo - shift, j->hi - shift);
}

QuadNum word_translation(const Iet& T, const Word& w) {
  QuadNum total(0);
  for (char a : w) total = total + T.alpha(T.rank1(a));
  return total;
}

FactorSet factors(const Iet& T, size_t n) {
  if (!is_indecomposable(T.perm()))
    throw DecomposablePermutation("factor language requires an indecomposable permutation");
  struct Node {
    Word w;
    SemiInterval j;
  };
  std::vector<std::vector<Word>> levels{{Word()}};
  std::vector<Node> layer{{Word(), T.domain()}};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<Node> next;
    std::vector<Word> words;
    for (const Node& node : layer) {
      for (size_t i = 0; i < T.size(); ++i) {
        auto cut = intersect(node.j, SemiInterval(T.gamma(i), T.mu(i)));
        if (!cut) continue;
        SemiInterval img(cut->lo + T.alpha(i), cut->hi + T.alpha(i));
        next.push_back({node.w + T.letter(i), img});
        words.push_back(next.back().w);
      }
    }
    levels.push_back(std::move(words));
    layer = std::move(next);
  }
  return FactorSet(T.order1(), std::move(levels));
}

std::vector<Word> return_words(const Iet& T, const Word& w, ReturnSide side) {
  std::optional<SemiInterval> base =
      side == ReturnSide::right ? interval_J(T, w) : interval_I(T, w);
  if (!base) throw WordNotInLanguage("'" + w + "' is not a factor of the coding language");
  std::vector<Word> out;
  for (const ReturnCell& cell : first_return_map(T, *base))
    out.push_back(natural_coding(T, cell.cell.lo, static_cast<size_t>(cell.steps)));
  std::sort(out.begin(), out.end(), WordLess{T.order1()});
  return out;
}

namespace {

void check_coding_morphism(const Iet& T, const Word& w, const Morphism& f) {
  std::vector<Word> images = f.image_set();
  std::vector<Word> returns = return_words(T, w, ReturnSide::right);
  std::sort(returns.begin(), returns.end());
  if (std::set<Word>(images.begin(), images.end()).size() != images.size() || images != returns)
    throw NotACodingMorphism("morphism does not map bijectively onto the return words of '" + w +
                             "'");
}

}  // namespace

FactorSet derived_factors_combinatorial(const Iet& T, const Word& w, const Morphism& f,
                                        size_t n) {
  check_coding_morphism(T, w, f);
  size_t max_image = 0;
  for (char b : f.domain()) max_image = std::max(max_image, f.image(b).size());
  FactorSet lang = factors(T, w.size() + n * max_image);

  // y is a derived factor iff w f(y) is a factor ending with w.
  auto accept = [&](const Word& y) {
    Word u = w + f.apply(y);
    if (!lang.contains(u)) return false;
    return u.compare(u.size() - w.size(), w.size(), w) == 0;
  };

  std::vector<std::vector<Word>> levels{{Word()}};
  std::vector<Word> layer{Word()};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<Word> next;
    for (const Word& y : layer)
      for (char b : f.domain())
        if (accept(y + b)) next.push_back(y + b);
    levels.push_back(next);
    layer = std::move(next);
  }
  return FactorSet(f.domain(), std::move(levels));
}

FactorSet derived_factors_geometric(const Iet& T, const Word& w, const Morphism& f, size_t n) {
  check_coding_morphism(T, w, f);
  std::optional<SemiInterval> jw = interval_J(T, w);
  if (!jw) throw WordNotInLanguage("'" + w + "' is not a factor of the coding language");
  std::string chi = chi_search(T, *jw);
  ChiResult res = apply_chi(T, chi);

  // Cell labelled x in the induced transformation reads the return word
  // theta(x); rename it to the f-letter with the same image.
  std::map<char, char> rename;
  for (char x : res.iet.order1()) {
    const Word& rw = res.automorphism.image(x);
    bool found = false;
    for (char b : f.domain()) {
      if (f.image(b) == rw) {
        rename[x] = b;
        found = true;
        break;
      }
    }
    if (!found) throw NotACodingMorphism("no f-letter for return word '" + rw + "'");
  }

  FactorSet inner = factors(res.iet, n);
  std::vector<std::vector<Word>> levels;
  for (size_t k = 0; k <= n; ++k) {
    std::vector<Word> words;
    for (const Word& y : inner.of_length(k)) {
      Word renamed;
      for (char x : y) renamed += rename.at(x);
      words.push_back(renamed);
    }
    std::sort(words.begin(), words.end(), WordLess{f.domain()});
    levels.push_back(std::move(words));
  }
  return FactorSet(f.domain(), std::move(levels));
}

FactorSet derived_set(const Iet& T, const Word& w, const Morphism& f, size_t n) {
  FactorSet combinatorial = derived_factors_combinatorial(T, w, f, n);
  FactorSet geometric = derived_factors_geometric(T, w, f, n);
  if (!(combinatorial == geometric))
    throw std::logic_error("derived-set routes disagree for '" + w + "'");
  return combinatorial;
}

}  // namespace iex
