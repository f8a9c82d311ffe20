#include "iex/iet.hpp"

#include <algorithm>
#include <set>

namespace iex {

std::optional<SemiInterval> intersect(const SemiInterval& a, const SemiInterval& b) {
  const QuadNum& lo = a.lo < b.lo ? b.lo : a.lo;
  const QuadNum& hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo < hi) return SemiInterval(lo, hi);
  return std::nullopt;
}

Iet::Iet(std::vector<char> order1, std::vector<char> order2, std::vector<QuadNum> lengths,
         QuadNum origin)
    : order1_(std::move(order1)),
      order2_(std::move(order2)),
      lengths_(std::move(lengths)),
      origin_(std::move(origin)) {
  const size_t s = order1_.size();
  if (s == 0) throw AlphabetMismatch("alphabet must be nonempty");
  if (order2_.size() != s || lengths_.size() != s)
    throw AlphabetMismatch("order2 and lengths must match the alphabet size");
  if (std::set<char>(order1_.begin(), order1_.end()).size() != s)
    throw AlphabetMismatch("alphabet letters must be distinct");

  perm_.resize(s);
  for (size_t k = 0; k < s; ++k) {
    auto it = std::find(order1_.begin(), order1_.end(), order2_[k]);
    if (it == order1_.end())
      throw AlphabetMismatch(std::string("order2 letter '") + order2_[k] +
                             "' is not in the alphabet");
    perm_[k] = static_cast<size_t>(it - order1_.begin());
  }
  if (std::set<size_t>(perm_.begin(), perm_.end()).size() != s)
    throw AlphabetMismatch("order2 must be a permutation of the alphabet");

  for (size_t i = 0; i < s; ++i) {
    if (lengths_[i].sign() <= 0)
      throw NonPositiveLength(std::string("length of '") + order1_[i] + "' is " +
                              lengths_[i].str());
  }

  gamma_.resize(s);
  mu_.resize(s);
  delta_.resize(s);
  nu_.resize(s);
  alpha_.resize(s);
  QuadNum acc = origin_;
  for (size_t i = 0; i < s; ++i) {
    gamma_[i] = acc;
    acc = acc + lengths_[i];
    mu_[i] = acc;
  }
  right_ = acc;
  acc = origin_;
  for (size_t k = 0; k < s; ++k) {
    size_t i = perm_[k];
    delta_[i] = acc;
    acc = acc + lengths_[i];
    nu_[i] = acc;
  }
  for (size_t i = 0; i < s; ++i) alpha_[i] = nu_[i] - mu_[i];
}

long Iet::radicand() const {
  if (origin_.radicand() != 1) return origin_.radicand();
  for (const QuadNum& l : lengths_)
    if (l.radicand() != 1) return l.radicand();
  return 1;
}

size_t Iet::rank1(char a) const {
  auto it = std::find(order1_.begin(), order1_.end(), a);
  if (it == order1_.end())
    throw AlphabetMismatch(std::string("letter '") + a + "' is not in the alphabet");
  return static_cast<size_t>(it - order1_.begin());
}

size_t Iet::locate_index(const QuadNum& z) const {
  if (z < origin_ || !(z < right_))
    throw OutOfDomain("point " + z.str() + " outside " + domain().str());
  for (size_t i = 0; i < order1_.size(); ++i)
    if (z < mu_[i]) return i;
  throw std::logic_error("locate fell through a full partition");
}

QuadNum Iet::apply(const QuadNum& z) const { return z + alpha_[locate_index(z)]; }

QuadNum Iet::apply_inv(const QuadNum& z) const {
  if (z < origin_ || !(z < right_))
    throw OutOfDomain("point " + z.str() + " outside " + domain().str());
  for (size_t k = 0; k < order2_.size(); ++k) {
    size_t i = perm_[k];
    if (z < nu_[i]) return z - alpha_[i];
  }
  throw std::logic_error("inverse locate fell through a full partition");
}

QuadNum Iet::iterate(const QuadNum& z, long n) const {
  QuadNum cur = z;
  for (long k = 0; k < n; ++k) cur = apply(cur);
  for (long k = 0; k > n; --k) cur = apply_inv(cur);
  return cur;
}

Iet Iet::mirrored() const {
  std::vector<char> o1(order1_.rbegin(), order1_.rend());
  std::vector<char> o2(order2_.rbegin(), order2_.rend());
  std::vector<QuadNum> lens(lengths_.rbegin(), lengths_.rend());
  return Iet(std::move(o1), std::move(o2), std::move(lens), origin_);
}

bool is_indecomposable(const std::vector<size_t>& perm) {
  size_t running_max = 0;
  for (size_t k = 0; k + 1 < perm.size(); ++k) {
    running_max = std::max(running_max, perm[k]);
    if (running_max == k) return false;  // {0..k} is invariant
  }
  return true;
}

std::optional<IdocConnection> idoc_probe(const Iet& T, long depth) {
  const size_t s = T.size();
  if (s <= 1) return std::nullopt;
  std::vector<QuadNum> seps = T.separation_points();
  std::vector<QuadNum> orbit(seps.begin() + 1, seps.end());
  for (long h = 0; h <= depth; ++h) {
    for (size_t i = 0; i + 1 < s; ++i) {
      for (size_t j = 0; j + 1 < s; ++j) {
        if (h == 0 && i == j) continue;
        if (orbit[i] == seps[j + 1])
          return IdocConnection{i + 2, j + 2, h, orbit[i]};
      }
    }
    if (h < depth)
      for (QuadNum& z : orbit) z = T.apply(z);
  }
  return std::nullopt;
}

QuadNum epsilon_for(const Iet& T, long N) {
  if (N < 1) throw OutOfDomain("epsilon_for requires N >= 1");
  std::set<QuadNum> all, layer;
  for (size_t i = 0; i < T.size(); ++i) layer.insert(T.alpha(i));
  all = layer;
  for (long m = 2; m <= N; ++m) {
    std::set<QuadNum> next;
    for (const QuadNum& x : layer)
      for (size_t i = 0; i < T.size(); ++i) next.insert(x + T.alpha(i));
    layer = std::move(next);
    all.insert(layer.begin(), layer.end());
  }
  std::optional<QuadNum> best;
  for (const QuadNum& x : all) {
    if (x.is_zero()) continue;  // zero sums are genuine returns, excluded
    QuadNum a = x.abs();
    if (!best || a < *best) best = a;
  }
  if (!best) throw DegenerateTransformation("all translation-value sums vanish");
  return *best;
}

namespace {

std::string canon_key(const std::vector<size_t>& perm, const std::vector<QuadNum>& lengths) {
  std::string k;
  for (size_t p : perm) {
    k += std::to_string(p);
    k += ',';
  }
  k += '|';
  for (const QuadNum& l : lengths) {
    k += l.str();
    k += ';';
  }
  return k;
}

std::vector<QuadNum> normalized_lengths(const Iet& T) {
  QuadNum total = T.right() - T.left();
  std::vector<QuadNum> lens;
  lens.reserve(T.size());
  for (size_t i = 0; i < T.size(); ++i) lens.push_back(T.length(i) / total);
  return lens;
}

std::vector<size_t> mirror_perm(const std::vector<size_t>& perm) {
  const size_t s = perm.size();
  std::vector<size_t> out(s);
  for (size_t k = 0; k < s; ++k) out[k] = s - 1 - perm[s - 1 - k];
  return out;
}

}  // namespace

std::string CanonicalIet::key() const { return canon_key(perm, lengths); }

Iet CanonicalIet::representative() const {
  const size_t s = perm.size();
  std::vector<char> o1(s), o2(s);
  for (size_t i = 0; i < s; ++i) o1[i] = static_cast<char>('a' + i);
  for (size_t k = 0; k < s; ++k) o2[k] = static_cast<char>('a' + perm[k]);
  return Iet(std::move(o1), std::move(o2), lengths, QuadNum(0));
}

CanonicalIet canonical_form(const Iet& T, CanonMode mode) {
  CanonicalIet c;
  c.mode = mode;
  c.perm = T.perm();
  c.lengths = normalized_lengths(T);
  if (mode == CanonMode::similarity) {
    std::vector<size_t> mperm = mirror_perm(c.perm);
    std::vector<QuadNum> mlens(c.lengths.rbegin(), c.lengths.rend());
    if (canon_key(mperm, mlens) < c.key()) {
      c.perm = std::move(mperm);
      c.lengths = std::move(mlens);
      c.mirrored = true;
    }
  }
  return c;
}

}  // namespace iex
