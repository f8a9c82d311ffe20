#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iex/qfield.hpp"

namespace iex {

/// Left-closed right-open interval [lo, hi), always nonempty.
struct SemiInterval {
  QuadNum lo, hi;

  SemiInterval(QuadNum l, QuadNum h) : lo(std::move(l)), hi(std::move(h)) {
    if (!(lo < hi)) throw OutOfDomain("empty semi-interval [" + lo.str() + ", " + hi.str() + ")");
  }
  QuadNum length() const { return hi - lo; }
  bool contains(const QuadNum& z) const { return lo <= z && z < hi; }
  bool contains_open(const QuadNum& z) const { return lo < z && z < hi; }
  bool contains(const SemiInterval& other) const { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const SemiInterval& a, const SemiInterval& b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }
};

std::optional<SemiInterval> intersect(const SemiInterval& a, const SemiInterval& b);

/// Interval exchange transformation on [origin, origin + sum lengths).
///
/// The data is an alphabet carrying two total orders: order1 lists the
/// letters left to right on the domain, order2 lists them left to right
/// on the image. lengths are indexed by order1 position. All derived
/// boundaries are computed eagerly; instances are immutable.
class Iet {
public:
  Iet(std::vector<char> order1, std::vector<char> order2, std::vector<QuadNum> lengths,
      QuadNum origin);

  size_t size() const { return order1_.size(); }
  const std::vector<char>& order1() const { return order1_; }
  const std::vector<char>& order2() const { return order2_; }
  /// perm()[k] is the order1 position of the letter with order2 rank k,
  /// i.e. the index permutation linking the two orders.
  const std::vector<size_t>& perm() const { return perm_; }

  const QuadNum& left() const { return origin_; }
  const QuadNum& right() const { return right_; }
  SemiInterval domain() const { return {origin_, right_}; }
  long radicand() const;

  char letter(size_t i) const { return order1_[i]; }
  size_t rank1(char a) const;
  // Per order1 position i: I = [gamma, mu), J = T(I) = [delta, nu),
  // translation value alpha = nu - mu = delta - gamma.
  const QuadNum& length(size_t i) const { return lengths_[i]; }
  const QuadNum& gamma(size_t i) const { return gamma_[i]; }
  const QuadNum& mu(size_t i) const { return mu_[i]; }
  const QuadNum& delta(size_t i) const { return delta_[i]; }
  const QuadNum& nu(size_t i) const { return nu_[i]; }
  const QuadNum& alpha(size_t i) const { return alpha_[i]; }

  size_t locate_index(const QuadNum& z) const;
  char locate(const QuadNum& z) const { return order1_[locate_index(z)]; }
  QuadNum apply(const QuadNum& z) const;
  QuadNum apply_inv(const QuadNum& z) const;
  QuadNum iterate(const QuadNum& z, long n) const;

  /// Left boundaries gamma_1 = origin, gamma_2, ..., gamma_s.
  std::vector<QuadNum> separation_points() const { return gamma_; }

  /// Conjugate by the point reflection of the domain: lengths and both
  /// orders reverse.
  Iet mirrored() const;

private:
  std::vector<char> order1_, order2_;
  std::vector<QuadNum> lengths_;
  QuadNum origin_, right_;
  std::vector<size_t> perm_;
  std::vector<QuadNum> gamma_, mu_, delta_, nu_, alpha_;
};

/// True when no proper prefix of order1 positions is invariant.
bool is_indecomposable(const std::vector<size_t>& perm);

struct IdocConnection {
  size_t i = 0, j = 0;  // 1-based separation point indices, in 2..s
  long h = 0;           // T^h(gamma_i) == gamma_j
  QuadNum point;
};

/// Bounded-depth search for coinciding orbits of the nonzero separation
/// points. Empty result is a depth-limited certificate only.
std::optional<IdocConnection> idoc_probe(const Iet& T, long depth);

/// Smallest nonzero absolute value of a sum of at most N translation
/// values (with repetition): |T^n(z) - z| < epsilon forces n >= N.
QuadNum epsilon_for(const Iet& T, long N);

enum class CanonMode { equivalence, similarity };

/// Normal form under rescaling + translation (equivalence), optionally
/// also under the mirror reflection (similarity). Letter names are
/// forgotten; only the index permutation and length vector remain.
struct CanonicalIet {
  CanonMode mode = CanonMode::equivalence;
  bool mirrored = false;  // similarity only: the mirror form won
  std::vector<size_t> perm;
  std::vector<QuadNum> lengths;  // origin 0, total length 1

  std::string key() const;
  Iet representative() const;
};

CanonicalIet canonical_form(const Iet& T, CanonMode mode);

}  // namespace iex
