#pragma once

#include <string>
#include <vector>

#include "iex/coding.hpp"
#include "iex/iet.hpp"
#include "iex/induction.hpp"

namespace iex {

/// Disjoint sorted union of semi-intervals; adjacent parts are merged.
class FiniteUnion {
public:
  FiniteUnion() = default;
  explicit FiniteUnion(const SemiInterval& part) : parts_{part} {}
  static FiniteUnion from_parts(std::vector<SemiInterval> parts);

  bool empty() const { return parts_.empty(); }
  size_t part_count() const { return parts_.size(); }
  const std::vector<SemiInterval>& parts() const { return parts_; }
  QuadNum measure() const;

  FiniteUnion unite(const FiniteUnion& other) const;
  FiniteUnion intersect(const FiniteUnion& other) const;
  bool subset_of(const FiniteUnion& other) const;
  bool intersects(const FiniteUnion& other) const;
  friend bool operator==(const FiniteUnion& a, const FiniteUnion& b) {
    return a.parts_ == b.parts_;
  }

private:
  std::vector<SemiInterval> parts_;
};

FiniteUnion forward_image(const Iet& T, const FiniteUnion& X);
FiniteUnion backward_image(const Iet& T, const FiniteUnion& X);

/// Psi(X): max coefficient height over the boundary points of X.
Int set_complexity(const FiniteUnion& X);

/// Pi(X) = |X| * Psi(X).
QuadNum reduced_complexity(const FiniteUnion& X);

/// Least structural constant bounding the height drift of one application:
/// max of Psi(alpha_a), Psi(gamma_i) and Psi(T(gamma_i)).
Int u_bound(const Iet& T);

/// Equivalent copy of T defined over Z[sqrt(d)], with the scale used.
std::pair<Iet, Int> rescale_integral(const Iet& T);

enum class ReturnTimeKind { rho_plus, rho_minus, sigma_plus, sigma_minus };

/// Exact minimal return index by iterated set arithmetic. rho: first n
/// with T^{+-n}(X) inside the union of the earlier iterates; sigma: first
/// n with T^{+-n}(X) meeting X.
long return_time(const Iet& T, const FiniteUnion& X, ReturnTimeKind kind,
                 const RhoConfig& cfg = {});

/// S_{m,n}(T): union of T^i(Sep(T)) for -m+1 <= i <= n, sorted.
std::vector<QuadNum> boundary_orbit(const Iet& T, long m, long n);

/// U_{m,n}(T): the partition of the domain cut at S_{m,n}(T).
std::vector<SemiInterval> orbit_cells(const Iet& T, long m, long n);

/// V_{m,n}(T) membership: both endpoints lie in S_{m,n}(T) (or at r).
bool is_orbit_interval(const Iet& T, long m, long n, const SemiInterval& I);

struct GraphEdge {
  size_t from;
  char kind;  // 'R' or 'L'; rendered unlabeled in similarity mode
  size_t to;
};

/// Classes of transformations reachable from T by branching induction.
/// Vertices are discovered in breadth-first order; witnesses are concrete
/// induced transformations of the original T realizing each class.
struct InductionGraph {
  CanonMode mode = CanonMode::equivalence;
  std::vector<CanonicalIet> vertices;
  std::vector<GraphEdge> edges;
  std::vector<Iet> witnesses;
  size_t root = 0;
};

InductionGraph build_graph(const Iet& T, CanonMode mode, size_t max_vertices);

std::string emit_dot(const InductionGraph& graph);

/// theta(eta^omega(seed)) generates the coding language of T: theta is the
/// descent to a class on a cycle, eta the (powered) cycle automorphism,
/// primitive and fixing the seed's initial letter.
struct MorphicPresentation {
  Morphism path;
  Morphism cycle;
  char seed = 'a';
};

MorphicPresentation extract_primitive_morphism(const Iet& T);

/// Factors of the presented infinite word up to length n, grown until the
/// per-length counts reach (s-1)k+1.
FactorSet presentation_factors(const MorphicPresentation& pres, const std::vector<char>& letters,
                               size_t n);

struct EuclidResult {
  std::vector<long> digits;
  bool exhausted = false;  // a connection ended the expansion
};

/// Continued-fraction partial quotients of lambda_1/lambda_2 for a
/// 2-interval exchange, read off run lengths of identical induction cases.
EuclidResult euclid_digits(const Iet& T, size_t n);

}  // namespace iex
