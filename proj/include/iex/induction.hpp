#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "iex/coding.hpp"
#include "iex/iet.hpp"

namespace iex {

/// One branch of Rauzy induction. The automorphism rewrites codings of
/// the result back to codings of the input; it changes exactly one
/// letter's image, to a length-2 word.
struct InductionStep {
  char kind = 'R';  // 'R' = right (psi), 'L' = left (phi)
  int case_tag = 0;
  Morphism automorphism;
  Iet result;
};

/// Z(T) = [l, max{gamma_s, delta_{pi(s)}}). Throws ConnectionDetected on
/// a boundary coincidence.
SemiInterval right_domain(const Iet& T);
/// Y(T) = [min{mu_1, nu_{pi(1)}}, r).
SemiInterval left_domain(const Iet& T);

InductionStep rauzy_right(const Iet& T);
InductionStep rauzy_left(const Iet& T);

/// Sequences over {L, R}, applied left to right.
struct ChiResult {
  Iet iet;
  Morphism automorphism;
  std::string chi;
};

ChiResult apply_chi(const Iet& T, std::string_view chi);

struct RhoConfig {
  long cap_factor = 64;  // iteration cap = cap_factor * ceil(|domain| / |I|)
};

long iteration_cap(const Iet& T, const QuadNum& target_length, const RhoConfig& cfg);

/// Minimal forward exponent n > 0 (direction +1) or backward exponent
/// n >= 0 (direction -1) sending z into the open interior of I.
long rho_point(const Iet& T, const SemiInterval& I, const QuadNum& z, int direction,
               const RhoConfig& cfg = {});

struct SeparationNeighbors {
  long rho_minus = 0, rho_plus = 0;
  std::vector<QuadNum> points;  // T^k(gamma), -rho_minus <= k < rho_plus
};

struct DivisionData {
  SemiInterval interval;
  std::vector<QuadNum> points;  // sorted union of all neighbor sets
  std::vector<SeparationNeighbors> per_separation;
};

DivisionData division_points(const Iet& T, const SemiInterval& I, const RhoConfig& cfg = {});

/// [u, v) is admissible iff u, v lie in Div(I,T) union {r}.
bool is_admissible(const Iet& T, const SemiInterval& I, const RhoConfig& cfg = {});

struct AdmissibilityWitness {
  QuadNum endpoint;
  std::string reason;
};

/// Explains why I fails the division-point test (nullopt when admissible).
std::optional<AdmissibilityWitness> admissibility_witness(const Iet& T, const SemiInterval& I,
                                                          const RhoConfig& cfg = {});

/// Greedy descent: at each level pick the child domain containing I,
/// preferring the right induction when both contain it. Succeeds exactly
/// when I is admissible.
std::string chi_search(const Iet& T, const SemiInterval& I);

/// Transformation induced by T on an admissible I, as chi_search followed
/// by apply_chi.
Iet induce(const Iet& T, const SemiInterval& I);

/// Composed automorphism theta for the descent to J_w; its image set is
/// the set of right return words to w and a free-group basis.
Morphism return_basis(const Iet& T, const Word& w);

struct ReturnCell {
  SemiInterval cell;
  long steps;
  QuadNum image_lo;
};

/// Unlabeled first-return map on I by direct iteration: each cell carries
/// its return exponent and image. Independent of the induction surgery.
std::vector<ReturnCell> first_return_map(const Iet& T, const SemiInterval& I,
                                         const RhoConfig& cfg = {});

}  // namespace iex
