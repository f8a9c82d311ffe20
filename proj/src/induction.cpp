#include "iex/induction.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace iex {

namespace {

std::vector<char> move_after(const std::vector<char>& seq, char moved, char anchor) {
  std::vector<char> out;
  out.reserve(seq.size());
  for (char c : seq) {
    if (c == moved) continue;
    out.push_back(c);
    if (c == anchor) out.push_back(moved);
  }
  return out;
}

std::vector<char> move_before(const std::vector<char>& seq, char moved, char anchor) {
  std::vector<char> out;
  out.reserve(seq.size());
  for (char c : seq) {
    if (c == moved) continue;
    if (c == anchor) out.push_back(moved);
    out.push_back(c);
  }
  return out;
}

Morphism one_letter_step(const std::vector<char>& letters, char changed, const Word& image) {
  std::vector<Word> images;
  images.reserve(letters.size());
  for (char a : letters) images.emplace_back(a == changed ? image : Word(1, a));
  return Morphism(letters, std::move(images));
}

std::vector<QuadNum> lengths_for(const Iet& T, const std::vector<char>& order1,
                                 const std::vector<std::pair<char, QuadNum>>& overrides) {
  std::vector<QuadNum> out;
  out.reserve(order1.size());
  for (char a : order1) {
    const QuadNum* v = nullptr;
    for (const auto& [letter, value] : overrides)
      if (letter == a) v = &value;
    out.push_back(v ? *v : T.length(T.rank1(a)));
  }
  return out;
}

}  // namespace

SemiInterval right_domain(const Iet& T) {
  const size_t s = T.size();
  const QuadNum& gs = T.gamma(s - 1);
  const QuadNum& dp = T.delta(T.perm()[s - 1]);
  if (gs == dp)
    throw ConnectionDetected(
        "right induction blocked: gamma_s = delta_pi(s) = " + gs.str(), gs.str());
  return {T.left(), gs < dp ? dp : gs};
}

SemiInterval left_domain(const Iet& T) {
  const QuadNum& m1 = T.mu(0);
  const QuadNum& np = T.nu(T.perm()[0]);
  if (m1 == np)
    throw ConnectionDetected("left induction blocked: mu_1 = nu_pi(1) = " + m1.str(), m1.str());
  return {m1 < np ? m1 : np, T.right()};
}

// Right induction on Z(T). Case 0 (gamma_s < delta_pi(s)): the last image
// interval is dropped and re-enters the bottom order right after a_s; only
// the last top length shrinks. Case 1 (gamma_s > delta_pi(s)): the last top
// interval is dropped and re-enters the top order right after a_pi(s); the
// bottom order is unchanged.
InductionStep rauzy_right(const Iet& T) {
  const size_t s = T.size();
  right_domain(T);  // connection check
  char a_s = T.order1()[s - 1];
  char a_ps = T.order1()[T.perm()[s - 1]];
  const QuadNum& gs = T.gamma(s - 1);
  const QuadNum& dp = T.delta(T.perm()[s - 1]);

  if (gs < dp) {
    std::vector<char> order2 = move_after(T.order2(), a_ps, a_s);
    std::vector<QuadNum> lengths = lengths_for(T, T.order1(), {{a_s, dp - gs}});
    Iet result(T.order1(), std::move(order2), std::move(lengths), T.left());
    return {'R', 0, one_letter_step(T.order1(), a_ps, Word{a_ps, a_s}), std::move(result)};
  }
  std::vector<char> order1 = move_after(T.order1(), a_s, a_ps);
  std::vector<QuadNum> lengths = lengths_for(T, order1, {{a_ps, gs - dp}});
  Iet result(std::move(order1), T.order2(), std::move(lengths), T.left());
  return {'R', 1, one_letter_step(T.order1(), a_s, Word{a_ps, a_s}), std::move(result)};
}

// Left induction on Y(T), the mirror image of the right cases. Case 0
// (nu_pi(1) < mu_1): the first image interval is dropped and re-enters the
// bottom order right before a_1. Case 1 (mu_1 < nu_pi(1)): the first top
// interval is dropped and re-enters the top order right before a_pi(1).
InductionStep rauzy_left(const Iet& T) {
  SemiInterval y = left_domain(T);
  char a_1 = T.order1()[0];
  char a_p1 = T.order1()[T.perm()[0]];
  const QuadNum& m1 = T.mu(0);
  const QuadNum& np = T.nu(T.perm()[0]);

  if (np < m1) {
    std::vector<char> order2 = move_before(T.order2(), a_p1, a_1);
    std::vector<QuadNum> lengths = lengths_for(T, T.order1(), {{a_1, m1 - np}});
    Iet result(T.order1(), std::move(order2), std::move(lengths), y.lo);
    return {'L', 0, one_letter_step(T.order1(), a_p1, Word{a_p1, a_1}), std::move(result)};
  }
  std::vector<char> order1 = move_before(T.order1(), a_1, a_p1);
  std::vector<QuadNum> lengths = lengths_for(T, order1, {{a_p1, np - m1}});
  Iet result(std::move(order1), T.order2(), std::move(lengths), y.lo);
  return {'L', 1, one_letter_step(T.order1(), a_1, Word{a_p1, a_1}), std::move(result)};
}

ChiResult apply_chi(const Iet& T, std::string_view chi) {
  Iet cur = T;
  Morphism theta = Morphism::identity(T.order1());
  size_t index = 0;
  for (char c : chi) {
    if (c != 'R' && c != 'L')
      throw ParseError(std::string("chi sequences use letters R and L, got '") + c + "'");
    try {
      InductionStep step = c == 'R' ? rauzy_right(cur) : rauzy_left(cur);
      theta = compose(theta, step.automorphism);
      cur = std::move(step.result);
    } catch (const ConnectionDetected& e) {
      throw ConnectionDetected("step " + std::to_string(index) + " of chi: " + e.what(),
                               e.boundary);
    }
    ++index;
  }
  return {std::move(cur), std::move(theta), std::string(chi)};
}

long iteration_cap(const Iet& T, const QuadNum& target_length, const RhoConfig& cfg) {
  QuadNum ratio = (T.right() - T.left()) / target_length;
  Int cap = floor_quad(ratio) + 1;
  cap *= cfg.cap_factor;
  if (!cap.fits_slong_p()) return std::numeric_limits<long>::max();
  return cap.get_si();
}

long rho_point(const Iet& T, const SemiInterval& I, const QuadNum& z, int direction,
               const RhoConfig& cfg) {
  long cap = iteration_cap(T, I.length(), cfg);
  if (direction > 0) {
    QuadNum cur = z;
    for (long n = 1; n <= cap; ++n) {
      cur = T.apply(cur);
      if (I.contains_open(cur)) return n;
    }
  } else {
    QuadNum cur = z;
    for (long n = 0; n <= cap; ++n) {
      if (I.contains_open(cur)) return n;
      cur = T.apply_inv(cur);
    }
  }
  throw CapExceeded("no entry of " + z.str() + " into " + I.str() + " within " +
                    std::to_string(cap) + " steps");
}

DivisionData division_points(const Iet& T, const SemiInterval& I, const RhoConfig& cfg) {
  DivisionData data{I, {}, {}};
  if (T.size() == 1) {
    if (I.contains(T.left())) data.points.push_back(T.left());
    data.per_separation.push_back({0, 1, {T.left()}});
    return data;
  }
  std::set<QuadNum> all;
  for (size_t i = 0; i < T.size(); ++i) {
    const QuadNum& g = T.gamma(i);
    SeparationNeighbors nb;
    nb.rho_minus = rho_point(T, I, g, -1, cfg);
    nb.rho_plus = rho_point(T, I, g, +1, cfg);
    QuadNum cur = T.iterate(g, -nb.rho_minus);
    for (long k = -nb.rho_minus; k < nb.rho_plus; ++k) {
      nb.points.push_back(cur);
      all.insert(cur);
      cur = T.apply(cur);
    }
    data.per_separation.push_back(std::move(nb));
  }
  data.points.assign(all.begin(), all.end());
  return data;
}

bool is_admissible(const Iet& T, const SemiInterval& I, const RhoConfig& cfg) {
  return !admissibility_witness(T, I, cfg).has_value();
}

std::optional<AdmissibilityWitness> admissibility_witness(const Iet& T, const SemiInterval& I,
                                                          const RhoConfig& cfg) {
  if (!SemiInterval(T.left(), T.right()).contains(I))
    return AdmissibilityWitness{I.lo, "interval is not inside the domain"};
  if (T.size() == 1) {
    if (I == T.domain()) return std::nullopt;
    return AdmissibilityWitness{I.lo, "only the full domain is admissible for one interval"};
  }
  DivisionData div = division_points(T, I, cfg);
  auto explain = [&](const QuadNum& t) -> std::optional<AdmissibilityWitness> {
    if (t == T.right()) return std::nullopt;
    if (std::binary_search(div.points.begin(), div.points.end(), t)) return std::nullopt;
    // Locate t on a separation orbit to explain which neighbor range
    // excludes it.
    long cap = iteration_cap(T, I.length(), cfg);
    for (size_t i = 0; i < T.size(); ++i) {
      QuadNum fwd = T.gamma(i);
      QuadNum bwd = T.gamma(i);
      for (long k = 0; k <= cap; ++k) {
        if (fwd == t) {
          const SeparationNeighbors& nb = div.per_separation[i];
          return AdmissibilityWitness{
              t, "t = T^" + std::to_string(k) + "(gamma_" + std::to_string(i + 1) +
                     ") but the neighbor exponents of gamma_" + std::to_string(i + 1) + " are [" +
                     std::to_string(-nb.rho_minus) + ", " + std::to_string(nb.rho_plus) + ")"};
        }
        if (k > 0 && bwd == t) {
          const SeparationNeighbors& nb = div.per_separation[i];
          return AdmissibilityWitness{
              t, "t = T^-" + std::to_string(k) + "(gamma_" + std::to_string(i + 1) +
                     ") but the neighbor exponents of gamma_" + std::to_string(i + 1) + " are [" +
                     std::to_string(-nb.rho_minus) + ", " + std::to_string(nb.rho_plus) + ")"};
        }
        fwd = T.apply(fwd);
        bwd = T.apply_inv(bwd);
      }
    }
    return AdmissibilityWitness{t, "endpoint lies on no probed separation orbit"};
  };
  if (auto w = explain(I.lo)) return w;
  if (auto w = explain(I.hi)) return w;
  return std::nullopt;
}

std::string chi_search(const Iet& T, const SemiInterval& I) {
  if (!SemiInterval(T.left(), T.right()).contains(I))
    throw NotAdmissible(I.str() + " is not inside the domain " + T.domain().str());
  std::string chi;
  Iet cur = T;
  constexpr size_t kMaxSteps = 100000;
  while (chi.size() < kMaxSteps) {
    if (cur.domain() == I) return chi;
    if (cur.size() == 1)
      throw NotAdmissible(I.str() + " is not reachable for a one-interval exchange");
    SemiInterval z = right_domain(cur);
    SemiInterval y = left_domain(cur);
    if (z.contains(I)) {
      cur = rauzy_right(cur).result;
      chi += 'R';
    } else if (y.contains(I)) {
      cur = rauzy_left(cur).result;
      chi += 'L';
    } else {
      throw NotAdmissible(I.str() + " escapes both induction children after '" + chi + "'");
    }
  }
  throw CapExceeded("chi search exceeded " + std::to_string(kMaxSteps) + " steps");
}

Iet induce(const Iet& T, const SemiInterval& I) { return apply_chi(T, chi_search(T, I)).iet; }

Morphism return_basis(const Iet& T, const Word& w) {
  std::optional<SemiInterval> jw = interval_J(T, w);
  if (!jw) throw WordNotInLanguage("'" + w + "' is not a factor of the coding language");
  return apply_chi(T, chi_search(T, *jw)).automorphism;
}

// Splits of a translated piece are propagated back to the original cell:
// a piece is (cell_lo, img_lo, len) with the cell and its current image
// related by a translation.
std::vector<ReturnCell> first_return_map(const Iet& T, const SemiInterval& I,
                                         const RhoConfig& cfg) {
  struct Piece {
    QuadNum cell_lo, img_lo, len;
    long steps;
  };
  long cap = iteration_cap(T, I.length(), cfg);
  std::vector<ReturnCell> done;
  std::deque<Piece> work{{I.lo, I.lo, I.length(), 0}};
  while (!work.empty()) {
    Piece pc = std::move(work.front());
    work.pop_front();
    QuadNum img_hi = pc.img_lo + pc.len;
    if (pc.steps > 0 && I.lo <= pc.img_lo && img_hi <= I.hi) {
      done.push_back({SemiInterval(pc.cell_lo, pc.cell_lo + pc.len), pc.steps, pc.img_lo});
      continue;
    }
    if (pc.steps >= cap)
      throw CapExceeded("first-return iteration on " + I.str() + " exceeded " +
                        std::to_string(cap) + " steps");
    // One application of T: cut at the exchange boundaries, translate each
    // part, then cut at the endpoints of I so containment stays all-or-none.
    for (size_t i = 0; i < T.size(); ++i) {
      auto part = intersect(SemiInterval(pc.img_lo, img_hi), SemiInterval(T.gamma(i), T.mu(i)));
      if (!part) continue;
      QuadNum sub_cell = pc.cell_lo + (part->lo - pc.img_lo);
      QuadNum lo = part->lo + T.alpha(i);
      QuadNum hi = part->hi + T.alpha(i);
      std::vector<QuadNum> cuts{lo};
      if (lo < I.lo && I.lo < hi) cuts.push_back(I.lo);
      if (lo < I.hi && I.hi < hi) cuts.push_back(I.hi);
      cuts.push_back(hi);
      for (size_t c = 0; c + 1 < cuts.size(); ++c) {
        work.push_back({sub_cell + (cuts[c] - lo), cuts[c], cuts[c + 1] - cuts[c], pc.steps + 1});
      }
    }
  }
  std::sort(done.begin(), done.end(),
            [](const ReturnCell& a, const ReturnCell& b) { return a.cell.lo < b.cell.lo; });
  return done;
}

}  // namespace iex
