#pragma once

// Maps between concentric pairs: ratio test and canonical similarity,
// orbits of tangent chords, fitting sampled maps by one similarity, and
// commensurate finite samplings.

#include <vector>

#include "btw/arcs.hpp"
#include "btw/errors.hpp"
#include "btw/finite_config.hpp"

namespace btw {

/// Raised when two pairs with different radius ratios are asked for an
/// isomorphism; carries both M values.
class RatioMismatchError : public Error {
 public:
  RatioMismatchError(double m_source, double m_target);

  double m_source() const noexcept { return m_source_; }
  double m_target() const noexcept { return m_target_; }

 private:
  double m_source_;
  double m_target_;
};

/// Equal radius ratios within eps_metric.
bool decide_isomorphic(const ConcentricPair& s, const ConcentricPair& r, const Tolerance& tol = {});

/// T_d ∘ M_{tau'/rho'} ∘ T_{-c}. Throws RatioMismatchError.
ScaledIsometry canonical_isomorphism(const ConcentricPair& s, const ConcentricPair& r,
                                     const Tolerance& tol = {});

/// theta0 + sign * 2k arccos(r) (mod 2pi) for k = 0..steps.
std::vector<double> chord_orbit(const ConcentricPair& pair, double theta0, Turn sign, int steps);

struct SimilarityExtension {
  ScaledIsometry map;
  double residual = 0.0;
  /// Every fitted image lies on the target union, outer circle to outer
  /// circle and inner to inner.
  bool images_on_target = false;
};

/// Fits one similarity (either orientation) to a sampled map S -> R using
/// the first sample and the sample farthest from it; the residual over all
/// samples certifies whether the map is a restriction of it.
/// Throws RatioMismatchError, Error(off_set), Error(degenerate_input).
SimilarityExtension extend_to_similarity(const ConcentricPair& s, const ConcentricPair& r,
                                         std::span<const Correspondence> samples,
                                         const Tolerance& tol = {});

/// 2N points: outer ids 0..N-1 at angles 2 pi j / N, inner ids N..2N-1 on
/// the same rays. Requires r = cos(2 pi p / N) so that every tangent chord
/// outer j -> outer j+2p touches inner j+p. Throws Error(invalid_argument)
/// for incommensurate parameters and Error(accidental_incidence) if any
/// other triple is collinear or nearly so (within 10 eps_sign).
FiniteConfig sample_configuration(const ConcentricPair& pair, int n, int p,
                                  const Tolerance& tol = {});

}  // namespace btw
