#ifndef POLYZ_ISO_HPP
#define POLYZ_ISO_HPP

#include "polyz/engine.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

// Explicit isomorphisms between semidirect products H x|_beta Z and
// H x|_alpha Z, where beta is alpha twisted by an inner automorphism or
// conjugated by another automorphism.

namespace polyz {

/// A_k for alpha in Aut(H) and a in H:
///   A_0 = e,
///   A_k = a alpha(a) ... alpha^{k-1}(a)                   k > 0,
///   A_k = alpha^-1(a^-1) alpha^-2(a^-1) ... alpha^k(a^-1)  k < 0.
/// Values are memoized in both directions from 0. Thread-safe.
class TwistSequence
{
public:
  TwistSequence(Tower base, Automorphism alpha, NormalWord a);

  const Tower &base() const { return base_; }
  const Automorphism &alpha() const { return alpha_; }
  const NormalWord &element() const { return a_; }

  NormalWord at(long long k) const;

private:
  Tower base_;
  Automorphism alpha_;
  NormalWord a_;

  mutable std::mutex mutex_;
  // pos_[k] = A_k, neg_[k] = A_{-k}; *_step_ holds the next factor.
  mutable std::vector<NormalWord> pos_, neg_;
  mutable NormalWord pos_step_, neg_step_;
};

/// Free-function form of TwistSequence::at without memoization.
NormalWord twist_sequence(const Tower &base, const Automorphism &alpha, const NormalWord &a,
                          long long k);

/// Inner automorphism h -> a h a^-1 of `base`, with its inverse.
Automorphism inner_automorphism(const Tower &base, const NormalWord &a);

enum class WitnessKind { InnerTwist, Conjugation };

const char *witness_kind_name(WitnessKind k);

using WordMap = std::function<NormalWord(const NormalWord &)>;

/// An isomorphism source -> target between two extensions of the same base.
/// Words of source and target are (h, k) with h in the base and k the last
/// exponent.
struct IsoWitness
{
  WitnessKind kind = WitnessKind::InnerTwist;
  Tower base;
  Automorphism source_twist; // beta for InnerTwist, alpha for Conjugation
  Automorphism target_twist; // alpha for InnerTwist, beta for Conjugation
  Tower source;
  Tower target;

  // InnerTwist: the twisting element a; Conjugation: the conjugator psi.
  std::optional<NormalWord> element;
  std::optional<Automorphism> conjugator;

  WordMap forward;
  WordMap backward;

  std::shared_ptr<const TwistSequence> twist;
};

/// beta = iota_a o alpha. Witness H x|_beta Z -> H x|_alpha Z,
/// (h, k) -> (h A_k, k), with inverse (h, k) -> (h A_k^-1, k).
/// Throws NotAnAutomorphism if alpha does not verify over `base`.
IsoWitness inner_twist_witness(const Tower &base, const Automorphism &alpha, const NormalWord &a);

/// beta = psi alpha psi^-1. Witness G x|_alpha Z -> G x|_beta Z,
/// (g, k) -> (psi(g), k). Throws NotAnAutomorphism if alpha or psi fail.
IsoWitness conjugation_witness(const Tower &base, const Automorphism &alpha,
                               const Automorphism &psi);

struct PairFailure
{
  NormalWord x, y;
};

struct WitnessReport
{
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  long long bound = 0;
  std::size_t checks = 0;
  std::vector<PairFailure> multiplicativity_failures;
  std::vector<NormalWord> roundtrip_failures;

  bool ok() const { return multiplicativity_failures.empty() && roundtrip_failures.empty(); }
};

/// Checks forward(xy) = forward(x) forward(y) and both round trips, first on
/// every pair of signed source generators, then on `samples` random pairs
/// with exponents uniform in [-bound, bound]. The same random pairs are
/// mapped back through backward for target-side round trips.
WitnessReport verify_witness(const IsoWitness &w, std::size_t samples, long long bound,
                             std::uint64_t seed);

/// JSON object: kind, towers, twist matrices, element or conjugator, and the
/// report when given. Integers are decimal strings.
std::string witness_json(const IsoWitness &w, const WitnessReport *report = nullptr);

} // namespace polyz

#endif // POLYZ_ISO_HPP
