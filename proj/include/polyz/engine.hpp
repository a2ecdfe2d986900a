#ifndef POLYZ_ENGINE_HPP
#define POLYZ_ENGINE_HPP

#include "polyz/integer.hpp"
#include "polyz/presentation.hpp"
#include "polyz/word.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace polyz {

/// Domain error: a map that was required to be an automorphism is not one.
class NotAnAutomorphism : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// Endomorphism of G_i in column-image form: column c is the normal word of
/// phi(g_c) = g_1^{a_1c} ... g_i^{a_ic}.
class AutMatrix
{
public:
  AutMatrix() = default;
  explicit AutMatrix(std::vector<NormalWord> columns);

  /// Row-major entries a_rc (0-based).
  static AutMatrix from_rows(const std::vector<std::vector<Int>> &rows);
  static AutMatrix identity(std::size_t dim);

  std::size_t dim() const { return cols_.size(); }
  const Int &at(std::size_t row, std::size_t col) const { return cols_[col][row]; }
  const NormalWord &column(std::size_t c) const { return cols_[c]; }
  const std::vector<NormalWord> &columns() const { return cols_; }
  std::vector<std::vector<Int>> rows() const;

  friend bool operator==(const AutMatrix &, const AutMatrix &) = default;

private:
  std::vector<NormalWord> cols_;
};

/// A verified automorphism together with its inverse.
struct Automorphism
{
  AutMatrix forward;
  AutMatrix inverse;

  Automorphism inverted() const { return {inverse, forward}; }
};

/// Iterated semidirect product G_n = (...(Z x| Z) x| ...) x| Z.
///
/// Step i (1-based) stores phi_i in Aut(G_i), so that
/// g_{i+1} h g_{i+1}^{-1} = phi_i(h) for h in G_i. Towers are immutable and
/// cheap to copy; all operations are const and safe to call concurrently.
///
/// Multiplication descends recursively through the tower:
/// (h1, k1)(h2, k2) = (h1 phi^k1(h2), k1 + k2).
class Tower
{
public:
  /// The trivial group G_0.
  Tower();

  /// G_1 = Z.
  static Tower integers();

  /// Builds the tower described by a poly-Z presentation. Omitted v's are
  /// derived by inverting the u-automorphism; omitted (u, v) pairs commute.
  /// Throws std::invalid_argument for finite relative orders or
  /// underivable inverses, NotAnAutomorphism when a step is not bijective.
  static Tower from_presentation(const PolycyclicPresentation &p);

  std::size_t rank() const { return steps_.size() + (base_ ? 1 : 0); }

  /// phi_i for 1 <= i < rank().
  const Automorphism &step(std::size_t i) const;

  /// The sub-tower G_i.
  Tower prefix(std::size_t i) const;

  /// Presentation with u's and v's for every pair.
  PolycyclicPresentation presentation() const;

  /// G_{n+1} = G_n x|_m Z. Throws NotAnAutomorphism unless is_automorphism.
  Tower extend(const AutMatrix &m, const std::vector<NormalWord> &inverse_images) const;
  /// Same, deriving the inverse with solve_inverse.
  Tower extend(const AutMatrix &m) const;

  NormalWord identity() const { return NormalWord(rank()); }
  NormalWord generator(std::size_t i, const Int &exponent = 1) const
  {
    return NormalWord::unit(rank(), i, exponent);
  }

  NormalWord collect(const RawWord &w) const;
  NormalWord mul(const NormalWord &x, const NormalWord &y) const;
  NormalWord inv(const NormalWord &x) const;
  NormalWord pow(const NormalWord &x, const Int &m) const;

  /// Image of x under the endomorphism whose columns are m (dim == rank()).
  NormalWord apply(const AutMatrix &m, const NormalWord &x) const;
  /// m1 o m2 (apply m2 first).
  AutMatrix compose(const AutMatrix &m1, const AutMatrix &m2) const;
  /// a^k by binary powering; negative k uses the stored inverse.
  AutMatrix aut_pow(const Automorphism &a, const Int &k) const;

  /// True iff the column map preserves every defining relation and maps each
  /// inverse image back onto its generator.
  bool is_automorphism(const AutMatrix &m, const std::vector<NormalWord> &inverse_images) const;
  /// Relation check only (endomorphism test).
  bool preserves_relations(const AutMatrix &m) const;

  /// Derives generator preimages for m when it is upper triangular with unit
  /// diagonal, or when the tower is free abelian. The result is not verified.
  std::optional<std::vector<NormalWord>> solve_inverse(const AutMatrix &m) const;

  /// x y x^-1.
  NormalWord conjugate(const NormalWord &x, const NormalWord &y) const;
  bool commutes(const NormalWord &x, const NormalWord &y) const;
  bool is_central(const NormalWord &x) const;

  friend bool operator==(const Tower &a, const Tower &b);

private:
  struct Step;

  // Level-l helpers act on G_l with l exponents.
  std::vector<Int> mul_at(std::size_t level, std::span<const Int> x, std::span<const Int> y) const;
  std::vector<Int> inv_at(std::size_t level, std::span<const Int> x) const;
  std::vector<Int> pow_at(std::size_t level, std::span<const Int> x, const Int &m) const;
  std::vector<Int> apply_at(std::size_t level, const AutMatrix &m, std::span<const Int> x) const;
  std::vector<Int> act(std::size_t level, const Int &k, std::span<const Int> h) const;
  AutMatrix compose_at(std::size_t level, const AutMatrix &a, const AutMatrix &b) const;
  AutMatrix step_power(std::size_t level, const Int &k) const;

  bool base_ = false;
  std::vector<std::shared_ptr<const Step>> steps_;
};

/// Group element bound to its tower.
class GroupElement
{
public:
  GroupElement(Tower tower, NormalWord word);

  const Tower &tower() const { return tower_; }
  const NormalWord &word() const { return word_; }

  GroupElement operator*(const GroupElement &other) const;
  GroupElement inverse() const;
  GroupElement pow(const Int &m) const;

  friend bool operator==(const GroupElement &a, const GroupElement &b)
  {
    return a.word_ == b.word_ && a.tower_ == b.tower_;
  }

private:
  Tower tower_;
  NormalWord word_;
};

} // namespace polyz

#endif // POLYZ_ENGINE_HPP
