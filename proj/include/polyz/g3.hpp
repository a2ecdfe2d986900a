#ifndef POLYZ_G3_HPP
#define POLYZ_G3_HPP

#include "polyz/engine.hpp"
#include "polyz/g2.hpp"
#include "polyz/integer.hpp"
#include "polyz/word.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

// The four 3-step poly-Z groups G3 = G2 x|_phi Z, one per class of Out(G2):
//
//   B1  phi = beta_1   g3 g1 = g1^-1 g3,  g3 g2 = g1 g2 g3
//   A0  phi = alpha_0  g3 g1 = g1 g3,     g3 g2 = g2^-1 g3
//   A1  phi = alpha_1  g3 g1 = g1 g3,     g3 g2 = g1 g2^-1 g3
//   B0  phi = beta_0   g3 g1 = g1^-1 g3,  g3 g2 = g2 g3
//
// with closed-form multiplication and powering, and their automorphism groups.

namespace polyz::g3 {

enum class Variant { B1, A0, A1, B0 };

const char *variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);
/// The engine tower for the variant (same as preset(variant_name(v))).
const Tower &tower(Variant v);

NormalWord mul(Variant v, const NormalWord &x, const NormalWord &y);
NormalWord pow(Variant v, const NormalWord &x, const Int &m);
NormalWord inv(Variant v, const NormalWord &x);

/// 2x2 integer block [[a11, a12], [a21, a22]].
struct Mat2
{
  Int a11 = 1, a12 = 0, a21 = 0, a22 = 1;

  static Mat2 identity() { return {}; }
  Int det() const { return a11 * a22 - a12 * a21; }
  bool unimodular() const { return det() == 1 || det() == -1; }
  Mat2 operator*(const Mat2 &o) const;
  /// Exact inverse; requires det = +-1.
  Mat2 inverse() const;

  friend bool operator==(const Mat2 &, const Mat2 &) = default;
};

/// Parity patterns of the unimodular blocks: A = [even odd; odd even],
/// B = [odd even; even odd].
enum class Pattern { A, B };

/// Pattern of a unimodular block, or nullopt if it is not unimodular or has
/// any other parity pattern.
std::optional<Pattern> pattern(const Mat2 &m);

/// B1: alpha_{a,A} = [1 a a+1; 0 A], beta_{a,A} = [-1 a a; 0 A],
///     gamma_{a,B} = [1 a a; 0 B],   delta_{a,B} = [-1 a a-1; 0 B].
struct B1Aut
{
  Family family = Family::Gamma;
  Int a;
  Mat2 block;
  friend bool operator==(const B1Aut &, const B1Aut &) = default;
};

/// A0: [e1 a 0; 0 e2 2b; 0 0 (-1)^c] with (e1, e2) = (1,1) alpha, (1,-1) beta,
/// (-1,1) gamma, (-1,-1) delta; c in {0, 1}.
struct A0Aut
{
  Family family = Family::Alpha;
  Int a, b;
  unsigned c = 0;
  friend bool operator==(const A0Aut &, const A0Aut &) = default;
};

/// A1: [e1 a b; 0 e2 2c; 0 0 (-1)^d], signs as for A0, d in {0, 1}.
/// The corner b is forced to (e1 - (-1)^d) / 2; see corner_b().
struct A1Aut
{
  Family family = Family::Alpha;
  Int a, b, c;
  unsigned d = 0;
  friend bool operator==(const A1Aut &, const A1Aut &) = default;
};

/// B0: alpha_{a,M} = [1 a a; 0 M], beta_{a,M} = [-1 a a; 0 M], M of either
/// pattern.
struct B0Aut
{
  Family family = Family::Alpha;
  Int a;
  Mat2 block;
  friend bool operator==(const B0Aut &, const B0Aut &) = default;
};

using Aut3 = std::variant<B1Aut, A0Aut, A1Aut, B0Aut>;

Variant variant_of(const Aut3 &f);

/// The only corner value for which an A1 family matrix is an automorphism.
Int corner_b(Family family, unsigned d);

using Mat3 = std::array<std::array<Int, 3>, 3>;

Mat3 matrix(const Aut3 &f);
AutMatrix aut_matrix(const Aut3 &f);
Automorphism automorphism(const Aut3 &f);
Mat3 to_mat3(const AutMatrix &m);

/// True iff the parameters describe a member of the family (pattern-valid
/// unimodular block, A1 corner constraint, allowed family for the variant).
bool valid(const Aut3 &f);

/// Classifies a 3x3 matrix (row-major, columns are generator images).
std::optional<Aut3> membership(Variant v, const Mat3 &m);

Aut3 identity(Variant v);
Aut3 inverse(const Aut3 &f);
/// f o g (apply g first).
Aut3 compose(const Aut3 &f, const Aut3 &g);
/// Image of x under f, evaluated with the closed-form kernels.
NormalWord apply(const Aut3 &f, const NormalWord &x);

/// Conjugation x -> h x h^-1.
Aut3 inner_from_element(Variant v, const NormalWord &h);
bool is_inner(const Aut3 &f);

/// Canonical representative of a class of Out(G3):
///   B1: [alpha_{0,A}], [gamma_{0,B}]
///   A0: [alpha_{x,0,y}],   x, y in {0,1}
///   A1: [alpha_{x,y,0,y}], x, y in {0,1}
///   B0: [alpha_{x,M}],     x in {0,1}
struct OutClass3
{
  Aut3 representative;
  friend bool operator==(const OutClass3 &, const OutClass3 &) = default;
};

OutClass3 out_class(const Aut3 &f);
/// Class plus the inner automorphism i with i o f equal to the representative.
std::pair<OutClass3, Aut3> out_class_witness(const Aut3 &f);
/// Composition in Out(G3) from the variant's table.
OutClass3 out_compose(const OutClass3 &c1, const OutClass3 &c2);

/// `b1:alpha(a=0; A=[[0,1],[1,0]])`, `a0:beta(a=1; b=0; c=1)`,
/// `a1:gamma(a=2; b=-1; c=0; d=0)`, `b0:alpha(a=1; M=[[1,0],[0,1]])`.
std::string to_string(const Aut3 &f);
std::string to_string(const OutClass3 &c);
/// Parses the to_string form. The variant prefix is optional when `fallback`
/// is given. Throws std::invalid_argument.
Aut3 parse_aut3(std::string_view text, std::optional<Variant> fallback = std::nullopt);

} // namespace polyz::g3

#endif // POLYZ_G3_HPP
