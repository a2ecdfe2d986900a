#ifndef POLYZ_G2_HPP
#define POLYZ_G2_HPP

#include "polyz/engine.hpp"
#include "polyz/integer.hpp"
#include "polyz/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>

// Closed forms for the Klein-bottle group G2 = <g1, g2 | g2 g1 = g1^-1 g2>
// and its automorphism group.

namespace polyz {

/// Automorphism family tag. In G2 the families are the sign patterns of the
/// diagonal (top-left, bottom-right): alpha (1,-1), beta (-1,1), gamma (1,1),
/// delta (-1,-1).
enum class Family { Alpha, Beta, Gamma, Delta };

const char *family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

namespace g2 {

/// (a1, b1)(a2, b2) = (a1 + a2 (-1)^b1, b1 + b2).
NormalWord mul(const NormalWord &x, const NormalWord &y);

/// (a, b)^m = (m a, m b) for b even, (mu(m) a, m b) for b odd.
NormalWord pow(const NormalWord &x, const Int &m);

NormalWord inv(const NormalWord &x);

/// Member of Aut(G2):
///   alpha_a = [1 a; 0 -1], beta_a = [-1 a; 0 1],
///   gamma_a = [1 a; 0 1],  delta_a = [-1 a; 0 -1]
/// (columns are generator images). gamma_0 is the identity.
struct Aut2
{
  Family family = Family::Gamma;
  Int a;

  friend bool operator==(const Aut2 &, const Aut2 &) = default;
};

inline Aut2 alpha(const Int &a) { return {Family::Alpha, a}; }
inline Aut2 beta(const Int &a) { return {Family::Beta, a}; }
inline Aut2 gamma(const Int &a) { return {Family::Gamma, a}; }
inline Aut2 delta(const Int &a) { return {Family::Delta, a}; }

/// Out(G2) has exactly four classes; Beta0 contains the identity.
enum class OutClass2 { Alpha0, Alpha1, Beta0, Beta1 };

AutMatrix matrix(const Aut2 &f);
/// The family member with this matrix, if any.
std::optional<Aut2> from_matrix(const AutMatrix &m);
/// Forward and inverse matrices.
Automorphism automorphism(const Aut2 &f);

/// f o g, table-driven.
Aut2 compose(const Aut2 &f, const Aut2 &g);
Aut2 inverse(const Aut2 &f);
/// Inn(G2) = { beta_2a, gamma_2a }.
bool is_inner(const Aut2 &f);
/// Conjugation by h = g1^a g2^b: gamma_2a for b even, beta_2a for b odd.
Aut2 inner_from_element(const NormalWord &h);

OutClass2 out_class(const Aut2 &f);
Aut2 representative(OutClass2 c);
/// The class together with an inner automorphism i such that i o f is the
/// class representative.
std::pair<OutClass2, Aut2> out_class_witness(const Aut2 &f);

std::string to_string(const Aut2 &f);
std::string to_string(OutClass2 c);
/// `alpha(3)`, `beta(-1)`, ... Throws std::invalid_argument.
Aut2 parse_aut2(std::string_view text);

} // namespace g2
} // namespace polyz

#endif // POLYZ_G2_HPP
