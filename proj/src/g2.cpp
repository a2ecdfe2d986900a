#include "polyz/g2.hpp"

#include <array>
#include <cctype>
#include <stdexcept>

namespace polyz {

const char *family_name(Family f)
{
  switch (f) {
  case Family::Alpha: return "alpha";
  case Family::Beta: return "beta";
  case Family::Gamma: return "gamma";
  case Family::Delta: return "delta";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta})
    if (name == family_name(f))
      return f;
  return std::nullopt;
}

namespace g2 {

NormalWord mul(const NormalWord &x, const NormalWord &y)
{
  return {is_odd(x[1]) ? Int(x[0] - y[0]) : Int(x[0] + y[0]), x[1] + y[1]};
}

NormalWord pow(const NormalWord &x, const Int &m)
{
  if (!is_odd(x[1]))
    return {m * x[0], m * x[1]};
  return {is_odd(m) ? x[0] : Int(0), m * x[1]};
}

NormalWord inv(const NormalWord &x) { return pow(x, -1); }

namespace {

struct Signs
{
  int top;    // image of g1 is g1^top
  int bottom; // g2 exponent of the image of g2
};

Signs signs(Family f)
{
  switch (f) {
  case Family::Alpha: return {1, -1};
  case Family::Beta: return {-1, 1};
  case Family::Gamma: return {1, 1};
  case Family::Delta: return {-1, -1};
  }
  return {1, 1};
}

std::optional<Family> family_of(const Int &top, const Int &bottom)
{
  if (top == 1 && bottom == -1)
    return Family::Alpha;
  if (top == -1 && bottom == 1)
    return Family::Beta;
  if (top == 1 && bottom == 1)
    return Family::Gamma;
  if (top == -1 && bottom == -1)
    return Family::Delta;
  return std::nullopt;
}

std::size_t index(Family f) { return static_cast<std::size_t>(f); }

// Composition table: row f_a, column g_a'. Result family, and whether the
// parameter is a + a' (true) or a - a' (false).
struct Entry
{
  Family family;
  bool add;
};

constexpr Family A = Family::Alpha, B = Family::Beta, C = Family::Gamma, D = Family::Delta;

constexpr std::array<std::array<Entry, 4>, 4> kTable{{
    {{{C, true}, {D, true}, {A, true}, {B, true}}},     // alpha_a o ...
    {{{D, false}, {C, false}, {B, false}, {A, false}}}, // beta_b o ...
    {{{A, true}, {B, true}, {C, true}, {D, true}}},     // gamma_c o ...
    {{{B, false}, {A, false}, {D, false}, {C, false}}}, // delta_d o ...
}};

} // namespace

AutMatrix matrix(const Aut2 &f)
{
  Signs s = signs(f.family);
  return AutMatrix::from_rows({{s.top, f.a}, {0, s.bottom}});
}

std::optional<Aut2> from_matrix(const AutMatrix &m)
{
  if (m.dim() != 2 || m.at(1, 0) != 0)
    return std::nullopt;
  auto fam = family_of(m.at(0, 0), m.at(1, 1));
  if (!fam)
    return std::nullopt;
  return Aut2{*fam, m.at(0, 1)};
}

Automorphism automorphism(const Aut2 &f) { return {matrix(f), matrix(inverse(f))}; }

Aut2 compose(const Aut2 &f, const Aut2 &g)
{
  const Entry &e = kTable[index(f.family)][index(g.family)];
  return {e.family, e.add ? Int(f.a + g.a) : Int(f.a - g.a)};
}

Aut2 inverse(const Aut2 &f)
{
  switch (f.family) {
  case Family::Alpha:
  case Family::Gamma: return {f.family, -f.a};
  case Family::Beta:
  case Family::Delta: return f;
  }
  return f;
}

bool is_inner(const Aut2 &f)
{
  return (f.family == Family::Beta || f.family == Family::Gamma) && !is_odd(f.a);
}

Aut2 inner_from_element(const NormalWord &h)
{
  Int a2 = 2 * h[0];
  return is_odd(h[1]) ? beta(a2) : gamma(a2);
}

OutClass2 out_class(const Aut2 &f)
{
  bool odd = is_odd(f.a);
  switch (f.family) {
  case Family::Alpha:
  case Family::Delta: return odd ? OutClass2::Alpha1 : OutClass2::Alpha0;
  case Family::Beta:
  case Family::Gamma: return odd ? OutClass2::Beta1 : OutClass2::Beta0;
  }
  return OutClass2::Beta0;
}

Aut2 representative(OutClass2 c)
{
  switch (c) {
  case OutClass2::Alpha0: return alpha(0);
  case OutClass2::Alpha1: return alpha(1);
  case OutClass2::Beta0: return beta(0);
  case OutClass2::Beta1: return beta(1);
  }
  return beta(0);
}

std::pair<OutClass2, Aut2> out_class_witness(const Aut2 &f)
{
  OutClass2 c = out_class(f);
  return {c, compose(representative(c), inverse(f))};
}

std::string to_string(const Aut2 &f)
{
  return std::string(family_name(f.family)) + "(" + f.a.str() + ")";
}

std::string to_string(OutClass2 c) { return "[" + to_string(representative(c)) + "]"; }

Aut2 parse_aut2(std::string_view text)
{
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw std::invalid_argument("expected family(parameter), e.g. alpha(3)");
  auto fam = parse_family(trim(text.substr(0, open)));
  if (!fam)
    throw std::invalid_argument("unknown automorphism family '" +
                                std::string(text.substr(0, open)) + "'");
  return {*fam, parse_int(trim(text.substr(open + 1, text.size() - open - 2)))};
}

} // namespace g2
} // namespace polyz
