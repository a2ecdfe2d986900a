#include "polyz/g3.hpp"

#include "polyz/presets.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace polyz::g3 {

const char *variant_name(Variant v)
{
  switch (v) {
  case Variant::B1: return "b1";
  case Variant::A0: return "a0";
  case Variant::A1: return "a1";
  case Variant::B0: return "b0";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name)
{
  for (Variant v : {Variant::B1, Variant::A0, Variant::A1, Variant::B0})
    if (name == variant_name(v))
      return v;
  return std::nullopt;
}

const Tower &tower(Variant v)
{
  static const Tower towers[] = {preset("b1"), preset("a0"), preset("a1"), preset("b0")};
  return towers[static_cast<int>(v)];
}

// ---------------------------------------------------------------------------
// Multiplication kernels. x = g1^a g2^b g3^c, y = g1^p g2^q g3^r; each product
// moves g3^c past g1^p g2^q with the variant's swap rules, then g2^b past g1.

namespace {

Int signed_by(const Int &exponent, const Int &value)
{
  return is_odd(exponent) ? Int(-value) : value;
}

} // namespace

NormalWord mul(Variant v, const NormalWord &x, const NormalWord &y)
{
  const Int &a = x[0], &b = x[1], &c = x[2];
  const Int &p = y[0], &q = y[1], &r = y[2];
  switch (v) {
  case Variant::B1: {
    // g3^c g1^p = g1^{p(-1)^c} g3^c,  g3^c g2^q = g1^{mu(c)mu(q)} g2^q g3^c
    Int moved = signed_by(c, p) + (is_odd(c) && is_odd(q) ? 1 : 0);
    return {a + signed_by(b, moved), b + q, c + r};
  }
  case Variant::A0:
    // g_i^a g_{i-1}^b = g_{i-1}^{b(-1)^a} g_i^a, g3 commutes with g1
    return {a + signed_by(b, p), b + signed_by(c, q), c + r};
  case Variant::A1: {
    // g3^c g2^q = g1^{mu(q)c} g2^{q(-1)^c} g3^c
    Int moved = is_odd(q) ? Int(p + c) : p;
    return {a + signed_by(b, moved), b + signed_by(c, q), c + r};
  }
  case Variant::B0:
    // g_i^c g1^p = g1^{p(-1)^c} g_i^c for i = 2, 3; g2, g3 commute
    return {a + signed_by(b + c, p), b + q, c + r};
  }
  return {};
}

NormalWord pow(Variant v, const NormalWord &x, const Int &m)
{
  const Int &a = x[0], &b = x[1], &c = x[2];
  const bool b_odd = is_odd(b), c_odd = is_odd(c);
  const Int mu_m = mu(m);
  switch (v) {
  case Variant::B1:
    if (!b_odd && !c_odd)
      return {m * a, m * b, m * c};
    if (b_odd && c_odd)
      return {m * a - floor_half(m), m * b, m * c};
    return {mu_m * a, m * b, m * c};
  case Variant::A0:
    return {b_odd ? Int(mu_m * a) : Int(m * a), c_odd ? Int(mu_m * b) : Int(m * b), m * c};
  case Variant::A1: {
    Int first = m * a;
    if (b_odd) {
      // mu(m) a + floor(m/2) c (-1)^{m+1}
      Int twist = floor_half(m) * c;
      first = mu_m * a + (is_odd(m) ? twist : Int(-twist));
    }
    return {first, c_odd ? Int(mu_m * b) : Int(m * b), m * c};
  }
  case Variant::B0:
    if (b_odd == c_odd)
      return {m * a, m * b, m * c};
    return {mu_m * a, m * b, m * c};
  }
  return {};
}

NormalWord inv(Variant v, const NormalWord &x) { return pow(v, x, -1); }

// ---------------------------------------------------------------------------
// 2x2 blocks

Mat2 Mat2::operator*(const Mat2 &o) const
{
  return {a11 * o.a11 + a12 * o.a21, a11 * o.a12 + a12 * o.a22, a21 * o.a11 + a22 * o.a21,
          a21 * o.a12 + a22 * o.a22};
}

Mat2 Mat2::inverse() const
{
  Int d = det();
  if (d != 1 && d != -1)
    throw std::domain_error("block is not unimodular");
  return {d * a22, -d * a12, -d * a21, d * a11};
}

std::optional<Pattern> pattern(const Mat2 &m)
{
  if (!m.unimodular())
    return std::nullopt;
  int p11 = mu(m.a11), p12 = mu(m.a12), p21 = mu(m.a21), p22 = mu(m.a22);
  if (!p11 && p12 && p21 && !p22)
    return Pattern::A;
  if (p11 && !p12 && !p21 && p22)
    return Pattern::B;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Families

namespace {

struct Signs
{
  int e1, e2;
};

// A0 / A1 diagonal signs (g1, g2).
Signs diag_signs(Family f)
{
  switch (f) {
  case Family::Alpha: return {1, 1};
  case Family::Beta: return {1, -1};
  case Family::Gamma: return {-1, 1};
  case Family::Delta: return {-1, -1};
  }
  return {1, 1};
}

std::optional<Family> family_from_diag(const Int &e1, const Int &e2)
{
  for (Family f : {Family::Alpha, Family::Beta, Family::Gamma, Family::Delta}) {
    Signs s = diag_signs(f);
    if (e1 == s.e1 && e2 == s.e2)
      return f;
  }
  return std::nullopt;
}

int unit_sign(unsigned parity) { return parity ? -1 : 1; }

Mat3 with_block(const Int &tl, const Int &x, const Int &y, const Mat2 &m)
{
  return Mat3{{{tl, x, y}, {0, m.a11, m.a12}, {0, m.a21, m.a22}}};
}

// Top-right entry of a B1 family member relative to its middle entry.
int b1_offset(Family f)
{
  switch (f) {
  case Family::Alpha: return 1;
  case Family::Delta: return -1;
  default: return 0;
  }
}

int b_top_left(Family f) { return (f == Family::Alpha || f == Family::Gamma) ? 1 : -1; }

} // namespace

Variant variant_of(const Aut3 &f) { return static_cast<Variant>(f.index()); }

Int corner_b(Family family, unsigned d)
{
  return Int((diag_signs(family).e1 - unit_sign(d)) / 2);
}

Mat3 matrix(const Aut3 &f)
{
  struct Visitor
  {
    Mat3 operator()(const B1Aut &x) const
    {
      return with_block(b_top_left(x.family), x.a, x.a + b1_offset(x.family), x.block);
    }
    Mat3 operator()(const A0Aut &x) const
    {
      Signs s = diag_signs(x.family);
      return Mat3{{{s.e1, x.a, 0}, {0, s.e2, 2 * x.b}, {0, 0, unit_sign(x.c)}}};
    }
    Mat3 operator()(const A1Aut &x) const
    {
      Signs s = diag_signs(x.family);
      return Mat3{{{s.e1, x.a, x.b}, {0, s.e2, 2 * x.c}, {0, 0, unit_sign(x.d)}}};
    }
    Mat3 operator()(const B0Aut &x) const
    {
      return with_block(x.family == Family::Alpha ? 1 : -1, x.a, x.a, x.block);
    }
  };
  return std::visit(Visitor{}, f);
}

AutMatrix aut_matrix(const Aut3 &f)
{
  Mat3 m = matrix(f);
  return AutMatrix::from_rows({{m[0][0], m[0][1], m[0][2]},
                               {m[1][0], m[1][1], m[1][2]},
                               {m[2][0], m[2][1], m[2][2]}});
}

Automorphism automorphism(const Aut3 &f) { return {aut_matrix(f), aut_matrix(inverse(f))}; }

Mat3 to_mat3(const AutMatrix &m)
{
  if (m.dim() != 3)
    throw std::invalid_argument("expected a 3x3 matrix");
  Mat3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      out[r][c] = m.at(r, c);
  return out;
}

bool valid(const Aut3 &f)
{
  struct Visitor
  {
    bool operator()(const B1Aut &x) const
    {
      auto p = pattern(x.block);
      if (!p)
        return false;
      bool wants_a = x.family == Family::Alpha || x.family == Family::Beta;
      return wants_a == (*p == Pattern::A);
    }
    bool operator()(const A0Aut &x) const { return x.c <= 1; }
    bool operator()(const A1Aut &x) const
    {
      return x.d <= 1 && x.b == corner_b(x.family, x.d);
    }
    bool operator()(const B0Aut &x) const
    {
      return (x.family == Family::Alpha || x.family == Family::Beta) &&
             pattern(x.block).has_value();
    }
  };
  return std::visit(Visitor{}, f);
}

std::optional<Aut3> membership(Variant v, const Mat3 &m)
{
  if (m[1][0] != 0 || m[2][0] != 0)
    return std::nullopt;
  const Int &tl = m[0][0];
  if (tl != 1 && tl != -1)
    return std::nullopt;

  switch (v) {
  case Variant::B1:
  case Variant::B0: {
    Mat2 block{m[1][1], m[1][2], m[2][1], m[2][2]};
    auto p = pattern(block);
    if (!p)
      return std::nullopt;
    const Int &x = m[0][1], &y = m[0][2];
    if (v == Variant::B0) {
      if (y != x)
        return std::nullopt;
      return B0Aut{tl == 1 ? Family::Alpha : Family::Beta, x, block};
    }
    Family f = *p == Pattern::A ? (tl == 1 ? Family::Alpha : Family::Beta)
                                : (tl == 1 ? Family::Gamma : Family::Delta);
    if (y != x + b1_offset(f))
      return std::nullopt;
    return B1Aut{f, x, block};
  }
  case Variant::A0:
  case Variant::A1: {
    if (m[2][1] != 0 || is_odd(m[1][2]))
      return std::nullopt;
    auto f = family_from_diag(tl, m[1][1]);
    if (!f || (m[2][2] != 1 && m[2][2] != -1))
      return std::nullopt;
    unsigned last = m[2][2] == -1 ? 1u : 0u;
    if (v == Variant::A0) {
      if (m[0][2] != 0)
        return std::nullopt;
      return A0Aut{*f, m[0][1], m[1][2] / 2, last};
    }
    if (m[0][2] != corner_b(*f, last))
      return std::nullopt;
    return A1Aut{*f, m[0][1], m[0][2], m[1][2] / 2, last};
  }
  }
  return std::nullopt;
}

Aut3 identity(Variant v)
{
  switch (v) {
  case Variant::B1: return B1Aut{Family::Gamma, 0, Mat2::identity()};
  case Variant::A0: return A0Aut{Family::Alpha, 0, 0, 0};
  case Variant::A1: return A1Aut{Family::Alpha, 0, 0, 0, 0};
  case Variant::B0: return B0Aut{Family::Alpha, 0, Mat2::identity()};
  }
  return A0Aut{};
}

Aut3 inverse(const Aut3 &f)
{
  struct Visitor
  {
    Aut3 operator()(const B1Aut &x) const
    {
      // alpha_{a,A}^-1 = alpha_{-a-1,A^-1}, beta_{a,A}^-1 = beta_{a,A^-1},
      // gamma_{a,B}^-1 = gamma_{-a,B^-1}, delta_{a,B}^-1 = delta_{a,B^-1}
      Mat2 inv = x.block.inverse();
      switch (x.family) {
      case Family::Alpha: return B1Aut{x.family, -x.a - 1, inv};
      case Family::Gamma: return B1Aut{x.family, -x.a, inv};
      default: return B1Aut{x.family, x.a, inv};
      }
    }
    Aut3 operator()(const A0Aut &x) const
    {
      switch (x.family) {
      case Family::Alpha: return A0Aut{x.family, -x.a, -x.b, x.c};
      case Family::Beta: return A0Aut{x.family, -x.a, x.b, x.c};
      case Family::Gamma: return A0Aut{x.family, x.a, -x.b, x.c};
      case Family::Delta: return x;
      }
      return x;
    }
    Aut3 operator()(const A1Aut &x) const
    {
      bool odd = x.d == 1;
      switch (x.family) {
      case Family::Alpha: return A1Aut{x.family, -x.a, odd ? x.b : Int(-x.b), -x.c, x.d};
      case Family::Beta: return A1Aut{x.family, -x.a, odd ? x.b : Int(-x.b), x.c, x.d};
      case Family::Gamma: return A1Aut{x.family, x.a, odd ? Int(-x.b) : x.b, -x.c, x.d};
      case Family::Delta: return A1Aut{x.family, x.a, odd ? Int(-x.b) : x.b, x.c, x.d};
      }
      return x;
    }
    Aut3 operator()(const B0Aut &x) const
    {
      Mat2 inv = x.block.inverse();
      return B0Aut{x.family, x.family == Family::Alpha ? Int(-x.a) : x.a, inv};
    }
  };
  return std::visit(Visitor{}, f);
}

NormalWord apply(const Aut3 &f, const NormalWord &x)
{
  Variant v = variant_of(f);
  Mat3 m = matrix(f);
  NormalWord r{0, 0, 0};
  for (std::size_t c = 0; c < 3; ++c) {
    if (x[c] == 0)
      continue;
    r = mul(v, r, pow(v, NormalWord{m[0][c], m[1][c], m[2][c]}, x[c]));
  }
  return r;
}

Aut3 compose(const Aut3 &f, const Aut3 &g)
{
  Variant v = variant_of(f);
  if (variant_of(g) != v)
    throw std::invalid_argument("cannot compose automorphisms of different groups");
  Mat3 mg = matrix(g);
  Mat3 out;
  for (std::size_t c = 0; c < 3; ++c) {
    NormalWord img = g3::apply(f, NormalWord{mg[0][c], mg[1][c], mg[2][c]});
    for (std::size_t r = 0; r < 3; ++r)
      out[r][c] = img[r];
  }
  auto result = membership(v, out);
  if (!result)
    throw std::logic_error("composition left the automorphism family");
  return *result;
}

Aut3 inner_from_element(Variant v, const NormalWord &h)
{
  const Int &a = h[0], &b = h[1], &c = h[2];
  Int two_a = 2 * a;
  Mat3 m;
  switch (v) {
  case Variant::B1:
    // g1 -> g1^{(-1)^{b+c}}, g2 -> g1^{2a + mu(c)(-1)^b} g2, g3 -> g1^{2a - mu(b)} g3
    m = Mat3{{{sign_pow(b + c), two_a + signed_by(b, mu(c)), two_a - mu(b)},
              {0, 1, 0},
              {0, 0, 1}}};
    break;
  case Variant::A0:
    // g1 -> g1^{(-1)^b}, g2 -> g1^{2a} g2^{(-1)^c}, g3 -> g2^{2b} g3
    m = Mat3{{{sign_pow(b), two_a, 0}, {0, sign_pow(c), 2 * b}, {0, 0, 1}}};
    break;
  case Variant::A1:
    // g1 -> g1^{(-1)^b}, g2 -> g1^{2a + c(-1)^b} g2^{(-1)^c}, g3 -> g1^{-mu(b)} g2^{2b} g3
    m = Mat3{{{sign_pow(b), two_a + signed_by(b, c), -mu(b)}, {0, sign_pow(c), 2 * b}, {0, 0, 1}}};
    break;
  case Variant::B0:
    // g1 -> g1^{(-1)^{b+c}}, g2 -> g1^{2a} g2, g3 -> g1^{2a} g3
    m = Mat3{{{sign_pow(b + c), two_a, two_a}, {0, 1, 0}, {0, 0, 1}}};
    break;
  }
  auto result = membership(v, m);
  if (!result)
    throw std::logic_error("conjugation matrix is not in the automorphism family");
  return *result;
}

bool is_inner(const Aut3 &f)
{
  struct Visitor
  {
    bool operator()(const B1Aut &x) const
    {
      return x.block == Mat2::identity() &&
             (x.family == Family::Gamma || x.family == Family::Delta);
    }
    bool operator()(const A0Aut &x) const { return x.c == 0 && !is_odd(x.a); }
    bool operator()(const A1Aut &x) const
    {
      bool wants_odd = x.family == Family::Beta || x.family == Family::Delta;
      return x.d == 0 && is_odd(x.a) == wants_odd;
    }
    bool operator()(const B0Aut &x) const
    {
      return x.block == Mat2::identity() && !is_odd(x.a);
    }
  };
  return std::visit(Visitor{}, f);
}

OutClass3 out_class(const Aut3 &f)
{
  struct Visitor
  {
    Aut3 operator()(const B1Aut &x) const
    {
      bool a_pattern = x.family == Family::Alpha || x.family == Family::Beta;
      return B1Aut{a_pattern ? Family::Alpha : Family::Gamma, 0, x.block};
    }
    Aut3 operator()(const A0Aut &x) const
    {
      return A0Aut{Family::Alpha, mu(x.a), 0, x.c};
    }
    Aut3 operator()(const A1Aut &x) const
    {
      bool shifted = x.family == Family::Beta || x.family == Family::Delta;
      Int first = mu(shifted ? Int(x.a + 1) : x.a);
      return A1Aut{Family::Alpha, first, corner_b(Family::Alpha, x.d), 0, x.d};
    }
    Aut3 operator()(const B0Aut &x) const
    {
      return B0Aut{Family::Alpha, mu(x.a), x.block};
    }
  };
  return {std::visit(Visitor{}, f)};
}

std::pair<OutClass3, Aut3> out_class_witness(const Aut3 &f)
{
  OutClass3 c = out_class(f);
  return {c, compose(c.representative, inverse(f))};
}

OutClass3 out_compose(const OutClass3 &c1, const OutClass3 &c2)
{
  const Aut3 &f = c1.representative;
  const Aut3 &g = c2.representative;
  if (f.index() != g.index())
    throw std::invalid_argument("cannot compose classes of different groups");

  switch (variant_of(f)) {
  case Variant::B1: {
    // [alpha_{0,A}][alpha_{0,A'}] = [gamma_{0,AA'}], [alpha][gamma] = [alpha],
    // [gamma][alpha] = [alpha], [gamma][gamma] = [gamma]
    const auto &x = std::get<B1Aut>(f);
    const auto &y = std::get<B1Aut>(g);
    bool x_alpha = x.family == Family::Alpha, y_alpha = y.family == Family::Alpha;
    Family out = x_alpha == y_alpha ? Family::Gamma : Family::Alpha;
    return {B1Aut{out, 0, x.block * y.block}};
  }
  case Variant::A0: {
    // [alpha_{x,0,a}][alpha_{x',0,b}] = [alpha_{x+x',0,a+b}] over Z_2
    const auto &x = std::get<A0Aut>(f);
    const auto &y = std::get<A0Aut>(g);
    return {A0Aut{Family::Alpha, mu(x.a + y.a), 0, (x.c + y.c) % 2}};
  }
  case Variant::A1: {
    // [alpha_{x,a,0,b}][alpha_{x',c,0,d}] = [alpha_{x+x', c+(-1)^d a, 0, b+d}]
    const auto &x = std::get<A1Aut>(f);
    const auto &y = std::get<A1Aut>(g);
    Int second = y.b + signed_by(y.d, x.b);
    return {A1Aut{Family::Alpha, mu(x.a + y.a), second, 0, (x.d + y.d) % 2}};
  }
  case Variant::B0: {
    // [alpha_{x,M}][alpha_{y,M'}] = [alpha_{x+y,MM'}]
    const auto &x = std::get<B0Aut>(f);
    const auto &y = std::get<B0Aut>(g);
    return {B0Aut{Family::Alpha, mu(x.a + y.a), x.block * y.block}};
  }
  }
  return c1;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string block_string(const Mat2 &m)
{
  std::ostringstream out;
  out << "[[" << m.a11 << ',' << m.a12 << "],[" << m.a21 << ',' << m.a22 << "]]";
  return out.str();
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Mat2 parse_block(std::string_view text)
{
  std::string digits;
  std::vector<Int> values;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+') {
      digits += ch;
    } else if (ch == ',' || ch == ']' || ch == '[' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!digits.empty())
        values.push_back(parse_int(digits));
      digits.clear();
    } else {
      throw std::invalid_argument("invalid character in 2x2 block");
    }
  }
  if (!digits.empty())
    values.push_back(parse_int(digits));
  if (values.size() != 4 || text.find("[[") == std::string_view::npos)
    throw std::invalid_argument("expected a 2x2 block [[a,b],[c,d]]");
  return {values[0], values[1], values[2], values[3]};
}

} // namespace

std::string to_string(const Aut3 &f)
{
  struct Visitor
  {
    std::string operator()(const B1Aut &x) const
    {
      const char *key = (x.family == Family::Alpha || x.family == Family::Beta) ? "A" : "B";
      return "a=" + x.a.str() + "; " + key + "=" + block_string(x.block);
    }
    std::string operator()(const A0Aut &x) const
    {
      return "a=" + x.a.str() + "; b=" + x.b.str() + "; c=" + std::to_string(x.c);
    }
    std::string operator()(const A1Aut &x) const
    {
      return "a=" + x.a.str() + "; b=" + x.b.str() + "; c=" + x.c.str() +
             "; d=" + std::to_string(x.d);
    }
    std::string operator()(const B0Aut &x) const
    {
      return "a=" + x.a.str() + "; M=" + block_string(x.block);
    }
  };
  Family fam = std::visit([](const auto &x) { return x.family; }, f);
  return std::string(variant_name(variant_of(f))) + ":" + family_name(fam) + "(" +
         std::visit(Visitor{}, f) + ")";
}

std::string to_string(const OutClass3 &c) { return "[" + to_string(c.representative) + "]"; }

Aut3 parse_aut3(std::string_view text, std::optional<Variant> fallback)
{
  text = trim(text);
  std::optional<Variant> variant = fallback;
  if (auto colon = text.find(':'); colon != std::string_view::npos) {
    variant = parse_variant(trim(text.substr(0, colon)));
    if (!variant)
      throw std::invalid_argument("unknown variant '" + std::string(text.substr(0, colon)) + "'");
    text = trim(text.substr(colon + 1));
  }
  if (!variant)
    throw std::invalid_argument("automorphism text needs a variant prefix such as b1:");

  auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw std::invalid_argument("expected family(key=value; ...)");
  auto fam = parse_family(trim(text.substr(0, open)));
  if (!fam)
    throw std::invalid_argument("unknown automorphism family '" +
                                std::string(trim(text.substr(0, open))) + "'");

  std::map<std::string, std::string, std::less<>> fields;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!trim(body).empty()) {
    auto semi = body.find(';');
    std::string_view item = trim(body.substr(0, semi));
    body = semi == std::string_view::npos ? std::string_view{} : body.substr(semi + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("expected key=value in automorphism parameters");
    std::string key(trim(item.substr(0, eq)));
    if (!fields.emplace(key, std::string(trim(item.substr(eq + 1)))).second)
      throw std::invalid_argument("duplicate parameter '" + key + "'");
  }

  auto take = [&](std::string_view key) -> std::optional<std::string> {
    auto it = fields.find(key);
    if (it == fields.end())
      return std::nullopt;
    std::string v = it->second;
    fields.erase(it);
    return v;
  };
  auto need = [&](std::string_view key) {
    auto v = take(key);
    if (!v)
      throw std::invalid_argument("missing parameter '" + std::string(key) + "'");
    return *v;
  };
  auto parity = [](const std::string &s) {
    Int v = parse_int(s);
    return static_cast<unsigned>(mu(v));
  };
  auto block = [&]() {
    std::optional<std::string> b;
    for (const char *key : {"A", "B", "M"})
      if (auto v = take(key)) {
        if (b)
          throw std::invalid_argument("more than one block parameter");
        b = v;
      }
    if (!b)
      throw std::invalid_argument("missing block parameter (A, B or M)");
    return parse_block(*b);
  };

  Aut3 out;
  switch (*variant) {
  case Variant::B1: {
    Int a = parse_int(need("a"));
    out = B1Aut{*fam, a, block()};
    break;
  }
  case Variant::A0: {
    Int a = parse_int(need("a"));
    Int b = parse_int(need("b"));
    out = A0Aut{*fam, a, b, parity(need("c"))};
    break;
  }
  case Variant::A1: {
    Int a = parse_int(need("a"));
    auto b = take("b");
    Int c = parse_int(need("c"));
    unsigned d = parity(need("d"));
    out = A1Aut{*fam, a, b ? parse_int(*b) : corner_b(*fam, d), c, d};
    break;
  }
  case Variant::B0: {
    Int a = parse_int(need("a"));
    out = B0Aut{*fam, a, block()};
    break;
  }
  }
  if (!fields.empty())
    throw std::invalid_argument("unknown parameter '" + fields.begin()->first + "'");
  if (!valid(out))
    throw NotAnAutomorphism(to_string(out) + " is not an automorphism");
  return out;
}

} // namespace polyz::g3
