#include "polyz/engine.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>

namespace polyz {

namespace {

// Powers phi^k with |k| <= kCachedPowers are precomputed per step.
constexpr int kCachedPowers = 8;

std::vector<Int> identity_vec(std::size_t n) { return std::vector<Int>(n); }

bool all_zero(std::span<const Int> x)
{
  return std::all_of(x.begin(), x.end(), [](const Int &e) { return e == 0; });
}

} // namespace

// ---------------------------------------------------------------------------
// AutMatrix

AutMatrix::AutMatrix(std::vector<NormalWord> columns) : cols_(std::move(columns))
{
  for (const auto &c : cols_)
    if (c.size() != cols_.size())
      throw std::invalid_argument("automorphism matrix must be square");
}

AutMatrix AutMatrix::from_rows(const std::vector<std::vector<Int>> &rows)
{
  std::size_t n = rows.size();
  std::vector<NormalWord> cols(n, NormalWord(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n)
      throw std::invalid_argument("automorphism matrix must be square");
    for (std::size_t c = 0; c < n; ++c)
      cols[c][r] = rows[r][c];
  }
  return AutMatrix(std::move(cols));
}

AutMatrix AutMatrix::identity(std::size_t dim)
{
  std::vector<NormalWord> cols;
  for (std::size_t c = 0; c < dim; ++c)
    cols.push_back(NormalWord::unit(dim, c + 1));
  return AutMatrix(std::move(cols));
}

std::vector<std::vector<Int>> AutMatrix::rows() const
{
  std::vector<std::vector<Int>> out(dim(), std::vector<Int>(dim()));
  for (std::size_t r = 0; r < dim(); ++r)
    for (std::size_t c = 0; c < dim(); ++c)
      out[r][c] = at(r, c);
  return out;
}

// ---------------------------------------------------------------------------
// Tower

struct Tower::Step
{
  Automorphism aut;
  std::vector<AutMatrix> powers; // phi^k at index k + kCachedPowers
};

Tower::Tower() = default;

Tower Tower::integers()
{
  Tower t;
  t.base_ = true;
  return t;
}

const Automorphism &Tower::step(std::size_t i) const
{
  if (i == 0 || i > steps_.size())
    throw std::out_of_range("tower step index out of range");
  return steps_[i - 1]->aut;
}

Tower Tower::prefix(std::size_t i) const
{
  if (i > rank())
    throw std::out_of_range("prefix longer than tower");
  if (i == 0)
    return Tower();
  Tower t = integers();
  t.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return t;
}

bool operator==(const Tower &a, const Tower &b)
{
  if (a.rank() != b.rank())
    return false;
  for (std::size_t i = 0; i < a.steps_.size(); ++i)
    if (a.steps_[i] != b.steps_[i] && !(a.steps_[i]->aut.forward == b.steps_[i]->aut.forward))
      return false;
  return true;
}

AutMatrix Tower::step_power(std::size_t level, const Int &k) const
{
  const Step &s = *steps_[level - 1];
  if (k >= -kCachedPowers && k <= kCachedPowers)
    return s.powers[static_cast<std::size_t>(static_cast<int>(k) + kCachedPowers)];

  Int e = k < 0 ? Int(-k) : k;
  AutMatrix base = k < 0 ? s.aut.inverse : s.aut.forward;
  AutMatrix result = AutMatrix::identity(level);
  bool first = true;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) {
      result = first ? base : compose_at(level, result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0)
      base = compose_at(level, base, base);
  }
  return result;
}

std::vector<Int> Tower::act(std::size_t level, const Int &k, std::span<const Int> h) const
{
  if (k == 0 || all_zero(h))
    return {h.begin(), h.end()};
  if (level == 1) {
    // phi_1 = [+-1]
    if (steps_[0]->aut.forward.at(0, 0) == 1 || !is_odd(k))
      return {h[0]};
    return {Int(-h[0])};
  }
  const Step &s = *steps_[level - 1];
  if (k >= -kCachedPowers && k <= kCachedPowers)
    return apply_at(level, s.powers[static_cast<std::size_t>(static_cast<int>(k) + kCachedPowers)],
                    h);
  return apply_at(level, step_power(level, k), h);
}

std::vector<Int> Tower::mul_at(std::size_t level, std::span<const Int> x,
                               std::span<const Int> y) const
{
  if (level == 0)
    return {};
  if (level == 1)
    return {x[0] + y[0]};

  const Int &k1 = x[level - 1];
  std::vector<Int> twisted = act(level - 1, k1, y.first(level - 1));
  std::vector<Int> r = mul_at(level - 1, x.first(level - 1), twisted);
  r.push_back(k1 + y[level - 1]);
  return r;
}

std::vector<Int> Tower::inv_at(std::size_t level, std::span<const Int> x) const
{
  if (level == 0)
    return {};
  if (level == 1)
    return {Int(-x[0])};

  Int k = -x[level - 1];
  std::vector<Int> h_inv = inv_at(level - 1, x.first(level - 1));
  std::vector<Int> r = act(level - 1, k, h_inv);
  r.push_back(std::move(k));
  return r;
}

std::vector<Int> Tower::pow_at(std::size_t level, std::span<const Int> x, const Int &m) const
{
  if (m == 0)
    return identity_vec(level);
  if (m == 1)
    return {x.begin(), x.end()};

  std::vector<Int> base = m < 0 ? inv_at(level, x) : std::vector<Int>(x.begin(), x.end());
  Int e = m < 0 ? Int(-m) : m;
  std::vector<Int> result;
  bool first = true;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) {
      result = first ? base : mul_at(level, result, base);
      first = false;
    }
    e >>= 1;
    if (e > 0)
      base = mul_at(level, base, base);
  }
  return result;
}

std::vector<Int> Tower::apply_at(std::size_t level, const AutMatrix &m, std::span<const Int> x) const
{
  std::vector<Int> r;
  bool have = false;
  for (std::size_t c = 0; c < level; ++c) {
    if (x[c] == 0)
      continue;
    std::vector<Int> t = pow_at(level, m.column(c).exponents().first(level), x[c]);
    r = have ? mul_at(level, r, t) : std::move(t);
    have = true;
  }
  return have ? r : identity_vec(level);
}

AutMatrix Tower::compose_at(std::size_t level, const AutMatrix &a, const AutMatrix &b) const
{
  std::vector<NormalWord> cols;
  cols.reserve(level);
  for (std::size_t c = 0; c < level; ++c)
    cols.emplace_back(apply_at(level, a, b.column(c).exponents()));
  return AutMatrix(std::move(cols));
}

// --- public element operations ----------------------------------------------

namespace {

void check_size(const NormalWord &x, std::size_t n)
{
  if (x.size() != n)
    throw std::invalid_argument("word has " + std::to_string(x.size()) +
                                " exponents, group has rank " + std::to_string(n));
}

void check_dim(const AutMatrix &m, std::size_t n)
{
  if (m.dim() != n)
    throw std::invalid_argument("dimension mismatch: matrix is " + std::to_string(m.dim()) +
                                "x" + std::to_string(m.dim()) + ", group has rank " +
                                std::to_string(n));
}

} // namespace

NormalWord Tower::collect(const RawWord &w) const
{
  std::size_t n = rank();
  std::vector<Int> r = identity_vec(n);
  for (const auto &f : w.factors()) {
    if (f.generator == 0 || f.generator > n)
      throw std::out_of_range("generator g" + std::to_string(f.generator) + " not in group");
    std::vector<Int> u = identity_vec(n);
    u[f.generator - 1] = f.exponent;
    r = mul_at(n, r, u);
  }
  return NormalWord(std::move(r));
}

NormalWord Tower::mul(const NormalWord &x, const NormalWord &y) const
{
  check_size(x, rank());
  check_size(y, rank());
  return NormalWord(mul_at(rank(), x.exponents(), y.exponents()));
}

NormalWord Tower::inv(const NormalWord &x) const
{
  check_size(x, rank());
  return NormalWord(inv_at(rank(), x.exponents()));
}

NormalWord Tower::pow(const NormalWord &x, const Int &m) const
{
  check_size(x, rank());
  return NormalWord(pow_at(rank(), x.exponents(), m));
}

NormalWord Tower::apply(const AutMatrix &m, const NormalWord &x) const
{
  check_dim(m, rank());
  check_size(x, rank());
  return NormalWord(apply_at(rank(), m, x.exponents()));
}

AutMatrix Tower::compose(const AutMatrix &m1, const AutMatrix &m2) const
{
  check_dim(m1, rank());
  check_dim(m2, rank());
  return compose_at(rank(), m1, m2);
}

AutMatrix Tower::aut_pow(const Automorphism &a, const Int &k) const
{
  check_dim(a.forward, rank());
  check_dim(a.inverse, rank());
  std::size_t n = rank();
  Int e = k < 0 ? Int(-k) : k;
  AutMatrix base = k < 0 ? a.inverse : a.forward;
  AutMatrix result = AutMatrix::identity(n);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0))
      result = compose_at(n, result, base);
    e >>= 1;
    if (e > 0)
      base = compose_at(n, base, base);
  }
  return result;
}

NormalWord Tower::conjugate(const NormalWord &x, const NormalWord &y) const
{
  return mul(mul(x, y), inv(x));
}

bool Tower::commutes(const NormalWord &x, const NormalWord &y) const
{
  return mul(x, y) == mul(y, x);
}

bool Tower::is_central(const NormalWord &x) const
{
  for (std::size_t i = 1; i <= rank(); ++i)
    if (!commutes(x, generator(i)))
      return false;
  return true;
}

// --- automorphisms ------------------------------------------------------------

bool Tower::preserves_relations(const AutMatrix &m) const
{
  std::size_t n = rank();
  check_dim(m, n);
  for (std::size_t j = 2; j <= n; ++j) {
    std::span<const Int> img_j = m.column(j - 1).exponents();
    std::vector<Int> img_j_inv = inv_at(n, img_j);
    const AutMatrix &phi = steps_[j - 2]->aut.forward;
    for (std::size_t c = 1; c < j; ++c) {
      std::vector<Int> lhs = mul_at(n, mul_at(n, img_j, m.column(c - 1).exponents()), img_j_inv);
      std::vector<Int> u = phi.column(c - 1).data();
      u.resize(n);
      if (lhs != apply_at(n, m, u))
        return false;
    }
  }
  return true;
}

bool Tower::is_automorphism(const AutMatrix &m, const std::vector<NormalWord> &inverse_images) const
{
  std::size_t n = rank();
  check_dim(m, n);
  if (inverse_images.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " inverse images");
  for (const auto &w : inverse_images)
    check_size(w, n);

  if (!preserves_relations(m))
    return false;
  for (std::size_t c = 0; c < n; ++c)
    if (NormalWord(apply_at(n, m, inverse_images[c].exponents())) != generator(c + 1))
      return false;
  return true;
}

std::optional<std::vector<NormalWord>> Tower::solve_inverse(const AutMatrix &m) const
{
  std::size_t n = rank();
  check_dim(m, n);

  bool triangular = true;
  for (std::size_t c = 0; c < n && triangular; ++c) {
    for (std::size_t r = c + 1; r < n; ++r)
      if (m.at(r, c) != 0)
        triangular = false;
    if (m.at(c, c) != 1 && m.at(c, c) != -1)
      triangular = false;
  }

  if (triangular) {
    // psi(x) = psi(x_<l) psi(g_l)^{x_l}, psi(x_<l) in G_{l-1}: peel the top exponent.
    std::vector<NormalWord> out;
    for (std::size_t target = 1; target <= n; ++target) {
      std::vector<Int> y = identity_vec(n);
      y[target - 1] = 1;
      std::vector<Int> x = identity_vec(n);
      for (std::size_t level = n; level >= 1; --level) {
        Int top = y[level - 1] * m.at(level - 1, level - 1);
        x[level - 1] = top;
        std::vector<Int> img = pow_at(n, m.column(level - 1).exponents(), top);
        y = mul_at(n, y, inv_at(n, img));
      }
      out.emplace_back(std::move(x));
    }
    return out;
  }

  bool abelian = true;
  for (const auto &s : steps_)
    if (!(s->aut.forward == AutMatrix::identity(s->aut.forward.dim())))
      abelian = false;
  if (!abelian)
    return std::nullopt;

  // Free abelian: invert the integer matrix by Gauss-Jordan over Q.
  using Rat = boost::multiprecision::cpp_rational;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c)
      a[r][c] = Rat(m.at(r, c));
    a[r][n + r] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      return std::nullopt;
    std::swap(a[piv], a[col]);
    Rat d = a[col][col];
    for (auto &v : a[col])
      v /= d;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rat f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c)
        a[r][c] -= f * a[col][c];
    }
  }
  std::vector<NormalWord> out(n, NormalWord(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const Rat &v = a[r][n + c];
      if (boost::multiprecision::denominator(v) != 1)
        return std::nullopt;
      out[c][r] = boost::multiprecision::numerator(v);
    }
  return out;
}

Tower Tower::extend(const AutMatrix &m, const std::vector<NormalWord> &inverse_images) const
{
  if (rank() == 0) {
    check_dim(m, 0);
    return integers();
  }
  if (!is_automorphism(m, inverse_images))
    throw NotAnAutomorphism("matrix does not define an automorphism of G_" +
                            std::to_string(rank()));

  std::size_t n = rank();
  auto step = std::make_shared<Step>();
  step->aut = {m, AutMatrix(inverse_images)};

  // Cache phi^k for small |k|.
  step->powers.resize(2 * kCachedPowers + 1);
  step->powers[kCachedPowers] = AutMatrix::identity(n);
  for (int k = 1; k <= kCachedPowers; ++k) {
    step->powers[kCachedPowers + k] =
        compose_at(n, step->powers[kCachedPowers + k - 1], step->aut.forward);
    step->powers[kCachedPowers - k] =
        compose_at(n, step->powers[kCachedPowers - k + 1], step->aut.inverse);
  }

  Tower t = *this;
  t.steps_.push_back(std::move(step));
  return t;
}

Tower Tower::extend(const AutMatrix &m) const
{
  if (rank() == 0)
    return extend(m, {});
  auto inv = solve_inverse(m);
  if (!inv)
    throw NotAnAutomorphism("cannot derive an inverse for the matrix");
  return extend(m, *inv);
}

PolycyclicPresentation Tower::presentation() const
{
  PolycyclicPresentation p(rank());
  for (std::size_t j = 2; j <= rank(); ++j) {
    const Automorphism &a = step(j - 1);
    for (std::size_t c = 1; c < j; ++c) {
      p.conj_pos[{c, j}] = a.forward.column(c - 1).to_raw();
      p.conj_neg[{c, j}] = a.inverse.column(c - 1).to_raw();
    }
  }
  return p;
}

Tower Tower::from_presentation(const PolycyclicPresentation &p)
{
  if (!p.is_poly_z())
    throw std::invalid_argument("finite relative orders are not supported");
  if (p.n == 0)
    return Tower();

  Tower g = integers();
  for (std::size_t j = 2; j <= p.n; ++j) {
    std::size_t dim = j - 1;
    std::vector<std::optional<NormalWord>> fwd(dim), bwd(dim);
    for (std::size_t c = 1; c < j; ++c) {
      const RawWord *u = p.u(c, j);
      const RawWord *v = p.v(c, j);
      if (!u && !v) {
        fwd[c - 1] = bwd[c - 1] = g.generator(c);
        continue;
      }
      if (u)
        fwd[c - 1] = g.collect(*u);
      if (v)
        bwd[c - 1] = g.collect(*v);
    }

    auto complete = [](const std::vector<std::optional<NormalWord>> &cols) {
      return std::all_of(cols.begin(), cols.end(), [](const auto &c) { return c.has_value(); });
    };
    auto unwrap = [](const std::vector<std::optional<NormalWord>> &cols) {
      std::vector<NormalWord> out;
      for (const auto &c : cols)
        out.push_back(*c);
      return out;
    };
    auto fill = [](std::vector<std::optional<NormalWord>> &cols,
                   const std::vector<NormalWord> &derived) {
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!cols[c])
          cols[c] = derived[c];
    };

    std::string where = "conjugation action of g" + std::to_string(j);
    if (complete(fwd)) {
      if (!complete(bwd)) {
        auto derived = g.solve_inverse(AutMatrix(unwrap(fwd)));
        if (!derived)
          throw std::invalid_argument("cannot derive g_j^-1 conjugates for the " + where);
        fill(bwd, *derived);
      }
    } else if (complete(bwd)) {
      auto derived = g.solve_inverse(AutMatrix(unwrap(bwd)));
      if (!derived)
        throw std::invalid_argument("cannot derive g_j conjugates for the " + where);
      fill(fwd, *derived);
    } else {
      throw std::invalid_argument("underdetermined " + where);
    }
    g = g.extend(AutMatrix(unwrap(fwd)), unwrap(bwd));
  }
  return g;
}

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(Tower tower, NormalWord word)
: tower_(std::move(tower)), word_(std::move(word))
{
  if (word_.size() != tower_.rank())
    throw std::invalid_argument("word length does not match tower rank");
}

GroupElement GroupElement::operator*(const GroupElement &other) const
{
  return {tower_, tower_.mul(word_, other.word_)};
}

GroupElement GroupElement::inverse() const { return {tower_, tower_.inv(word_)}; }

GroupElement GroupElement::pow(const Int &m) const { return {tower_, tower_.pow(word_, m)}; }

} // namespace polyz
