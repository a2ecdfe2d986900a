#include "polyz/presentation.hpp"

#include <cctype>
#include <sstream>

namespace polyz {

ParseError::ParseError(const std::string &message, std::size_t position)
: std::runtime_error("position " + std::to_string(position) + ": " + message),
  position_(position),
  detail_(message)
{}

bool PolycyclicPresentation::is_poly_z() const
{
  for (const auto &o : relative_order)
    if (o)
      return false;
  return true;
}

const RawWord *PolycyclicPresentation::u(std::size_t i, std::size_t j) const
{
  auto it = conj_pos.find({i, j});
  return it == conj_pos.end() ? nullptr : &it->second;
}

const RawWord *PolycyclicPresentation::v(std::size_t i, std::size_t j) const
{
  auto it = conj_neg.find({i, j});
  return it == conj_neg.end() ? nullptr : &it->second;
}

namespace {

constexpr std::size_t kMaxGeneratorDigits = 9;

class Scanner
{
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }

  void skip_space()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool at_end()
  {
    skip_space();
    return pos_ == text_.size();
  }

  char peek()
  {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char ch)
  {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch)
  {
    if (!accept(ch)) {
      std::string msg = "expected '";
      msg += ch;
      msg += "'";
      fail(msg);
    }
  }

  [[noreturn]] void fail(const std::string &message) const { throw ParseError(message, pos_); }
  [[noreturn]] void fail_at(const std::string &message, std::size_t at) const
  {
    throw ParseError(message, at);
  }

  std::string_view digits()
  {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  /// `g` INT; returns the 1-based index, validating 1 <= index <= n.
  std::size_t generator(std::size_t n)
  {
    skip_space();
    std::size_t start = pos_;
    expect('g');
    auto d = digits();
    if (d.size() > kMaxGeneratorDigits)
      fail_at("generator index out of range", start);
    std::size_t index = std::stoul(std::string(d));
    if (index == 0 || index > n)
      fail_at("generator g" + std::string(d) + " out of range (n = " + std::to_string(n) + ")",
              start);
    return index;
  }

  Int signed_integer()
  {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    Int value = parse_int(digits());
    return negative ? Int(-value) : value;
  }

  RawWord word(std::size_t n)
  {
    RawWord w;
    if (peek() == '1') {
      ++pos_;
      return w;
    }
    do {
      std::size_t gen = generator(n);
      Int exponent = 1;
      if (accept('^'))
        exponent = signed_integer();
      w.append(gen, exponent);
    } while (accept('*'));
    return w;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

bool uses_only_below(const RawWord &w, std::size_t bound)
{
  for (const auto &f : w.factors())
    if (f.generator >= bound)
      return false;
  return true;
}

bool is_power(const Factor &f, std::size_t gen, int exponent)
{
  return f.generator == gen && f.exponent == exponent;
}

void store_relation(PolycyclicPresentation &p, const RawWord &lhs, const RawWord &rhs,
                    std::size_t at)
{
  const auto &l = lhs.factors();
  const auto &r = rhs.factors();

  auto put = [&](bool positive, std::size_t i, std::size_t j, RawWord value) {
    if (!uses_only_below(value, j))
      throw ParseError("conjugate of g" + std::to_string(i) + " by g" + std::to_string(j) +
                           " must only use g1..g" + std::to_string(j - 1),
                       at);
    auto &slots = positive ? p.conj_pos : p.conj_neg;
    if (!slots.emplace(std::pair{i, j}, std::move(value)).second)
      throw ParseError("duplicate relation for (g" + std::to_string(i) + ", g" +
                           std::to_string(j) + ")",
                       at);
  };

  // gj^s * gi = u * gj^s
  if (l.size() == 2 && l[1].exponent == 1 && l[0].generator > l[1].generator &&
      (l[0].exponent == 1 || l[0].exponent == -1) && !r.empty() &&
      is_power(r.back(), l[0].generator, static_cast<int>(l[0].exponent))) {
    std::vector<Factor> body(r.begin(), r.end() - 1);
    put(l[0].exponent == 1, l[1].generator, l[0].generator, RawWord(std::move(body)));
    return;
  }
  // gj^s * gi * gj^-s = u
  if (l.size() == 3 && l[1].exponent == 1 && l[0].generator == l[2].generator &&
      l[0].generator > l[1].generator && (l[0].exponent == 1 || l[0].exponent == -1) &&
      l[2].exponent == -l[0].exponent) {
    put(l[0].exponent == 1, l[1].generator, l[0].generator, rhs);
    return;
  }
  // gi^o = w
  if (l.size() == 1 && l[0].exponent > 0) {
    std::size_t i = l[0].generator;
    if (!uses_only_below(rhs, i))
      throw ParseError("power relation of g" + std::to_string(i) + " must only use g1..g" +
                           std::to_string(i - 1),
                       at);
    if (p.relative_order[i - 1])
      throw ParseError("duplicate power relation for g" + std::to_string(i), at);
    p.relative_order[i - 1] = l[0].exponent;
    p.power_word[i - 1] = rhs;
    return;
  }
  throw ParseError("relation is not in polycyclic form", at);
}

} // namespace

PolycyclicPresentation parse_presentation(std::string_view text)
{
  Scanner s(text);
  s.expect('<');

  std::size_t n = 0;
  do {
    s.skip_space();
    std::size_t at = s.pos();
    s.expect('g');
    auto d = s.digits();
    if (d.size() > kMaxGeneratorDigits || std::stoul(std::string(d)) != n + 1)
      s.fail_at("generators must be listed as g1, g2, ... in order", at);
    ++n;
  } while (s.accept(','));

  PolycyclicPresentation p(n);
  if (s.accept('|')) {
    do {
      s.skip_space();
      std::size_t at = s.pos();
      RawWord lhs = s.word(n);
      s.expect('=');
      RawWord rhs = s.word(n);
      store_relation(p, lhs, rhs, at);
    } while (s.accept(','));
  }
  s.expect('>');
  if (!s.at_end())
    s.fail("unexpected trailing input");
  return p;
}

RawWord parse_word(std::string_view text, std::size_t n)
{
  Scanner s(text);
  if (s.at_end())
    return {};
  RawWord w = s.word(n);
  if (!s.at_end())
    s.fail("unexpected trailing input");
  return w;
}

std::string format_word(const RawWord &w)
{
  if (w.empty())
    return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto &f : w.factors()) {
    if (!first)
      out << '*';
    first = false;
    out << 'g' << f.generator;
    if (f.exponent != 1)
      out << '^' << f.exponent;
  }
  return out.str();
}

std::string format_word(const NormalWord &w) { return format_word(w.to_raw()); }

std::string format_presentation(const PolycyclicPresentation &p)
{
  std::ostringstream out;
  out << '<';
  for (std::size_t i = 1; i <= p.n; ++i)
    out << (i > 1 ? "," : "") << 'g' << i;

  std::vector<std::string> rels;
  for (const auto &[key, u] : p.conj_pos) {
    auto [i, j] = key;
    RawWord rhs = u;
    rhs.append(j, 1);
    rels.push_back("g" + std::to_string(j) + "*g" + std::to_string(i) + " = " + format_word(rhs));
  }
  for (const auto &[key, v] : p.conj_neg) {
    auto [i, j] = key;
    RawWord rhs = v;
    rhs.append(j, -1);
    rels.push_back("g" + std::to_string(j) + "^-1*g" + std::to_string(i) + " = " +
                   format_word(rhs));
  }
  for (std::size_t i = 0; i < p.n; ++i)
    if (p.relative_order[i])
      rels.push_back("g" + std::to_string(i + 1) + "^" + p.relative_order[i]->str() + " = " +
                     format_word(*p.power_word[i]));

  if (!rels.empty()) {
    out << " | ";
    for (std::size_t k = 0; k < rels.size(); ++k)
      out << (k ? ", " : "") << rels[k];
  }
  out << '>';
  return out.str();
}

} // namespace polyz
