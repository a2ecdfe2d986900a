#include "polyz/iso.hpp"

#include "polyz/presentation.hpp"

#include <json.hpp>

#include <random>
#include <utility>

namespace polyz {

TwistSequence::TwistSequence(Tower base, Automorphism alpha, NormalWord a)
    : base_(std::move(base)), alpha_(std::move(alpha)), a_(std::move(a))
{
  pos_.push_back(base_.identity());
  neg_.push_back(base_.identity());
  pos_step_ = a_;
  neg_step_ = base_.apply(alpha_.inverse, base_.inv(a_));
}

NormalWord TwistSequence::at(long long k) const
{
  std::lock_guard lock(mutex_);
  if (k >= 0) {
    auto want = static_cast<std::size_t>(k);
    while (pos_.size() <= want) {
      pos_.push_back(base_.mul(pos_.back(), pos_step_));
      pos_step_ = base_.apply(alpha_.forward, pos_step_);
    }
    return pos_[want];
  }
  auto want = static_cast<std::size_t>(-k);
  while (neg_.size() <= want) {
    neg_.push_back(base_.mul(neg_.back(), neg_step_));
    neg_step_ = base_.apply(alpha_.inverse, neg_step_);
  }
  return neg_[want];
}

NormalWord twist_sequence(const Tower &base, const Automorphism &alpha, const NormalWord &a,
                          long long k)
{
  NormalWord acc = base.identity();
  if (k > 0) {
    NormalWord factor = a;
    for (long long i = 0; i < k; ++i) {
      acc = base.mul(acc, factor);
      factor = base.apply(alpha.forward, factor);
    }
  } else if (k < 0) {
    NormalWord factor = base.apply(alpha.inverse, base.inv(a));
    for (long long i = 0; i < -k; ++i) {
      acc = base.mul(acc, factor);
      factor = base.apply(alpha.inverse, factor);
    }
  }
  return acc;
}

Automorphism inner_automorphism(const Tower &base, const NormalWord &a)
{
  NormalWord a_inv = base.inv(a);
  std::vector<NormalWord> fwd, bwd;
  for (std::size_t c = 0; c < base.rank(); ++c) {
    fwd.push_back(base.conjugate(a, base.generator(c + 1)));
    bwd.push_back(base.conjugate(a_inv, base.generator(c + 1)));
  }
  return {AutMatrix(std::move(fwd)), AutMatrix(std::move(bwd))};
}

const char *witness_kind_name(WitnessKind k)
{
  return k == WitnessKind::InnerTwist ? "inner-twist" : "conjugation";
}

namespace {

void require_automorphism(const Tower &base, const Automorphism &f, const char *what)
{
  if (f.forward.dim() != base.rank() || f.inverse.dim() != base.rank())
    throw std::invalid_argument(std::string(what) + " has the wrong dimension");
  if (!base.is_automorphism(f.forward, f.inverse.columns()))
    throw NotAnAutomorphism(std::string(what) + " is not an automorphism");
}

Tower extend_with(const Tower &base, const Automorphism &f)
{
  return base.extend(f.forward, f.inverse.columns());
}

// Splits an (h, k) word of the extension into its base part and k.
std::pair<NormalWord, Int> split(const NormalWord &w)
{
  std::size_t n = w.size() - 1;
  return {w.resized(n), w[n]};
}

NormalWord join(const NormalWord &h, const Int &k)
{
  NormalWord out = h.resized(h.size() + 1);
  out[h.size()] = k;
  return out;
}

long long small_exponent(const Int &k)
{
  if (k > Int(1'000'000) || k < Int(-1'000'000))
    throw std::out_of_range("twist index too large for witness evaluation");
  return k.convert_to<long long>();
}

} // namespace

IsoWitness inner_twist_witness(const Tower &base, const Automorphism &alpha, const NormalWord &a)
{
  require_automorphism(base, alpha, "alpha");
  if (a.size() != base.rank())
    throw std::invalid_argument("twisting element has the wrong length");

  Automorphism iota = inner_automorphism(base, a);
  Automorphism beta{base.compose(iota.forward, alpha.forward),
                    base.compose(alpha.inverse, iota.inverse)};
  require_automorphism(base, beta, "beta");

  IsoWitness w;
  w.kind = WitnessKind::InnerTwist;
  w.base = base;
  w.source_twist = beta;
  w.target_twist = alpha;
  w.source = extend_with(base, beta);
  w.target = extend_with(base, alpha);
  w.element = a;
  auto seq = std::make_shared<const TwistSequence>(base, alpha, a);
  w.twist = seq;
  w.forward = [base, seq](const NormalWord &x) {
    auto [h, k] = split(x);
    return join(base.mul(h, seq->at(small_exponent(k))), k);
  };
  w.backward = [base, seq](const NormalWord &x) {
    auto [h, k] = split(x);
    return join(base.mul(h, base.inv(seq->at(small_exponent(k)))), k);
  };
  return w;
}

IsoWitness conjugation_witness(const Tower &base, const Automorphism &alpha,
                               const Automorphism &psi)
{
  require_automorphism(base, alpha, "alpha");
  require_automorphism(base, psi, "psi");

  Automorphism beta{base.compose(psi.forward, base.compose(alpha.forward, psi.inverse)),
                    base.compose(psi.forward, base.compose(alpha.inverse, psi.inverse))};
  require_automorphism(base, beta, "beta");

  IsoWitness w;
  w.kind = WitnessKind::Conjugation;
  w.base = base;
  w.source_twist = alpha;
  w.target_twist = beta;
  w.source = extend_with(base, alpha);
  w.target = extend_with(base, beta);
  w.conjugator = psi;
  w.forward = [base, m = psi.forward](const NormalWord &x) {
    auto [g, k] = split(x);
    return join(base.apply(m, g), k);
  };
  w.backward = [base, m = psi.inverse](const NormalWord &x) {
    auto [g, k] = split(x);
    return join(base.apply(m, g), k);
  };
  return w;
}

WitnessReport verify_witness(const IsoWitness &w, std::size_t samples, long long bound,
                             std::uint64_t seed)
{
  WitnessReport r;
  r.seed = seed;
  r.samples = samples;
  r.bound = bound;

  auto check = [&](const NormalWord &x, const NormalWord &y) {
    ++r.checks;
    NormalWord fx = w.forward(x), fy = w.forward(y);
    if (w.forward(w.source.mul(x, y)) != w.target.mul(fx, fy))
      r.multiplicativity_failures.push_back({x, y});
    if (w.backward(fx) != x)
      r.roundtrip_failures.push_back(x);
    // x read as a target word must survive backward then forward.
    if (w.forward(w.backward(x)) != x)
      r.roundtrip_failures.push_back(x);
  };

  const std::size_t n = w.source.rank();
  std::vector<NormalWord> gens;
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(w.source.generator(i + 1, 1));
    gens.push_back(w.source.generator(i + 1, -1));
  }
  for (const auto &x : gens)
    for (const auto &y : gens)
      check(x, y);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(-bound, bound);
  auto draw = [&] {
    std::vector<Int> v(n);
    for (auto &e : v)
      e = dist(rng);
    return NormalWord(std::move(v));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    NormalWord x = draw();
    NormalWord y = draw();
    check(x, y);
  }
  return r;
}

namespace {

using nlohmann::json;

json word_json(const NormalWord &w)
{
  json a = json::array();
  for (const Int &e : w.exponents())
    a.push_back(e.str());
  return a;
}

json matrix_json(const AutMatrix &m)
{
  json rows = json::array();
  for (const auto &row : m.rows()) {
    json r = json::array();
    for (const Int &e : row)
      r.push_back(e.str());
    rows.push_back(r);
  }
  return rows;
}

} // namespace

std::string witness_json(const IsoWitness &w, const WitnessReport *report)
{
  json j;
  j["kind"] = witness_kind_name(w.kind);
  j["base"] = format_presentation(w.base.presentation());
  j["source"] = {{"presentation", format_presentation(w.source.presentation())},
                 {"twist", matrix_json(w.source_twist.forward)}};
  j["target"] = {{"presentation", format_presentation(w.target.presentation())},
                 {"twist", matrix_json(w.target_twist.forward)}};
  if (w.kind == WitnessKind::InnerTwist) {
    j["alpha"] = matrix_json(w.target_twist.forward);
    if (w.element)
      j["element"] = word_json(*w.element);
  } else {
    j["alpha"] = matrix_json(w.source_twist.forward);
    if (w.conjugator)
      j["psi"] = matrix_json(w.conjugator->forward);
  }
  if (report) {
    json failures = json::array();
    for (const auto &f : report->multiplicativity_failures)
      failures.push_back({{"x", word_json(f.x)}, {"y", word_json(f.y)}});
    json trips = json::array();
    for (const auto &x : report->roundtrip_failures)
      trips.push_back(word_json(x));
    j["report"] = {{"seed", std::to_string(report->seed)},
                   {"samples", report->samples},
                   {"bound", report->bound},
                   {"checks", report->checks},
                   {"multiplicativity_failures", failures},
                   {"roundtrip_failures", trips},
                   {"ok", report->ok()}};
  }
  return j.dump(2);
}

} // namespace polyz
