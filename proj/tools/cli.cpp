#include "cli.hpp"

#include "polyz/bench.hpp"
#include "polyz/engine.hpp"
#include "polyz/g2.hpp"
#include "polyz/g3.hpp"
#include "polyz/iso.hpp"
#include "polyz/kernels.hpp"
#include "polyz/presentation.hpp"
#include "polyz/presets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <sstream>

namespace polyz::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Group selection

struct Group
{
  std::string label;
  std::string preset; // empty when read from a presentation file
  Tower tower;

  bool is_g2() const { return preset == "g2"; }
  std::optional<g3::Variant> variant() const { return g3::parse_variant(preset); }
};

struct Common
{
  std::string group;
  std::string presentation;
  bool json = false;
};

Group load_group(const Common &c)
{
  if (c.group.empty() == c.presentation.empty())
    throw UsageError("exactly one of --group or --presentation is required");
  if (!c.group.empty())
    return {c.group, c.group, preset(c.group)};
  std::ifstream in(c.presentation);
  if (!in)
    throw UsageError("cannot read presentation file '" + c.presentation + "'");
  std::stringstream text;
  text << in.rdbuf();
  return {c.presentation, "", Tower::from_presentation(parse_presentation(text.str()))};
}

// ---------------------------------------------------------------------------
// Operands

Int json_int(const json &v)
{
  if (v.is_number_integer())
    return Int(v.get<long long>());
  if (v.is_string())
    return parse_int(v.get<std::string>());
  throw UsageError("expected an integer or a decimal string");
}

json parse_json(const std::string &text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

bool is_vector_form(const std::string &text)
{
  auto pos = text.find_first_not_of(" \t");
  return pos != std::string::npos && text[pos] == '[';
}

NormalWord parse_word_operand(const Group &g, const std::string &text)
{
  if (is_vector_form(text)) {
    json v = parse_json(text);
    if (!v.is_array() || v.size() != g.tower.rank())
      throw UsageError("exponent vector must have " + std::to_string(g.tower.rank()) + " entries");
    NormalWord w(g.tower.rank());
    for (std::size_t i = 0; i < v.size(); ++i)
      w[i] = json_int(v[i]);
    return w;
  }
  return g.tower.collect(parse_word(text, g.tower.rank()));
}

AutMatrix parse_matrix(const std::string &text, std::size_t dim)
{
  json v = parse_json(text);
  if (!v.is_array() || v.size() != dim)
    throw UsageError("matrix must have " + std::to_string(dim) + " rows");
  std::vector<std::vector<Int>> rows;
  for (const auto &row : v) {
    if (!row.is_array() || row.size() != dim)
      throw UsageError("matrix must be square of dimension " + std::to_string(dim));
    std::vector<Int> r;
    for (const auto &e : row)
      r.push_back(json_int(e));
    rows.push_back(std::move(r));
  }
  return AutMatrix::from_rows(rows);
}

json word_json(const NormalWord &w)
{
  json a = json::array();
  for (const Int &e : w.exponents())
    a.push_back(e.str());
  return a;
}

std::string word_vector_text(const NormalWord &w)
{
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + w[i].str();
  return s + "]";
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

std::string matrix_text(const AutMatrix &m)
{
  std::string s = "[";
  auto rows = m.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      s += (c ? "," : "") + rows[r][c].str();
    s += "]";
  }
  return s + "]";
}

// An automorphism operand, classified when the group has a closed-form family.
struct AutOperand
{
  Automorphism aut;
  std::optional<g2::Aut2> f2;
  std::optional<g3::Aut3> f3;

  std::string label() const
  {
    if (f2)
      return g2::to_string(*f2);
    if (f3)
      return g3::to_string(*f3);
    return matrix_text(aut.forward);
  }
};

AutOperand from_g2(const g2::Aut2 &f) { return {g2::automorphism(f), f, std::nullopt}; }
AutOperand from_g3(const g3::Aut3 &f) { return {g3::automorphism(f), std::nullopt, f}; }

// Engine-side verdict for a matrix outside every family: either it is not an
// automorphism at all, or the closed-form classification missed it.
[[noreturn]] void reject_matrix(const Group &g, const AutMatrix &m)
{
  if (g.tower.preserves_relations(m))
    if (auto inv = g.tower.solve_inverse(m); inv && g.tower.is_automorphism(m, *inv))
      throw std::domain_error("classification miss: " + matrix_text(m) +
                              " is an automorphism outside every family");
  throw NotAnAutomorphism(matrix_text(m) + " is not an automorphism");
}

AutOperand classify_matrix(const Group &g, const AutMatrix &m)
{
  if (g.is_g2()) {
    if (auto f = g2::from_matrix(m))
      return from_g2(*f);
    reject_matrix(g, m);
  }
  if (auto v = g.variant()) {
    if (auto f = g3::membership(*v, g3::to_mat3(m)))
      return from_g3(*f);
    reject_matrix(g, m);
  }
  if (!g.tower.preserves_relations(m))
    throw NotAnAutomorphism(matrix_text(m) + " is not an automorphism");
  auto inv = g.tower.solve_inverse(m);
  if (!inv)
    throw std::domain_error("cannot derive inverse images for " + matrix_text(m));
  if (!g.tower.is_automorphism(m, *inv))
    throw NotAnAutomorphism(matrix_text(m) + " is not an automorphism");
  return {{m, AutMatrix(*inv)}, std::nullopt, std::nullopt};
}

AutOperand parse_aut_operand(const Group &g, const std::string &text)
{
  if (is_vector_form(text))
    return classify_matrix(g, parse_matrix(text, g.tower.rank()));
  if (g.is_g2())
    return from_g2(g2::parse_aut2(text));
  if (auto v = g.variant())
    return from_g3(g3::parse_aut3(text, *v));
  throw UsageError("family notation needs --group g2, b1, a0, a1 or b0; pass a matrix instead");
}

// ---------------------------------------------------------------------------
// Output

struct Output
{
  std::ostream &out;
  bool json_mode;
  std::string command;
  std::string group;

  void emit(const json &result, const std::string &text) const
  {
    if (json_mode) {
      json j{{"command", command}, {"group", group}, {"result", result}};
      out << j.dump(2) << '\n';
    } else {
      out << text << '\n';
    }
  }
};

json aut_json(const AutOperand &a)
{
  return {{"family", (a.f2 || a.f3) ? json(a.label()) : json(nullptr)},
          {"matrix", matrix_json(a.aut.forward)},
          {"inverse", matrix_json(a.aut.inverse)}};
}

void emit_word(const Output &o, const NormalWord &w, bool vector_form)
{
  o.emit({{"word", word_json(w)}, {"text", format_word(w)}},
         vector_form ? word_vector_text(w) : format_word(w));
}

// ---------------------------------------------------------------------------
// Commands

struct Args
{
  Common common;
  std::array<std::string, 2> operands;
  std::string matrix;
  std::string alpha, element, psi;
  std::size_t count = 1000;
  std::size_t repeats = 5;
  std::uint64_t seed = 1;
  long long bound = 10;
  std::string op;
  std::string power;
  bool corrupt_kernel = false;
};

int cmd_collect(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  emit_word(o, parse_word_operand(g, a.operands.at(0)), is_vector_form(a.operands.at(0)));
  return 0;
}

int cmd_mul(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  NormalWord x = parse_word_operand(g, a.operands.at(0));
  NormalWord y = parse_word_operand(g, a.operands.at(1));
  emit_word(o, g.tower.mul(x, y), is_vector_form(a.operands.at(0)));
  return 0;
}

int cmd_inv(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  emit_word(o, g.tower.inv(parse_word_operand(g, a.operands.at(0))), is_vector_form(a.operands.at(0)));
  return 0;
}

int cmd_pow(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  NormalWord x = parse_word_operand(g, a.operands.at(0));
  emit_word(o, g.tower.pow(x, parse_int(a.operands.at(1))), is_vector_form(a.operands.at(0)));
  return 0;
}

int cmd_central(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  NormalWord x = parse_word_operand(g, a.operands.at(0));
  bool central = g.tower.is_central(x);
  o.emit({{"word", word_json(x)}, {"central", central}}, central ? "true" : "false");
  return 0;
}

std::optional<bool> inner_of(const AutOperand &f)
{
  if (f.f2)
    return g2::is_inner(*f.f2);
  if (f.f3)
    return g3::is_inner(*f.f3);
  return std::nullopt;
}

std::optional<std::string> out_class_of(const AutOperand &f)
{
  if (f.f2)
    return g2::to_string(g2::out_class(*f.f2));
  if (f.f3)
    return g3::to_string(g3::out_class(*f.f3));
  return std::nullopt;
}

int cmd_aut_classify(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  AutOperand f = classify_matrix(g, parse_matrix(a.matrix, g.tower.rank()));
  auto inner = inner_of(f);
  auto cls = out_class_of(f);
  json r = aut_json(f);
  r["inner"] = inner ? json(*inner) : json(nullptr);
  r["out_class"] = cls ? json(*cls) : json(nullptr);
  std::string text = f.label();
  if (inner)
    text += std::string("\ninner: ") + (*inner ? "true" : "false");
  if (cls)
    text += "\nout-class: " + *cls;
  if (!f.f2 && !f.f3)
    text = "automorphism\ninverse: " + matrix_text(f.aut.inverse);
  o.emit(r, text);
  return 0;
}

int cmd_aut_compose(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  AutOperand f = parse_aut_operand(g, a.operands.at(0));
  AutOperand h = parse_aut_operand(g, a.operands.at(1));
  AutOperand r;
  if (f.f2 && h.f2)
    r = from_g2(g2::compose(*f.f2, *h.f2));
  else if (f.f3 && h.f3)
    r = from_g3(g3::compose(*f.f3, *h.f3));
  else
    r = {{g.tower.compose(f.aut.forward, h.aut.forward),
          g.tower.compose(h.aut.inverse, f.aut.inverse)},
         std::nullopt,
         std::nullopt};
  o.emit(aut_json(r), r.label());
  return 0;
}

int cmd_aut_inner(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  NormalWord h = parse_word_operand(g, a.operands.at(0));
  AutOperand r;
  if (g.is_g2())
    r = from_g2(g2::inner_from_element(h));
  else if (auto v = g.variant())
    r = from_g3(g3::inner_from_element(*v, h));
  else
    r = {inner_automorphism(g.tower, h), std::nullopt, std::nullopt};
  o.emit(aut_json(r), r.label());
  return 0;
}

int cmd_out_class(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  if (!g.is_g2() && !g.variant())
    throw UsageError("out-class needs --group g2, b1, a0, a1 or b0");
  AutOperand f = parse_aut_operand(g, a.operands.at(0));
  std::string cls, witness;
  if (f.f2) {
    auto [c, w] = g2::out_class_witness(*f.f2);
    cls = g2::to_string(c);
    witness = g2::to_string(w);
  } else {
    auto [c, w] = g3::out_class_witness(*f.f3);
    cls = g3::to_string(c);
    witness = g3::to_string(w);
  }
  o.emit({{"automorphism", f.label()}, {"class", cls}, {"witness", witness}},
         "class: " + cls + "\nwitness: " + witness);
  return 0;
}

IsoWitness build_witness(const Group &g, const Args &a)
{
  AutOperand alpha = parse_aut_operand(g, a.alpha);
  if (a.element.empty() == a.psi.empty())
    throw UsageError("exactly one of --element or --psi is required");
  if (!a.element.empty())
    return inner_twist_witness(g.tower, alpha.aut, parse_word_operand(g, a.element));
  return conjugation_witness(g.tower, alpha.aut, parse_aut_operand(g, a.psi).aut);
}

std::string witness_text(const IsoWitness &w)
{
  std::string s = std::string(witness_kind_name(w.kind)) + " witness\n";
  s += "source twist: " + matrix_text(w.source_twist.forward) + "\n";
  s += "target twist: " + matrix_text(w.target_twist.forward);
  if (w.element)
    s += "\nelement: " + format_word(*w.element);
  if (w.conjugator)
    s += "\npsi: " + matrix_text(w.conjugator->forward);
  return s;
}

int cmd_iso_witness(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  IsoWitness w = build_witness(g, a);
  o.emit(json::parse(witness_json(w)), witness_text(w));
  return 0;
}

int cmd_iso_verify(const Args &a, const Output &o)
{
  Group g = load_group(a.common);
  IsoWitness w = build_witness(g, a);
  WitnessReport r = verify_witness(w, a.count, a.bound, a.seed);
  std::string text = witness_text(w) + "\nchecks: " + std::to_string(r.checks) +
                     "\nseed: " + std::to_string(r.seed) +
                     "\nmultiplicativity failures: " +
                     std::to_string(r.multiplicativity_failures.size()) +
                     "\nround-trip failures: " + std::to_string(r.roundtrip_failures.size());
  o.emit(json::parse(witness_json(w, &r)), text);
  return r.ok() ? 0 : 1;
}

int cmd_bench(const Args &a, const Output &o)
{
  if (a.common.group.empty() || !a.common.presentation.empty())
    throw UsageError("bench needs --group with a preset name");
  BenchOptions opt;
  opt.preset = a.common.group;
  if (a.op == "mul")
    opt.op = BenchOp::Mul;
  else if (a.op == "pow")
    opt.op = BenchOp::Pow;
  else
    throw UsageError("bench operation must be mul or pow");
  opt.count = a.count;
  opt.repeats = std::max<std::size_t>(a.repeats, 1);
  opt.seed = a.seed;
  if (!a.power.empty())
    opt.power = parse_int(a.power);
  opt.corrupt_kernel = a.corrupt_kernel;

  BenchReport r = run_bench(opt);
  if (!r.equal)
    throw std::domain_error("kernel and engine disagree on input " +
                            std::to_string(*r.mismatch));
  std::ostringstream text;
  text << std::fixed << std::setprecision(1);
  text << "group: " << opt.preset << "\nop: " << bench_op_name(opt.op)
       << "\ncount: " << opt.count << "\nresults equal: yes";
  if (opt.count > 0)
    text << "\nkernel median: " << r.kernel_ns / 1e3 << " us\nengine median: "
         << r.engine_ns / 1e3 << " us\nspeedup: " << std::setprecision(2) << r.speedup() << "x";
  o.emit({{"op", bench_op_name(opt.op)},
          {"count", opt.count},
          {"repeats", opt.repeats},
          {"seed", std::to_string(opt.seed)},
          {"equal", true},
          {"kernel_ns", r.kernel_ns},
          {"engine_ns", r.engine_ns},
          {"speedup", r.speedup()}},
         text.str());
  return 0;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Exact arithmetic in poly-Z groups", "polyz"};
  app.require_subcommand(1);

  Args a;
  using Handler = std::function<int(const Args &, const Output &)>;
  std::vector<std::pair<CLI::App *, Handler>> commands;

  auto add = [&](const char *name, const char *help, Handler h) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->add_option("--group", a.common.group, "Preset: " + [] {
      std::string s;
      for (const auto &n : preset_names())
        s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
    sub->add_option("--presentation", a.common.presentation, "Presentation file");
    sub->add_flag("--json", a.common.json, "JSON output");
    commands.emplace_back(sub, std::move(h));
    return sub;
  };

  // Operands are plain strings: CLI11 would otherwise split "[0,1,1]" into a list.
  auto operands = [&](CLI::App *sub, std::vector<const char *> names) {
    for (std::size_t i = 0; i < names.size(); ++i)
      sub->add_option(names[i], a.operands[i], names[i])->required();
  };
  operands(add("collect", "Normal form of a word", cmd_collect), {"word"});
  operands(add("mul", "Product x*y", cmd_mul), {"x", "y"});
  operands(add("inv", "Inverse", cmd_inv), {"x"});
  operands(add("pow", "Power x^m", cmd_pow), {"x", "m"});
  operands(add("central", "Whether a word is central", cmd_central), {"x"});

  add("aut-classify", "Classify an automorphism matrix", cmd_aut_classify)
      ->add_option("--matrix", a.matrix, "Row-major JSON matrix; column c is the image of g_c")
      ->required();
  operands(add("aut-compose", "Composition f o g (family text or JSON matrix)", cmd_aut_compose),
           {"f", "g"});
  operands(add("aut-inner", "Inner automorphism x -> h x h^-1", cmd_aut_inner), {"element"});
  operands(add("out-class", "Outer automorphism class", cmd_out_class), {"f"});

  for (const char *name : {"iso-witness", "iso-verify"}) {
    bool verify = std::string_view(name) == "iso-verify";
    CLI::App *sub = add(name,
                        verify ? "Build and check an isomorphism witness"
                               : "Build an isomorphism witness",
                        verify ? Handler(cmd_iso_verify) : Handler(cmd_iso_witness));
    sub->add_option("--alpha", a.alpha, "Twist automorphism alpha")->required();
    sub->add_option("--element", a.element, "Inner twist by a: beta = iota_a o alpha");
    sub->add_option("--psi", a.psi, "Conjugator: beta = psi alpha psi^-1");
    if (verify) {
      sub->add_option("--count", a.count, "Random sample pairs")->capture_default_str();
      sub->add_option("--seed", a.seed, "Sampling seed")->capture_default_str();
      sub->add_option("--bound", a.bound, "Exponent bound")->capture_default_str();
    }
  }

  CLI::App *bench = add("bench", "Closed-form kernel vs generic engine", cmd_bench);
  bench->add_option("op", a.op, "mul or pow")->required();
  bench->add_option("--count", a.count, "Random inputs")->capture_default_str();
  bench->add_option("--repeats", a.repeats, "Timed batches")->capture_default_str();
  bench->add_option("--seed", a.seed, "Input seed")->capture_default_str();
  bench->add_option("--power", a.power, "Fixed exponent for pow");
  bench->add_flag("--corrupt-kernel", a.corrupt_kernel)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  for (auto &[sub, handler] : commands) {
    if (!sub->parsed())
      continue;
    Output o{out, a.common.json, sub->get_name(), a.common.group.empty() ? a.common.presentation
                                                                        : a.common.group};
    try {
      return handler(a, o);
    } catch (const ParseError &e) {
      err << "parse error: " << e.what() << '\n';
      return 2;
    } catch (const NotAnAutomorphism &e) {
      err << "not an automorphism: " << e.what() << '\n';
      return 1;
    } catch (const std::domain_error &e) {
      err << "error: " << e.what() << '\n';
      return 1;
    } catch (const std::invalid_argument &e) {
      err << "usage: " << e.what() << '\n';
      return 2;
    } catch (const std::out_of_range &e) {
      err << "usage: " << e.what() << '\n';
      return 2;
    } catch (const std::exception &e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

} // namespace polyz::cli
