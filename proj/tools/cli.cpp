#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "acceptance_checks.hpp"
#include "json_io.hpp"
#include "malcolmson/errors.hpp"
#include "malcolmson/modules.hpp"
#include "malcolmson/normal_form.hpp"
#include "malcolmson/semigroup.hpp"
#include "malcolmson/states.hpp"

namespace malcolmson::cli {

namespace {

using io::json;

enum Exit { Ok = 0, CheckFailed = 1, BadInput = 2, Precondition = 3, Overflow = 4 };

const json& field(const json& inputs, const char* key) {
  if (!inputs.contains(key) || inputs.at(key).is_null()) throw ParseError(std::string("missing input \"") + key + "\"");
  return inputs.at(key);
}

std::int64_t int_field(const json& inputs, const char* key) {
  const json& j = field(inputs, key);
  if (!j.is_number_integer()) throw ParseError(std::string("input \"") + key + "\" must be an integer");
  return j.get<std::int64_t>();
}

std::optional<std::int64_t> optional_int(const json& inputs, const char* key) {
  if (!inputs.contains(key) || inputs.at(key).is_null()) return std::nullopt;
  return int_field(inputs, key);
}

std::string string_field(const json& inputs, const char* key) {
  const json& j = field(inputs, key);
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  throw ParseError(std::string("input \"") + key + "\" must be a string");
}

json optional_rational(const std::optional<Rational>& q) { return q ? io::rational_to_json(*q) : json(nullptr); }

bool is_matrix_literal(const json& j) { return j.is_array() && !j.empty() && j.front().is_array(); }

// Diagonal matrix whose component ranks are the given class.
Matrix realize_regular(const Ring& ring, const MonoidElement& a) {
  const std::int64_t size = std::max<std::int64_t>(1, *std::max_element(a.counts.begin(), a.counts.end()));
  std::vector<Element> diag;
  for (std::int64_t j = 0; j < size; ++j) {
    std::vector<GaloisField::Value> parts;
    for (std::size_t i = 0; i < ring.component_count(); ++i) {
      parts.push_back(a.counts[i] > j ? ring.component_field(i).one() : ring.component_field(i).zero());
    }
    diag.push_back(ring.from_components(parts));
  }
  return diagonal(ring, static_cast<std::size_t>(size), static_cast<std::size_t>(size), diag);
}

Matrix regular_operand(const Ring& ring, const json& j) {
  if (is_matrix_literal(j)) return io::matrix_from_json(ring, j);
  return realize_regular(ring, io::monoid_from_json(ring, j));
}

MonoidElement unit_operand(const Ring& ring, const json& inputs) {
  if (inputs.contains("unit") && !inputs.at("unit").is_null()) return io::monoid_operand(ring, inputs.at("unit"));
  return order_unit(ring);
}

json state_range_to_json(const StateRange& r) {
  json out{{"p_lb", io::rational_to_json(r.p_lb)},
           {"p_witness", r.p_witness},
           {"q_ub", optional_rational(r.q_ub)},
           {"q_witness", r.q_witness},
           {"exact", nullptr}};
  if (r.exact) out["exact"] = {io::rational_to_json((*r.exact)[0]), io::rational_to_json((*r.exact)[1])};
  return out;
}

// ---- commands ----

json cmd_normalize(const Ring& ring, const json& inputs) {
  const Element x = ring.parse_element(string_field(inputs, "x"));
  json out{{"value", ring.format(x)}, {"is_unit", ring.is_unit(x)}};
  if (ring.is_local()) {
    const auto form = ring.local_form(x);
    out["valuation"] = form ? json(form->valuation) : json(nullptr);
    out["unit"] = form ? json(ring.format(form->unit)) : json(nullptr);
  }
  return out;
}

json cmd_diagonalize(const Ring& ring, const json& inputs) {
  const Matrix a = io::matrix_from_json(ring, field(inputs, "a"));
  const DiagonalForm form = diagonalize(ring, a);
  return {{"exponents", form.exponents},
          {"zero_count", form.zero_count},
          {"left", io::matrix_to_json(ring, form.left)},
          {"right", io::matrix_to_json(ring, form.right)},
          {"diagonal", io::matrix_to_json(ring, diagonal_part(ring, form, a.rows(), a.cols()))},
          {"verified", verify_factorization(ring, a, form)}};
}

json cmd_class(const Ring& ring, const json& inputs) {
  const MonoidElement c = class_of(ring, io::matrix_from_json(ring, field(inputs, "a")));
  return {{"class", io::monoid_to_json(c)}, {"kind", c.kind == MonoidKind::Local ? "local" : "regular"}};
}

json cmd_rank(const Ring& ring, const json& inputs) {
  const Matrix a = io::matrix_from_json(ring, field(inputs, "a"));
  if (ring.is_domain()) {
    const Element pi = ring.parse_element(inputs.contains("pi") && !inputs.at("pi").is_null() ? string_field(inputs, "pi") : "0");
    const PullbackRank rank(ring, pi);
    return {{"pullback_rank", rank(a)}, {"pi", ring.format(pi)}};
  }
  const MonoidElement c = class_of(ring, a);
  if (ring.is_regular()) return {{"component_ranks", c.counts}};
  if (auto k = optional_int(inputs, "k")) {
    if (*k < 1 || *k > ring.nilpotency()) throw PreconditionError("rank: k must lie in [1, " + std::to_string(ring.nilpotency()) + "]");
    return {{"k", *k}, {"rk", io::rational_to_json(rk(static_cast<int>(*k), c))}};
  }
  json values = json::array();
  for (int k = 1; k <= ring.nilpotency(); ++k) values.push_back(io::rational_to_json(rk(k, c)));
  return {{"rk", values}};
}

json cmd_leq(const Ring& ring, const json& inputs) {
  if (inputs.contains("ea") && !inputs.at("ea").is_null()) {
    if (!ring.is_domain()) throw PreconditionError("exponent multisets are compared over Z or F_p[x]");
    const Exponents ea = io::exponents_from_json(field(inputs, "ea"));
    const Exponents eb = io::exponents_from_json(field(inputs, "eb"));
    const int depth = static_cast<int>(int_field(inputs, "depth"));
    if (auto cert = leq_provable(ea, eb, depth)) {
      return {{"leq", cert->positive()}, {"certificate", io::certificate_to_json(ring, *cert)}};
    }
    if (auto cert = minor_refutation(ea, eb)) return {{"leq", false}, {"certificate", io::certificate_to_json(ring, *cert)}};
    return {{"leq", nullptr}, {"certificate", nullptr}};
  }
  if (ring.is_domain()) throw PreconditionError("leq over Z or F_p[x] takes exponent multisets (--ea, --eb)");
  if (ring.is_regular()) {
    const Certificate cert = regular_factor(ring, regular_operand(ring, field(inputs, "a")), regular_operand(ring, field(inputs, "b")));
    return {{"leq", cert.positive()}, {"certificate", io::certificate_to_json(ring, cert)}};
  }
  const Certificate cert = witness_chain(io::monoid_operand(ring, field(inputs, "a")), io::monoid_operand(ring, field(inputs, "b")));
  return {{"leq", cert.positive()}, {"certificate", io::certificate_to_json(ring, cert)}};
}

json cmd_chain(const Ring& ring, const json& inputs) {
  if (!ring.is_local()) throw PreconditionError("chain: witness chains are built over local families");
  const MonoidElement a = io::monoid_operand(ring, field(inputs, "a"));
  const MonoidElement b = io::monoid_operand(ring, field(inputs, "b"));
  const Certificate cert = witness_chain(a, b);
  return {{"a", io::monoid_to_json(a)},
          {"b", io::monoid_to_json(b)},
          {"leq", cert.positive()},
          {"certificate", io::certificate_to_json(ring, cert)}};
}

json cmd_state_range(const Ring& ring, const json& inputs) {
  const MonoidElement a = io::monoid_operand(ring, field(inputs, "a"));
  return state_range_to_json(state_range(a, unit_operand(ring, inputs), int_field(inputs, "N"), int_field(inputs, "M")));
}

json cmd_extend_state(const Ring& ring, const json& inputs) {
  const json& gens = field(inputs, "gens");
  const json& values = field(inputs, "values");
  if (!gens.is_array() || !values.is_array() || gens.size() != values.size()) {
    throw ParseError("extend-state: gens and values must be arrays of equal length");
  }
  StateSpec spec;
  for (const auto& g : gens) spec.generators.push_back(io::monoid_operand(ring, g));
  for (const auto& v : values) spec.values.push_back(io::rational_from_json(v));
  ExtensionOptions options;
  options.bound = int_field(inputs, "bound");
  options.M = int_field(inputs, "M");
  options.shifted = field(inputs, "shifted").get<bool>();
  const MonoidElement a = io::monoid_operand(ring, field(inputs, "a"));
  return state_range_to_json(state_extension(spec, a, unit_operand(ring, inputs), options));
}

json cmd_rk_square(const Ring& ring, const json& inputs) {
  const Element a = ring.parse_element(string_field(inputs, "a"));
  const RkSquareResult r = rk_for_square(ring, a, int_field(inputs, "bound"), static_cast<int>(int_field(inputs, "depth")));
  return {{"lambda", io::rational_to_json(r.lambda)},
          {"interval", {io::rational_to_json(Rational(0)), io::rational_to_json(r.lambda)}},
          {"upper", {{"a", Exponents{1, 1}}, {"b", Exponents{0, 2}}, {"certificate", io::certificate_to_json(ring, r.upper)}}},
          {"lower",
           {{"bound", r.bound},
            {"grid_points", r.grid_points},
            {"refuted", r.refuted},
            {"prime", ring.format(r.prime)},
            {"rank_a", r.lower_rank_a},
            {"rank_a2", r.lower_rank_a2}}}};
}

json cmd_dim(const Ring& ring, const json& inputs) {
  const Presentation p = io::presentation_from_json(ring, field(inputs, "p"));
  json out{{"signature", io::signature_to_json(signature(ring, p))}};
  if (ring.is_regular()) {
    json dims = json::array();
    for (auto mult : signature(ring, p).multiplicities) dims.push_back(mult);
    out["component_dims"] = dims;
    return out;
  }
  if (auto k = optional_int(inputs, "k")) {
    out["k"] = *k;
    out["dim"] = io::rational_to_json(dim(ring, static_cast<int>(*k), p));
    return out;
  }
  json dims = json::array();
  for (int k = 1; k <= ring.nilpotency(); ++k) dims.push_back(io::rational_to_json(dim(ring, k, p)));
  out["dim"] = dims;
  return out;
}

json cmd_equiv(const Ring& ring, const json& inputs) {
  const Presentation p = io::presentation_from_json(ring, field(inputs, "p"));
  const Presentation q = io::presentation_from_json(ring, field(inputs, "q"));
  return {{"equivalent", presentations_equivalent(ring, p, q)},
          {"signature_p", io::signature_to_json(signature(ring, p))},
          {"signature_q", io::signature_to_json(signature(ring, q))}};
}

json cmd_phi(const Ring& ring, const json& inputs) {
  const Presentation p = io::presentation_from_json(ring, field(inputs, "p"));
  return {{"phi", io::group_to_json(phi(ring, p))}, {"module_class", io::group_to_json(module_class(ring, p))}};
}

json cmd_psi(const Ring& ring, const json& inputs) {
  const Matrix a = io::matrix_from_json(ring, field(inputs, "a"));
  return {{"psi", io::group_to_json(psi(ring, a))},
          {"presentation", io::presentation_to_json(ring, make_presentation(a.cols(), a))}};
}

json cmd_axioms_check(const Ring& ring, const json& inputs) {
  using Functional = std::function<Rational(const Matrix&)>;
  std::vector<std::pair<std::string, Functional>> functionals;
  if (ring.is_local()) {
    for (int k = 1; k <= ring.nilpotency(); ++k) {
      functionals.emplace_back("rk_" + std::to_string(k), [&ring, k](const Matrix& m) { return rk(k, class_of(ring, m)); });
    }
  } else if (ring.is_regular()) {
    for (std::size_t i = 0; i < ring.component_count(); ++i) {
      functionals.emplace_back("component_" + std::to_string(i), [&ring, i](const Matrix& m) {
        return Rational(static_cast<long>(class_of(ring, m).counts[i]));
      });
    }
  } else {
    const Element pi = ring.parse_element(inputs.contains("pi") && !inputs.at("pi").is_null() ? string_field(inputs, "pi") : "0");
    auto rank = std::make_shared<PullbackRank>(ring, pi);
    functionals.emplace_back("pullback_" + ring.format(pi), [rank](const Matrix& m) { return Rational(static_cast<long>((*rank)(m))); });
  }
  const std::int64_t samples = int_field(inputs, "samples");
  if (samples < 1) throw PreconditionError("axioms-check: samples must be positive");
  std::mt19937_64 rng(static_cast<std::uint64_t>(int_field(inputs, "seed")));
  json report = json::array();
  std::int64_t total = 0;
  for (const auto& [name, r] : functionals) {
    std::map<std::string, std::int64_t> violations{{"normalization", 0}, {"product", 0}, {"block_diagonal", 0}, {"block_upper", 0}};
    if (r(identity(ring, 1)) != 1) ++violations["normalization"];
    for (std::int64_t t = 0; t < samples; ++t) {
      const std::size_t p = 1 + rng() % 3, q = 1 + rng() % 3, s = 1 + rng() % 3;
      const Matrix a = random_matrix(ring, p, q, rng), b = random_matrix(ring, q, s, rng);
      const Matrix c = random_matrix(ring, p, s, rng);
      const Rational ra = r(a), rb = r(b);
      if (r(mat_mul(ring, a, b)) > std::min(ra, rb)) ++violations["product"];
      if (r(block_diag(ring, a, b)) != ra + rb) ++violations["block_diagonal"];
      if (r(block_upper(ring, a, c, b)) < ra + rb) ++violations["block_upper"];
    }
    for (const auto& [axiom, count] : violations) total += count;
    report.push_back({{"functional", name}, {"instances", samples}, {"violations", violations}});
  }
  return {{"functionals", report}, {"violations", total}, {"passed", total == 0}};
}

using Handler = std::function<json(const Ring&, const json&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"normalize", cmd_normalize},         {"diagonalize", cmd_diagonalize}, {"class", cmd_class},
      {"rank", cmd_rank},                   {"leq", cmd_leq},                 {"chain", cmd_chain},
      {"state-range", cmd_state_range},     {"extend-state", cmd_extend_state}, {"rk-square", cmd_rk_square},
      {"dim", cmd_dim},                     {"equiv", cmd_equiv},             {"phi", cmd_phi},
      {"psi", cmd_psi},                     {"axioms-check", cmd_axioms_check},
  };
  return table;
}

// ---- verify ----

bool verify_order_certificate(const Ring& ring, const json& inputs, const json& result) {
  if (result.at("leq").is_null()) return result.at("certificate").is_null();
  const Certificate cert = io::certificate_from_json(ring, result.at("certificate"));
  if (cert.positive() != result.at("leq").get<bool>()) return false;
  if (inputs.contains("ea") && !inputs.at("ea").is_null()) {
    return verify_formal_certificate(io::exponents_from_json(inputs.at("ea")), io::exponents_from_json(inputs.at("eb")), cert);
  }
  if (ring.is_regular()) {
    return verify_regular_certificate(ring, regular_operand(ring, field(inputs, "a")), regular_operand(ring, field(inputs, "b")), cert);
  }
  return verify_certificate(io::monoid_operand(ring, field(inputs, "a")), io::monoid_operand(ring, field(inputs, "b")), cert);
}

bool verify_rk_square(const Ring& ring, const json& inputs, const json& result) {
  const Element a = ring.parse_element(string_field(inputs, "a"));
  const json& upper = result.at("upper");
  if (upper.at("a") != json(Exponents{1, 1}) || upper.at("b") != json(Exponents{0, 2})) return false;
  if (!verify_formal_certificate({1, 1}, {0, 2}, io::certificate_from_json(ring, upper.at("certificate")))) return false;
  const json& lower = result.at("lower");
  const std::int64_t bound = lower.at("bound").get<std::int64_t>();
  if (bound != int_field(inputs, "bound")) return false;
  std::size_t points = 0, refuted = 0;
  for (std::int64_t m = 0; m <= bound; ++m) {
    for (std::int64_t k = 0; k <= bound; ++k) {
      for (std::int64_t j = 0; j <= bound; ++j) {
        for (std::int64_t n = 0; n <= bound; ++n) {
          for (std::int64_t l = 0; l <= bound; ++l) {
            ++points;
            if (k <= 2 * (n - m)) continue;
            Exponents ea(static_cast<std::size_t>(m), 0), eb(static_cast<std::size_t>(n), 0);
            ea.insert(ea.end(), static_cast<std::size_t>(k), 1);
            ea.insert(ea.end(), static_cast<std::size_t>(j), 2);
            eb.insert(eb.end(), static_cast<std::size_t>(l), 2);
            const auto cert = minor_refutation(ea, eb);
            if (cert && verify_formal_certificate(ea, eb, *cert)) ++refuted;
          }
        }
      }
    }
  }
  if (points != lower.at("grid_points").get<std::size_t>() || refuted != lower.at("refuted").get<std::size_t>()) return false;
  // The upper chain and the refutations are all that a state with value
  // above 1/2 would contradict; the residue rank kills a, giving 0.
  const Element prime = ring.parse_element(lower.at("prime").get<std::string>());
  if (!ring.ideal_member(a, prime)) return false;
  const PullbackRank residue(ring, prime);
  return residue(Matrix(1, 1, a)) == 0 && lower.at("rank_a") == 0 && lower.at("rank_a2") == 0 &&
         result.at("lambda") == "1/2";
}

bool verify_diagonalize(const Ring& ring, const json& inputs, const json& result) {
  const Matrix a = io::matrix_from_json(ring, field(inputs, "a"));
  const DiagonalForm form{result.at("exponents").get<std::vector<int>>(), result.at("zero_count").get<std::size_t>(),
                          io::matrix_from_json(ring, result.at("left")), io::matrix_from_json(ring, result.at("right"))};
  return verify_factorization(ring, a, form) && result.at("verified") == true;
}

// Witness (n, k, m) records n v <= m a + k v (lower) or m a + k v <= n v
// (upper) with value (n - k) / m.
bool verify_state_witnesses(const Ring& ring, const json& inputs, const json& result) {
  const MonoidElement a = io::monoid_operand(ring, field(inputs, "a"));
  const MonoidElement v = unit_operand(ring, inputs);
  auto check = [&](const json& witness, const json& value, bool lower) {
    const auto w = witness.get<std::vector<std::int64_t>>();
    if (w.size() != 3 || w[2] < 1 || w[0] < 0 || w[1] < 0) return false;
    const MonoidElement lhs = w[0] * v, rhs = w[2] * a + w[1] * v;
    const bool related = lower ? leq(lhs, rhs) : leq(rhs, lhs);
    Rational q(w[0] - w[1], w[2]);
    q.canonicalize();
    return related && io::rational_from_json(value) == q;
  };
  if (!check(result.at("p_witness"), result.at("p_lb"), true)) return false;
  if (result.at("q_ub").is_null()) return result.at("q_witness").empty();
  return check(result.at("q_witness"), result.at("q_ub"), false);
}

json verify_response(const json& response) {
  if (!response.is_object() || !response.contains("command") || !response.at("command").is_string()) {
    throw ParseError("verify: expected a response object with a command");
  }
  const std::string command = response.at("command").get<std::string>();
  const auto it = handlers().find(command);
  if (it == handlers().end()) throw ParseError("verify: cannot verify command \"" + command + "\"");
  const Ring ring = Ring::parse(response.at("ring").get<std::string>());
  const json& inputs = response.at("inputs");
  const json& result = response.at("result");
  std::string method;
  bool valid = false;
  try {
    if (command == "leq" || command == "chain") {
      method = "certificate";
      valid = verify_order_certificate(ring, inputs, result);
    } else if (command == "rk-square") {
      method = "certificate";
      valid = verify_rk_square(ring, inputs, result);
    } else if (command == "diagonalize") {
      method = "factorization";
      valid = verify_diagonalize(ring, inputs, result);
    } else if (command == "state-range") {
      method = "witness";
      valid = verify_state_witnesses(ring, inputs, result) && it->second(ring, inputs) == result;
    } else {
      method = "recompute";
      valid = it->second(ring, inputs) == result;
    }
  } catch (const json::exception&) {
    valid = false;
  } catch (const ParseError&) {
    valid = false;
  }
  return {{"command", command}, {"method", method}, {"valid", valid}};
}

// ---- front end ----

json canonical_operand(const Ring& ring, const json& j) {
  return is_matrix_literal(j) ? io::matrix_to_json(ring, io::matrix_from_json(ring, j)) : j;
}

json canonical_presentation(const Ring& ring, const json& j) {
  return io::presentation_to_json(ring, io::presentation_from_json(ring, j));
}

json parse_flag_json(const std::string& text, const char* flag) {
  try {
    return io::parse_json(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("--") + flag + ": " + e.what());
  }
}

// Matrix and vector flags accept JSON; a bare literal is a 1x1 matrix.
json operand_flag(const std::string& text, const char* flag) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') return parse_flag_json(text, flag);
  return json::array({json::array({text})});
}

std::vector<int> parse_criteria(const std::string& text) {
  std::vector<int> ids;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      ids.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ParseError("--criteria: expected a comma separated list of integers");
    }
  }
  return ids;
}

void emit_error(std::ostream& err, const std::string& kind, const std::string& message) {
  err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

struct Flags {
  std::string ring, x, a, b, unit, ea, eb, pi, p, q, gens, values, criteria;
  std::optional<std::int64_t> k;
  std::int64_t N = 12, M = 12, depth = 8, bound = 12, bounds = 6, samples = 500, seed = 1;
  bool shifted = false, timing = false;
};

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Malcolmson semigroups and Sylvester rank functions over small rings", "malcolmson"};
  app.require_subcommand(1);
  Flags f;
  app.add_flag("--timing", f.timing, "Report elapsed wall time");

  auto with_ring = [&](CLI::App* sub) { sub->add_option("--ring", f.ring, "Ring spec, e.g. Z/8, F2[x]/x^3, Z, F3[x], F2*F3")->required(); };
  std::map<std::string, CLI::App*> subs;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    subs[name] = sub;
    return sub;
  };

  auto* normalize = add("normalize", "Canonical form of a ring element");
  with_ring(normalize);
  normalize->add_option("--x", f.x, "Element literal")->required();

  auto* diag = add("diagonalize", "Diagonal normal form with transforming matrices");
  with_ring(diag);
  diag->add_option("--a", f.a, "Matrix as JSON")->required();

  auto* cls = add("class", "Class of a matrix in the semigroup");
  with_ring(cls);
  cls->add_option("--a", f.a, "Matrix as JSON")->required();

  auto* rank = add("rank", "Rank values of a matrix");
  with_ring(rank);
  rank->add_option("--a", f.a, "Matrix as JSON")->required();
  rank->add_option("--k", f.k, "Single rank index for local rings");
  rank->add_option("--pi", f.pi, "Prime element for the residue rank over Z or F_p[x] (0 for the fraction field)");

  auto* leq_cmd = add("leq", "Decide a <= b with a certificate");
  with_ring(leq_cmd);
  leq_cmd->add_option("--a", f.a, "Matrix or class vector as JSON");
  leq_cmd->add_option("--b", f.b, "Matrix or class vector as JSON");
  leq_cmd->add_option("--ea", f.ea, "Exponent multiset as JSON (Z or F_p[x])");
  leq_cmd->add_option("--eb", f.eb, "Exponent multiset as JSON (Z or F_p[x])");
  leq_cmd->add_option("--depth", f.depth, "Search depth for exponent multisets")->capture_default_str();

  auto* chain = add("chain", "Witness chain of elementary moves");
  with_ring(chain);
  chain->add_option("--a", f.a, "Matrix or class vector as JSON")->required();
  chain->add_option("--b", f.b, "Matrix or class vector as JSON")->required();

  auto* range = add("state-range", "Bounds on the values of states at a");
  with_ring(range);
  range->add_option("--a", f.a, "Matrix or class vector as JSON")->required();
  range->add_option("--unit", f.unit, "Order unit (default: class of the 1x1 identity)");
  range->add_option("--N", f.N, "Bound on n and k")->capture_default_str();
  range->add_option("--M", f.M, "Bound on m")->capture_default_str();

  auto* extend = add("extend-state", "Range of extensions of a partial state to a");
  with_ring(extend);
  extend->add_option("--gens", f.gens, "JSON array of generators (matrices or class vectors)")->required();
  extend->add_option("--values", f.values, "JSON array of rational values")->required();
  extend->add_option("--a", f.a, "Matrix or class vector as JSON")->required();
  extend->add_option("--unit", f.unit, "Order unit (default: class of the 1x1 identity)");
  extend->add_option("--bound", f.bound, "Coefficient bound for span elements")->capture_default_str();
  extend->add_option("--M", f.M, "Bound on m")->capture_default_str();
  extend->add_flag("--shifted", f.shifted, "Also search shifted relations");

  auto* square = add("rk-square", "Supremum of rank values at a over Z or F_p[x]");
  with_ring(square);
  square->add_option("--a", f.a, "Element literal")->required();
  square->add_option("--bounds", f.bounds, "Grid bound")->capture_default_str();
  square->add_option("--depth", f.depth, "Search depth for the upper chain")->capture_default_str();

  auto* dim_cmd = add("dim", "Module dimensions of a presentation");
  with_ring(dim_cmd);
  dim_cmd->add_option("--p", f.p, R"(Presentation {"generators": m, "relations": [[...]]})")->required();
  dim_cmd->add_option("--k", f.k, "Single index for local rings");

  auto* equiv = add("equiv", "Isomorphism of presented modules");
  with_ring(equiv);
  equiv->add_option("--p", f.p, "Presentation as JSON")->required();
  equiv->add_option("--q", f.q, "Presentation as JSON")->required();

  auto* phi_cmd = add("phi", "Matrix-side group element of a presentation");
  with_ring(phi_cmd);
  phi_cmd->add_option("--p", f.p, "Presentation as JSON")->required();

  auto* psi_cmd = add("psi", "Module-side group element of a matrix");
  with_ring(psi_cmd);
  psi_cmd->add_option("--a", f.a, "Matrix as JSON")->required();

  auto* axioms = add("axioms-check", "Random test of the rank function axioms");
  with_ring(axioms);
  axioms->add_option("--samples", f.samples, "Instances per functional")->capture_default_str();
  axioms->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  axioms->add_option("--pi", f.pi, "Prime element for Z or F_p[x] (0 for the fraction field)");

  add("verify", "Re-check a response read from stdin");

  auto* selftest = add("selftest", "Run the acceptance suites");
  selftest->add_option("--criteria", f.criteria, "Comma separated criterion ids (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    emit_error(err, "ParseError", e.what());
    return BadInput;
  }

  const auto start = std::chrono::steady_clock::now();
  std::string command;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) command = name;
  }
  const CLI::App* sub = subs.at(command);
  auto given = [&](const char* flag) {
    const CLI::Option* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  json response;
  int code = Ok;
  try {
    if (command == "verify") {
      const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
      response = verify_response(io::parse_json(text));
      code = response.at("valid").get<bool>() ? Ok : CheckFailed;
    } else if (command == "selftest") {
      json results = json::array();
      bool all = true;
      for (const auto& r : acceptance::run(parse_criteria(f.criteria))) {
        json entry{{"id", r.id}, {"pass", r.pass}, {"title", r.title}, {"detail", r.detail}};
        if (f.timing) entry["seconds"] = r.seconds;
        results.push_back(entry);
        all = all && r.pass;
      }
      response = {{"command", command}, {"criteria", results}, {"passed", all}};
      code = all ? Ok : CheckFailed;
    } else {
      const Ring ring = Ring::parse(f.ring);
      json inputs = json::object();
      if (given("--x")) inputs["x"] = f.x;
      if (given("--a")) {
        inputs["a"] = command == "rk-square" ? json(ring.format(ring.parse_element(f.a)))
                                             : canonical_operand(ring, operand_flag(f.a, "a"));
      }
      if (given("--b")) inputs["b"] = canonical_operand(ring, operand_flag(f.b, "b"));
      if (given("--ea")) inputs["ea"] = parse_flag_json(f.ea, "ea");
      if (given("--eb")) inputs["eb"] = parse_flag_json(f.eb, "eb");
      if (given("--unit")) inputs["unit"] = canonical_operand(ring, operand_flag(f.unit, "unit"));
      if (given("--pi")) inputs["pi"] = f.pi;
      if (given("--p")) inputs["p"] = canonical_presentation(ring, parse_flag_json(f.p, "p"));
      if (given("--q")) inputs["q"] = canonical_presentation(ring, parse_flag_json(f.q, "q"));
      if (given("--gens")) {
        const json gens = parse_flag_json(f.gens, "gens");
        if (!gens.is_array()) throw ParseError("--gens: expected a JSON array");
        inputs["gens"] = json::array();
        for (const auto& g : gens) inputs["gens"].push_back(canonical_operand(ring, g));
      }
      if (given("--values")) inputs["values"] = parse_flag_json(f.values, "values");
      if (f.k) inputs["k"] = *f.k;
      if (command == "leq") {
        if (given("--ea") != given("--eb") || (given("--ea") && (given("--a") || given("--b"))) ||
            (!given("--ea") && !(given("--a") && given("--b")))) {
          throw ParseError("leq: give either --a and --b, or --ea and --eb");
        }
        if (given("--ea")) inputs["depth"] = f.depth;
      }
      if (command == "state-range") {
        inputs["N"] = f.N;
        inputs["M"] = f.M;
      }
      if (command == "extend-state") {
        inputs["bound"] = f.bound;
        inputs["M"] = f.M;
        inputs["shifted"] = f.shifted;
      }
      if (command == "rk-square") {
        inputs["bound"] = f.bounds;
        inputs["depth"] = f.depth;
      }
      if (command == "axioms-check") {
        inputs["samples"] = f.samples;
        inputs["seed"] = f.seed;
      }
      json result = handlers().at(command)(ring, inputs);
      if (command == "axioms-check" && !result.at("passed").get<bool>()) code = CheckFailed;
      response = {{"command", command}, {"ring", ring.to_string()}, {"inputs", inputs}, {"result", result}};
    }
  } catch (const ParseError& e) {
    emit_error(err, "ParseError", e.what());
    return BadInput;
  } catch (const json::exception& e) {
    emit_error(err, "ParseError", e.what());
    return BadInput;
  } catch (const PreconditionError& e) {
    emit_error(err, "PreconditionError", e.what());
    return Precondition;
  } catch (const BoundOverflow& e) {
    emit_error(err, "BoundOverflow", e.what());
    return Overflow;
  }
  if (f.timing) {
    response["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  out << response.dump(2) << '\n';
  return code;
}

}  // namespace malcolmson::cli
