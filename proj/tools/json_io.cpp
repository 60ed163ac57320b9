#include "json_io.hpp"

#include "malcolmson/errors.hpp"

namespace malcolmson::io {

namespace {

std::int64_t integer_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("expected integer field \"") + key + "\"");
  }
  return j.at(key).get<std::int64_t>();
}

std::vector<std::int64_t> integer_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + ": expected an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

MoveKind move_kind(const std::string& name) {
  for (MoveKind k : {MoveKind::PowerSwap, MoveKind::ExponentIncrease, MoveKind::Drop, MoveKind::Cancel}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown move \"" + name + "\"");
}

CertificateKind certificate_kind(const std::string& name) {
  for (CertificateKind k : {CertificateKind::Positive, CertificateKind::NegativeRank, CertificateKind::NegativeMinor,
                            CertificateKind::Factorization, CertificateKind::NegativeComponent}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown certificate kind \"" + name + "\"");
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Matrix matrix_from_json(const Ring& ring, const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix: expected a nonempty array of rows");
  std::vector<std::vector<Element>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) throw ParseError("matrix: every row must be a nonempty array");
    rows.emplace_back();
    for (const auto& entry : row) {
      if (entry.is_string()) {
        rows.back().push_back(ring.parse_element(entry.get<std::string>()));
      } else if (entry.is_number_integer()) {
        rows.back().push_back(ring.parse_element(std::to_string(entry.get<std::int64_t>())));
      } else {
        throw ParseError("matrix: entries must be strings or integers");
      }
    }
    if (rows.back().size() != rows.front().size()) throw ParseError("matrix: ragged rows");
  }
  return Matrix::from_rows(rows);
}

json matrix_to_json(const Ring& ring, const Matrix& a) {
  json out = json::array();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(ring.format(a(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json rational_to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  throw ParseError("rational: expected \"num/den\" or an integer");
}

MonoidElement monoid_from_json(const Ring& ring, const json& j) {
  MonoidElement out{monoid_kind(ring), integer_array(j, "class")};
  if (out.counts.size() != monoid_size(ring)) {
    throw ParseError("class: expected " + std::to_string(monoid_size(ring)) + " coordinates");
  }
  for (auto x : out.counts) {
    if (x < 0) throw ParseError("class: coordinates must be nonnegative");
  }
  return out;
}

json monoid_to_json(const MonoidElement& a) { return a.counts; }

MonoidElement monoid_operand(const Ring& ring, const json& j) {
  if (j.is_array() && !j.empty() && j.front().is_array()) return class_of(ring, matrix_from_json(ring, j));
  return monoid_from_json(ring, j);
}

Exponents exponents_from_json(const json& j) {
  Exponents out = integer_array(j, "exponents");
  for (auto x : out) {
    if (x < 0) throw ParseError("exponents must be nonnegative");
  }
  return out;
}

json certificate_to_json(const Ring& ring, const Certificate& cert) {
  json out{{"kind", to_string(cert.kind)}};
  switch (cert.kind) {
    case CertificateKind::Positive: {
      json chain = json::array();
      for (const Move& mv : cert.chain) {
        if (mv.kind == MoveKind::PowerSwap) {
          chain.push_back({{"move", to_string(mv.kind)}, {"j1", mv.i}, {"j2", mv.j}});
        } else {
          chain.push_back({{"move", to_string(mv.kind)}, {"i", mv.i}});
        }
      }
      out["chain"] = chain;
      break;
    }
    case CertificateKind::NegativeRank:
    case CertificateKind::NegativeMinor:
      out["k"] = cert.k;
      out["lhs"] = rational_to_json(cert.lhs);
      out["rhs"] = cert.rhs_infinite ? json("inf") : rational_to_json(cert.rhs);
      break;
    case CertificateKind::NegativeComponent:
      out["component"] = cert.k;
      out["lhs"] = rational_to_json(cert.lhs);
      out["rhs"] = rational_to_json(cert.rhs);
      break;
    case CertificateKind::Factorization:
      out["left"] = matrix_to_json(ring, *cert.left);
      out["right"] = matrix_to_json(ring, *cert.right);
      break;
  }
  return out;
}

Certificate certificate_from_json(const Ring& ring, const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) throw ParseError("certificate: missing kind");
  Certificate cert;
  cert.kind = certificate_kind(j.at("kind").get<std::string>());
  switch (cert.kind) {
    case CertificateKind::Positive:
      if (!j.contains("chain") || !j.at("chain").is_array()) throw ParseError("certificate: missing chain");
      for (const auto& mv : j.at("chain")) {
        if (!mv.is_object() || !mv.contains("move") || !mv.at("move").is_string()) throw ParseError("certificate: bad move");
        const MoveKind kind = move_kind(mv.at("move").get<std::string>());
        if (kind == MoveKind::PowerSwap) {
          cert.chain.push_back({kind, integer_field(mv, "j1"), integer_field(mv, "j2")});
        } else {
          cert.chain.push_back({kind, integer_field(mv, "i")});
        }
      }
      break;
    case CertificateKind::NegativeRank:
    case CertificateKind::NegativeMinor:
      cert.k = integer_field(j, "k");
      cert.lhs = rational_from_json(j.at("lhs"));
      if (j.at("rhs") == "inf") {
        cert.rhs_infinite = true;
      } else {
        cert.rhs = rational_from_json(j.at("rhs"));
      }
      break;
    case CertificateKind::NegativeComponent:
      cert.k = integer_field(j, "component");
      cert.lhs = rational_from_json(j.at("lhs"));
      cert.rhs = rational_from_json(j.at("rhs"));
      break;
    case CertificateKind::Factorization:
      if (!j.contains("left") || !j.contains("right")) throw ParseError("certificate: missing factors");
      cert.left = matrix_from_json(ring, j.at("left"));
      cert.right = matrix_from_json(ring, j.at("right"));
      break;
  }
  return cert;
}

json signature_to_json(const ModuleSignature& s) {
  if (s.kind == MonoidKind::Regular) return {{"multiplicities", s.multiplicities}};
  return {{"torsion", s.torsion}, {"free_rank", s.free_rank}};
}

Presentation presentation_from_json(const Ring& ring, const json& j) {
  if (!j.is_object() || !j.contains("relations")) throw ParseError("presentation: expected {\"generators\", \"relations\"}");
  const Matrix relations = matrix_from_json(ring, j.at("relations"));
  const std::int64_t m = j.contains("generators") ? integer_field(j, "generators") : static_cast<std::int64_t>(relations.cols());
  if (m < 1) throw ParseError("presentation: generators must be positive");
  return make_presentation(static_cast<std::size_t>(m), relations);
}

json presentation_to_json(const Ring& ring, const Presentation& p) {
  return {{"generators", p.generators}, {"relations", matrix_to_json(ring, p.relations)}};
}

json group_to_json(const GroupElement& g) { return g.diff; }

}  // namespace malcolmson::io
