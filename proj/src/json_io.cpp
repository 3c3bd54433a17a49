#include "ellip/json_io.hpp"

#include "ellip/errors.hpp"

namespace ellip::io {

const json& need(const json& j, const std::string& key) {
  if (!j.is_object()) throw SchemaError("expected an object holding '" + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError("missing field '" + key + "'");
  return *it;
}

namespace {

const json& need_array(const json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  return j;
}

std::string text_of(const json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw SchemaError(std::string(what) + " must be a string such as \"p/q\"");
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from(const json& j) {
  try {
    return Scalar::parse(text_of(j, "scalar"));
  } catch (const ParseError& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const mpq_class& x) { return Scalar(x).str(); }

mpq_class rational_from(const json& j) {
  Scalar s = scalar_from(j);
  if (!s.is_real()) throw SchemaError("expected a rational, got " + s.str());
  return s.re();
}

json to_json(const ExactCurve& c) { return {{"g2", to_json(c.g2())}, {"g3", to_json(c.g3())}, {"q", c.q()}}; }

ExactCurve curve_from(const json& j) {
  return make_exact_curve(scalar_from(need(j, "g2")), scalar_from(need(j, "g3")), int_of(need(j, "q"), "q"));
}

json to_json(const Complex& z, int digits) { return json::array({to_decimal(z.re, digits), to_decimal(z.im, digits)}); }

Complex complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw SchemaError("complex numbers are [\"re\", \"im\"]");
  try {
    return Complex(parse_real(text_of(j[0], "real part")), parse_real(text_of(j[1], "imaginary part")));
  } catch (const ParseError& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const NumericLattice& L) {
  int d = L.digits();
  return {{"omega1", to_json(L.omega1(), d)}, {"omega2", to_json(L.omega2(), d)}, {"precision", d}};
}

NumericLattice lattice_from(const json& j, int default_digits) {
  int digits = j.contains("precision") ? int_of(j["precision"], "precision") : default_digits;
  // parse the periods at the lattice's working precision
  PrecisionGuard g(static_cast<unsigned>(digits + 20));
  return make_numeric_lattice(complex_from(need(j, "omega1")), complex_from(need(j, "omega2")), digits);
}

json to_json(const TorsionPoint& p) { return {{"r1", to_json(p.r1())}, {"r2", to_json(p.r2())}}; }

TorsionPoint torsion_from(const json& j) {
  return TorsionPoint(rational_from(need(j, "r1")), rational_from(need(j, "r2")));
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Poly poly_from(const json& j) {
  std::vector<Scalar> c;
  for (const auto& x : need_array(j, "polynomial")) c.push_back(scalar_from(x));
  return Poly(c);
}

json to_json(const RatFun& r) { return {{"num", to_json(r.num())}, {"den", to_json(r.den())}}; }

RatFun ratfun_from(const json& j) {
  if (j.is_array()) return RatFun(poly_from(j));
  Poly den = j.contains("den") ? poly_from(j["den"]) : Poly(1);
  if (den.is_zero()) throw SchemaError("zero denominator");
  return RatFun(poly_from(need(j, "num")), den);
}

json to_json(const EllFun& f) { return {{"a", to_json(f.a())}, {"b", to_json(f.b())}}; }

EllFun ellfun_from(const json& j, const ExactCurve& c) {
  if (!j.is_object()) throw SchemaError("EllFun must be an object with fields a and b");
  RatFun a = j.contains("a") ? ratfun_from(j["a"]) : RatFun();
  RatFun b = j.contains("b") ? ratfun_from(j["b"]) : RatFun();
  return EllFun(c, a, b);
}

json to_json(const SElem& f) {
  json terms = json::array();
  for (const auto& [k, v] : f.terms()) terms.push_back({{"i", k.first}, {"j", k.second}, {"c", to_json(v)}});
  return {{"s0", f.s0()}, {"terms", terms}};
}

SElem selem_from(const json& j, const ExactCurve& c) {
  if (j.is_string() || j.is_number_integer()) return SElem::constant(c, scalar_from(j));
  if (j.is_object() && !j.contains("terms") && (j.contains("a") || j.contains("b")))
    return SElem::from(ellfun_from(j, c));
  bool s0 = j.contains("s0") ? j["s0"].get<bool>() : true;
  SElem out(c, s0);
  for (const auto& t : need_array(need(j, "terms"), "terms"))
    out.add_term(int_of(need(t, "i"), "i"), int_of(need(t, "j"), "j"), ellfun_from(need(t, "c"), c));
  return out;
}

json to_json(const SFraction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

SFraction sfraction_from(const json& j, const ExactCurve& c) {
  if (j.is_string() || j.is_number_integer()) return SFraction::constant(c, scalar_from(j));
  if (j.is_object() && j.contains("num")) {
    SElem den = j.contains("den") ? selem_from(j["den"], c) : SElem::constant(c, 1, false);
    if (den.is_zero()) throw SchemaError("zero denominator");
    return SFraction(selem_from(j["num"], c).in_s(), den.in_s());
  }
  return SFraction(selem_from(j, c).in_s());
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from(const json& j, const ExactCurve& c) {
  std::vector<std::vector<SFraction>> rows;
  for (const auto& r : need_array(j, "matrix")) {
    std::vector<SFraction> row;
    for (const auto& x : need_array(r, "matrix row")) row.push_back(sfraction_from(x, c));
    rows.push_back(row);
  }
  try {
    return Mat::from_rows(c, rows);
  } catch (const DimensionMismatch& e) {
    throw SchemaError(e.what());
  }
}

json entries_json(const PeriodicDivisor& D) {
  json e = json::array();
  for (const auto& [p, v] : D.entries()) e.push_back({{"p", to_json(p)}, {"v", to_json(v)}});
  return e;
}

json to_json(const PeriodicDivisor& D) { return {{"entries", entries_json(D)}, {"integral", D.integral()}}; }

PeriodicDivisor divisor_from(const json& j) {
  const json& e = j.is_array() ? j : need(j, "entries");
  PeriodicDivisor D;
  for (const auto& x : need_array(e, "entries")) D.add(torsion_from(need(x, "p")), rational_from(need(x, "v")));
  return D;
}

json to_json(const QMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.n; ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.n; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

QMat qmat_from(const json& j) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : need_array(j, "matrix")) {
    std::vector<std::string> row;
    for (const auto& x : need_array(r, "matrix row")) row.push_back(text_of(x, "matrix entry"));
    rows.push_back(row);
  }
  try {
    return parse_qmat(rows);
  } catch (const DimensionMismatch& e) {
    throw SchemaError(e.what());
  } catch (const ParseError& e) {
    throw SchemaError(e.what());
  }
}

json to_json(const RealizationMatrix& Z, int digits) {
  json rows = json::array();
  for (size_t i = 0; i < Z.n; ++i) {
    json row = json::array();
    for (size_t k = 0; k < Z.n; ++k) {
      json cell = json::array();
      for (const auto& [m, c] : Z.entries[i * Z.n + k])
        cell.push_back({{"i", m.first}, {"j", m.second}, {"c", to_json(c, digits)}});
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return {{"n", Z.n}, {"entries", rows}};
}

RealizationMatrix realization_from(const json& j) {
  RealizationMatrix Z;
  const json& rows = need_array(need(j, "entries"), "entries");
  Z.n = rows.size();
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != Z.n) throw SchemaError("realization entries must be square");
    for (const auto& cell : r) {
      std::map<std::pair<int, int>, Complex> e;
      for (const auto& t : need_array(cell, "entry"))
        e[{int_of(need(t, "i"), "i"), int_of(need(t, "j"), "j")}] = complex_from(need(t, "c"));
      Z.entries.push_back(std::move(e));
    }
  }
  return Z;
}

json to_json(const Rank1Verdict& v) {
  if (!v.algebraic) return {{"kind", "Transcendental"}, {"certificate", v.certificate}};
  return {{"kind", "Algebraic"}, {"witness", entries_json(v.witness)}, {"sublattice_principal", v.sublattice_principal}};
}

json to_json(const PhiSolveResult& r) {
  if (r.solved) return {{"kind", "Solved"}, {"D", to_json(r.D)}};
  json out = {{"kind", "NoSolution"}, {"certificate", r.certificate}, {"residual", to_json(r.residual)}};
  if (r.witness_point) out["witness_point"] = to_json(*r.witness_point);
  return out;
}

json to_json(const IntegrationResult& r) {
  if (const auto* p = std::get_if<PrimitiveResult>(&r))
    return {{"kind", "Primitive"}, {"u", to_json(p->u)}, {"r", to_json(p->r)}, {"s", to_json(p->s)},
            {"provenance", "exact"}};
  const auto& o = std::get<ResidueObstruction>(r);
  return {{"kind", "ResidueObstruction"}, {"even_rem", to_json(o.even_rem)}, {"odd_rem", to_json(o.odd_rem)},
          {"origin_residue", to_json(o.origin_residue)}, {"provenance", "exact"}};
}

json to_json(const AppxASolution& s) {
  json shape = s.r ? json{{"kind", "Monomial"}, {"d", to_json(s.d)}, {"r", *s.r}} : json{{"kind", "Zero"}};
  return {{"u", to_json(s.u)}, {"p_tilde", to_json(s.p_tilde)}, {"shape", shape}};
}

json to_json(const MembershipResult& m) {
  json w = json::array();
  for (const auto& e : m.witness) w.push_back(to_json(e));
  return {{"in_s", m.in_s}, {"order", m.order}, {"witness", w}};
}

}  // namespace ellip::io
