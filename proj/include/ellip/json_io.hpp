#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "ellip/appxa.hpp"
#include "ellip/divisors.hpp"
#include "ellip/integration.hpp"
#include "ellip/linsys.hpp"
#include "ellip/monodromy.hpp"
#include "ellip/numerics.hpp"
#include "ellip/sring.hpp"

namespace ellip::io {

using json = nlohmann::json;

/// Malformed or incomplete input document. The CLI maps it to exit code 2.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Member `key` of `j`, or SchemaError naming the path.
const json& need(const json& j, const std::string& key);

json to_json(const Scalar& s);
Scalar scalar_from(const json& j);
json to_json(const mpq_class& x);
mpq_class rational_from(const json& j);

json to_json(const ExactCurve& c);
ExactCurve curve_from(const json& j);

/// ["re", "im"] with the given number of significant digits.
json to_json(const Complex& z, int digits);
Complex complex_from(const json& j);

json to_json(const NumericLattice& L);
/// `precision` in the document wins over `default_digits`.
NumericLattice lattice_from(const json& j, int default_digits);

json to_json(const TorsionPoint& p);
TorsionPoint torsion_from(const json& j);

json to_json(const Poly& p);
Poly poly_from(const json& j);
json to_json(const RatFun& r);
RatFun ratfun_from(const json& j);
json to_json(const EllFun& f);
EllFun ellfun_from(const json& j, const ExactCurve& c);
json to_json(const SElem& f);
/// Also accepts a bare EllFun or scalar string for elements of K.
SElem selem_from(const json& j, const ExactCurve& c);
json to_json(const SFraction& f);
/// Accepts {"num":..,"den":..}, a bare SElem document or a scalar string.
SFraction sfraction_from(const json& j, const ExactCurve& c);
json to_json(const Mat& m);
Mat mat_from(const json& j, const ExactCurve& c);

json to_json(const PeriodicDivisor& D);
/// The "entries" array alone.
json entries_json(const PeriodicDivisor& D);
/// Accepts the full object or a bare entries array.
PeriodicDivisor divisor_from(const json& j);

json to_json(const QMat& m);
QMat qmat_from(const json& j);
json to_json(const RealizationMatrix& Z, int digits);
RealizationMatrix realization_from(const json& j);

json to_json(const Rank1Verdict& v);
json to_json(const PhiSolveResult& r);
json to_json(const IntegrationResult& r);
json to_json(const AppxASolution& s);
json to_json(const MembershipResult& m);

}  // namespace ellip::io
