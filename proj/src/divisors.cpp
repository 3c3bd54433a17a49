#include "ellip/divisors.hpp"

#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "ellip/errors.hpp"

namespace ellip {

PeriodicDivisor PeriodicDivisor::point(const TorsionPoint& p, const mpq_class& v) {
  PeriodicDivisor d;
  d.add(p, v);
  return d;
}

mpq_class PeriodicDivisor::value(const TorsionPoint& p) const {
  auto it = e_.find(p);
  return it == e_.end() ? mpq_class(0) : it->second;
}

void PeriodicDivisor::add(const TorsionPoint& p, const mpq_class& v) {
  if (sgn(v) == 0) return;
  auto [it, fresh] = e_.try_emplace(p, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) e_.erase(it);
  }
}

bool PeriodicDivisor::integral() const {
  for (const auto& [p, v] : e_)
    if (v.get_den() != 1) return false;
  return true;
}

std::vector<TorsionPoint> PeriodicDivisor::support() const {
  std::vector<TorsionPoint> s;
  for (const auto& [p, v] : e_) s.push_back(p);
  return s;
}

long PeriodicDivisor::torsion_level() const {
  long l = 1;
  for (const auto& [p, v] : e_) l = std::lcm(l, p.order());
  return l;
}

PeriodicDivisor PeriodicDivisor::operator-() const {
  PeriodicDivisor d = *this;
  for (auto& [p, v] : d.e_) v = -v;
  return d;
}

PeriodicDivisor& PeriodicDivisor::operator+=(const PeriodicDivisor& o) {
  for (const auto& [p, v] : o.e_) add(p, v);
  return *this;
}

PeriodicDivisor& PeriodicDivisor::operator-=(const PeriodicDivisor& o) {
  for (const auto& [p, v] : o.e_) add(p, -v);
  return *this;
}

PeriodicDivisor& PeriodicDivisor::operator*=(const mpq_class& c) {
  if (sgn(c) == 0) {
    e_.clear();
    return *this;
  }
  for (auto& [p, v] : e_) v *= c;
  return *this;
}

std::string PeriodicDivisor::str() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, v] : e_) {
    if (!first) os << " + ";
    first = false;
    os << rational_str(v) << "[" << p.str() << "]";
  }
  return os.str();
}

mpq_class degree(const PeriodicDivisor& D) {
  mpq_class s = 0;
  for (const auto& [p, v] : D.entries()) s += v;
  return s;
}

TorsionPoint abel_jacobi(const PeriodicDivisor& D, long m) {
  if (m < 1) throw DomainViolation("lattice scale must be >= 1");
  if (m > 1) {
    if (!D.integral()) throw NonIntegralValues("Abel-Jacobi on a sublattice needs integer values");
    if (sgn(degree(D)) != 0) throw NonzeroDegree("Abel-Jacobi on a sublattice needs degree 0");
  }
  mpq_class s1 = 0, s2 = 0;
  for (const auto& [p, v] : D.entries()) {
    s1 += v * p.r1();
    s2 += v * p.r2();
  }
  return TorsionPoint(s1 * m, s2 * m);
}

std::vector<TorsionPoint> preimages(const TorsionPoint& xi, long q) {
  if (q < 1) throw BadMultiplier("q must be >= 1");
  std::vector<TorsionPoint> out;
  mpq_class qq(q);
  for (long a = 0; a < q; ++a)
    for (long b = 0; b < q; ++b) out.emplace_back((xi.r1() + a) / qq, (xi.r2() + b) / qq);
  return out;
}

PeriodicDivisor phi_pullback(const PeriodicDivisor& D, long q) {
  PeriodicDivisor out;
  for (const auto& [p, v] : D.entries())
    for (const auto& e : preimages(p, q)) out.add(e, v);
  return out;
}

namespace {

/// Checks D(qξ) - D(ξ) = E(ξ) on supp D ∪ supp E and one layer of preimages.
bool verify(const PeriodicDivisor& D, const PeriodicDivisor& E, long q, PhiSolveResult& res) {
  std::set<TorsionPoint> pts;
  for (const auto* X : {&D, &E})
    for (const auto& [p, v] : X->entries()) {
      pts.insert(p);
      for (const auto& e : preimages(p, q)) pts.insert(e);
    }
  for (const auto& xi : pts) {
    mpq_class r = D.value(xi * q) - D.value(xi) - E.value(xi);
    if (sgn(r) != 0) {
      res.certificate = "equation D(q xi) - D(xi) = E(xi) fails";
      res.witness_point = xi;
      res.residual = r;
      return false;
    }
  }
  return true;
}

}  // namespace

PhiSolveResult solve_phi_minus_one(const PeriodicDivisor& E, long q) {
  if (q < 2) throw BadMultiplier("q must be >= 2");
  PhiSolveResult res;
  if (E.is_zero()) {
    res.solved = true;
    return res;
  }
  // forward-orbit closure of the support
  std::set<TorsionPoint> closure;
  std::deque<TorsionPoint> work;
  for (const auto& p : E.support()) work.push_back(p);
  while (!work.empty()) {
    TorsionPoint p = work.front();
    work.pop_front();
    if (!closure.insert(p).second) continue;
    work.push_back(p * q);
  }
  // each cycle must carry E-sum zero
  std::set<TorsionPoint> seen_cycle;
  for (const auto& start : closure) {
    TorsionPoint p = start;
    for (size_t k = 0; k <= closure.size(); ++k) p = p * q;
    if (seen_cycle.count(p)) continue;
    mpq_class sum = 0;
    TorsionPoint c = p;
    do {
      seen_cycle.insert(c);
      sum += E.value(c);
      c = c * q;
    } while (!(c == p));
    if (sgn(sum) != 0) {
      res.certificate = "E sums to " + rational_str(sum) + " on the cycle through " + p.str();
      res.witness_point = p;
      res.residual = sum;
      return res;
    }
  }
  // D(ζ) is the sum of E along a backward branch that leaves the closure
  PeriodicDivisor D;
  for (const auto& zeta : closure) {
    std::map<TorsionPoint, mpq_class> dist{{zeta, 0}};
    std::deque<TorsionPoint> bfs{zeta};
    std::optional<mpq_class> value;
    while (!bfs.empty() && !value) {
      TorsionPoint p = bfs.front();
      bfs.pop_front();
      for (const auto& e : preimages(p, q)) {
        if (!closure.count(e)) {
          value = dist[p];
          break;
        }
        if (dist.count(e)) continue;
        dist[e] = dist[p] + E.value(e);
        bfs.push_back(e);
      }
    }
    if (!value) {
      res.certificate = "no backward branch from " + zeta.str() + " leaves the orbit closure";
      res.witness_point = zeta;
      return res;
    }
    D.add(zeta, *value);
  }
  if (!verify(D, E, q, res)) return res;
  res.solved = true;
  res.D = D;
  return res;
}

namespace {

/// Sparse row over integer-indexed unknowns with exact rational entries.
struct SparseRow {
  std::map<int, mpq_class> c;
  mpq_class rhs;
};

}  // namespace

PhiSolveResult brute_force_solve(const PeriodicDivisor& E, long q, long N) {
  if (q < 2) throw BadMultiplier("q must be >= 2");
  if (N < 1 || N * q > 256) throw SupportTooLarge("torsion level too large to enumerate");
  for (const auto& [p, v] : E.entries())
    if (N % p.order() != 0)
      throw SupportTooLarge("support point " + p.str() + " is not " + std::to_string(N) + "-torsion");
  auto index = [&](const TorsionPoint& p) -> int {
    mpq_class a = p.r1() * N, b = p.r2() * N;
    if (a.get_den() != 1 || b.get_den() != 1) return -1;
    return static_cast<int>(a.get_num().get_si() * N + b.get_num().get_si());
  };
  PhiSolveResult res;
  std::map<int, SparseRow> pivots;
  std::vector<int> order;
  long M = N * q;
  for (long a = 0; a < M; ++a)
    for (long b = 0; b < M; ++b) {
      TorsionPoint xi(mpq_class(a, M), mpq_class(b, M));
      SparseRow row;
      row.c[index(xi * q)] += 1;
      if (int i = index(xi); i >= 0) row.c[i] -= 1;
      row.rhs = E.value(xi);
      for (auto it = row.c.begin(); it != row.c.end();) it = sgn(it->second) == 0 ? row.c.erase(it) : std::next(it);
      // reduce against existing pivots until none remain
      for (;;) {
        auto hit = row.c.end();
        for (auto it = row.c.begin(); it != row.c.end(); ++it)
          if (pivots.count(it->first)) {
            hit = it;
            break;
          }
        if (hit == row.c.end()) break;
        mpq_class f = hit->second;
        const SparseRow& p = pivots.at(hit->first);
        for (const auto& [k, v] : p.c) {
          mpq_class& x = row.c[k];
          x -= f * v;
          if (sgn(x) == 0) row.c.erase(k);
        }
        row.rhs -= f * p.rhs;
      }
      if (row.c.empty()) {
        if (sgn(row.rhs) != 0) {
          res.certificate = "inconsistent equation at " + xi.str();
          res.witness_point = xi;
          res.residual = row.rhs;
          return res;
        }
        continue;
      }
      int col = row.c.begin()->first;
      mpq_class lead = row.c.begin()->second;
      for (auto& [k, v] : row.c) v /= lead;
      row.rhs /= lead;
      pivots[col] = std::move(row);
      order.push_back(col);
    }
  std::map<int, mpq_class> x;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SparseRow& r = pivots.at(*it);
    mpq_class v = r.rhs;
    for (const auto& [k, c] : r.c)
      if (k != *it) {
        auto f = x.find(k);
        if (f != x.end()) v -= c * f->second;
      }
    x[*it] = v;
  }
  PeriodicDivisor D;
  for (const auto& [k, v] : x) D.add(TorsionPoint(mpq_class(k / N, N), mpq_class(k % N, N)), v);
  res.solved = true;
  res.D = D;
  return res;
}

bool is_principal(const PeriodicDivisor& D) {
  if (!D.integral()) throw NonIntegralValues("principality needs integer values");
  return sgn(degree(D)) == 0 && abel_jacobi(D, 1).is_zero();
}

PeriodicDivisor catalog_divisor(CatalogKind kind, const TorsionPoint& P) {
  PeriodicDivisor d;
  TorsionPoint zero;
  if (kind == CatalogKind::XMinusConst) {
    if (P.is_zero()) throw BadPoint("X - const needs a nonzero point");
    d.add(P, 1);
    d.add(-P, 1);
    d.add(zero, -2);
    return d;
  }
  mpq_class h(1, 2);
  d.add(TorsionPoint(h, 0), 1);
  d.add(TorsionPoint(0, h), 1);
  d.add(TorsionPoint(h, h), 1);
  d.add(zero, -3);
  return d;
}

}  // namespace ellip
