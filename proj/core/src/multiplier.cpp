#include "qojump/multiplier.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "qojump/error.hpp"

namespace qojump {

namespace {

// Exponent tuples are small, so the ideal kernels run on machine integers.
using Exps = std::vector<long>;

long to_long(const Integer& x) {
  if (!x.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "exponent " + to_string(x) + " is too large");
  return x.get_si();
}

Exps to_exps(const IntVector& v) {
  Exps out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = to_long(v[k]);
  return out;
}

IntVector to_intvector(const Exps& v) {
  IntVector out;
  out.reserve(v.size());
  for (long x : v) out.emplace_back(x);
  return out;
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

long total(const Exps& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

std::vector<Exps> minimize(std::vector<Exps> tuples) {
  std::sort(tuples.begin(), tuples.end(), [](const Exps& a, const Exps& b) {
    const long sa = total(a);
    const long sb = total(b);
    return sa != sb ? sa < sb : a < b;
  });
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  std::vector<Exps> kept;
  for (auto& t : tuples) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (divides(k, t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(t));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<IntVector> to_intvectors(const std::vector<Exps>& v) {
  std::vector<IntVector> out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(to_intvector(e));
  return out;
}

}  // namespace

std::vector<IntVector> minimal_elements(std::vector<IntVector> tuples) {
  std::vector<Exps> small;
  small.reserve(tuples.size());
  for (const auto& t : tuples) small.push_back(to_exps(t));
  return to_intvectors(minimize(std::move(small)));
}

MonomialIdeal::MonomialIdeal(std::size_t dim, std::vector<IntVector> generators) : dim_(dim) {
  for (const auto& g : generators) {
    if (g.size() != dim) throw Error(ErrorKind::DimensionMismatch, "ideal generator " + to_string(g));
    for (const auto& x : g) {
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in " + to_string(g));
    }
  }
  generators_ = minimal_elements(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) { return MonomialIdeal(dim, {IntVector(dim, Integer(0))}); }

bool MonomialIdeal::contains(const IntVector& exponent) const {
  for (const auto& g : generators_) {
    if (leq(g, exponent)) return true;
  }
  return false;
}

bool MonomialIdeal::is_unit() const { return contains(IntVector(dim_, Integer(0))); }

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (other.dim_ != dim_) throw Error(ErrorKind::DimensionMismatch, "ideals of different dimension");
  std::vector<Exps> a;
  std::vector<Exps> b;
  for (const auto& g : generators_) a.push_back(to_exps(g));
  for (const auto& g : other.generators_) b.push_back(to_exps(g));
  std::vector<Exps> pairs;
  for (const auto& x : a) {
    // a generator of the other ideal dividing x makes x itself a generator
    bool inside = false;
    for (const auto& y : b) {
      if (divides(y, x)) {
        inside = true;
        break;
      }
    }
    if (inside) {
      pairs.push_back(x);
      continue;
    }
    for (const auto& y : b) {
      Exps m(dim_);
      for (std::size_t k = 0; k < dim_; ++k) m[k] = std::max(x[k], y[k]);
      pairs.push_back(std::move(m));
    }
  }
  MonomialIdeal out(dim_);
  out.generators_ = to_intvectors(minimize(std::move(pairs)));
  return out;
}

MonomialIdeal MonomialIdeal::shifted(const IntVector& exponent) const {
  if (exponent.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "shift " + to_string(exponent));
  MonomialIdeal out(dim_);
  for (const auto& g : generators_) {
    IntVector m(dim_);
    for (std::size_t k = 0; k < dim_; ++k) m[k] = g[k] + exponent[k];
    out.generators_.push_back(std::move(m));
  }
  std::sort(out.generators_.begin(), out.generators_.end());
  return out;
}

namespace {

Rational ratio(const DivisorRecord& r, const IntVector& monomial) {
  return Rational(dot(r.trop, monomial) + r.log_discrepancy, r.trop.back());
}

}  // namespace

Rational xi_of(const CharacteristicData& cd, const DivisorTable& table, const IntVector& monomial) {
  if (monomial.size() != cd.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "monomial " + to_string(monomial));
  for (const auto& x : monomial) {
    if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in " + to_string(monomial));
  }
  bool found = false;
  Rational best;
  for (const auto* r : table.exceptional()) {
    if (r->trop.back() <= 0) {
      throw Error(ErrorKind::InternalInconsistency, r->id + " has no positive value on f");
    }
    const Rational v = ratio(*r, monomial);
    if (!found || v < best) best = v;
    found = true;
  }
  if (!found) throw Error(ErrorKind::NoExceptionalDivisor, "the divisor table has no exceptional record");
  return best;
}

namespace {

// Minimal tuples supported on the positive coordinates with <w, I> >= target.
void threshold_search(const Exps& w, const std::vector<std::size_t>& support, std::size_t pos, long target,
                      long partial, Exps& current, std::vector<Exps>& out) {
  if (partial >= target) {
    for (std::size_t j : support) {
      if (current[j] > 0 && partial - w[j] >= target) return;
    }
    out.push_back(current);
    return;
  }
  if (pos == support.size()) return;
  const std::size_t j = support[pos];
  long sum = partial;
  for (long k = 0;; ++k) {
    current[j] = k;
    threshold_search(w, support, pos + 1, target, sum, current, out);
    if (sum >= target) break;
    sum += w[j];
  }
  current[j] = 0;
}

}  // namespace

MonomialIdeal threshold_ideal(const DivisorRecord& divisor, const Rational& xi) {
  const std::size_t dim = divisor.trop.size();
  const Rational bound = xi * Rational(divisor.trop.back()) - Rational(divisor.log_discrepancy);
  if (bound.sign() < 0) return MonomialIdeal::unit(dim);
  const long target = to_long(bound.floor() + 1);
  const Exps w = to_exps(divisor.trop);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dim; ++j) {
    if (w[j] < 0) throw Error(ErrorKind::InternalInconsistency, divisor.id + " has a negative value");
    if (w[j] > 0) support.push_back(j);
  }
  std::vector<Exps> gens;
  Exps current(dim, 0);
  threshold_search(w, support, 0, target, 0, current, gens);
  return MonomialIdeal(dim, to_intvectors(gens));
}

MonomialIdeal multiplier_ideal(const CharacteristicData& cd, const DivisorTable& table, const Rational& xi,
                               unsigned threads) {
  if (xi.sign() < 0 || xi >= Rational(1)) {
    throw Error(ErrorKind::InvalidArgument, "xi = " + xi.to_string() + " is outside [0, 1)");
  }
  const auto divisors = table.exceptional();
  if (divisors.empty()) throw Error(ErrorKind::NoExceptionalDivisor, "the divisor table has no exceptional record");
  std::vector<MonomialIdeal> parts(divisors.size());
  if (threads > 1 && divisors.size() > 1) {
    std::vector<std::future<void>> tasks;
    const std::size_t workers = std::min<std::size_t>(threads, divisors.size());
    for (std::size_t w = 0; w < workers; ++w) {
      tasks.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < divisors.size(); k += workers) parts[k] = threshold_ideal(*divisors[k], xi);
      }));
    }
    for (auto& t : tasks) t.get();
  } else {
    for (std::size_t k = 0; k < divisors.size(); ++k) parts[k] = threshold_ideal(*divisors[k], xi);
  }
  // smallest ideals first keeps the intermediate antichains short
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return parts[a].generators().size() < parts[b].generators().size();
  });
  MonomialIdeal result = parts[order[0]];
  for (std::size_t k = 1; k < order.size(); ++k) result = result.intersect(parts[order[k]]);

  // The unit ideal is exempt from the upper bound: when every exceptional
  // ratio exceeds 1 the germ is log canonical and J is trivial below 1.
  const bool unit = result.is_unit();
  for (const auto& g : result.generators()) {
    const Rational v = xi_of(cd, table, g);
    if (!(xi < v && (unit || v <= xi + Rational(1)))) {
      throw Error(ErrorKind::InternalInconsistency, "generator " + to_string(g) + " has xi_M = " + v.to_string() +
                                                        " outside (" + xi.to_string() + ", " +
                                                        (xi + Rational(1)).to_string() + "]");
    }
  }
  return result;
}

MonomialIdeal multiplier_ideal_periodic(const CharacteristicData& cd, const DivisorTable& table,
                                        const Rational& xi, unsigned threads) {
  if (xi.sign() < 0) throw Error(ErrorKind::InvalidArgument, "xi = " + xi.to_string() + " is negative");
  const Integer whole = xi.floor();
  const MonomialIdeal base = multiplier_ideal(cd, table, xi - Rational(whole), threads);
  if (whole == 0) return base;
  IntVector shift(cd.ambient_dim(), Integer(0));
  shift.back() = whole;
  return base.shifted(shift);
}

std::vector<IntVector> band_set(const CharacteristicData& cd, const DivisorTable& table, const Rational& xi,
                                const IntVector& bound) {
  if (bound.size() != cd.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "box " + to_string(bound));
  std::vector<IntVector> out;
  IntVector cur(bound.size(), Integer(0));
  while (true) {
    const Rational v = xi_of(cd, table, cur);
    if (xi < v && v <= xi + Rational(1)) out.push_back(cur);
    std::size_t p = 0;
    while (p < cur.size() && ++cur[p] > bound[p]) cur[p++] = 0;
    if (p == cur.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Weighted {
  Exps w;
  long lambda;
  long wf;
};

// sign of (<w, G> + lambda) / wf - c
int compare_ratio(const Weighted& d, const Exps& g, const Rational& c) {
  __int128 value = d.lambda;
  for (std::size_t k = 0; k < g.size(); ++k) value += static_cast<__int128>(d.w[k]) * g[k];
  const __int128 lhs = value * to_long(c.denominator());
  const __int128 rhs = static_cast<__int128>(to_long(c.numerator())) * d.wf;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

// Minimal sets of coordinates meeting every given support.
void hitting_sets(const std::vector<std::vector<std::size_t>>& supports, std::vector<char>& chosen,
                  std::vector<std::vector<char>>& out) {
  for (const auto& s : supports) {
    bool hit = false;
    for (std::size_t j : s) hit = hit || chosen[j];
    if (hit) continue;
    for (std::size_t j : s) {
      chosen[j] = 1;
      hitting_sets(supports, chosen, out);
      chosen[j] = 0;
    }
    return;
  }
  out.push_back(chosen);
}

}  // namespace

JumpingReport jumping_numbers(const CharacteristicData& cd, const DivisorTable& table, unsigned threads) {
  (void)threads;
  const auto divisors = table.exceptional();
  if (divisors.empty()) throw Error(ErrorKind::NoExceptionalDivisor, "the divisor table has no exceptional record");
  const std::size_t dim = cd.ambient_dim();
  std::vector<Weighted> weights;
  std::vector<Rational> candidates;
  for (const auto* r : divisors) {
    weights.push_back({to_exps(r->trop), to_long(r->log_discrepancy), to_long(r->trop.back())});
    const Integer wf = r->trop.back();
    const Integer room = wf - r->log_discrepancy;
    if (room < 0) continue;
    // sums of nonnegative combinations of the positive weights up to `room`
    const std::size_t size = room.get_ui() + 1;
    std::vector<char> reach(size, 0);
    reach[0] = 1;
    for (const auto& w : r->trop) {
      if (w <= 0 || w > room) continue;
      const std::size_t step = w.get_ui();
      for (std::size_t s = step; s < size; ++s) {
        if (reach[s - step]) reach[s] = 1;
      }
    }
    for (std::size_t s = 0; s < size; ++s) {
      if (!reach[s]) continue;
      const Rational c(Integer(static_cast<unsigned long>(s)) + r->log_discrepancy, wf);
      if (c < Rational(1)) candidates.push_back(c);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // J(c) is tracked from one candidate to the next. A generator lost at c has
  // ratio exactly c on some divisors, each short by one unit, so its minimal
  // multiples that survive add a minimal hitting set of those supports.
  JumpingReport report;
  std::vector<Exps> current{Exps(dim, 0)};
  for (const auto& c : candidates) {
    ++report.candidates_examined;
    std::vector<Exps> kept;
    std::vector<Exps> lost;
    std::vector<Exps> grown;
    for (const auto& g : current) {
      std::vector<std::vector<std::size_t>> deficient;
      for (const auto& w : weights) {
        const int cmp = compare_ratio(w, g, c);
        if (cmp < 0) {
          throw Error(ErrorKind::InternalInconsistency, "generator " + to_string(to_intvector(g)) +
                                                            " skipped a candidate below " + c.to_string());
        }
        if (cmp == 0) {
          std::vector<std::size_t> support;
          for (std::size_t j = 0; j < dim; ++j) {
            if (w.w[j] > 0) support.push_back(j);
          }
          deficient.push_back(std::move(support));
        }
      }
      if (deficient.empty()) {
        kept.push_back(g);
        continue;
      }
      lost.push_back(g);
      std::vector<char> chosen(dim, 0);
      std::vector<std::vector<char>> sets;
      hitting_sets(deficient, chosen, sets);
      for (const auto& set : sets) {
        Exps next = g;
        for (std::size_t j = 0; j < dim; ++j) next[j] += set[j];
        grown.push_back(std::move(next));
      }
    }
    if (lost.empty()) continue;
    std::sort(lost.begin(), lost.end());
    report.jumps.push_back({c, to_intvectors(lost)});
    kept.insert(kept.end(), grown.begin(), grown.end());
    current = minimize(std::move(kept));
  }
  // J(D) = f * O: what is lost at 1 are the generators not divisible by f
  std::vector<Exps> lost_at_one;
  for (const auto& g : current) {
    if (g.back() == 0) lost_at_one.push_back(g);
  }
  report.jumps.push_back({Rational(1), to_intvectors(lost_at_one)});
  report.lct = report.jumps.front().xi;
  return report;
}

namespace {

using VertexSet = std::vector<QVector>;  // points of Q^{d+1}

QVector lift(const QVector& v, const Rational& last) {
  QVector out = v;
  out.push_back(last);
  return out;
}

// Vertices of the Newton polyhedron of x_j (1-based) at the given level.
VertexSet newton_vertices(const CharacteristicData& cd, std::size_t level, std::size_t j) {
  const std::size_t d = cd.d;
  if (j <= d) {
    QVector e(d + 1);
    e[j - 1] = 1;
    return {e};
  }
  const std::size_t s = j - d - 1;
  if (s < level) return {lift(cd.gamma(s + 1), 0)};
  const QVector lead = Rational(cd.n_product(level, s)) * cd.gamma(level);
  if (s == level) return {lift(lead, 1)};
  const Integer upper = cd.n_product(level + 1, s);
  return {lift(lead + Rational(upper) * (cd.alpha(level + 1) - cd.alpha(level)), 0), lift(lead, Rational(upper))};
}

Rational support(const VertexSet& vs, const QVector& u) {
  Rational best = dot(vs.front(), u);
  for (const auto& v : vs) best = std::min(best, dot(v, u));
  return best;
}

}  // namespace

bool newton_membership_check(const CharacteristicData& cd, const IntVector& monomial, const Rational& xi) {
  if (monomial.size() != cd.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "monomial " + to_string(monomial));
  if (xi.sign() < 0) throw Error(ErrorKind::InvalidArgument, "xi = " + xi.to_string() + " is negative");
  const std::size_t d = cd.d;
  for (std::size_t level = 0; level <= cd.g; ++level) {
    std::vector<VertexSet> polys;
    for (std::size_t j = 1; j <= cd.ambient_dim(); ++j) polys.push_back(newton_vertices(cd, level, j));
    const QVector lambda = log_discrepancy_vector(cd, level);

    std::vector<QVector> rays;
    for (std::size_t k = 0; k <= d; ++k) {
      QVector e(d + 1);
      e[k] = 1;
      rays.push_back(e);
    }
    if (level < cd.g) {
      const QVector step = cd.alpha(level + 1) - cd.alpha(level);
      for (std::size_t i = 0; i < d; ++i) {
        QVector v(d);
        v[i] = Rational(cd.axis_mult[i][level + 1]);
        rays.push_back(lift(v, dot(v, step)));
      }
    }
    for (const auto& u : rays) {
      Rational phi_m = 0;
      for (std::size_t j = 0; j < monomial.size(); ++j) {
        if (monomial[j] != 0) phi_m += Rational(monomial[j]) * support(polys[j], u);
      }
      const Rational phi_f = support(polys.back(), u);
      if (!(phi_m + dot(u, lambda) > xi * phi_f)) return false;
    }
  }
  return true;
}

bool membership_of_polynomial(const CharacteristicData& cd, const DivisorTable& table,
                              const GeneralizedExpansion& h, const Rational& xi) {
  if (xi.sign() < 0 || xi >= Rational(1)) {
    throw Error(ErrorKind::InvalidArgument, "xi = " + xi.to_string() + " is outside [0, 1)");
  }
  if (h.terms.empty()) throw Error(ErrorKind::EmptyExpansion, "expansion has no terms");
  const auto divisors = table.exceptional();
  if (divisors.empty()) throw Error(ErrorKind::NoExceptionalDivisor, "the divisor table has no exceptional record");
  for (const auto* r : divisors) {
    const QuasiMonomialPoint point{r->level, to_qvector(IntVector(r->lattice_vector.begin(),
                                                                  r->lattice_vector.begin() +
                                                                      static_cast<std::ptrdiff_t>(cd.d))),
                                   Rational(0)};
    const Rational value = value_on_expansion(cd, point, h);
    const Rational on_f = value_on_semiroot(cd, point, cd.ambient_dim());
    if (!(value + Rational(r->log_discrepancy) > xi * on_f)) return false;
  }
  return true;
}

}  // namespace qojump
