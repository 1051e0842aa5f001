#include "qojump/lattice.hpp"

#include <algorithm>
#include <utility>

#include "qojump/error.hpp"

namespace qojump {

namespace {

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// row_a -= q * row_b
void sub_multiple(IntVector& a, const IntVector& b, const Integer& q) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= q * b[k];
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const std::vector<IntVector>& rows) {
  HermiteForm out;
  if (rows.empty()) return out;
  const std::size_t dim = rows.front().size();
  std::vector<IntVector> work;
  for (const auto& r : rows) {
    if (r.size() != dim) {
      throw Error(ErrorKind::DimensionMismatch, "HNF rows of differing dimension");
    }
    if (!is_zero(r)) work.push_back(r);
  }

  std::size_t top = 0;  // rows [0, top) are finished
  for (std::size_t col = 0; col < dim && top < work.size(); ++col) {
    // Euclid on column `col` across rows [top, end): repeatedly move the row
    // with the smallest nonzero |entry| up and reduce the others by it.
    while (true) {
      std::size_t best = work.size();
      for (std::size_t r = top; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        if (best == work.size() || abs(work[r][col]) < abs(work[best][col])) best = r;
      }
      if (best == work.size()) break;  // column is zero below `top`
      std::swap(work[top], work[best]);
      bool reduced_all = true;
      for (std::size_t r = top + 1; r < work.size(); ++r) {
        if (work[r][col] == 0) continue;
        const Integer q = floor_div(work[r][col], work[top][col]);
        sub_multiple(work[r], work[top], q);
        if (work[r][col] != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (work[top][col] == 0) continue;
    if (work[top][col] < 0) {
      for (auto& x : work[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      const Integer q = floor_div(work[r][col], work[top][col]);
      if (q != 0) sub_multiple(work[r], work[top], q);
    }
    out.pivot_columns.push_back(col);
    ++top;
    // drop rows that became zero
    work.erase(std::remove_if(work.begin() + static_cast<std::ptrdiff_t>(top), work.end(), is_zero),
               work.end());
  }
  work.resize(top);
  out.rows = std::move(work);
  out.rank = top;
  return out;
}

bool lattice_contains(const HermiteForm& hnf, const IntVector& v) {
  IntVector rest = v;
  for (std::size_t r = 0; r < hnf.rank; ++r) {
    const std::size_t col = hnf.pivot_columns[r];
    if (rest.size() != hnf.rows[r].size()) {
      throw Error(ErrorKind::DimensionMismatch, "lattice membership dimension mismatch");
    }
    const Integer& pivot = hnf.rows[r][col];
    if (!mpz_divisible_p(rest[col].get_mpz_t(), pivot.get_mpz_t())) return false;
    const Integer q = rest[col] / pivot;
    if (q != 0) sub_multiple(rest, hnf.rows[r], q);
  }
  return is_zero(rest);
}

Integer lattice_index(const std::vector<IntVector>& sup, const std::vector<IntVector>& sub) {
  if (sup.empty() || sub.empty()) {
    throw Error(ErrorKind::InvalidArgument, "lattice_index needs nonempty generator sets");
  }
  const std::size_t dim = sup.front().size();
  if (sub.front().size() != dim) {
    throw Error(ErrorKind::DimensionMismatch, "lattices of different dimension");
  }
  const HermiteForm hs = hermite_normal_form(sup);
  const HermiteForm hb = hermite_normal_form(sub);
  if (hs.rank != dim || hb.rank != dim) {
    throw Error(ErrorKind::InvalidArgument, "lattice_index requires full-rank lattices");
  }
  for (const auto& row : hb.rows) {
    if (!lattice_contains(hs, row)) {
      throw Error(ErrorKind::NotInLattice, "sub-lattice is not contained in the super-lattice");
    }
  }
  Integer det_sup = 1;
  Integer det_sub = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    det_sup *= hs.rows[i][i];
    det_sub *= hb.rows[i][i];
  }
  return det_sub / det_sup;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Primitive primitivize(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw Error(ErrorKind::InvalidArgument, "cannot primitivize the zero vector");
  IntVector p(v);
  for (auto& x : p) x /= g;
  return {std::move(p), g};
}

}  // namespace qojump
