#include "hermlat/represent.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "parallel.hpp"

namespace hermlat {

bool verify_witness(const Field& field, const AlgMatrix& target, const AlgMatrix& gram,
                    const AlgMatrix& rows) {
  if (rows.cols() != gram.rows() || rows.rows() != target.rows() || !target.square() || !gram.square())
    throw Error(ErrorCode::ShapeMismatch, "witness rows do not fit the target and lattice Gram matrices");
  AlgMatrix product = multiply(field, multiply(field, rows, gram), conjugate_transpose(field, rows));
  return product == target;
}

RepresentationSearch::RepresentationSearch(HermLattice lattice) : lattice_(std::move(lattice)) {}

const std::vector<RepresentationSearch::Candidate>& RepresentationSearch::candidates(const Int& t) {
  auto it = cache_.find(t);
  if (it != cache_.end()) return it->second;
  const Field& f = lattice_.field();
  const AlgMatrix& g = lattice_.gram();
  const std::size_t n = lattice_.generators();
  std::vector<Candidate> out;
  for (auto& x : vectors_of_norm(lattice_, t)) {
    CoordVector cov(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!x[j].is_zero()) cov[i] += f.mul(g(i, j), f.conj(x[j]));
    out.push_back({std::move(x), std::move(cov)});
  }
  return cache_.emplace(t, std::move(out)).first->second;
}

std::size_t RepresentationSearch::count(const Int& t) { return candidates(t).size(); }

std::optional<Witness> RepresentationSearch::find(const HermLattice& target) {
  if (target.field() != lattice_.field())
    throw Error(ErrorCode::FieldMismatch, "target and lattice live over different fields");
  return find(target.gram());
}

std::optional<Witness> RepresentationSearch::find(const AlgMatrix& target) {
  const Field& f = lattice_.field();
  const std::size_t k = target.rows();
  const std::size_t n = lattice_.generators();
  if (!is_hermitian(f, target)) throw Error(ErrorCode::NotHermitian, "target Gram is not Hermitian");

  std::vector<const std::vector<Candidate>*> pools(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (target(i, i).a < 0) return std::nullopt;
    pools[i] = &candidates(target(i, i).a);
    if (pools[i]->empty()) return std::nullopt;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pools[x]->size() < pools[y]->size(); });

  // Scaling every row by a unit preserves X M X^*, so the first row only
  // needs one representative per unit orbit.
  const std::vector<AlgInt> units = f.units();
  auto orbit_least = [&](const CoordVector& x) {
    IntVector e = expand(x);
    for (const auto& u : units) {
      CoordVector y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.mul(u, x[i]);
      if (expand(y) < e) return false;
    }
    return true;
  };

  auto inner = [&](const Candidate& x, const Candidate& y) {
    AlgInt s;
    for (std::size_t i = 0; i < n; ++i)
      if (!x.coords[i].is_zero()) s += f.mul(x.coords[i], y.covector[i]);
    return s;
  };

  std::vector<const Candidate*> chosen(k, nullptr);
  std::function<bool(std::size_t)> descend = [&](std::size_t depth) -> bool {
    if (depth == k) return true;
    const std::size_t p = order[depth];
    for (const Candidate& c : *pools[p]) {
      if (depth == 0 && !orbit_least(c.coords)) continue;
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        const std::size_t q = order[e];
        ok = inner(c, *chosen[q]) == target(p, q);
      }
      if (!ok) continue;
      chosen[p] = &c;
      if (descend(depth + 1)) return true;
    }
    chosen[p] = nullptr;
    return false;
  };
  if (!descend(0)) return std::nullopt;

  Witness w{AlgMatrix(k, n)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) w.rows(i, j) = chosen[i]->coords[j];
  return w;
}

std::optional<Witness> represents(const HermLattice& target, const HermLattice& lattice) {
  RepresentationSearch search(lattice);
  return search.find(target);
}

std::vector<Int> isometry_signature(const HermLattice& lattice) {
  constexpr int kThetaBound = 4;
  std::vector<Int> sig{Int(lattice.rank())};
  auto theta = vectors_up_to_norm(lattice, kThetaBound);
  for (int t = 1; t <= kThetaBound; ++t) {
    auto it = theta.find(t);
    sig.push_back(it == theta.end() ? 0 : it->second.size());
  }
  return sig;
}

bool is_isometric(const HermLattice& x, const HermLattice& y) {
  if (x.field() != y.field()) throw Error(ErrorCode::FieldMismatch, "isometry across fields");
  if (x.rank() != y.rank()) return false;
  if (isometry_signature(x) != isometry_signature(y)) return false;
  return represents(x, y).has_value() && represents(y, x).has_value();
}

std::vector<std::size_t> isometry_representatives(const std::vector<HermLattice>& lattices,
                                                  unsigned jobs) {
  std::vector<std::vector<Int>> sigs(lattices.size());
  detail::parallel_for(lattices.size(), jobs,
                       [&](std::size_t i) { sigs[i] = isometry_signature(lattices[i]); });
  std::map<std::vector<Int>, std::vector<std::size_t>> buckets;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    auto& reps = buckets[sigs[i]];
    bool seen = false;
    for (std::size_t r : reps)
      if (represents(lattices[i], lattices[r]) && represents(lattices[r], lattices[i])) {
        seen = true;
        break;
      }
    if (seen) continue;
    reps.push_back(i);
    keep.push_back(i);
  }
  return keep;
}

}  // namespace hermlat
