#include "idensity/sampling.hpp"

#include <algorithm>
#include <set>

namespace idensity {

std::int64_t Sampler::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational Sampler::grid_point(std::int64_t lo, std::int64_t hi, std::int64_t den) {
  return make_rational(between(lo * den, hi * den), den);
}

IntervalSet Sampler::interval_set() {
  std::vector<Interval> raw;
  auto count = below(5);
  for (std::uint64_t i = 0; i < count; ++i) {
    Rational a = grid_point(-4, 4, 4);
    if (chance(20)) {
      raw.push_back(Interval::point(a));
      continue;
    }
    Rational b = grid_point(-4, 4, 4);
    if (a == b) b += Rational(1, 4);
    if (b < a) std::swap(a, b);
    raw.push_back({a, b, chance(50), chance(50)});
  }
  return IntervalSet::from_intervals(raw, chance(20));
}

Rational Sampler::point_near(const IntervalSet& e) {
  auto pts = e.breakpoints();
  if (!pts.empty() && chance(60)) return pts[below(pts.size())];
  return grid_point(-5, 5, 8);
}

IndexSet Sampler::periodic_set() {
  static constexpr Natural kModuli[] = {1, 2, 3, 4, 5, 6, 8, 12};
  Natural q = kModuli[below(std::size(kModuli))];
  IndexSet out;
  for (Natural r = 1; r <= q; ++r) {
    if (chance(45)) out = out | IndexSet::progression(r, q);
  }
  if (chance(40)) {
    std::vector<Natural> extra;
    for (auto i = below(4); i > 0; --i) extra.push_back(1 + below(60));
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    out = chance(50) ? out | IndexSet::finite(extra) : out - IndexSet::finite(extra);
  }
  if (chance(15)) out = IndexSet::progression(1 + below(20), q) - out;
  return out;
}

SparseAtom Sampler::sparse_atom() {
  switch (below(4)) {
    case 0: return SparseAtom::squares();
    case 1: return SparseAtom::cubes();
    default: return SparseAtom::powers_of(2 + below(6));
  }
}

IndexSet Sampler::index_set() {
  IndexSet base = periodic_set();
  if (!chance(60)) return base;
  IndexSet atom = IndexSet::sparse(sparse_atom());
  switch (below(3)) {
    case 0: return base | atom;
    case 1: return base - atom;
    default: return base | (atom & periodic_set());
  }
}

ValueExpr Sampler::law(const IndexSet* piece) {
  Rational c = grid_point(-3, 3, 2);
  Rational d = grid_point(-3, 3, 4);
  Rational a(static_cast<long>(between(1, 4)));
  Rational b(static_cast<long>(between(0, 4)));
  ValueExpr e = ValueExpr::constant(d);
  switch (below(6)) {
    case 0: e = ValueExpr::constant(d); break;
    case 1: e = ValueExpr::rational1(c, a, b); break;
    case 2: e = ValueExpr::shifted_rational1(d, c, a, b); break;
    case 3: e = ValueExpr::power_decay(c, static_cast<unsigned>(between(1, 3)), d); break;
    case 4: e = ValueExpr::shifted_rational1(d, c, Rational(1), Rational(0)); break;
    default: e = chance(50) ? ValueExpr::linear(Rational(static_cast<long>(between(-2, 2))), d) : ValueExpr::constant(d);
  }
  if (piece && chance(50)) e = e.over_rank_in(*piece);
  return e;
}

ValueExpr Sampler::summable_law() {
  Rational c = grid_point(-3, 3, 2);
  Rational d = grid_point(-3, 3, 4);
  switch (below(4)) {
    case 0: return ValueExpr::constant(d);
    case 1: return ValueExpr::shifted_rational1(d, c, Rational(1), Rational(1));
    case 2: return ValueExpr::shifted_rational1(d, c, Rational(2), Rational(2));
    default: return ValueExpr::power_decay(c, 2, d);
  }
}

PiecewiseSequence Sampler::sequence_with(const SparseAtom& atom, bool summable) {
  static constexpr Natural kModuli[] = {1, 2, 3, 4, 6};
  Natural q = kModuli[below(std::size(kModuli))];
  auto groups = static_cast<std::size_t>(1 + below(std::min<Natural>(q, 3)));
  std::vector<IndexSet> sets(groups);
  std::vector<bool> used(groups, false);
  for (Natural r = 1; r <= q; ++r) {
    std::size_t g = r <= groups ? r - 1 : below(groups);
    sets[g] = sets[g] | IndexSet::progression(r, q);
    used[g] = true;
  }
  std::vector<IndexSet> parts;
  for (std::size_t g = 0; g < groups; ++g) {
    if (used[g]) parts.push_back(sets[g]);
  }
  if (chance(50)) {
    IndexSet sparse = IndexSet::sparse(atom);
    std::size_t g = below(parts.size());
    IndexSet host = parts[g];
    parts[g] = host - sparse;
    parts.push_back(host & sparse);
  }
  if (chance(30)) {
    std::vector<Natural> extra;
    for (auto i = 1 + below(3); i > 0; --i) extra.push_back(1 + below(40));
    std::sort(extra.begin(), extra.end());
    extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
    IndexSet fin = IndexSet::finite(extra);
    for (auto& p : parts) p = p - fin;
    parts.push_back(fin);
  }
  std::vector<Piece> pieces;
  for (const auto& set : parts) {
    IndexSet piece = normalize(set);
    if (is_empty(normal_form(piece))) continue;
    pieces.push_back({piece, summable ? summable_law() : law(&piece)});
  }
  return PiecewiseSequence(std::move(pieces));
}

PiecewiseSequence Sampler::sequence(bool summable) { return sequence_with(sparse_atom(), summable); }

std::pair<PiecewiseSequence, PiecewiseSequence> Sampler::sequence_pair() {
  SparseAtom atom = sparse_atom();
  PiecewiseSequence a = sequence_with(atom, true);
  PiecewiseSequence b = sequence_with(atom, true);
  return {std::move(a), std::move(b)};
}

}  // namespace idensity
