#include "idensity/index_set.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "idensity/error.hpp"

namespace idensity {

__extension__ typedef unsigned __int128 Wide;

// ---------------------------------------------------------------------------
// Integer helpers

Natural isqrt(Natural n) {
  auto r = static_cast<Natural>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Natural icbrt(Natural n) {
  auto r = static_cast<Natural>(std::cbrt(static_cast<long double>(n)));
  auto cube = [](Natural x) { return static_cast<Wide>(x) * x * x; };
  while (r > 0 && cube(r) > n) --r;
  while (cube(r + 1) <= n) ++r;
  return r;
}

namespace {

Natural checked_lcm(Natural a, Natural b) {
  Natural g = std::gcd(a, b);
  Natural q = b / g;
  if (a > kMaxModulus / q) {
    throw Error(ErrorCode::NormalizationOverflow,
                "period of the progressions exceeds " + std::to_string(kMaxModulus));
  }
  return a * q;
}

}  // namespace

// ---------------------------------------------------------------------------
// SparseAtom

SparseAtom SparseAtom::powers_of(Natural base) {
  if (base < 2) throw Error(ErrorCode::Parse, "POW base must be at least 2");
  return {SparseKind::Powers, base};
}

bool SparseAtom::contains(Natural n) const {
  if (n == 0) return false;
  switch (kind) {
    case SparseKind::Squares: {
      Natural r = isqrt(n);
      return r * r == n;
    }
    case SparseKind::Cubes: {
      Natural r = icbrt(n);
      return r * r * r == n;
    }
    case SparseKind::Powers: {
      if (n < base) return false;
      while (n % base == 0) n /= base;
      return n == 1;
    }
  }
  return false;
}

Natural SparseAtom::rank(Natural n) const {
  switch (kind) {
    case SparseKind::Squares: return isqrt(n);
    case SparseKind::Cubes: return icbrt(n);
    case SparseKind::Powers: {
      Natural k = 0;
      while (n >= base) {
        n /= base;
        ++k;
      }
      return k;
    }
  }
  return 0;
}

std::vector<Natural> SparseAtom::members_upto(Natural limit) const {
  std::vector<Natural> out;
  switch (kind) {
    case SparseKind::Squares:
      for (Natural m = 1, top = isqrt(limit); m <= top; ++m) out.push_back(m * m);
      break;
    case SparseKind::Cubes:
      for (Natural m = 1, top = icbrt(limit); m <= top; ++m) out.push_back(m * m * m);
      break;
    case SparseKind::Powers:
      for (Wide v = base; v <= limit; v *= base) out.push_back(static_cast<Natural>(v));
      break;
  }
  return out;
}

std::string SparseAtom::to_string() const {
  switch (kind) {
    case SparseKind::Squares: return "SQUARES";
    case SparseKind::Cubes: return "CUBES";
    case SparseKind::Powers: return "POW(" + std::to_string(base) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// IndexSet

namespace {

std::shared_ptr<const IndexSetNode> make_node(IndexSetNode node) {
  return std::make_shared<const IndexSetNode>(std::move(node));
}

}  // namespace

IndexSet::IndexSet() : node_(make_node({FiniteAtom{}})) {}

IndexSet IndexSet::naturals() { return progression(1, 1); }

IndexSet IndexSet::finite(std::vector<Natural> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.front() == 0) {
    throw Error(ErrorCode::Parse, "finite sets are subsets of N = {1, 2, ...}; 0 is not allowed");
  }
  return IndexSet(make_node({FiniteAtom{std::move(elements)}}));
}

IndexSet IndexSet::progression(Natural first, Natural step) {
  if (first == 0) throw Error(ErrorCode::Parse, "AP first element must be >= 1");
  if (step == 0) throw Error(ErrorCode::Parse, "AP step must be >= 1");
  return IndexSet(make_node({ProgressionAtom{first, step}}));
}

IndexSet IndexSet::sparse(SparseAtom atom) {
  if (atom.kind == SparseKind::Powers && atom.base < 2) {
    throw Error(ErrorCode::Parse, "POW base must be at least 2");
  }
  if (atom.kind != SparseKind::Powers) atom.base = 0;
  return IndexSet(make_node({atom}));
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  return IndexSet(make_node({BinaryNode{IndexSet::BinaryOp::Union, a, b}}));
}

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  return IndexSet(make_node({BinaryNode{IndexSet::BinaryOp::Intersection, a, b}}));
}

IndexSet operator-(const IndexSet& a, const IndexSet& b) {
  return IndexSet(make_node({BinaryNode{IndexSet::BinaryOp::Difference, a, b}}));
}

IndexSet IndexSet::operator~() const { return IndexSet(make_node({ComplementNode{*this}})); }

bool IndexSet::contains(Natural n) const {
  if (n == 0) return false;
  const auto& v = node_->value;
  if (const auto* f = std::get_if<FiniteAtom>(&v)) {
    return std::binary_search(f->elements.begin(), f->elements.end(), n);
  }
  if (const auto* p = std::get_if<ProgressionAtom>(&v)) {
    return n >= p->first && (n - p->first) % p->step == 0;
  }
  if (const auto* s = std::get_if<SparseAtom>(&v)) return s->contains(n);
  if (const auto* c = std::get_if<ComplementNode>(&v)) return !c->operand.contains(n);
  const auto& b = std::get<BinaryNode>(v);
  switch (b.op) {
    case BinaryOp::Union: return b.lhs.contains(n) || b.rhs.contains(n);
    case BinaryOp::Intersection: return b.lhs.contains(n) && b.rhs.contains(n);
    case BinaryOp::Difference: return b.lhs.contains(n) && !b.rhs.contains(n);
  }
  return false;
}

bool operator==(const IndexSet& a, const IndexSet& b) {
  if (a.node_ == b.node_) return true;
  const auto& va = a.node_->value;
  const auto& vb = b.node_->value;
  if (va.index() != vb.index()) return false;
  if (const auto* f = std::get_if<FiniteAtom>(&va)) {
    return f->elements == std::get<FiniteAtom>(vb).elements;
  }
  if (const auto* p = std::get_if<ProgressionAtom>(&va)) {
    const auto& q = std::get<ProgressionAtom>(vb);
    return p->first == q.first && p->step == q.step;
  }
  if (const auto* s = std::get_if<SparseAtom>(&va)) return *s == std::get<SparseAtom>(vb);
  if (const auto* c = std::get_if<ComplementNode>(&va)) {
    return c->operand == std::get<ComplementNode>(vb).operand;
  }
  const auto& x = std::get<BinaryNode>(va);
  const auto& y = std::get<BinaryNode>(vb);
  return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
}

namespace {

int precedence(const IndexSet& s) {
  const auto& v = s.node().value;
  if (const auto* b = std::get_if<BinaryNode>(&v)) {
    return b->op == IndexSet::BinaryOp::Union ? 1 : 2;
  }
  if (std::holds_alternative<ComplementNode>(v)) return 3;
  return 4;
}

void render(const IndexSet& s, std::string& out);

void render_child(const IndexSet& s, int min_prec, std::string& out) {
  if (precedence(s) < min_prec) {
    out += '(';
    render(s, out);
    out += ')';
  } else {
    render(s, out);
  }
}

void render(const IndexSet& s, std::string& out) {
  const auto& v = s.node().value;
  if (const auto* f = std::get_if<FiniteAtom>(&v)) {
    out += "FIN{";
    for (std::size_t i = 0; i < f->elements.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(f->elements[i]);
    }
    out += '}';
  } else if (const auto* p = std::get_if<ProgressionAtom>(&v)) {
    if (p->first == 1 && p->step == 1) out += "NAT";
    else out += "AP(" + std::to_string(p->first) + "," + std::to_string(p->step) + ")";
  } else if (const auto* a = std::get_if<SparseAtom>(&v)) {
    out += a->to_string();
  } else if (const auto* c = std::get_if<ComplementNode>(&v)) {
    out += '~';
    render_child(c->operand, 3, out);
  } else {
    const auto& b = std::get<BinaryNode>(v);
    int prec = b.op == IndexSet::BinaryOp::Union ? 1 : 2;
    render_child(b.lhs, prec, out);
    switch (b.op) {
      case IndexSet::BinaryOp::Union: out += " | "; break;
      case IndexSet::BinaryOp::Intersection: out += " & "; break;
      case IndexSet::BinaryOp::Difference: out += " \\ "; break;
    }
    render_child(b.rhs, prec + 1, out);
  }
}

}  // namespace

std::string IndexSet::to_string() const {
  std::string out;
  render(*this, out);
  return out;
}

std::vector<Natural> enumerate_upto(const IndexSet& set, Natural limit) {
  std::vector<Natural> out;
  for (Natural n = 1; n <= limit; ++n) {
    if (set.contains(n)) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal form

std::uint32_t NormalForm::pattern(Natural n) const {
  std::uint32_t p = 0;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i].contains(n)) p |= (1u << i);
  }
  return p;
}

bool NormalForm::rule(Natural n) const { return cell(pattern(n), n % modulus); }

bool NormalForm::contains(Natural n) const {
  if (n == 0) return false;
  if (std::binary_search(additions.begin(), additions.end(), n)) return true;
  if (std::binary_search(removals.begin(), removals.end(), n)) return false;
  return rule(n);
}

namespace {

struct Collected {
  Natural modulus = 1;
  Natural threshold = 0;
  std::vector<SparseAtom> kinds;
};

void collect(const IndexSet& s, Collected& c) {
  const auto& v = s.node().value;
  if (const auto* f = std::get_if<FiniteAtom>(&v)) {
    if (!f->elements.empty()) c.threshold = std::max(c.threshold, f->elements.back());
  } else if (const auto* p = std::get_if<ProgressionAtom>(&v)) {
    c.modulus = checked_lcm(c.modulus, p->step);
    c.threshold = std::max(c.threshold, p->first - 1);
  } else if (const auto* a = std::get_if<SparseAtom>(&v)) {
    if (std::find(c.kinds.begin(), c.kinds.end(), *a) == c.kinds.end()) c.kinds.push_back(*a);
  } else if (const auto* n = std::get_if<ComplementNode>(&v)) {
    collect(n->operand, c);
  } else {
    const auto& b = std::get<BinaryNode>(v);
    collect(b.lhs, c);
    collect(b.rhs, c);
  }
}

// Value of the expression on every n > threshold with the given residue and
// sparse-membership pattern.
bool eval_cell(const IndexSet& s, const std::vector<SparseAtom>& kinds, std::uint32_t pattern,
               Natural residue) {
  const auto& v = s.node().value;
  if (std::holds_alternative<FiniteAtom>(v)) return false;
  if (const auto* p = std::get_if<ProgressionAtom>(&v)) {
    return residue % p->step == p->first % p->step;
  }
  if (const auto* a = std::get_if<SparseAtom>(&v)) {
    auto it = std::find(kinds.begin(), kinds.end(), *a);
    return (pattern >> (it - kinds.begin())) & 1u;
  }
  if (const auto* c = std::get_if<ComplementNode>(&v)) {
    return !eval_cell(c->operand, kinds, pattern, residue);
  }
  const auto& b = std::get<BinaryNode>(v);
  bool l = eval_cell(b.lhs, kinds, pattern, residue);
  switch (b.op) {
    case IndexSet::BinaryOp::Union: return l || eval_cell(b.rhs, kinds, pattern, residue);
    case IndexSet::BinaryOp::Intersection: return l && eval_cell(b.rhs, kinds, pattern, residue);
    case IndexSet::BinaryOp::Difference: return l && !eval_cell(b.rhs, kinds, pattern, residue);
  }
  return false;
}

// Residues r (mod modulus) for which the atom has infinitely many members
// congruent to r.
std::vector<std::uint8_t> live_residues(const SparseAtom& atom, Natural modulus) {
  std::vector<std::uint8_t> live(modulus, 0);
  switch (atom.kind) {
    case SparseKind::Squares:
      for (Natural m = 0; m < modulus; ++m) live[(m * m) % modulus] = 1;
      break;
    case SparseKind::Cubes:
      for (Natural m = 0; m < modulus; ++m) {
        live[static_cast<Natural>((static_cast<Wide>(m) * m * m) % modulus)] = 1;
      }
      break;
    case SparseKind::Powers: {
      // b^k mod q is eventually periodic; only the cycle recurs.
      std::vector<Natural> first_seen(modulus, 0);
      Natural value = atom.base % modulus;
      for (Natural k = 1;; ++k) {
        if (first_seen[value] != 0) {
          Natural cycle_start = first_seen[value];
          Natural v = value;
          for (Natural j = cycle_start; j < k; ++j) {
            live[v] = 1;
            v = static_cast<Natural>((static_cast<Wide>(v) * atom.base) % modulus);
          }
          break;
        }
        first_seen[value] = k;
        value = static_cast<Natural>((static_cast<Wide>(value) * atom.base) % modulus);
      }
      break;
    }
  }
  return live;
}

// Largest member of the atom lying in the non-recurring prefix mod modulus.
Natural transient_bound(const SparseAtom& atom, Natural modulus) {
  if (atom.kind != SparseKind::Powers) return 0;
  std::vector<Natural> first_seen(modulus, 0);
  Natural value = atom.base % modulus;
  Natural k = 1;
  while (first_seen[value] == 0) {
    first_seen[value] = k++;
    value = static_cast<Natural>((static_cast<Wide>(value) * atom.base) % modulus);
  }
  Natural cycle_start = first_seen[value];
  if (cycle_start <= 1) return 0;
  Wide top = 1;
  for (Natural j = 0; j + 1 < cycle_start; ++j) {
    top *= atom.base;
    if (top > kMaxEnumeratedIndex) {
      throw Error(ErrorCode::NormalizationOverflow,
                  "powers of " + std::to_string(atom.base) + " need explicit enumeration beyond " +
                      std::to_string(kMaxEnumeratedIndex));
    }
  }
  return static_cast<Natural>(top);
}

struct Liveness {
  // bits[r] = mask of kinds with infinitely many members = r (mod modulus)
  std::vector<std::uint32_t> bits;

  bool cell_live(std::uint32_t pattern, Natural residue) const {
    return (pattern & ~bits[residue]) == 0;
  }
};

Liveness compute_liveness(const std::vector<SparseAtom>& kinds, Natural modulus) {
  Liveness l;
  l.bits.assign(modulus, 0);
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    auto live = live_residues(kinds[i], modulus);
    for (Natural r = 0; r < modulus; ++r) {
      if (live[r]) l.bits[r] |= (1u << i);
    }
  }
  return l;
}

struct TableState {
  Natural modulus;
  std::vector<SparseAtom> kinds;
  std::vector<std::uint8_t> table;
  Liveness live;

  std::size_t patterns() const { return std::size_t{1} << kinds.size(); }
  std::uint8_t& at(std::uint32_t p, Natural r) { return table[p * modulus + r]; }
  std::uint8_t at(std::uint32_t p, Natural r) const { return table[p * modulus + r]; }

  void clear_dead_cells() {
    for (std::uint32_t p = 0; p < patterns(); ++p) {
      for (Natural r = 0; r < modulus; ++r) {
        if (!live.cell_live(p, r)) at(p, r) = 0;
      }
    }
  }
};

bool try_drop_kind(TableState& s, std::size_t k) {
  std::vector<SparseAtom> kinds = s.kinds;
  kinds.erase(kinds.begin() + static_cast<std::ptrdiff_t>(k));
  std::size_t patterns = std::size_t{1} << kinds.size();
  std::vector<std::uint8_t> table(patterns * s.modulus, 0);
  std::uint32_t low_mask = (1u << k) - 1;
  for (std::uint32_t p = 0; p < patterns; ++p) {
    std::uint32_t without = (p & low_mask) | ((p & ~low_mask) << 1);
    std::uint32_t with = without | (1u << k);
    for (Natural r = 0; r < s.modulus; ++r) {
      bool live0 = s.live.cell_live(without, r);
      bool live1 = s.live.cell_live(with, r);
      if (live0 && live1 && s.at(without, r) != s.at(with, r)) return false;
      table[p * s.modulus + r] = live0 ? s.at(without, r) : 0;
    }
  }
  s.kinds = std::move(kinds);
  s.table = std::move(table);
  s.live = compute_liveness(s.kinds, s.modulus);
  s.clear_dead_cells();
  return true;
}

bool try_reduce_period(TableState& s, Natural period) {
  std::size_t patterns = s.patterns();
  std::vector<std::uint8_t> table(patterns * period, 0);
  std::vector<std::uint8_t> seen(patterns * period, 0);
  for (std::uint32_t p = 0; p < patterns; ++p) {
    for (Natural r = 0; r < s.modulus; ++r) {
      if (!s.live.cell_live(p, r)) continue;
      std::size_t idx = p * period + r % period;
      if (seen[idx] && table[idx] != s.at(p, r)) return false;
      seen[idx] = 1;
      table[idx] = s.at(p, r);
    }
  }
  s.modulus = period;
  s.table = std::move(table);
  s.live = compute_liveness(s.kinds, s.modulus);
  s.clear_dead_cells();
  return true;
}

std::vector<Natural> prime_factors(Natural n) {
  std::vector<Natural> out;
  for (Natural p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

enum class ResidueFate { Finite, Infinite, Undecidable };

ResidueFate residue_fate(const NormalForm& f, const Liveness& live, Natural r) {
  if (f.cell(0, r)) return ResidueFate::Infinite;
  std::uint32_t l = live.bits[r];
  std::uint32_t patterns = 1u << f.kinds.size();
  bool positive = false;
  for (std::uint32_t p = 1; p < patterns; ++p) {
    if ((p & ~l) == 0 && f.cell(p, r)) positive = true;
  }
  if (!positive) return ResidueFate::Finite;
  for (std::size_t k = 0; k < f.kinds.size(); ++k) {
    std::uint32_t bit = 1u << k;
    if (!(l & bit)) continue;
    bool all = true;
    for (std::uint32_t p = 1; p < patterns && all; ++p) {
      if ((p & ~l) == 0 && (p & bit) && !f.cell(p, r)) all = false;
    }
    if (all) return ResidueFate::Infinite;
  }
  return ResidueFate::Undecidable;
}

}  // namespace

NormalForm normal_form(const IndexSet& set) {
  Collected c;
  collect(set, c);
  std::sort(c.kinds.begin(), c.kinds.end());
  if (c.kinds.size() > 8 || (std::size_t{1} << c.kinds.size()) * c.modulus > (kMaxModulus << 2)) {
    throw Error(ErrorCode::NormalizationOverflow, "too many sparse atoms for the period");
  }
  for (const auto& k : c.kinds) c.threshold = std::max(c.threshold, transient_bound(k, c.modulus));
  if (c.threshold > kMaxEnumeratedIndex) {
    throw Error(ErrorCode::NormalizationOverflow,
                "explicit prefix up to " + std::to_string(c.threshold) + " exceeds " +
                    std::to_string(kMaxEnumeratedIndex));
  }

  TableState s{c.modulus, c.kinds, {}, {}};
  s.table.assign(s.patterns() * s.modulus, 0);
  for (std::uint32_t p = 0; p < s.patterns(); ++p) {
    for (Natural r = 0; r < s.modulus; ++r) s.at(p, r) = eval_cell(set, s.kinds, p, r);
  }
  s.live = compute_liveness(s.kinds, s.modulus);
  s.clear_dead_cells();

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = s.kinds.size(); k-- > 0;) {
      if (try_drop_kind(s, k)) {
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (Natural p : prime_factors(s.modulus)) {
      if (try_reduce_period(s, s.modulus / p)) {
        changed = true;
        break;
      }
    }
  }

  NormalForm f;
  f.modulus = s.modulus;
  f.kinds = std::move(s.kinds);
  f.table = std::move(s.table);
  for (Natural r = 0; r < f.modulus; ++r) {
    if (residue_fate(f, s.live, r) == ResidueFate::Undecidable) {
      throw Error(ErrorCode::UnsupportedSparseIntersection,
                  "'" + set.to_string() + "' intersects distinct sparse atoms");
    }
  }
  for (Natural n = 1; n <= c.threshold; ++n) {
    bool member = set.contains(n);
    bool rule = f.rule(n);
    if (member && !rule) f.additions.push_back(n);
    if (!member && rule) f.removals.push_back(n);
  }
  return f;
}

namespace {

IndexSet union_of(const std::vector<IndexSet>& parts) {
  if (parts.empty()) return IndexSet::empty();
  IndexSet acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc | parts[i];
  return acc;
}

IndexSet intersection_of(const std::vector<IndexSet>& parts) {
  IndexSet acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = acc & parts[i];
  return acc;
}

}  // namespace

IndexSet to_index_set(const NormalForm& f) {
  const std::size_t patterns = std::size_t{1} << f.kinds.size();
  // Group residues by their pattern function.
  std::vector<std::pair<std::vector<std::uint8_t>, std::vector<Natural>>> groups;
  for (Natural r = 0; r < f.modulus; ++r) {
    std::vector<std::uint8_t> fn(patterns);
    bool any = false;
    for (std::uint32_t p = 0; p < patterns; ++p) {
      fn[p] = f.cell(p, r);
      any = any || fn[p];
    }
    if (!any) continue;
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == fn; });
    if (it == groups.end()) {
      groups.push_back({fn, {r}});
    } else {
      it->second.push_back(r);
    }
  }

  std::vector<IndexSet> terms;
  for (const auto& [fn, residues] : groups) {
    std::vector<IndexSet> aps;
    if (residues.size() == f.modulus) {
      aps.push_back(IndexSet::naturals());
    } else {
      for (Natural r : residues) aps.push_back(IndexSet::progression(r == 0 ? f.modulus : r, f.modulus));
    }
    IndexSet core = union_of(aps);
    bool all = std::all_of(fn.begin(), fn.end(), [](std::uint8_t v) { return v != 0; });
    if (all) {
      terms.push_back(core);
      continue;
    }
    if (f.kinds.size() == 1) {
      IndexSet atom = IndexSet::sparse(f.kinds[0]);
      terms.push_back(fn[1] ? (core & atom) : (core - atom));
      continue;
    }
    std::vector<IndexSet> minterms;
    for (std::uint32_t p = 0; p < patterns; ++p) {
      if (!fn[p]) continue;
      std::vector<IndexSet> literals;
      for (std::size_t k = 0; k < f.kinds.size(); ++k) {
        IndexSet atom = IndexSet::sparse(f.kinds[k]);
        literals.push_back(((p >> k) & 1u) ? atom : ~atom);
      }
      minterms.push_back(intersection_of(literals));
    }
    terms.push_back(core & union_of(minterms));
  }

  IndexSet out = union_of(terms);
  if (!f.removals.empty()) out = out - IndexSet::finite(f.removals);
  if (!f.additions.empty()) {
    out = terms.empty() ? IndexSet::finite(f.additions) : out | IndexSet::finite(f.additions);
  }
  return out;
}

IndexSet normalize(const IndexSet& set) { return to_index_set(normal_form(set)); }

Rational natural_density(const NormalForm& f) {
  Natural count = 0;
  for (Natural r = 0; r < f.modulus; ++r) count += f.cell(0, r) ? 1 : 0;
  Rational d{Integer(static_cast<unsigned long>(count)), Integer(static_cast<unsigned long>(f.modulus))};
  d.canonicalize();
  return d;
}

Rational natural_density(const IndexSet& set) { return natural_density(normal_form(set)); }

bool is_finite(const NormalForm& f) {
  Liveness live = compute_liveness(f.kinds, f.modulus);
  for (Natural r = 0; r < f.modulus; ++r) {
    switch (residue_fate(f, live, r)) {
      case ResidueFate::Finite: break;
      case ResidueFate::Infinite: return false;
      case ResidueFate::Undecidable:
        throw Error(ErrorCode::UnsupportedSparseIntersection,
                    "normal form intersects distinct sparse atoms");
    }
  }
  return true;
}

bool is_finite(const IndexSet& set) { return is_finite(normal_form(set)); }

bool is_empty(const NormalForm& f) {
  return f.additions.empty() &&
         std::none_of(f.table.begin(), f.table.end(), [](std::uint8_t v) { return v != 0; });
}

Natural count_upto(const NormalForm& f, Natural limit) {
  if (limit == 0) return 0;
  const Natural q = f.modulus;
  // Rule members that avoid every sparse atom, counted per residue class.
  std::int64_t total = 0;
  for (Natural r = 0; r < q; ++r) {
    if (!f.cell(0, r)) continue;
    Natural first = r == 0 ? q : r;
    if (first <= limit) total += static_cast<std::int64_t>((limit - first) / q + 1);
  }
  // Sparse members: replace the pattern-0 verdict by the actual cell.
  std::vector<Natural> sparse;
  for (const auto& k : f.kinds) {
    auto m = k.members_upto(limit);
    sparse.insert(sparse.end(), m.begin(), m.end());
  }
  std::sort(sparse.begin(), sparse.end());
  sparse.erase(std::unique(sparse.begin(), sparse.end()), sparse.end());
  for (Natural n : sparse) {
    total += static_cast<std::int64_t>(f.rule(n)) - static_cast<std::int64_t>(f.cell(0, n % q));
  }
  for (Natural n : f.additions) total += n <= limit ? 1 : 0;
  for (Natural n : f.removals) total -= n <= limit ? 1 : 0;
  return static_cast<Natural>(total);
}

}  // namespace idensity
