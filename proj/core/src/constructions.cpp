#include "isoset/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "isoset/errors.hpp"

namespace isoset {

namespace {

using ElementList = std::vector<Element>;

/// Rows and columns as plain element lists, before a universe is fixed.
struct RawFamily {
  std::vector<ElementList> rows;
  std::vector<ElementList> cols;
};

ElementList range(Element lo, Element hi) {
  ElementList out;
  for (Element e = lo; e <= hi && hi != 0; ++e) {
    out.push_back(e);
  }
  return out;
}

ElementList joined(ElementList a, const ElementList& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

ElementList without(ElementList a, Element e) {
  a.erase(std::remove(a.begin(), a.end(), e), a.end());
  return a;
}

FamilyPair realize(Element universe, std::size_t row_size, std::size_t col_size,
                   const RawFamily& raw, ConstructionMeta meta) {
  return FamilyPair(universe, row_size, col_size, make_subsets(universe, raw.rows),
                    make_subsets(universe, raw.cols), std::move(meta));
}

RawFamily to_raw(const FamilyPair& fp) {
  RawFamily raw;
  for (const Subset& s : fp.rows()) {
    raw.rows.push_back(s.elements());
  }
  for (const Subset& s : fp.cols()) {
    raw.cols.push_back(s.elements());
  }
  return raw;
}

std::string kt(Element k, Element t) {
  return "k=" + std::to_string(k) + ", t=" + std::to_string(t);
}

}  // namespace

// --- ElementAllocator -------------------------------------------------------

Element ElementAllocator::allocate() {
  if (next_free_ > cap_) {
    throw ResourceError("element allocator exhausted: cap " + std::to_string(cap_) + " reached");
  }
  return next_free_++;
}

std::vector<Element> ElementAllocator::allocate(std::size_t n) {
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(allocate());
  }
  return out;
}

// --- identity ---------------------------------------------------------------

FamilyPair identity_family(Element k, Element t) {
  if (t < 1 || k < 2 * t) {
    throw RangeError("identity_family needs t >= 1 and k >= 2t, got " + kt(k, t));
  }
  const ElementList row_core = range(1, t - 1);
  const ElementList col_core = range(t, 2 * t - 2);
  RawFamily raw;
  for (Element i = 2 * t - 1; i <= k; ++i) {
    raw.rows.push_back(joined(row_core, {i}));
    raw.cols.push_back(joined(col_core, {i}));
  }
  return realize(k, t, t, raw, {"identity", {{"k", k}, {"t", t}, {"s", k - 2 * t + 2}}});
}

// --- isolation --------------------------------------------------------------

BoolMatrix circulant_isolation(std::uint32_t p, std::uint32_t q, CirculantOptions options) {
  if (p == 0) {
    throw InputError("circulant needs p >= 1, got p=" + std::to_string(p) +
                     ", q=" + std::to_string(q));
  }
  if (q + 1 < p && !options.allow_non_isolating) {
    throw RangeError("circulant F_{p,q} is an isolation matrix only for q >= p-1, got p=" +
                     std::to_string(p) + ", q=" + std::to_string(q));
  }
  const std::size_t n = std::size_t{p} + q;
  BoolMatrix f(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f.set(i, j, (i + n - j) % n < p);
    }
  }
  return f;
}

FamilyPair isolation_3t2(Element k, Element t) {
  if (t < 1 || k + 2 < 3 * t) {
    throw RangeError("isolation_3t2 needs t >= 1 and k >= 3t-2, got " + kt(k, t));
  }
  const Element p = t;
  const Element n = k - t + 1;  // = p + q
  const ElementList tail = range(n + 1, k);
  RawFamily raw;
  for (Element i = 1; i <= n; ++i) {
    raw.rows.push_back(joined({i}, tail));
  }
  for (Element j = 1; j <= n; ++j) {
    ElementList col;
    for (Element m = 0; m < p; ++m) {
      col.push_back((j - 1 + m) % n + 1);
    }
    std::sort(col.begin(), col.end());
    raw.cols.push_back(col);
  }
  return realize(k, t, t, raw,
                 {"isolation_3t2", {{"k", k}, {"t", t}, {"p", p}, {"q", k - 2 * t + 1}}});
}

FamilyPair isolation_small_k(Element k, Element t) {
  if (t < 3 || k < 2 * t || k - 2 * t > t - 3) {
    throw RangeError("isolation_small_k needs t >= 3 and 2t <= k <= 3t-3, got " + kt(k, t));
  }
  const Element r = k - 2 * t;
  const Element inner_t = r + 2;
  const Element inner_k = 3 * r + 4;
  const Element pad = t - r - 2;
  RawFamily raw = to_raw(isolation_3t2(inner_k, inner_t));
  const ElementList row_pad = range(inner_k + 1, inner_k + pad);
  const ElementList col_pad = range(inner_k + pad + 1, k);
  for (ElementList& row : raw.rows) {
    row = joined(row, row_pad);
  }
  for (ElementList& col : raw.cols) {
    col = joined(col, col_pad);
  }
  return realize(k, t, t, raw, {"isolation_small_k", {{"k", k}, {"t", t}, {"r", r}}});
}

FamilyPair isolation_big_k(Element k, Element t) {
  if (t < 2 || k < 2 * t || k - 2 * t + 2 < t || k - 2 * t > 2 * t - 3) {
    throw RangeError("isolation_big_k needs t >= 2 and 3t-2 <= k <= 4t-3, got " + kt(k, t));
  }
  const Element r = k - 2 * t;
  if (r == t - 2) {
    return isolation_3t2(k, t);
  }
  const Element rp = r - t + 2;

  RawFamily raw;
  // Upper-left block: the k' = 3t-2 circulant family.
  const ElementList shared = range(2 * t, 3 * t - 2);
  for (Element i = 1; i <= 2 * t - 1; ++i) {
    raw.rows.push_back(joined({i}, shared));
  }
  for (Element i = 0; i <= 2 * t - 2; ++i) {
    ElementList col;
    for (Element m = 0; m < t; ++m) {
      col.push_back((i + m) % (2 * t - 1) + 1);
    }
    std::sort(col.begin(), col.end());
    raw.cols.push_back(col);
  }

  // Lower-right block of order 2r'.
  const Element base = k - 2 * rp + 1;
  const ElementList low = range(1, t - 1);
  for (Element i = 0; i < 2 * rp; ++i) {
    raw.cols.push_back(joined({base + i}, low));
  }
  const ElementList tee = (r == 2 * t - 3) ? ElementList{} : range(2 * t, 4 * t - r - 4);
  for (Element i = 0; i < rp; ++i) {
    raw.rows.push_back(joined(range(base + i, base + i + rp), tee));
  }
  raw.rows.push_back(joined(without(raw.rows.back(), k - rp), {2 * t - 1}));
  for (Element i = 1; i < rp; ++i) {
    raw.rows.push_back(joined(without(raw.rows.back(), k - rp + i), {k - 2 * rp + i}));
  }
  return realize(k, t, t, raw,
                 {"isolation_big_k", {{"k", k}, {"t", t}, {"r", r}, {"r_prime", rp}}});
}

FamilyPair isolation_maximal(Element k, Element t) {
  if (t < 2 || k + 3 < 4 * t) {
    throw RangeError("isolation_maximal needs t >= 2 and k >= 4t-3, got " + kt(k, t));
  }
  const Element base_k = 4 * t - 3;
  RawFamily raw = to_raw(isolation_big_k(base_k, t));
  const ElementList row_tail = range(2 * t - 1, 3 * t - 3);
  const ElementList col_tail = range(1, t - 1);
  for (Element i = 1; i <= k - base_k; ++i) {
    raw.rows.push_back(joined({base_k + i}, row_tail));
    raw.cols.push_back(joined({base_k + i}, col_tail));
  }
  return realize(k, t, t, raw, {"isolation_maximal", {{"k", k}, {"t", t}}});
}

std::string_view to_string(IsolationRegime r) noexcept {
  switch (r) {
    case IsolationRegime::singletons:
      return "singletons";
    case IsolationRegime::all_ones:
      return "all_ones";
    case IsolationRegime::small_k:
      return "small_k";
    case IsolationRegime::big_k:
      return "big_k";
    case IsolationRegime::maximal:
      return "maximal";
  }
  return "unknown";
}

IsolationRegime isolation_regime(Element k, Element t) {
  if (k < 1 || t < 1) {
    throw RangeError("isolation construction needs k, t >= 1, got " + kt(k, t));
  }
  if (t > k) {
    throw RangeError("A_{k,t} has no rows when t > k, got " + kt(k, t));
  }
  if (t == 1) {
    return IsolationRegime::singletons;
  }
  if (k < 2 * t) {
    return IsolationRegime::all_ones;
  }
  if (k + 3 <= 3 * t) {
    return IsolationRegime::small_k;
  }
  if (k + 4 <= 4 * t) {
    return IsolationRegime::big_k;
  }
  return IsolationRegime::maximal;
}

std::uint64_t isolation_size(Element k, Element t) {
  switch (isolation_regime(k, t)) {
    case IsolationRegime::singletons:
    case IsolationRegime::maximal:
      return k;
    case IsolationRegime::all_ones:
      return 1;
    case IsolationRegime::small_k:
    case IsolationRegime::big_k:
      return 2 * std::uint64_t{k - 2 * t} + 3;
  }
  return 0;
}

FamilyPair isolation_construct(Element k, Element t) {
  switch (isolation_regime(k, t)) {
    case IsolationRegime::singletons: {
      RawFamily raw;
      for (Element i = 1; i <= k; ++i) {
        raw.rows.push_back({i});
        raw.cols.push_back({i});
      }
      return realize(k, 1, 1, raw, {"isolation_singletons", {{"k", k}, {"t", t}}});
    }
    case IsolationRegime::all_ones: {
      // Every pair of t-subsets meets, so any single pair is a maximum isolation set.
      const RawFamily raw{{range(1, t)}, {range(1, t)}};
      return realize(k, t, t, raw, {"isolation_all_ones", {{"k", k}, {"t", t}}});
    }
    case IsolationRegime::small_k:
      return isolation_small_k(k, t);
    case IsolationRegime::big_k:
      return isolation_big_k(k, t);
    case IsolationRegime::maximal:
      return isolation_maximal(k, t);
  }
  throw RangeError("unreachable isolation regime");
}

// --- triangular -------------------------------------------------------------

namespace {

/// Base case b = 1: row i = {1..i} + {a+1..2a-i}, column j = {j}, relabeled onto fresh elements.
RawFamily triangular_column_base(std::uint32_t a, ElementAllocator& alloc) {
  const std::vector<Element> fresh = alloc.allocate(2 * std::size_t{a} - 1);
  auto label = [&](Element local) { return fresh[local - 1]; };
  RawFamily raw;
  for (Element i = 1; i <= a; ++i) {
    ElementList row;
    for (Element e = 1; e <= i; ++e) {
      row.push_back(label(e));
    }
    for (Element e = a + 1; e + i <= 2 * a; ++e) {
      row.push_back(label(e));
    }
    std::sort(row.begin(), row.end());
    raw.rows.push_back(row);
    raw.cols.push_back({label(i)});
  }
  return raw;
}

RawFamily triangular_raw(std::uint32_t a, std::uint32_t b, ElementAllocator& alloc) {
  if (b == 1) {
    return triangular_column_base(a, alloc);
  }
  if (a == 1) {
    // Swap the roles of rows and columns, reversing the order to stay lower triangular.
    const RawFamily swapped = triangular_column_base(b, alloc);
    RawFamily raw;
    raw.rows.assign(swapped.cols.rbegin(), swapped.cols.rend());
    raw.cols.assign(swapped.rows.rbegin(), swapped.rows.rend());
    return raw;
  }
  RawFamily left = triangular_raw(a, b - 1, alloc);
  const RawFamily right = triangular_raw(a - 1, b, alloc);
  const Element x = alloc.allocate();
  const ElementList s = alloc.allocate(a - 1);
  const ElementList t = alloc.allocate(b - 1);

  RawFamily raw;
  raw.rows = std::move(left.rows);
  raw.rows.push_back(joined({x}, s));
  for (const ElementList& row : right.rows) {
    raw.rows.push_back(joined(row, {x}));
  }
  for (const ElementList& col : left.cols) {
    raw.cols.push_back(joined(col, {x}));
  }
  raw.cols.push_back(joined({x}, t));
  raw.cols.insert(raw.cols.end(), right.cols.begin(), right.cols.end());
  return raw;
}

}  // namespace

FamilyPair triangular_family(std::uint32_t a, std::uint32_t b, ElementAllocator& alloc) {
  if (a < 1 || b < 1) {
    throw RangeError("triangular_family needs a, b >= 1, got a=" + std::to_string(a) +
                     ", b=" + std::to_string(b));
  }
  const RawFamily raw = triangular_raw(a, b, alloc);
  const auto universe = static_cast<Element>(alloc.issued());
  return realize(universe, a, b, raw, {"triangular", {{"a", a}, {"b", b}}});
}

FamilyPair triangular_construct(std::uint32_t a, std::uint32_t b, const Limits& limits) {
  ElementAllocator alloc(limits.max_universe);
  const FamilyPair raw = triangular_family(a, b, alloc);
  FamilyPair compact = compact_universe(raw);
  ConstructionMeta meta = compact.meta();
  meta.set_param("raw_universe", raw.universe());
  return compact.with_meta(std::move(meta));
}

FamilyPair compact_universe(const FamilyPair& fp) {
  std::set<Element> used;
  for (const auto* side : {&fp.rows(), &fp.cols()}) {
    for (const Subset& s : *side) {
      for (const Element e : s.elements()) {
        used.insert(e);
      }
    }
  }
  if (used.empty()) {
    return fp;
  }
  std::map<Element, Element> relabel;
  Element next = 1;
  for (const Element e : used) {
    relabel[e] = next++;
  }
  const auto universe = static_cast<Element>(used.size());
  auto map_side = [&](const std::vector<Subset>& side) {
    std::vector<Subset> out;
    out.reserve(side.size());
    for (const Subset& s : side) {
      Subset m(universe);
      for (const Element e : s.elements()) {
        m.insert(relabel.at(e));
      }
      out.push_back(std::move(m));
    }
    return out;
  };
  return FamilyPair(universe, fp.row_size(), fp.col_size(), map_side(fp.rows()),
                    map_side(fp.cols()), fp.meta());
}

}  // namespace isoset
