#include <gtest/gtest.h>

#include <sstream>

#include "isoset/bit_vector.hpp"
#include "isoset/bool_matrix.hpp"
#include "isoset/errors.hpp"
#include "isoset/family.hpp"
#include "isoset/intersection.hpp"
#include "isoset/limits.hpp"
#include "isoset/subset.hpp"
#include "reference.hpp"
#include "fixtures.hpp"

namespace isoset {
namespace {

TEST(BitVector, TailBitsStayClear) {
  BitVector v(70, true);
  EXPECT_EQ(v.count(), 70u);
  v.flip();
  EXPECT_TRUE(v.none());
  v.set_all();
  EXPECT_EQ(v.words().back() >> 6, 0u);
}

TEST(BitVector, FindAndIterate) {
  BitVector v(130);
  v.set(3);
  v.set(64);
  v.set(129);
  EXPECT_EQ(v.find_first(), 3u);
  EXPECT_EQ(v.find_next(3), 64u);
  EXPECT_EQ(v.find_next(64), 129u);
  EXPECT_EQ(v.find_next(129), BitVector::npos);
  EXPECT_EQ(v.positions(), (std::vector<std::size_t>{3, 64, 129}));
  std::vector<std::size_t> seen;
  v.for_each_set([&](std::size_t p) { seen.push_back(p); });
  EXPECT_EQ(seen, v.positions());
}

TEST(BitVector, SetAlgebra) {
  BitVector a(10);
  BitVector b(10);
  a.set(1);
  a.set(2);
  b.set(2);
  b.set(3);
  EXPECT_TRUE(a.intersects(b));
  EXPECT_EQ(a.count_and(b), 1u);
  EXPECT_EQ((a | b).count(), 3u);
  EXPECT_EQ((a & b).positions(), (std::vector<std::size_t>{2}));
  BitVector c = a;
  c.and_not(b);
  EXPECT_EQ(c.positions(), (std::vector<std::size_t>{1}));
  EXPECT_TRUE(c.is_subset_of(a));
  EXPECT_FALSE(a.is_subset_of(c));
}

TEST(BitVector, OrderIsColex) {
  BitVector a(8);
  BitVector b(8);
  a.set(0);
  a.set(3);  // {1,4}
  b.set(1);
  b.set(2);  // {2,3}
  EXPECT_LT(b, a);
}

TEST(Subset, RejectsOutOfRangeElements) {
  EXPECT_THROW(Subset(0), InputError);
  EXPECT_THROW(Subset(3, {4}), InputError);
  EXPECT_THROW(Subset(3, {0}), InputError);
  Subset s(3);
  EXPECT_THROW(s.insert(4), InputError);
}

TEST(Subset, ElementsAreOneBased) {
  const Subset s(10, {10, 1, 5});
  EXPECT_EQ(s.elements(), (std::vector<Element>{1, 5, 10}));
  EXPECT_EQ(s.cardinality(), 3u);
  EXPECT_EQ(s.max_element(), 10u);
  EXPECT_TRUE(s.contains(10));
  EXPECT_FALSE(s.contains(11));
  EXPECT_FALSE(s.contains(0));
  std::ostringstream os;
  os << s;
  EXPECT_EQ(os.str(), "{1,5,10}");
}

TEST(Subset, Intersects) {
  EXPECT_TRUE(intersects(Subset(4, {1, 2}), Subset(4, {2, 3})));
  EXPECT_FALSE(intersects(Subset(4, {1, 2}), Subset(4, {3, 4})));
  EXPECT_TRUE(intersects(Subset(12, {8, 9, 10, 1}), Subset(12, {3, 2, 1, 9})));
  EXPECT_THROW((void)intersects(Subset(4, {1}), Subset(5, {1})), InputError);
}

TEST(Subset, ComplementAndWiden) {
  const Subset s(5, {2, 4});
  EXPECT_EQ(s.complement().elements(), (std::vector<Element>{1, 3, 5}));
  EXPECT_EQ(s.complement().complement(), s);
  EXPECT_EQ(s.widened(9).universe(), 9u);
  EXPECT_EQ(s.widened(9).elements(), s.elements());
}

TEST(BoolMatrix, RejectsRaggedRows) {
  EXPECT_THROW(BoolMatrix(std::vector<BitVector>{BitVector(3), BitVector(4)}), InputError);
}

TEST(BoolMatrix, ProductAndTranspose) {
  const BoolMatrix x = fixtures::matrix({"10", "01", "11"});
  const BoolMatrix y = fixtures::matrix({"100", "011"});
  EXPECT_EQ(boolean_product(x, y), fixtures::matrix({"100", "011", "111"}));
  EXPECT_EQ(x.transpose(), fixtures::matrix({"101", "011"}));
  EXPECT_THROW((void)boolean_product(x, x), InputError);
  EXPECT_EQ(BoolMatrix::identity(3).count_ones(), 3u);
  EXPECT_EQ(BoolMatrix::all_ones(2, 3).count_ones(), 6u);
}

TEST(FamilyPair, ValidatesShape) {
  const auto rows = make_subsets(4, {{1, 2}, {3, 4}});
  const auto cols = make_subsets(4, {{1, 3}, {2, 4}});
  EXPECT_NO_THROW(FamilyPair(4, 2, 2, rows, cols));
  EXPECT_THROW(FamilyPair(4, 2, 2, rows, make_subsets(4, {{1, 3}})), InputError);
  EXPECT_THROW(FamilyPair(4, 3, 2, rows, cols), InputError);
  EXPECT_THROW(FamilyPair(5, 2, 2, rows, cols), InputError);
  EXPECT_THROW(FamilyPair(0, 2, 2, {}, {}), InputError);
}

TEST(FamilyToMatrix, Singletons) {
  const auto s = make_subsets(3, {{1}, {2}, {3}});
  EXPECT_EQ(family_to_matrix(FamilyPair(3, 1, 1, s, s)), BoolMatrix::identity(3));
}

TEST(FamilyToMatrix, DisjointPair) {
  const FamilyPair fp(4, 2, 2, make_subsets(4, {{1, 2}}), make_subsets(4, {{3, 4}}));
  EXPECT_EQ(family_to_matrix(fp), BoolMatrix(1, 1));
}

TEST(EnumerateSubsets, CountsAndColexOrder) {
  EXPECT_EQ(enumerate_t_subsets(4, 2).size(), 6u);
  EXPECT_EQ(enumerate_t_subsets(7, 3).size(), 35u);
  const auto full = enumerate_t_subsets(5, 5);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full[0].elements(), (std::vector<Element>{1, 2, 3, 4, 5}));
  EXPECT_THROW((void)enumerate_t_subsets(3, 4), InputError);
  EXPECT_THROW((void)enumerate_t_subsets(3, 0), InputError);

  for (const auto& [k, t] : std::vector<std::pair<Element, Element>>{{4, 2}, {6, 3}, {7, 2}, {8, 4}}) {
    const auto got = enumerate_t_subsets(k, t);
    const auto want = ref::subsets(k, t);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(ref::to_set(got[i]), want[i]) << "k=" << k << " t=" << t << " i=" << i;
    }
  }
}

TEST(BuildA, AllOnesBelowTwoT) {
  for (Element t = 1; t <= 4; ++t) {
    const BoolMatrix a = build_A(2 * t - 1, t);
    EXPECT_EQ(a, BoolMatrix::all_ones(a.n_rows(), a.n_cols())) << "t=" << t;
  }
}

TEST(BuildA, DisjointPairCounts) {
  // Frozen from ref::intersection_grid over ref::subsets.
  const auto zeros_above = [](const BoolMatrix& m) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < m.n_rows(); ++i) {
      for (std::size_t j = i + 1; j < m.n_cols(); ++j) {
        n += m.get(i, j) ? 0 : 1;
      }
    }
    return n;
  };
  EXPECT_EQ(zeros_above(build_A(4, 2)), 3u);
  EXPECT_EQ(zeros_above(build_A(5, 2)), 15u);
  const auto subsets = ref::subsets(5, 2);
  EXPECT_EQ(ref::grid_of(build_A(5, 2)), ref::intersection_grid(subsets, subsets));
}

TEST(BuildA, SymmetricWithUnitDiagonal) {
  const BoolMatrix a = build_A(7, 3);
  EXPECT_EQ(a, a.transpose());
  for (std::size_t i = 0; i < a.n_rows(); ++i) {
    EXPECT_TRUE(a.get(i, i));
  }
}

TEST(BuildA, RespectsDimensionCap) {
  Limits limits;
  limits.max_dim = 20;
  EXPECT_NO_THROW((void)build_A(6, 3, limits));
  EXPECT_THROW((void)build_A(7, 3, limits), ResourceError);
}

TEST(Limits, Binomial) {
  EXPECT_EQ(binomial(10, 3), 120u);
  EXPECT_EQ(binomial(3, 4), 0u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088u);
  EXPECT_EQ(binomial(200, 100), std::numeric_limits<std::uint64_t>::max());
}

}  // namespace
}  // namespace isoset
