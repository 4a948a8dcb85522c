#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "isoset/constructions.hpp"
#include "isoset/errors.hpp"
#include "isoset/intersection.hpp"
#include "isoset/verify.hpp"

namespace isoset {
namespace {

FamilyPair figure2() {
  return FamilyPair(12, 4, 4,
                    make_subsets(12, {{1, 8, 9, 10}, {2, 8, 9, 10}, {3, 8, 9, 10}, {4, 8, 9, 10},
                                      {5, 8, 9, 10}, {6, 8, 9, 10}, {7, 8, 9, 10}, {8, 9, 10, 11},
                                      {8, 10, 11, 12}, {7, 8, 11, 12}, {7, 8, 9, 12}}),
                    make_subsets(12, {{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7},
                                      {1, 5, 6, 7}, {1, 2, 6, 7}, {1, 2, 3, 7}, {1, 2, 3, 9},
                                      {1, 2, 3, 10}, {1, 2, 3, 11}, {1, 2, 3, 12}}));
}

FamilyPair figure3() {
  return FamilyPair(11, 3, 3,
                    make_subsets(11, {{1, 6, 7}, {2, 6, 7}, {3, 6, 7}, {4, 6, 7}, {5, 6, 7}, {6, 7, 8},
                                      {7, 8, 9}, {5, 8, 9}, {5, 6, 9}, {5, 6, 10}, {5, 6, 11}}),
                    make_subsets(11, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {1, 4, 5}, {1, 2, 5}, {1, 2, 6},
                                      {1, 2, 7}, {1, 2, 8}, {1, 2, 9}, {1, 2, 10}, {1, 2, 11}}));
}

TEST(VerifyIsolation, FigureFamilies) {
  EXPECT_TRUE(verify_isolation(figure2()).ok());
  EXPECT_TRUE(verify_isolation(figure3()).ok());
}

TEST(VerifyIsolation, SharedElementEverywhere) {
  const auto s = make_subsets(3, {{1, 2}, {1, 3}});
  const PatternCertificate cert = verify_isolation(FamilyPair(3, 2, 2, s, s));
  ASSERT_EQ(cert.violations().size(), 1u);
  const Violation& v = cert.violations().front();
  EXPECT_EQ(v.row, 0u);
  EXPECT_EQ(v.col, 1u);
  EXPECT_EQ(v.observed, 1);
  EXPECT_EQ(v.expected, 0);
}

TEST(VerifyIsolation, SwappedRowsBreakFigureTwo) {
  const FamilyPair fp = figure2();
  std::vector<Subset> rows = fp.rows();
  std::swap(rows[0], rows[1]);
  const PatternCertificate cert =
      verify_isolation(FamilyPair(fp.universe(), 4, 4, rows, fp.cols()));
  EXPECT_FALSE(cert.ok());
  EXPECT_EQ(cert.pattern(), Pattern::isolation);
}

TEST(VerifyMatrixIsolation, Examples) {
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_TRUE(verify_matrix_isolation(BoolMatrix::identity(n)).ok());
  }
  EXPECT_TRUE(verify_matrix_isolation(circulant_isolation(5, 4)).ok());
  EXPECT_FALSE(verify_matrix_isolation(BoolMatrix::all_ones(2, 2)).ok());
  EXPECT_THROW((void)verify_matrix_isolation(BoolMatrix(2, 3)), InputError);
}

TEST(VerifyMatrixIsolation, MissingDiagonal) {
  const PatternCertificate cert = verify_matrix_isolation(fixtures::matrix({"10", "00"}));
  ASSERT_EQ(cert.violations().size(), 1u);
  EXPECT_EQ(cert.violations()[0].row, 1u);
  EXPECT_EQ(cert.violations()[0].col, 1u);
  EXPECT_EQ(cert.violations()[0].observed, 0);
}

TEST(VerifyIdentity, Examples) {
  EXPECT_TRUE(verify_identity(identity_family(6, 2)).ok());
  const auto s = make_subsets(3, {{1, 2}, {2, 3}});
  EXPECT_FALSE(verify_identity(FamilyPair(3, 2, 2, s, s)).ok());
  EXPECT_FALSE(verify_identity(isolation_maximal(11, 3)).ok());
  EXPECT_TRUE(verify_matrix_identity(BoolMatrix::identity(4)).ok());
  EXPECT_THROW((void)verify_matrix_identity(BoolMatrix(1, 2)), InputError);
}

TEST(VerifyTriangular, Examples) {
  ElementAllocator alloc;
  EXPECT_TRUE(verify_triangular(triangular_family(2, 1, alloc)).ok());
  const FamilyPair tri = triangular_construct(2, 2);
  EXPECT_EQ(tri.size(), 5u);
  EXPECT_TRUE(verify_triangular(tri).ok());

  const PatternCertificate cert = verify_triangular(identity_family(8, 2));
  EXPECT_FALSE(cert.ok());
  // Size 6 identity: the 15 entries below the diagonal are zeros that should be ones.
  EXPECT_EQ(cert.violations().size(), 15u);
  for (const Violation& v : cert.violations()) {
    EXPECT_GT(v.row, v.col);
    EXPECT_EQ(v.observed, 0);
    EXPECT_EQ(v.expected, 1);
  }
  EXPECT_TRUE(verify_matrix_triangular(fixtures::matrix({"100", "110", "111"})).ok());
}

TEST(VerifyCertificate, TruncatesLongViolationLists) {
  const BoolMatrix zeros(150, 150);
  const PatternCertificate cert = verify_matrix_triangular(zeros);
  EXPECT_EQ(cert.violations().size(), PatternCertificate::kMaxViolations);
  EXPECT_TRUE(cert.truncated());
}

TEST(VerifyDecomposition, CanonicalIdentity) {
  const PatternCertificate cert =
      verify_identity_decomposition(BoolMatrix::identity(3), BoolMatrix::identity(3));
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(cert.checks().size(), 3u);
}

TEST(VerifyDecomposition, ExtraTermWithZeroColumn) {
  const BoolMatrix x = fixtures::matrix({"100", "010"});
  const BoolMatrix y = fixtures::matrix({"10", "01", "11"});
  const PatternCertificate cert = verify_identity_decomposition(x, y);
  EXPECT_TRUE(cert.ok());
  EXPECT_EQ(x.count_ones() + y.count_ones(), 6u);
  bool saw_count = false;
  for (const SubCheck& c : cert.checks()) {
    if (c.label == "ones_count") {
      saw_count = true;
      EXPECT_TRUE(c.ok);
      EXPECT_NE(c.detail.find("bound=6"), std::string::npos);
    }
  }
  EXPECT_TRUE(saw_count);
}

TEST(VerifyDecomposition, ProductMustBeIdentity) {
  const BoolMatrix x = fixtures::matrix({"11", "01"});
  try {
    (void)verify_identity_decomposition(x, BoolMatrix::identity(2));
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("(1,2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW((void)verify_identity_decomposition(BoolMatrix(2, 3), BoolMatrix(2, 2)), InputError);
}

}  // namespace
}  // namespace isoset
