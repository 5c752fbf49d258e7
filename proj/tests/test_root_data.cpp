#include "bruhat/error.hpp"
#include "bruhat/root_data.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace bruhat;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (int v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

IntVector vec(std::initializer_list<int> v) {
  IntVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST(DynkinSpec, RankLimitsPerType) {
  EXPECT_NO_THROW(DynkinSpec({{FactorType::A, 1}}));
  EXPECT_THROW(DynkinSpec({{FactorType::A, 0}}), ValidationError);
  EXPECT_THROW(DynkinSpec({{FactorType::B, 1}}), ValidationError);
  EXPECT_THROW(DynkinSpec({{FactorType::C, 1}}), ValidationError);
  EXPECT_THROW(DynkinSpec({{FactorType::D, 2}}), ValidationError);
  EXPECT_NO_THROW(DynkinSpec({{FactorType::D, 3}}));
}

TEST(DynkinSpec, ErrorNamesTheFactor) {
  try {
    DynkinSpec({{FactorType::A, 2}, {FactorType::C, 1}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("factor 1 (C1)"), std::string::npos);
  }
}

TEST(DynkinSpec, ParseAndNumbering) {
  const DynkinSpec s = DynkinSpec::parse("A2 x c3");
  EXPECT_EQ(s.rank(), 5);
  EXPECT_EQ(s.offset(1), 2);
  EXPECT_EQ(s.factor_of(1), 0u);
  EXPECT_EQ(s.factor_of(2), 1u);
  EXPECT_EQ(s.to_string(), "A2xC3");
  EXPECT_THROW(DynkinSpec::parse("E6"), ValidationError);
  EXPECT_THROW(DynkinSpec::parse("A"), ValidationError);
  EXPECT_THROW(DynkinSpec::parse(""), ValidationError);
}

TEST(Cartan, SmallExamples) {
  EXPECT_EQ(cartan_from_spec(DynkinSpec::parse("A2")).matrix(), mat({{2, -1}, {-1, 2}}));
  EXPECT_EQ(cartan_from_spec(DynkinSpec::parse("C2")).matrix(), mat({{2, -1}, {-2, 2}}));
  EXPECT_EQ(cartan_from_spec(DynkinSpec::parse("B2")).matrix(), mat({{2, -2}, {-1, 2}}));
  EXPECT_EQ(cartan_from_spec(DynkinSpec::parse("A1xA1")).matrix(), mat({{2, 0}, {0, 2}}));
}

TEST(Cartan, D4BranchesAtNodeOne) {
  const auto a = cartan_from_spec(DynkinSpec::parse("D4"));
  EXPECT_EQ(a(1, 0), -1);
  EXPECT_EQ(a(1, 2), -1);
  EXPECT_EQ(a(1, 3), -1);
  EXPECT_EQ(a(2, 3), 0);
}

TEST(Cartan, Invariants) {
  for (const char* name : {"A5", "B4", "C4", "D5", "A2xC3xD4"}) {
    const auto a = cartan_from_spec(DynkinSpec::parse(name));
    for (int i = 0; i < a.rank(); ++i) {
      EXPECT_EQ(a(i, i), 2);
      for (int j = 0; j < a.rank(); ++j)
        if (i != j) {
          EXPECT_LE(a(i, j), 0);
          EXPECT_EQ(a(i, j) == 0, a(j, i) == 0);
        }
    }
  }
}

TEST(Cartan, RejectsMalformedMatrix) {
  EXPECT_THROW(CartanMatrix(mat({{2, -1}, {0, 2}})), ValidationError);
  EXPECT_THROW(CartanMatrix(mat({{1, 0}, {0, 2}})), ValidationError);
  EXPECT_THROW(CartanMatrix(mat({{2, 1}, {1, 2}})), ValidationError);
}

TEST(PositiveRoots, A2) {
  const auto roots = positive_roots(cartan_from_spec(DynkinSpec::parse("A2")));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0], vec({1, 0}));
  EXPECT_EQ(roots[1], vec({0, 1}));
  EXPECT_EQ(roots[2], vec({1, 1}));
}

TEST(PositiveRoots, C2HighestRootDoublesTheShortRoot) {
  const auto roots = positive_roots(cartan_from_spec(DynkinSpec::parse("C2")));
  EXPECT_EQ(roots.size(), 4u);
  EXPECT_EQ(roots.highest_root(0), vec({2, 1}));
}

TEST(PositiveRoots, C5Count) {
  EXPECT_EQ(positive_roots(cartan_from_spec(DynkinSpec::parse("C5"))).size(), 25u);
}

TEST(PositiveRoots, ClosedFormCountsAcrossRanks) {
  auto check = [](FactorType t, int r) {
    const DynkinFactor f{t, r};
    const auto roots = positive_roots(cartan_from_spec(DynkinSpec({f})));
    EXPECT_EQ(roots.size(), positive_root_count(f)) << static_cast<char>(t) << r;
  };
  for (int r = 1; r <= 7; ++r) check(FactorType::A, r);
  for (int r = 2; r <= 6; ++r) {
    check(FactorType::B, r);
    check(FactorType::C, r);
  }
  for (int r = 3; r <= 6; ++r) check(FactorType::D, r);
}

TEST(PositiveRoots, PerFactorCountsInProducts) {
  const auto roots = positive_roots(cartan_from_spec(DynkinSpec::parse("A2xC3xD4")));
  EXPECT_EQ(roots.counts_per_component(), (std::vector<std::size_t>{3, 9, 12}));
}

TEST(PositiveRoots, SimpleReflectionsPermuteTheRest) {
  for (const char* name : {"A4", "B3", "C4", "D4", "A1xB2"}) {
    const auto cartan = cartan_from_spec(DynkinSpec::parse(name));
    const auto roots = positive_roots(cartan);
    const int n = cartan.rank();
    for (int i = 0; i < n; ++i) {
      std::set<std::size_t> images;
      for (std::size_t k = 0; k < roots.size(); ++k) {
        IntVector image = roots[k];
        image(i) -= roots[k].dot(cartan.matrix().col(i));
        if (roots[k] == IntVector::Unit(n, i)) {
          EXPECT_EQ(image, -roots[k]);
          continue;
        }
        const int idx = roots.index_of(image);
        ASSERT_GE(idx, 0) << name << " s" << i;
        EXPECT_NE(roots[idx], IntVector::Unit(n, i));
        images.insert(static_cast<std::size_t>(idx));
      }
      EXPECT_EQ(images.size(), roots.size() - 1);
    }
  }
}

TEST(PositiveRoots, NonFiniteTypeRejected) {
  // affine A1
  EXPECT_THROW(positive_roots(CartanMatrix(mat({{2, -2}, {-2, 2}}))), ValidationError);
  // hyperbolic rank 2
  EXPECT_THROW(positive_roots(CartanMatrix(mat({{2, -3}, {-3, 2}}))), ValidationError);
}

TEST(WeylOrder, ClosedForms) {
  auto order = [](const char* s) { return weyl_group_order(positive_roots(cartan_from_spec(DynkinSpec::parse(s)))); };
  EXPECT_EQ(order("A2"), 6u);
  EXPECT_EQ(order("C2"), 8u);
  EXPECT_EQ(order("C5"), 3840u);
  EXPECT_EQ(order("D4"), 192u);
  EXPECT_EQ(order("D3"), 24u);
  EXPECT_EQ(order("A1xA1"), 4u);
  EXPECT_EQ(order("A2xA2"), 36u);
}

TEST(Automorphism, IdentityAndFlip) {
  const auto a2 = cartan_from_spec(DynkinSpec::parse("A2"));
  EXPECT_EQ(validate_automorphism(std::vector<int>{0, 1}, a2).order(), 1);
  EXPECT_EQ(validate_automorphism(std::vector<int>{1, 0}, a2).order(), 2);
}

TEST(Automorphism, C2SwapRejectedWithPair) {
  const auto c2 = cartan_from_spec(DynkinSpec::parse("C2"));
  try {
    validate_automorphism(std::vector<int>{1, 0}, c2);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("pair (0,1)"), std::string::npos) << e.what();
  }
}

TEST(Automorphism, NotABijection) {
  const auto a2 = cartan_from_spec(DynkinSpec::parse("A2"));
  EXPECT_THROW(validate_automorphism(std::vector<int>{1, 1}, a2), ValidationError);
  EXPECT_THROW(validate_automorphism(std::vector<int>{0}, a2), ValidationError);
}

TEST(Automorphism, D4TrialityCompositionsStayValid) {
  const auto d4 = cartan_from_spec(DynkinSpec::parse("D4"));
  const std::vector<std::vector<int>> perms = {{0, 1, 2, 3}, {2, 1, 0, 3}, {3, 1, 2, 0}, {0, 1, 3, 2},
                                               {2, 1, 3, 0}, {3, 1, 0, 2}};
  for (const auto& p : perms)
    for (const auto& q : perms) {
      const auto a = validate_automorphism(p, d4);
      const auto b = validate_automorphism(q, d4);
      const auto c = a.compose(b);
      const auto revalidated = validate_automorphism(c.permutation(), d4);
      EXPECT_EQ(revalidated, c);
      // S_3 has exponent 6
      EXPECT_EQ(6 % c.order(), 0);
      EXPECT_TRUE(c.power(c.order()).is_identity());
    }
}

TEST(Pairing, Examples) {
  EXPECT_EQ(pairing(CocharSpec{{0, 1}}, vec({1, 1})), 1);
  EXPECT_EQ(pairing(CocharSpec{{0, 0}}, vec({1, 1})), 0);
  const auto c2 = positive_roots(cartan_from_spec(DynkinSpec::parse("C2")));
  EXPECT_EQ(pairing(CocharSpec{{0, 1}}, c2.highest_root(0)), 1);
  EXPECT_THROW(pairing(CocharSpec{{0, 1, 0}}, vec({1, 1})), ValidationError);
}
