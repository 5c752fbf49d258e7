#include "bruhat/error.hpp"
#include "bruhat/io.hpp"
#include "bruhat/oracle.hpp"
#include "bruhat/parabolic.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace bruhat;
using bruhat::test::group;
using bruhat::test::word;

TEST(SubwordProducts, Examples) {
  const auto g = group("A2");
  const std::vector<int> w0{0, 1, 0};
  EXPECT_EQ(subword_products(g, w0).size(), 6u);
  const std::vector<int> s01{0, 1};
  EXPECT_EQ(subword_products(g, s01).size(), 4u);
  EXPECT_EQ(subword_products(g, std::vector<int>{}).size(), 1u);
}

TEST(BruteBruhat, EndpointsAndA2Table) {
  const auto g = group("A2");
  const auto all = enumerate_group(g);
  for (const auto& w : all) {
    const auto rw = reduced_word(g, w);
    EXPECT_TRUE(brute_bruhat(g, g.identity(), w, rw));
    EXPECT_TRUE(brute_bruhat(g, w, w, rw));
  }
  // rows: e s0 s1 s0s1 s1s0 w0 (BFS order); entry [x][w] = x <= w
  const std::vector<std::vector<int>> table = {{1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1},
                                               {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}};
  const std::vector<WeylElement> order{g.identity(), word(g, {0}), word(g, {1}), word(g, {0, 1}), word(g, {1, 0}),
                                       word(g, {0, 1, 0})};
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const auto rw = reduced_word(g, order[j]);
      EXPECT_EQ(brute_bruhat(g, order[i], order[j], rw), table[i][j] == 1) << i << "," << j;
      EXPECT_EQ(bruhat_leq(g, order[i], order[j]), table[i][j] == 1) << i << "," << j;
    }
}

TEST(BruteBruhat, RejectsWrongWord) {
  const auto g = group("A2");
  const std::vector<int> not_reduced{0, 0};
  EXPECT_THROW(brute_bruhat(g, g.identity(), g.identity(), not_reduced), ValidationError);
  const std::vector<int> other{1, 0};
  EXPECT_THROW(brute_bruhat(g, g.identity(), word(g, {0, 1}), other), ValidationError);
}

TEST(BruteBruhat, AllPairsSmallGroups) {
  for (const char* name : {"A3", "B3", "C2xA1", "D4"}) {
    const auto g = group(name);
    const auto all = enumerate_group(g);
    BruhatOrder order(g);
    for (const auto& w : all) {
      const auto below = subword_products(g, reduced_word(g, w));
      for (const auto& x : all) ASSERT_EQ(order.leq(x, w), below.count(x) == 1) << name;
    }
  }
}

TEST(BruteDoubleCosets, Examples) {
  auto sizes = [](const std::vector<std::vector<WeylElement>>& classes) {
    std::vector<std::size_t> out;
    for (const auto& c : classes) out.push_back(c.size());
    return out;
  };
  EXPECT_EQ(sizes(brute_double_cosets(group("A2"), {}, {})), std::vector<std::size_t>(6, 1));
  EXPECT_EQ(sizes(brute_double_cosets(group("A2"), TypeSubset{0}, TypeSubset{1})), (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(sizes(brute_double_cosets(group("C2"), TypeSubset{0}, TypeSubset{0})),
            (std::vector<std::size_t>{2, 4, 2}));
}

TEST(BruteDoubleCosets, LeadIsTheUniqueMinimum) {
  const auto g = group("B3");
  for (const auto& cls : brute_double_cosets(g, TypeSubset{0, 2}, TypeSubset{1})) {
    const int min_len = cls.front().length();
    EXPECT_EQ(std::count_if(cls.begin(), cls.end(), [&](const auto& w) { return w.length() == min_len; }), 1);
    for (const auto& w : cls) EXPECT_GE(w.length(), min_len);
  }
}

TEST(VerifyAtlas, PresetsPass) {
  for (const char* preset : {"siegel:1", "siegel:2", "siegel:3", "hilbert:2", "hilbert:3", "gu:1,2:inert",
                             "gu:1,2:split", "gu:2,2:inert", "gu:1,3:inert"}) {
    const auto report = verify_atlas(build_atlas(corpus_preset(preset)));
    EXPECT_TRUE(report.passed()) << preset << "\n" << report_to_text(report);
    EXPECT_GE(report.checks.size(), 10u);
  }
}

TEST(VerifyAtlas, CorruptedDimensionIsReported) {
  Atlas atlas = build_atlas(corpus_preset("siegel:2"));
  atlas.strata[1].dim += 1;
  const auto report = verify_atlas(atlas);
  EXPECT_FALSE(report.passed());
  const auto* dims = report.find("dimensions");
  ASSERT_NE(dims, nullptr);
  EXPECT_FALSE(dims->passed);
  EXPECT_FALSE(dims->counterexample.empty());
}

TEST(VerifyAtlas, CorruptedFiberIsReported) {
  Atlas atlas = build_atlas(corpus_preset("gu:1,2:inert"));
  atlas.strata[1].eo_fiber.pop_back();
  const auto report = verify_atlas(atlas);
  EXPECT_FALSE(report.passed());
  const auto* fiber = report.find("eo-fiber-partition");
  ASSERT_NE(fiber, nullptr);
  EXPECT_FALSE(fiber->passed);
  EXPECT_FALSE(fiber->counterexample.empty());
}

TEST(VerifyAtlas, CorruptedClosureIsReported) {
  Atlas atlas = build_atlas(corpus_preset("siegel:3"));
  atlas.strata.back().closure.erase(atlas.strata.back().closure.begin());
  const auto report = verify_atlas(atlas);
  const auto* closures = report.find("closures");
  ASSERT_NE(closures, nullptr);
  EXPECT_FALSE(closures->passed);
}

TEST(VerifyAtlas, UnknownCheckName) {
  const auto report = verify_atlas(build_atlas(corpus_preset("siegel:1")));
  EXPECT_EQ(report.find("no-such-check"), nullptr);
}
