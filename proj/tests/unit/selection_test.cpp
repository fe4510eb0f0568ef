#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "boostdms/selection.hpp"
#include "oracles.hpp"

using namespace boostdms;

namespace {

Archive make_archive(const std::vector<std::vector<double>>& fs, const std::vector<double>& alphas) {
  Archive a(1e-6);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    ObjVector f(static_cast<Eigen::Index>(fs[i].size()));
    for (std::size_t c = 0; c < fs[i].size(); ++c) f[static_cast<Eigen::Index>(c)] = fs[i][c];
    EXPECT_TRUE(a.insert({Vec::Constant(1, static_cast<double>(i)), f, alphas[i]}));
  }
  return a;
}

// (0,1), (5,0.9), (10,0): component 0 has the larger raw gaps, component 1 the larger relative one.
Archive skewed(std::vector<double> alphas = {1.0, 1.0, 1.0}) {
  return make_archive({{0, 1}, {5, 0.9}, {10, 0}}, alphas);
}

}  // namespace

TEST(Selection, RankedGapsExample) {
  const auto a = make_archive({{0, 3}, {1, 2}, {4, 0}}, {0.5, 0.5, 1.0});
  const auto gaps = ranked_gaps(a, GapMode::Raw);
  ASSERT_EQ(gaps.size(), 4u);
  EXPECT_EQ(gaps[0].size, 3.0);
  EXPECT_EQ(gaps[0].component, 0);
  EXPECT_EQ(gaps[0].lower, 1u);
  EXPECT_EQ(gaps[0].upper, 2u);
  EXPECT_EQ(gaps[1].size, 2.0);
  EXPECT_EQ(gaps[1].component, 1);
  // Of the two ends of the widest gap, the one with the larger stepsize.
  EXPECT_EQ(gamma_gap_select(a, GapMode::Raw), 2u);
  // Normalized: f1 gaps {0.25, 0.75}, f2 gaps {2/3, 1/3}; f1 still wins.
  const auto norm = ranked_gaps(a, GapMode::Normalized);
  EXPECT_EQ(norm[0].size, 0.75);
  EXPECT_EQ(norm[0].component, 0);
  EXPECT_EQ(gamma_gap_select(a, GapMode::Normalized), 2u);
}

TEST(Selection, NormalizationChangesTheWinningGap) {
  const auto a = skewed();
  EXPECT_EQ(gamma_gap_select(a, GapMode::Raw), 0u);         // gap 5 on f1, ties to the lower index
  EXPECT_EQ(gamma_gap_select(a, GapMode::Normalized), 1u);  // gap 0.9 of 1 on f2
}

TEST(Selection, CyclicRotatesComponents) {
  const auto a = skewed();
  EXPECT_EQ(select_iterates(a, SelectionKind::GammaCyclic, 0), std::vector<std::size_t>{0});
  EXPECT_EQ(select_iterates(a, SelectionKind::GammaCyclic, 1), std::vector<std::size_t>{1});
  EXPECT_EQ(select_iterates(a, SelectionKind::GammaCyclic, 2), std::vector<std::size_t>{0});
  EXPECT_THROW(ranked_gaps(a, GapMode::Cyclic, 2), std::invalid_argument);
}

TEST(Selection, SmallStepsizesAreSkipped) {
  const auto a = skewed({1e-4, 1e-4, 1.0});
  EXPECT_EQ(select_iterates(a, SelectionKind::GammaMaxGap, 0, 1e-3), std::vector<std::size_t>{2});
  const auto done = skewed({1e-4, 1e-4, 1e-4});
  EXPECT_TRUE(select_iterates(done, SelectionKind::GammaMaxGap, 0, 1e-3).empty());
}

TEST(Selection, MultiCenterVariants) {
  const auto a = skewed();
  // Best f1, best f2, then the ends of the widest f1 gap without repeats.
  EXPECT_EQ(select_iterates(a, SelectionKind::MultiCenterSpreadPlusBest, 0), (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(select_iterates(a, SelectionKind::MultiCenterSpreadOrBest, 0), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(select_iterates(a, SelectionKind::MultiCenterSpreadOrBest, 1), (std::vector<std::size_t>{0, 2}));
}

TEST(Selection, SingleEntryAndEmpty) {
  const auto one = make_archive({{1, 1}}, {1.0});
  EXPECT_EQ(gamma_gap_select(one, GapMode::Raw), 0u);
  for (auto kind : {SelectionKind::GammaMaxGap, SelectionKind::MultiCenterSpreadPlusBest}) {
    EXPECT_EQ(select_iterates(one, kind, 0), std::vector<std::size_t>{0});
  }
  EXPECT_THROW(select_iterates(Archive(1e-3), SelectionKind::GammaMaxGap, 0), std::invalid_argument);
}

// Properties on random fronts: gaps are sorted and complete, the selected
// iterate ends the widest eligible gap, multicenter picks are distinct and bounded.
TEST(Selection, RandomArchiveProperties) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 2 + static_cast<std::size_t>(trial % 3);
    const std::size_t size = 2 + static_cast<std::size_t>(trial % 17);
    const auto front = oracle::random_front(size, q, rng);
    std::vector<double> alphas;
    for (std::size_t i = 0; i < size; ++i) alphas.push_back(std::ldexp(1.0, -3 * pick(rng)));
    const auto a = make_archive(front, alphas);

    const auto gaps = ranked_gaps(a, GapMode::Raw);
    ASSERT_EQ(gaps.size(), q * (size - 1));
    for (std::size_t j = 1; j < gaps.size(); ++j) EXPECT_GE(gaps[j - 1].size, gaps[j].size);
    const auto chosen = gamma_gap_select(a, GapMode::Raw);
    EXPECT_TRUE(chosen == gaps[0].lower || chosen == gaps[0].upper);

    const double min_alpha = 0.01;
    for (auto kind : {SelectionKind::GammaMaxGap, SelectionKind::GammaNormalized, SelectionKind::GammaCyclic,
                      SelectionKind::MultiCenterSpreadPlusBest, SelectionKind::MultiCenterSpreadOrBest}) {
      for (std::size_t it = 0; it < 4; ++it) {
        const auto sel = select_iterates(a, kind, it, min_alpha);
        EXPECT_LE(sel.size(), q + 2);
        auto sorted = sel;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
        for (auto i : sel) {
          ASSERT_LT(i, a.size());
          EXPECT_GE(a[i].alpha, min_alpha);
        }
        const bool any_eligible = std::any_of(alphas.begin(), alphas.end(), [&](double s) { return s >= min_alpha; });
        EXPECT_EQ(sel.empty(), !any_eligible);
      }
    }
  }
}
