#include <gtest/gtest.h>

#include <set>

#include "skeleton/rsk.hpp"

using namespace skel;

namespace {

std::vector<int> one_line_descents(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int inversions_by_pairs(const Word& w) {
  int c = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  }
  return c;
}

}  // namespace

TEST(Permutation, Basics) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  const Permutation w({3, 1, 2});
  EXPECT_EQ(w(1), 3);
  EXPECT_EQ(w.inverse(), Permutation({2, 3, 1}));
  EXPECT_FALSE(w.is_involution());
  EXPECT_TRUE(Permutation({2, 1, 4, 3}).is_involution());
  EXPECT_EQ(Permutation::identity(3), Permutation({1, 2, 3}));
  EXPECT_EQ(permutations_of(4).size(), 24u);
  EXPECT_EQ(permutations_of(3).front(), Permutation::identity(3));
  EXPECT_TRUE(is_permutation({2, 3, 1}));
  EXPECT_FALSE(is_permutation({2, 3}));
}

TEST(Rsk, Permutation2143) {
  const RskPair pq = rsk(Permutation({2, 1, 4, 3}));
  EXPECT_EQ(pq.insertion, Tableau({{1, 3}, {2, 4}}));
  EXPECT_EQ(pq.recording, Tableau({{1, 3}, {2, 4}}));
}

TEST(Rsk, WordInsertion) {
  const RskPair pq = rsk(Word{2, 2, 1, 3, 1});
  EXPECT_EQ(pq.insertion, Tableau({{1, 1, 3}, {2, 2}}));
  EXPECT_TRUE(pq.insertion.is_semistandard());
  EXPECT_TRUE(pq.recording.is_standard());
  EXPECT_EQ(rsk_inverse(pq.insertion, pq.recording), (Word{2, 2, 1, 3, 1}));
  EXPECT_TRUE(rsk(Word{}).insertion.empty());
}

TEST(Rsk, RoundTripAndShapes) {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::pair<Tableau, Tableau>> images;
    for (const Permutation& w : permutations_of(n)) {
      const RskPair pq = rsk(w);
      ASSERT_EQ(pq.insertion.shape(), pq.recording.shape());
      ASSERT_TRUE(pq.insertion.is_standard());
      ASSERT_TRUE(pq.recording.is_standard());
      EXPECT_EQ(rsk_inverse(pq.insertion, pq.recording), w.word());
      images.insert({pq.insertion, pq.recording});
    }
    EXPECT_EQ(images.size(), permutations_of(n).size());
  }
  EXPECT_THROW(rsk_inverse(Tableau({{1, 2}}), Tableau({{1}, {2}})), std::invalid_argument);
}

TEST(Rsk, RecordingDescentsAreOneLineDescents) {
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& w : permutations_of(n)) {
      const PermutationStats s = perm_stats(w);
      ASSERT_EQ(s.descent_composition, descent_composition(rsk(w).recording));
      ASSERT_EQ(comp_to_set(s.descent_composition).members(), one_line_descents(w.word())) << w.to_string();
      ASSERT_EQ(s.left_descents.members(), one_line_descents(w.inverse().word())) << w.to_string();
      ASSERT_EQ(s.inversions, inversions_by_pairs(w.word()));
    }
  }
}

TEST(Rsk, Symmetry) {
  for (int n = 1; n <= 7; ++n) EXPECT_TRUE(symmetry_check(n)) << n;
}

TEST(Charge, WorkedExample) {
  const Permutation w({5, 7, 8, 4, 1, 3, 6, 2});
  EXPECT_EQ(left_descents(w), IndexSet(8, {2, 3, 4, 6}));
  EXPECT_EQ(charge(w), 17);
  EXPECT_EQ(perm_stats(w).charge, 17);
  EXPECT_EQ(depth(perm_stats(w.inverse()).descent_composition), 17);
  EXPECT_EQ(inversions(w), inversions_by_pairs(w.word()));
}

TEST(Charge, EqualsDepthOfInverse) {
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& w : permutations_of(n)) {
      ASSERT_EQ(charge(w), perm_stats(w.inverse()).depth) << w.to_string();
    }
  }
}

TEST(Stats, Identity) {
  const PermutationStats s = perm_stats(Permutation::identity(4));
  EXPECT_EQ(s.descent_composition, Composition({4}));
  EXPECT_EQ(s.maj, 0);
  EXPECT_EQ(s.depth, 0);
  EXPECT_EQ(s.charge, 0);
  EXPECT_EQ(s.inversions, 0);
  EXPECT_TRUE(s.is_involution);
  const PermutationStats r = perm_stats(Permutation({4, 3, 2, 1}));
  EXPECT_EQ(r.maj, 6);
  EXPECT_EQ(r.depth, 6);
  EXPECT_EQ(r.charge, 6);
  EXPECT_EQ(r.inversions, 6);
}
