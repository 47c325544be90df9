#include <gtest/gtest.h>

#include <map>
#include <set>

#include "skeleton/tableau.hpp"

using namespace skel;

namespace {

// i is a descent of an SYT when i+1 sits in a strictly lower row.
std::vector<int> descents_by_scan(const Tableau& t) {
  std::map<int, int> row_of;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    for (int v : t.rows()[r]) row_of[v] = static_cast<int>(r);
  }
  std::vector<int> out;
  for (int i = 1; i < t.size(); ++i) {
    if (row_of[i + 1] > row_of[i]) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST(Tableau, Predicates) {
  EXPECT_TRUE(Tableau({{1, 1, 2, 5}, {3, 8}, {8}}).is_semistandard());
  EXPECT_FALSE(Tableau({{1, 1, 2, 5}, {3, 8}, {8}}).is_standard());
  EXPECT_TRUE(Tableau({{1, 2, 3, 5}, {4, 7}, {6}}).is_standard());
  EXPECT_FALSE(Tableau({{1, 2}, {1}}).is_semistandard());
  EXPECT_TRUE(Tableau({{1, 2}, {2}}).is_semistandard());
  EXPECT_FALSE(Tableau({{2, 1}}).is_semistandard());
  EXPECT_THROW(Tableau({{1}, {2, 3}}), std::invalid_argument);
  EXPECT_EQ(Tableau({{1, 1, 2, 5}, {3, 8}, {8}}).to_string(), "1125/38/8");
  EXPECT_EQ(Tableau({{1, 1, 2, 5}, {3, 8}, {8}}).max_entry(), 8);
}

TEST(MinimalParsing, WorkedExample) {
  const Tableau t{{1, 1, 2, 5}, {3, 8}, {8}};
  const auto bands = minimal_parsing(t);
  ASSERT_EQ(bands.size(), 3u);
  EXPECT_EQ(bands[0].labels, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(bands[1].labels, (std::vector<int>{3, 5}));
  EXPECT_EQ(bands[2].labels, (std::vector<int>{8, 8}));
  EXPECT_EQ(descent_composition(t), Composition({3, 2, 2}));
  EXPECT_EQ(standardize(t), Tableau({{1, 2, 3, 5}, {4, 7}, {6}}));
  EXPECT_EQ(destandardize(t), Tableau({{1, 1, 1, 2}, {2, 3}, {3}}));
}

TEST(MinimalParsing, BandsAreHorizontalStrips) {
  for (const Tableau& t : semistandard_tableaux(Partition({3, 2, 1}), 4)) {
    int covered = 0;
    for (const Band& b : minimal_parsing(t)) {
      covered += b.size();
      for (int k = 1; k < b.size(); ++k) {
        const Cell prev = b.cells[static_cast<std::size_t>(k - 1)];
        const Cell cur = b.cells[static_cast<std::size_t>(k)];
        EXPECT_LT(prev.col, cur.col) << t.to_string();
        EXPECT_GE(prev.row, cur.row) << t.to_string();
      }
    }
    EXPECT_EQ(covered, t.size());
  }
}

TEST(Standardization, RoundTripsAndDescents) {
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      for (const Tableau& t : semistandard_tableaux(lambda, 3)) {
        const Tableau st = standardize(t);
        ASSERT_TRUE(st.is_standard()) << t.to_string();
        EXPECT_EQ(descent_composition(st), descent_composition(t));
        EXPECT_EQ(standardize(destandardize(t)), st);
        EXPECT_TRUE(is_quasi_yamanouchi(destandardize(t)));
        EXPECT_EQ(weight(destandardize(t)), descent_composition(t));
      }
      for (const Tableau& t : standard_tableaux(lambda)) {
        EXPECT_EQ(standardize(t), t);
        EXPECT_EQ(stats(t).descent_set.members(), descents_by_scan(t)) << t.to_string();
      }
    }
  }
}

TEST(Stats, MajAndDepth) {
  const Tableau t{{1, 2, 3, 5}, {4, 7}, {6}};
  const TableauStats s = stats(t);
  EXPECT_EQ(s.descent_set, IndexSet(7, {3, 5}));
  EXPECT_EQ(s.maj, 8);
  EXPECT_EQ(s.depth, 6);
  EXPECT_FALSE(s.is_quasi_yamanouchi);
  EXPECT_EQ(weight(Tableau({{1, 1, 3}}), 4), Composition({2, 0, 1, 0}));
}

TEST(Enumeration, Counts) {
  // Hook length formula values.
  EXPECT_EQ(standard_tableaux(Partition({3, 2})).size(), 5u);
  EXPECT_EQ(standard_tableaux(Partition({3, 3, 2})).size(), 42u);
  EXPECT_EQ(standard_tableaux(Partition({4, 2, 1})).size(), 35u);
  // Hook content formula values.
  EXPECT_EQ(semistandard_tableaux(Partition({2, 1}), 3).size(), 8u);
  EXPECT_EQ(semistandard_tableaux(Partition({3, 2}), 3).size(), 15u);
  EXPECT_EQ(semistandard_tableaux(Partition({2, 2}), 4).size(), 20u);
  EXPECT_TRUE(semistandard_tableaux(Partition({1, 1, 1}), 2).empty());
  const auto all = standard_tableaux(Partition({3, 2, 1}));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<Tableau>(all.begin(), all.end()).size(), all.size());
}

TEST(Enumeration, QuasiYamanouchiOf32) {
  std::vector<std::string> got;
  for (const Tableau& t : quasi_yamanouchi_tableaux(Partition({3, 2}))) got.push_back(t.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"111/22", "112/22", "112/23", "122/23", "123/23"}));
}

TEST(Enumeration, QuasiYamanouchiBijectsWithStandard) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const auto qy = quasi_yamanouchi_tableaux(lambda);
      const auto st = standard_tableaux(lambda);
      ASSERT_EQ(qy.size(), st.size());
      std::set<Tableau> images;
      for (const Tableau& t : qy) {
        EXPECT_TRUE(is_quasi_yamanouchi(t));
        images.insert(standardize(t));
      }
      EXPECT_EQ(images, std::set<Tableau>(st.begin(), st.end()));
    }
  }
}

TEST(Enumeration, ByWeightAndDescent) {
  const auto by_weight = enumerate(Partition({3, 2}), {EnumerationMode::kWeight, 0, Composition({2, 2, 1})});
  EXPECT_EQ(by_weight.size(), 2u);
  for (const Tableau& t : by_weight) EXPECT_EQ(weight(t, 3), Composition({2, 2, 1}));
  const auto by_des = enumerate(Partition({3, 3, 2}), {EnumerationMode::kDescent, 0, Composition({1, 2, 2, 2, 1})});
  std::vector<std::string> got;
  for (const Tableau& t : by_des) got.push_back(t.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"135/247/68", "135/267/48", "137/258/46"}));
}

TEST(Kostka, QuasiKostkaExample) {
  EXPECT_EQ(quasi_kostka(Partition({3, 3, 2}), Composition({1, 2, 2, 2, 1})), 3);
  EXPECT_EQ(quasi_kostka(Partition({3, 2}), Composition({3, 2})), 1);
  EXPECT_EQ(quasi_kostka(Partition({3, 2}), Composition({2, 3})), 1);
  EXPECT_EQ(quasi_kostka(Partition({3, 2}), Composition({1, 4})), 0);
}

TEST(Kostka, AgainstScanOracle) {
  for (int n = 1; n <= 6; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      std::map<Composition, long long> counts;
      for (const Tableau& t : standard_tableaux(lambda)) {
        std::vector<int> parts;
        int prev = 0;
        for (int d : descents_by_scan(t)) {
          parts.push_back(d - prev);
          prev = d;
        }
        parts.push_back(n - prev);
        ++counts[Composition(parts)];
      }
      for (const Composition& a : compositions_of(n)) {
        EXPECT_EQ(quasi_kostka(lambda, a), counts.count(a) ? counts[a] : 0) << lambda.to_string() << " " << a.to_string();
      }
    }
  }
}

TEST(Kostka, Values) {
  EXPECT_EQ(kostka(Partition({2, 1}), Composition({1, 1, 1})), 2);
  EXPECT_EQ(kostka(Partition({3, 2}), Composition({2, 2, 1})), 2);
  EXPECT_EQ(kostka(Partition({2, 2}), Composition({1, 1, 1, 1})), 2);
  EXPECT_EQ(kostka(Partition({3, 2}), Composition({3, 2})), 1);
  EXPECT_EQ(kostka(Partition({3, 2}), Composition({2, 3})), 1);
  EXPECT_EQ(kostka(Partition({2, 2}), Composition({3, 1})), 0);
  EXPECT_EQ(kostka(Partition({2, 1}), Composition({1, 0, 2})), 1);
}

TEST(SpecialTableaux, Superstandard) {
  EXPECT_EQ(superstandard_tableau(Partition({3, 2})), Tableau({{1, 1, 1}, {2, 2}}));
  for (int n = 1; n <= 7; ++n) {
    for (const Partition& lambda : partitions_of(n)) {
      const SpecialTableaux s = special_tableaux(lambda);
      EXPECT_EQ(s.superstandard, s.supersemistandard);
      EXPECT_EQ(descent_composition(s.superstandard), lambda.as_composition());
      EXPECT_TRUE(is_quasi_yamanouchi(s.anti_supersemistandard)) << lambda.to_string();
      EXPECT_EQ(descent_composition(s.anti_supersemistandard), lambda_bar(lambda)) << lambda.to_string();
    }
  }
}

TEST(SpecialTableaux, AntiSupersemistandard) {
  EXPECT_EQ(anti_supersemistandard_tableau(Partition({3, 3, 1})), Tableau({{1, 3, 4}, {2, 4, 5}, {3}}));
  EXPECT_EQ(anti_supersemistandard_tableau(Partition({2, 2})), Tableau({{1, 2}, {2, 3}}));
  EXPECT_EQ(anti_supersemistandard_tableau(Partition({1, 1, 1})), Tableau({{1}, {2}, {3}}));
}
