#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "ulam/ulam.hpp"

using namespace ulam;

TEST(Path, Validation) {
  EXPECT_THROW(LatticePath("N"), std::invalid_argument);
  EXPECT_THROW(LatticePath("ENN"), std::invalid_argument);
  EXPECT_THROW(LatticePath("EX"), std::invalid_argument);
  EXPECT_NO_THROW(LatticePath(""));
  const LatticePath p("EENENNE");
  EXPECT_EQ(p.east(), 4);
  EXPECT_EQ(p.north(), 3);
  EXPECT_TRUE(p.in_class(7, 4));
}

TEST(Path, TableauExamples) {
  EXPECT_EQ(tableau_to_path(parse_tableau("1,2,3,4")).steps(), "EEEE");
  EXPECT_EQ(tableau_to_path(parse_tableau("1,3,4,5,6,7/2")).steps(), "ENEEEEE");
  EXPECT_EQ(path_to_tableau(LatticePath("ENEEEEE")), parse_tableau("1,3,4,5,6,7/2"));
  EXPECT_EQ(path_to_tableau(LatticePath("EEEE")), parse_tableau("1,2,3,4"));
  EXPECT_THROW(tableau_to_path(parse_tableau("1/2/3")), std::domain_error);
}

TEST(Path, BijectionWithTwoRowTableaux) {
  for (int n = 1; n <= 10; ++n) {
    for (int k = (n + 1) / 2; k <= n; ++k) {
      const auto ps = paths(n, k);
      ASSERT_EQ(ps.size(), oracle::count_ballot_paths(n, k));
      std::size_t tableaux = 0;
      for_each_tableau(n, k, [&](const Tableau& t) {
        if (t.row_count() > 2) return;
        ++tableaux;
        ASSERT_EQ(path_to_tableau(tableau_to_path(t)), t);
      });
      ASSERT_EQ(tableaux, ps.size());
      for (const auto& p : ps) {
        ASSERT_TRUE(p.in_class(n, k));
        ASSERT_EQ(tableau_to_path(path_to_tableau(p)), p);
      }
      ASSERT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    }
  }
}

TEST(Path, CountsMatchClosedForm) {
  const ClassLabel a{ClassKind::two_row_involutions};
  for (int n = 1; n <= 14; ++n) {
    for (int k = (n + 1) / 2; k <= n; ++k) {
      // a(n,k) = C(n,k) (2k - n + 1) / (k + 1)
      const auto expect = oracle::binom(n, k) * (2 * k - n + 1) / (k + 1);
      ASSERT_EQ(paths(n, k).size(), expect);
      ASSERT_EQ(closed_form(a, n, k), expect);
    }
  }
}

TEST(Flip, WorkedExample) {
  const auto r = flip_inject(LatticePath("EENENNE"), LatticePath("ENEEEEE"));
  EXPECT_EQ(r.first.steps(), "EENENEE");
  EXPECT_EQ(r.second.steps(), "ENEEENE");
  const auto back = flip_preimage(LatticePath("EENENEE"), LatticePath("ENEEENE"));
  ASSERT_TRUE(back);
  EXPECT_EQ(back->first.steps(), "EENENNE");
  EXPECT_EQ(back->second.steps(), "ENEEEEE");
}

TEST(Flip, Preconditions) {
  EXPECT_THROW(flip_inject(LatticePath("EENN"), LatticePath("EEEN")), std::domain_error);
  EXPECT_THROW(flip_inject(LatticePath("EEEN"), LatticePath("EEEN")), std::domain_error);
  EXPECT_THROW(flip_preimage(LatticePath("EEE"), LatticePath("EEN")), std::domain_error);
  EXPECT_FALSE(flip_preimage(LatticePath("EEEE"), LatticePath("EEEE")));
}

TEST(Flip, SmallCase) {
  const auto r = flip_inject(LatticePath("ENEN"), LatticePath("EEEE"));
  const auto o = oracle::flip("ENEN", "EEEE");
  ASSERT_TRUE(o);
  EXPECT_EQ(r.first.steps(), o->first);
  EXPECT_EQ(r.second.steps(), o->second);
  EXPECT_TRUE(r.first.in_class(4, 3));
}

TEST(Flip, ExhaustiveAgainstPointSetOracle) {
  for (int n = 2; n <= 11; ++n) {
    for (int k = (n + 1) / 2; k <= n - 2; ++k) {
      std::set<PathPair> images;
      const auto ps = paths(n, k);
      const auto qs = paths(n, k + 2);
      for (const auto& p : ps) {
        for (const auto& q : qs) {
          const auto r = flip_inject(p, q);
          const auto o = oracle::flip(p.steps(), q.steps());
          ASSERT_TRUE(o);
          ASSERT_EQ(r.first.steps(), o->first);
          ASSERT_EQ(r.second.steps(), o->second);
          ASSERT_TRUE(r.first.in_class(n, k + 1));
          ASSERT_TRUE(r.second.in_class(n, k + 1));
          const auto back = flip_preimage(r.first, r.second);
          ASSERT_TRUE(back);
          ASSERT_EQ(back->first, p);
          ASSERT_EQ(back->second, q);
          images.insert(r);
        }
      }
      ASSERT_EQ(images.size(), ps.size() * qs.size()) << n << " " << k;
    }
  }
}

TEST(Flip, PreimageRejectsPairsOutsideImage) {
  for (int n = 4; n <= 9; ++n) {
    for (int k = (n + 1) / 2; k <= n - 2; ++k) {
      std::set<PathPair> images;
      for (const auto& p : paths(n, k)) {
        for (const auto& q : paths(n, k + 2)) images.insert(flip_inject(p, q));
      }
      const auto rs = paths(n, k + 1);
      for (const auto& r : rs) {
        for (const auto& s : rs) {
          ASSERT_EQ(flip_preimage(r, s).has_value(), images.contains(PathPair{r, s}));
        }
      }
    }
  }
}
