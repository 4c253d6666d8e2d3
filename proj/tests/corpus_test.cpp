#include <gtest/gtest.h>

#include "mltt/corpus.hpp"
#include "support.hpp"

namespace mltt {
namespace {

CorpusReport run_tier(const std::string& tier) {
  CorpusReport r;
  testing::deep([&] { r = run_corpus(load_manifest(testing::manifest_path()), tier); });
  return r;
}

TEST(Manifest, Parses) {
  auto entries = parse_manifest("# comment\na.mltt\ttier1\taccept\nb.mltt\tneg\treject:NotAPair\t-\t-\t-\tx.mltt,y.mltt\n"
                                "c.mltt\ttier1\tnormal-form\tn\t2\tunsafe\n",
                                "/base");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].path, "/base/a.mltt");
  EXPECT_EQ(entries[1].reject_class, ErrorClass::NotAPair);
  EXPECT_EQ(entries[1].preludes, (std::vector<std::string>{"/base/x.mltt", "/base/y.mltt"}));
  EXPECT_EQ(entries[2].expect, CorpusEntry::Expect::NormalForm);
  EXPECT_EQ(entries[2].mode, CorpusEntry::Mode::Unsafe);
  EXPECT_THROW(parse_manifest("a.mltt\ttier1\treject:Bogus\n", "/"), std::runtime_error);
}

TEST(Manifest, HarnessNoticesAWrongExpectation) {
  auto entries = load_manifest(testing::manifest_path());
  for (auto& e : entries) {
    if (e.path.find("neg/one-is-zero.mltt") != std::string::npos) e.reject_class = ErrorClass::NotAPair;
  }
  CorpusReport r;
  testing::deep([&] { r = run_corpus(entries, "neg"); });
  EXPECT_FALSE(r.all_passed());
}

class Tier : public ::testing::TestWithParam<std::string> {};

TEST_P(Tier, MatchesGolden) {
  CorpusReport r = run_tier(GetParam());
  EXPECT_FALSE(r.rows.empty());
  EXPECT_TRUE(r.all_passed()) << r.text;
  std::cout << r.text;
}

INSTANTIATE_TEST_SUITE_P(Corpus, Tier, ::testing::Values("tier1", "tier2", "tier3", "neg"));

}  // namespace
}  // namespace mltt
