#include <gtest/gtest.h>

#include <filesystem>

#include "forestbound/io.hpp"
#include "forestbound/pruning.hpp"
#include "support/fixtures.hpp"

namespace forestbound::io {
namespace {

constexpr std::string_view kExample = R"({
  "m": 25,
  "atom_sizes": [2, 2, 6, 6, 4, 1, 1, 3],
  "regions": [
    {"i": 1, "j": 5, "zeta": 6},
    {"i": 6, "j": 7, "zeta": 2},
    {"i": 8, "j": 8, "zeta": 3},
    {"i": 1, "j": 1, "zeta": 2},
    {"i": 2, "j": 3, "zeta": 1},
    {"i": 4, "j": 5, "zeta": 4},
    {"i": 6, "j": 6, "zeta": 1},
    {"i": 7, "j": 7, "zeta": 0},
    {"i": 2, "j": 2, "zeta": 2},
    {"i": 3, "j": 3, "zeta": 4},
    {"i": 4, "j": 4, "zeta": 2},
    {"i": 5, "j": 5, "zeta": 3}
  ]
}
)";

TEST(ForestJson, CanonicalRoundTripIsByteIdentical) {
  const ForestFamily f = parse_forest(kExample);
  EXPECT_EQ(f.specs(), testing::example_complete().specs());
  EXPECT_EQ(serialize_forest(f), kExample);
  EXPECT_EQ(serialize_forest(parse_forest(serialize_forest(f))), kExample);
}

TEST(ForestJson, AnyRegionOrderParsesToCanonicalForm) {
  const std::string shuffled = R"({"m": 3, "atom_sizes": [1, 2],
    "regions": [{"i": 2, "j": 2, "zeta": 1}, {"i": 1, "j": 2, "zeta": 2}]})";
  EXPECT_EQ(serialize_forest(parse_forest(shuffled)),
            "{\n  \"m\": 3,\n  \"atom_sizes\": [1, 2],\n  \"regions\": [\n"
            "    {\"i\": 1, \"j\": 2, \"zeta\": 2},\n    {\"i\": 2, \"j\": 2, \"zeta\": 1}\n  ]\n}\n");
}

TEST(ForestJson, PrunedFamilySerializesLiveRegionsOnly) {
  const PruneResult r = prune(testing::example_complete());
  const std::string text = serialize_forest(r.pruned_family);
  EXPECT_EQ(text.find("\"i\": 6, \"j\": 7"), std::string::npos);
  EXPECT_EQ(parse_forest(text).size(), 11u);
}

TEST(ForestJson, RandomRoundTrips) {
  testing::Rng rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const ForestFamily f = testing::random_family(rng, {.max_atoms = 10, .max_m = 50, .complete = iter % 2 == 0});
    const std::string text = serialize_forest(f);
    EXPECT_EQ(serialize_forest(parse_forest(text)), text);
  }
}

TEST(ForestJson, FormatAndValidationErrors) {
  EXPECT_THROW(parse_forest("{"), FormatError);
  EXPECT_THROW(parse_forest("[]"), FormatError);
  EXPECT_THROW(parse_forest(R"({"m": 2, "atom_sizes": [2]})"), FormatError);
  EXPECT_THROW(parse_forest(R"({"m": 2, "atom_sizes": [2], "regions": [{"i": 1, "j": 1}]})"),
               FormatError);
  EXPECT_THROW(parse_forest(R"({"m": 2.5, "atom_sizes": [2], "regions": []})"), FormatError);
  EXPECT_THROW(parse_forest(R"({"m": 3, "atom_sizes": [2], "regions": []})"), SizeMismatchError);
  EXPECT_THROW(
      parse_forest(R"({"m": 2, "atom_sizes": [1, 1], "regions": [{"i": 1, "j": 1, "zeta": 2}]})"),
      ZetaRangeError);
}

TEST(HypothesisCsv, RoundTripAndErrors) {
  const std::vector<Hypothesis> h{3, 1, 2};
  const std::string text = serialize_hypotheses(h);
  EXPECT_EQ(text, "hypothesis_index\n3\n1\n2\n");
  EXPECT_EQ(parse_hypotheses(text), h);
  EXPECT_EQ(parse_hypotheses("hypothesis_index\r\n4\r\n5\r\n"), (std::vector<Hypothesis>{4, 5}));
  EXPECT_THROW(parse_hypotheses("index\n1\n"), FormatError);
  EXPECT_THROW(parse_hypotheses("hypothesis_index\n1x\n"), FormatError);
  EXPECT_THROW(parse_hypotheses(""), FormatError);
}

TEST(PvalueCsv, RoundTripIsExact) {
  const std::vector<double> p{0.1, 1e-300, 0.123456789012345678, 1.0, 0.0};
  const std::string text = serialize_pvalues(p);
  EXPECT_EQ(text.substr(0, 8), "p_value\n");
  EXPECT_EQ(parse_pvalues(text), p);
  EXPECT_THROW(parse_pvalues("p_value\nabc\n"), FormatError);
}

TEST(Reports, CurveAndRemovedCsv) {
  const SelectionPath path({2, 1}, 2);
  EXPECT_EQ(curve_csv(BoundCurve{{0, 0, 1}}, path),
            "t,hypothesis_index,V_t,fdp_bound\n1,2,0,0\n2,1,1,0.5\n");
  const std::vector<RegionKey> removed{{6, 7}};
  EXPECT_EQ(removed_csv(removed), "i,j\n6,7\n");
  EXPECT_EQ(format_decimal(0.1), "0.10000000000000001");
  EXPECT_EQ(format_decimal(1.0), "1");
}

TEST(Files, ReadWriteAndMissingFile) {
  const auto dir = std::filesystem::temp_directory_path() / "forestbound_io_test";
  std::filesystem::create_directories(dir);
  write_file(dir / "a.txt", "hello\n");
  EXPECT_EQ(read_file(dir / "a.txt"), "hello\n");
  EXPECT_THROW(read_file(dir / "missing.txt"), IoError);
  EXPECT_THROW(write_file(dir / "no" / "such" / "dir.txt", "x"), IoError);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace forestbound::io
