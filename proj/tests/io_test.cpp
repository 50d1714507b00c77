#include "csurg/bundled.hpp"
#include "csurg/error.hpp"
#include "csurg/io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace csurg;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(std::string(CSURG_DATA_DIR) + "/" + name, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Error error_of(std::string_view text) {
  try {
    parse_diagram(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorKind::SelfTestFailure, "");
}

SurgeryDiagram random_diagram(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(0, 5);
  std::uniform_int_distribution<int> small(-6, 6);
  std::uniform_int_distribution<int> chi_dist(-5, 1);
  std::uniform_int_distribution<int> coef_kind(0, 3);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> amb(0, 2);
  const int n = size_dist(rng);
  std::vector<SurgeryComponent> comps;
  for (int i = 0; i < n; ++i) {
    SurgeryComponent c;
    c.knot = {"K" + std::to_string(i), small(rng), small(rng), chi_dist(rng)};
    if (coef_kind(rng) != 0) {
      int p = 0;
      while (p == 0) p = num(rng);
      c.contact_coefficient = Rational(p, den(rng));
    }
    comps.push_back(c);
  }
  LinkingTable lk(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lk[i][j] = lk[j][i] = small(rng);
  return SurgeryDiagram(static_cast<AmbientStatus>(amb(rng)), comps, lk, n % 2 ? "random" : "");
}

}  // namespace

TEST(Io, DataFilesMatchBundledDiagrams) {
  EXPECT_EQ(read_file("figure1.json"), bundled::figure1_json());
  EXPECT_EQ(read_file("s1xs2.json"), bundled::s1xs2_json());
  EXPECT_EQ(serialize_diagram(bundled::figure1()), bundled::figure1_json());
  EXPECT_EQ(serialize_diagram(bundled::s1xs2()), bundled::s1xs2_json());
}

TEST(Io, Figure1Matrices) {
  const SurgeryDiagram d = parse_diagram_file(std::string(CSURG_DATA_DIR) + "/figure1.json");
  EXPECT_EQ(d.ambient(), AmbientStatus::Tight);
  const GeneralMatrices g = build_general_matrices(d, 0);
  EXPECT_EQ(g.linking, SquareMatrix({{0, -1}, {-1, -2}}));
  EXPECT_EQ(g.extended, SquareMatrix({{0, -1, 0}, {-1, 0, -1}, {0, -1, -2}}));
}

TEST(Io, AsymmetricLinkingIsValidationError) {
  const Error e = error_of(R"({"ambient":"tight","components":[
    {"id":"A","tb":-1,"rot":0,"euler_char":1,"contact_coefficient":"-1"},
    {"id":"B","tb":-1,"rot":0,"euler_char":1,"contact_coefficient":"-1"}],
    "linking":[[0,1],[2,0]]})");
  EXPECT_EQ(e.kind(), ErrorKind::ValidationError);
  EXPECT_NE(std::string(e.what()).find("linking[0][1]"), std::string::npos) << e.what();
}

TEST(Io, ParseErrorsNameTheField) {
  struct Case {
    const char* text;
    const char* field;
  };
  const Case cases[] = {
      {"{", "malformed"},
      {R"({"components":[],"linking":[]})", "ambient"},
      {R"({"ambient":"tight","components":[{"id":"A","tb":"x","rot":0,"euler_char":1,"contact_coefficient":null}],"linking":[[0]]})",
       "components[0].tb"},
      {R"({"ambient":"tight","components":[{"id":"A","tb":-1,"rot":0,"euler_char":1,"contact_coefficient":"1/0"}],"linking":[[0]]})",
       "components[0].contact_coefficient"},
      {R"({"ambient":"tight","components":[{"id":"A","tb":-1,"rot":0,"euler_char":1,"contact_coefficient":2}],"linking":[[0]]})",
       "components[0].contact_coefficient"},
      {R"({"ambient":"tight","components":[{"id":"A","tb":-1,"rot":0,"euler_char":1}],"linking":[[0]]})",
       "contact_coefficient"},
      {R"({"ambient":"tight","components":[],"linking":[[0.5]]})", "linking[0][0]"},
  };
  for (const auto& c : cases) {
    const Error e = error_of(c.text);
    EXPECT_EQ(e.kind(), ErrorKind::ParseError) << c.text;
    EXPECT_NE(std::string(e.what()).find(c.field), std::string::npos) << e.what();
  }
}

TEST(Io, UnknownAmbientRejected) {
  const Error e = error_of(R"({"ambient":"wobbly","components":[],"linking":[]})");
  EXPECT_TRUE(e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::ValidationError);
}

TEST(Io, RoundTripRandomDiagrams) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const SurgeryDiagram d = random_diagram(rng);
    const std::string text = serialize_diagram(d);
    const SurgeryDiagram back = parse_diagram(text);
    ASSERT_EQ(back, d) << text;
    ASSERT_EQ(serialize_diagram(back), text);
  }
}

TEST(Io, VerdictAndInvariantsJson) {
  const Json inv = to_json(dual_invariants_closed_form(-2, 1, 1, 3));
  EXPECT_EQ(inv["tb_q"], "2/5");
  EXPECT_EQ(inv["rot_q"], "-1/5");
  EXPECT_EQ(inv["order"], "5");
}
