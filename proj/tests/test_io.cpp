#include <gtest/gtest.h>

#include "rmds/io.hpp"
#include "support.hpp"

using namespace rmds;

TEST(Io, FieldRoundTrip) {
  const auto s = smallest_field_spec(2, 4);
  const auto j = field_to_json(s);
  EXPECT_EQ(j["p"], 2);
  EXPECT_EQ(j["m"], 4);
  EXPECT_EQ(field_from_json(j), s);
  EXPECT_EQ(field_from_json(json{{"p", 3}, {"m", 2}}), smallest_field_spec(3, 2));
  EXPECT_THROW(field_from_json(json{{"p", 6}}), Error);
  EXPECT_THROW(field_from_json(json{{"p", 2}, {"m", 2}, {"modulus", {1, 0, 1}}}), Error);
}

TEST(Io, MatrixForms) {
  const PrimeField F(7);
  const auto M = test::mat(F, {{1, 2, 3}, {4, 5, 6}});
  const auto j = matrix_to_json(M);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["cols"], 3);
  EXPECT_EQ(j["data"][1][2], 6);
  EXPECT_TRUE(matrix_from_json(F, j) == M);
  EXPECT_TRUE(matrix_from_json(F, j["data"]) == M);
  EXPECT_THROW(matrix_from_json(F, json::parse("[[1,2],[3]]")), Error);
  EXPECT_THROW(matrix_from_json(F, json::parse("[[1,9]]")), Error);
  EXPECT_THROW(matrix_from_json(F, json{{"rows", 3}, {"cols", 3}, {"data", j["data"]}}), Error);
  const auto T = TableField::smallest(2, 2);
  const auto N = test::mat(T, {{0, 1, 2, 3}});
  const auto jt = matrix_to_json(N);
  EXPECT_EQ(jt["data"][0][2], json::parse("[0,1]"));
  EXPECT_TRUE(matrix_from_json(T, jt) == N);
}

TEST(Io, CodeRoundTrip) {
  const auto F = TableField::smallest(3, 2);
  Rng rng(1);
  const Code<TableField> C{F, test::rand_mat(F, 2, 5, rng), "random"};
  const auto j = code_to_json(C);
  EXPECT_EQ(j["n"], 5);
  EXPECT_EQ(j["k"], 2);
  const auto back = code_from_json(TableField(field_from_json(j["field"])), j);
  EXPECT_TRUE(back.G == C.G);
  EXPECT_EQ(back.label, "random");
}

TEST(Io, FamilyAndPattern) {
  const SetFamily f(5, {{0, 3}, {}, {4}});
  const auto jf = family_to_json(f);
  EXPECT_EQ(jf.dump(), R"({"n":5,"sets":[[0,3],[],[4]]})");
  EXPECT_EQ(family_from_json(jf), f);
  const ErasurePattern E(2, 3, {{0, 2}, {1, 0}});
  const auto je = pattern_to_json(E);
  EXPECT_EQ(je.dump(), R"({"m":2,"n":3,"erased":[[0,2],[1,0]]})");
  EXPECT_EQ(pattern_from_json(je), E);
  EXPECT_THROW(pattern_from_json(json::parse(R"({"m":2,"n":3,"erased":[[0]]})")), Error);
}

TEST(Io, ReportReproducibleOmitsTiming) {
  VerificationReport r;
  r.property = "mds";
  r.params["ell"] = 2;
  r.verdict = Verdict::Fails;
  r.witness = Witness{"columns", std::nullopt, std::nullopt, {3}, {}, "zero column"};
  r.wall_ms = 1.5;
  const auto a = report_to_json(r, true), b = report_to_json(r, false);
  EXPECT_FALSE(a.contains("wall_ms"));
  EXPECT_TRUE(b.contains("wall_ms"));
  EXPECT_EQ(a["verdict"], "fails");
  EXPECT_EQ(a["witness"]["indices"][0], 3);
  EXPECT_TRUE(a["log2_error"].is_null());
}

TEST(Io, TraceAndNumbers) {
  FaultyTrace T;
  T.B = {3, 4};
  T.R = {1, 3};
  T.D = {MinorDesc{{0, 1}, {2, 5}}, MinorDesc{{0, 1}, {2, 6}}};
  T.outcome = TraceOutcome::Trace;
  T.seed = 9;
  const auto j = trace_to_json(T);
  EXPECT_EQ(j.dump(),
            R"({"B":[3,4],"R":[1,3],"D":[{"rows":[0,1],"cols":[2,5]},{"rows":[0,1],"cols":[2,6]}],"outcome":"trace","seed":9})");
  EXPECT_EQ(bigint_to_json(BigInt(2097160)), 2097160);
  EXPECT_EQ(bigint_to_json(BigInt(1) << 70), "1180591620717411303424");
}
