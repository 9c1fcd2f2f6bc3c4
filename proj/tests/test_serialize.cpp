#include "doctest.h"
#include "rtnn/error.hpp"
#include "rtnn/serialize.hpp"

using namespace rtnn;

namespace {

ErrorCode code_of(const Json& j) {
  try {
    mat_from_json(j);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_SUITE("serialize") {

TEST_CASE("matrix round trip") {
  const Mat m{{Rat(1, 2), Rat(-3)}, {Rat(0), Rat(7, 9)}};
  const Json j = to_json(m);
  CHECK(j.dump() == R"([["1/2","-3"],["0","7/9"]])");
  CHECK(mat_from_json(j) == m);
  CHECK(mat_from_json(Json::parse("[[1,0],[-1,1]]")) == Mat{{1, 0}, {-1, 1}});
  CHECK(mat_from_json(Json::parse(R"([["4/2","0"],["0","1/2"]])"))(1, 1) == 2);
}

TEST_CASE("matrix parse errors") {
  CHECK(code_of(Json::parse("[]")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse("{}")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse("[[1,2],[3]]")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse("[[1,2,3],[3,4,5]]")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse(R"([["1/0","0"],["0","1"]])")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse(R"([["x","0"],["0","1"]])")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse("[[1.5,0],[0,1]]")) == ErrorCode::ParseError);
  CHECK(code_of(Json::parse("[[true,0],[0,1]]")) == ErrorCode::ParseError);
}

TEST_CASE("borel point") {
  const Json j = to_json(borel_minus(2));
  CHECK(j.dump() == R"({"borel_rep":[["0","-1"],["1","0"]]})");
  CHECK(borel_from(mat_from_json(j["borel_rep"])) == borel_minus(2));
}

TEST_CASE("chart") {
  const ChartPtr c = default_chart_cache().get(WeylElt::identity(2), WeylElt{2, 1});
  const Json j = to_json(*c);
  CHECK(j["w"] == "1,2");
  CHECK(j["wp"] == "2,1");
  CHECK(j["node"] == "extend");
  CHECK(j["s"] == 1);
  CHECK(j["dim"] == 1);
  CHECK(j["inner"]["node"] == "base");
  CHECK(j["inner"]["w"] == "1,2");
  CHECK(j["inner"]["wp"] == "1,2");

  // nesting depth matches the shape string
  const ChartPtr big = default_chart_cache().get(WeylElt{1, 3, 2, 4}, WeylElt{4, 3, 2, 1});
  Json cur = to_json(*big);
  int nodes = 1;
  while (cur["node"] != "base") {
    Json next = cur["inner"];
    cur = std::move(next);
    ++nodes;
  }
  CHECK(nodes == static_cast<int>((big->shape().size() + 1) / 2));
}

TEST_CASE("classify result") {
  const ClassifyResult r = classify(borel_from(Mat{{1, 0}, {-1, 1}}));
  CHECK(to_json(r).dump() == R"({"coords":["-1"],"nonneg":false,"reason":"nonpositive_coordinate","w":"1,2","wp":"2,1"})");
  const ClassifyResult p = classify(borel_plus(2));
  CHECK(to_json(p).dump() == R"({"coords":[],"nonneg":true,"reason":"ok","w":"2,1","wp":"2,1"})");
}

TEST_CASE("audit report keys") {
  AuditReport r;
  r.n = 2;
  r.seed = 5;
  r.cell_census.emplace_back(CellIndex{WeylElt::identity(2), WeylElt{2, 1}}, 1);
  r.samples_total = 3;
  r.samples_passed = 2;
  r.failures.push_back({"round_trip", "mismatch", {{"g", Mat::identity(2)}}});
  const Json j = to_json(r);
  CHECK(j.dump() ==
        R"({"cell_census":[{"dim":1,"w":"1,2","wp":"2,1"}],"failures":[{"check":"round_trip","detail":"mismatch",)"
        R"("matrices":{"g":[["1","0"],["0","1"]]}}],"n":2,"samples_passed":2,"samples_total":3,"seed":5})");
}

}
