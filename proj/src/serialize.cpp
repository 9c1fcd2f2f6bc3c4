#include "rtnn/serialize.hpp"

#include "rtnn/error.hpp"

namespace rtnn {

Json to_json(const Mat& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.size(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::ParseError, "matrix must be a nonempty array of rows");
  const int n = static_cast<int>(j.size());
  Mat m(n);
  for (int i = 1; i <= n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i - 1)];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw Error(ErrorCode::ParseError, "row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (int c = 1; c <= n; ++c) {
      const Json& x = row[static_cast<std::size_t>(c - 1)];
      if (x.is_string()) {
        m(i, c) = parse_rat(x.get<std::string>());
      } else if (x.is_number_integer()) {
        m(i, c) = parse_rat(x.dump());
      } else {
        throw Error(ErrorCode::ParseError, "entries must be \"p/q\" strings or integers");
      }
    }
  }
  return m;
}

Json to_json(const BorelPt& b) { return Json{{"borel_rep", to_json(b.rep())}}; }

Json to_json(const Chart& chart) {
  Json j{{"w", to_oneline(chart.index().w)}, {"wp", to_oneline(chart.index().wp)}, {"dim", chart.dim()}};
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Chart::Base>) {
          j["node"] = "base";
          j["point"] = to_json(node.point.rep());
        } else if constexpr (std::is_same_v<T, Chart::Peel>) {
          j["node"] = "peel";
          j["v"] = to_oneline(node.v);
          j["v_word"] = node.word_v.letters;
          j["inner"] = to_json(*node.inner);
        } else {
          j["node"] = "extend";
          j["s"] = node.s;
          j["y_word"] = node.y_word.letters;
          j["inner"] = to_json(*node.inner);
        }
      },
      chart.node());
  return j;
}

Json to_json(const ClassifyResult& result) {
  Json coords = Json::array();
  for (const Rat& a : result.coords) coords.push_back(to_string(a));
  return Json{{"w", to_oneline(result.index.w)},
              {"wp", to_oneline(result.index.wp)},
              {"coords", std::move(coords)},
              {"nonneg", result.nonneg},
              {"reason", result.reason}};
}

Json to_json(const AuditReport& report) {
  Json census = Json::array();
  for (const auto& [idx, dim] : report.cell_census)
    census.push_back(Json{{"w", to_oneline(idx.w)}, {"wp", to_oneline(idx.wp)}, {"dim", dim}});
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json mats = Json::object();
    for (const auto& [name, m] : f.matrices) mats[name] = to_json(m);
    failures.push_back(Json{{"check", f.check}, {"detail", f.detail}, {"matrices", std::move(mats)}});
  }
  return Json{{"n", report.n},
              {"seed", report.seed},
              {"cell_census", std::move(census)},
              {"samples_total", report.samples_total},
              {"samples_passed", report.samples_passed},
              {"failures", std::move(failures)}};
}

}  // namespace rtnn
