#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "rtnn/audit.hpp"
#include "rtnn/cli.hpp"
#include "rtnn/error.hpp"
#include "rtnn/richardson.hpp"
#include "rtnn/serialize.hpp"

namespace py = pybind11;
using namespace rtnn;

namespace {

using Rows = std::vector<std::vector<std::string>>;

WordStrategy strategy_of(const std::string& name) {
  if (name == "smallest_descent") return WordStrategy::SmallestDescent;
  if (name == "largest_descent") return WordStrategy::LargestDescent;
  throw py::value_error("word strategy must be smallest_descent or largest_descent");
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// rows of "p/q" strings or ints
Mat mat_of(const py::object& rows) {
  const std::string text = py::str(py::module_::import("json").attr("dumps")(rows));
  return mat_from_json(Json::parse(text));
}

Rows rows_of(const Mat& m) { return to_json(m).get<Rows>(); }

std::vector<Rat> rats_of(const std::vector<std::string>& xs) {
  std::vector<Rat> out;
  for (const auto& x : xs) out.push_back(parse_rat(x));
  return out;
}

std::vector<std::string> strs_of(const std::vector<Rat>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

ChartPtr chart_of(const std::vector<int>& w, const std::vector<int>& wp, const std::string& strategy) {
  return default_chart_cache().get(WeylElt(w), WeylElt(wp), strategy_of(strategy));
}

}  // namespace

PYBIND11_MODULE(_rtnn, m) {
  m.doc() = "Exact cells of the totally nonnegative flag variety of SL_n";

  static py::exception<Error> error(m, "RtnnError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  m.def("length", [](const std::vector<int>& w) { return length(WeylElt(w)); });
  m.def("bruhat_leq", [](const std::vector<int>& u, const std::vector<int>& w) {
    return bruhat_leq(WeylElt(u), WeylElt(w));
  });
  m.def(
      "reduced_word",
      [](const std::vector<int>& w, const std::string& strategy) {
        return reduced_word(WeylElt(w), strategy_of(strategy)).letters;
      },
      py::arg("w"), py::arg("strategy") = "smallest_descent");
  m.def("bruhat_pairs", [](int n) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& [w, wp] : bruhat_pairs(n)) out.emplace_back(w.images(), wp.images());
    return out;
  });

  m.def("canonical_rep", [](const py::object& g) { return rows_of(borel_from(mat_of(g)).rep()); });
  m.def("stratum", [](const py::object& g) {
    const CellIndex idx = stratum(borel_from(mat_of(g)));
    return std::make_pair(idx.w.images(), idx.wp.images());
  });

  m.def(
      "build_chart",
      [](const std::vector<int>& w, const std::vector<int>& wp, const std::string& strategy) {
        return to_py(to_json(*chart_of(w, wp, strategy)));
      },
      py::arg("w"), py::arg("wp"), py::arg("strategy") = "smallest_descent");
  m.def(
      "eval_chart",
      [](const std::vector<int>& w, const std::vector<int>& wp, const std::vector<std::string>& params,
         const std::string& strategy) {
        return rows_of(eval_chart(*chart_of(w, wp, strategy), rats_of(params)).rep());
      },
      py::arg("w"), py::arg("wp"), py::arg("params"), py::arg("strategy") = "smallest_descent");
  m.def(
      "invert_chart",
      [](const std::vector<int>& w, const std::vector<int>& wp, const py::object& g, const std::string& strategy) {
        return strs_of(invert_chart(*chart_of(w, wp, strategy), borel_from(mat_of(g))));
      },
      py::arg("w"), py::arg("wp"), py::arg("matrix"), py::arg("strategy") = "smallest_descent");
  m.def(
      "classify",
      [](const py::object& g, const std::string& strategy) {
        return to_py(to_json(classify(borel_from(mat_of(g)), strategy_of(strategy))));
      },
      py::arg("matrix"), py::arg("strategy") = "smallest_descent");

  m.def(
      "sample_tnn_flag",
      [](int n, std::uint64_t seed, std::uint64_t mask) { return rows_of(sample_tnn_flag(n, seed, mask).rep()); },
      py::arg("n"), py::arg("seed"), py::arg("mask"));
  m.def(
      "audit_decomposition",
      [](int n, int samples, std::uint64_t seed, int workers) {
        AuditReport r;
        {
          py::gil_scoped_release release;
          r = audit_decomposition(n, samples, seed, workers);
        }
        return to_py(to_json(r));
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"), py::arg("workers") = 1);
  m.def(
      "audit_semigroup",
      [](int n, int samples, std::uint64_t seed) {
        AuditReport r;
        {
          py::gil_scoped_release release;
          r = audit_semigroup(n, samples, seed);
        }
        return to_py(to_json(r));
      },
      py::arg("n"), py::arg("samples"), py::arg("seed"));

  m.def("run_cli", [](std::vector<std::string> args) {
    args.insert(args.begin(), "rtnn");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
