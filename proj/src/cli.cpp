#include "rtnn/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rtnn/audit.hpp"
#include "rtnn/error.hpp"
#include "rtnn/richardson.hpp"
#include "rtnn/serialize.hpp"

namespace rtnn {

namespace {

struct CliConfig {
  int n = 0;
  std::uint64_t seed = 0;
  WordStrategy word_strategy = WordStrategy::SmallestDescent;
  std::string output;  // empty: standard output
};

// Thrown inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

int max_rank_from_env() {
  if (const char* env = std::getenv("RTNN_MAX_RANK")) {
    try {
      const int v = std::stoi(env);
      if (v >= 2) return v;
    } catch (const std::exception&) {
    }
  }
  return kDefaultMaxRank;
}

void require_rank(int n) {
  const int bound = max_rank_from_env();
  if (n < 2 || n > bound)
    throw Exit{kExitBadRank, "--n must lie in 2.." + std::to_string(bound) + ", got " + std::to_string(n)};
}

WeylElt parse_perm(int n, const std::string& text, const std::string& format) {
  try {
    WeylElt w = format == "word" ? parse_reflection_word(n, text) : parse_oneline(text);
    if (w.rank() != n) throw Exit{kExitParse, "'" + text + "' is not a permutation of 1.." + std::to_string(n)};
    return w;
  } catch (const Error& e) {
    throw Exit{kExitParse, e.what()};
  }
}

std::vector<Rat> parse_params(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    try {
      out.push_back(parse_rat(item));
    } catch (const Error& e) {
      throw Exit{kExitParse, e.what()};
    }
  }
  return out;
}

void emit(const Json& j, const CliConfig& cfg, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw Exit{kExitParse, "cannot write " + cfg.output};
  file << text;
}

Json cell_json(const CellIndex& idx) { return Json{{"w", to_oneline(idx.w)}, {"wp", to_oneline(idx.wp)}}; }

int cmd_cells(const CliConfig& cfg, std::ostream& out) {
  require_rank(cfg.n);
  Json cells = Json::array();
  const int top = length(longest_element(cfg.n));
  int top_count = 0;
  for (const auto& [w, wp] : bruhat_pairs(cfg.n, max_rank_from_env())) {
    const ChartPtr chart = default_chart_cache().get(w, wp, cfg.word_strategy);
    if (chart->dim() == top) ++top_count;
    cells.push_back(Json{{"w", to_oneline(w)}, {"wp", to_oneline(wp)}, {"dim", chart->dim()}, {"shape", chart->shape()}});
  }
  emit(Json{{"n", cfg.n}, {"count", cells.size()}, {"top_dimensional", top_count}, {"cells", std::move(cells)}},
       cfg, out);
  return kExitOk;
}

int cmd_chart(const CliConfig& cfg, const std::string& w_text, const std::string& wp_text,
              const std::string& format, std::ostream& out) {
  require_rank(cfg.n);
  const WeylElt w = parse_perm(cfg.n, w_text, format);
  const WeylElt wp = parse_perm(cfg.n, wp_text, format);
  if (!bruhat_leq(w, wp)) throw Exit{kExitParse, "w must be <= w' in Bruhat order"};
  const ChartPtr chart = default_chart_cache().get(w, wp, cfg.word_strategy);
  Json j = to_json(*chart);
  j["shape"] = chart->shape();
  emit(j, cfg, out);
  return kExitOk;
}

int cmd_eval(const CliConfig& cfg, const std::string& w_text, const std::string& wp_text,
             const std::string& params_text, const std::string& format, std::ostream& out) {
  require_rank(cfg.n);
  const WeylElt w = parse_perm(cfg.n, w_text, format);
  const WeylElt wp = parse_perm(cfg.n, wp_text, format);
  if (!bruhat_leq(w, wp)) throw Exit{kExitParse, "w must be <= w' in Bruhat order"};
  const std::vector<Rat> params = parse_params(params_text);
  const ChartPtr chart = default_chart_cache().get(w, wp, cfg.word_strategy);
  BorelPt b;
  try {
    b = eval_chart(*chart, params);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParamCountMismatch) throw Exit{kExitParamCount, e.what()};
    if (e.code() == ErrorCode::ZeroParameter) throw Exit{kExitZeroParam, e.what()};
    throw;
  }
  const CellIndex idx = stratum(b);
  Json p = Json::array();
  for (const Rat& a : params) p.push_back(to_string(a));
  emit(Json{{"w", to_oneline(w)},
            {"wp", to_oneline(wp)},
            {"params", std::move(p)},
            {"borel_rep", to_json(b.rep())},
            {"stratum", cell_json(idx)},
            {"verified", idx == chart->index()}},
       cfg, out);
  return kExitOk;
}

int cmd_classify(const CliConfig& cfg, const std::string& path, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw Exit{kExitParse, "cannot read " + path};
  Mat m;
  try {
    Json j = Json::parse(file);
    if (j.is_object()) {
      if (j.contains("borel_rep")) {
        j = j["borel_rep"];
      } else if (j.contains("matrix")) {
        j = j["matrix"];
      }
    }
    m = mat_from_json(j);
  } catch (const Json::exception& e) {
    throw Exit{kExitParse, e.what()};
  } catch (const Error& e) {
    throw Exit{kExitParse, e.what()};
  }
  if (m.size() < 2 || m.size() > max_rank_from_env())
    throw Exit{kExitBadRank, "matrix size " + std::to_string(m.size()) + " outside the rank bound"};
  if (m.determinant() != 1) throw Exit{kExitSingular, "matrix must have determinant 1"};
  emit(to_json(classify(borel_from(m), cfg.word_strategy)), cfg, out);
  return kExitOk;
}

int cmd_sample(const CliConfig& cfg, std::uint64_t mask, std::ostream& out) {
  require_rank(cfg.n);
  const int letters = length(longest_element(cfg.n));
  if (letters < 64 && (mask >> letters) != 0)
    throw Exit{kExitParse, "--mask selects letters beyond " + std::to_string(letters)};
  const BorelPt b = sample_tnn_flag(cfg.n, cfg.seed, mask);
  const ClassifyResult r = classify(b, cfg.word_strategy);
  emit(Json{{"n", cfg.n},
            {"seed", cfg.seed},
            {"mask", mask},
            {"word", to_string(tnn_sampling_word(cfg.n))},
            {"borel_rep", to_json(b.rep())},
            {"classification", to_json(r)}},
       cfg, out);
  return kExitOk;
}

int cmd_audit(const CliConfig& cfg, int samples, int workers, std::ostream& out) {
  require_rank(cfg.n);
  if (samples < 0) throw Exit{kExitParse, "--samples must be nonnegative"};
  const int bound = max_rank_from_env();
  const AuditReport decomposition = audit_decomposition(cfg.n, samples, cfg.seed, workers, bound);
  const AuditReport semigroup = audit_semigroup(cfg.n, samples, cfg.seed, bound);
  const bool clean = decomposition.clean() && semigroup.clean();
  emit(Json{{"n", cfg.n},
            {"seed", cfg.seed},
            {"clean", clean},
            {"decomposition", to_json(decomposition)},
            {"semigroup", to_json(semigroup)}},
       cfg, out);
  return clean ? kExitOk : kExitAuditFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cells of the totally nonnegative flag variety of SL_n over exact rationals", "rtnn"};
  app.require_subcommand(1);

  CliConfig cfg;
  std::string strategy = "smallest_descent";
  const std::map<std::string, WordStrategy> strategies{{"smallest_descent", WordStrategy::SmallestDescent},
                                                       {"largest_descent", WordStrategy::LargestDescent}};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--word-strategy", strategy, "Reduced-word rule for charts")
        ->check(CLI::IsMember({"smallest_descent", "largest_descent"}));
    sub->add_option("--output", cfg.output, "Write JSON here instead of standard output");
  };

  auto* cells = app.add_subcommand("cells", "List every cell (w, w') with its chart dimension");
  cells->add_option("--n", cfg.n, "Rank of SL_n")->required();
  add_common(cells);

  std::string w_text;
  std::string wp_text;
  std::string params_text;
  std::string format = "oneline";
  auto* chart = app.add_subcommand("chart", "Print the recursive chart of (w, w')");
  chart->add_option("--n", cfg.n, "Rank of SL_n")->required();
  chart->add_option("--w", w_text, "Lower Weyl element")->required();
  chart->add_option("--wp", wp_text, "Upper Weyl element")->required();
  chart->add_option("--format", format, "Permutation syntax")->check(CLI::IsMember({"oneline", "word"}));
  add_common(chart);

  auto* eval = app.add_subcommand("eval", "Evaluate the chart of (w, w') at nonzero rationals");
  eval->add_option("--n", cfg.n, "Rank of SL_n")->required();
  eval->add_option("--w", w_text, "Lower Weyl element")->required();
  eval->add_option("--wp", wp_text, "Upper Weyl element")->required();
  eval->add_option("--params", params_text, "Comma-separated p/q values, innermost first");
  eval->add_option("--format", format, "Permutation syntax")->check(CLI::IsMember({"oneline", "word"}));
  add_common(eval);

  std::string matrix_path;
  auto* cls = app.add_subcommand("classify", "Locate a flag in its stratum and decide nonnegativity");
  cls->add_option("matrix_file", matrix_path, "JSON matrix of \"p/q\" strings")->required();
  add_common(cls);

  std::uint64_t mask = 0;
  auto* sample = app.add_subcommand("sample", "Draw a totally nonnegative flag from a subword of w0");
  sample->add_option("--n", cfg.n, "Rank of SL_n")->required();
  sample->add_option("--seed", cfg.seed, "Seed for the positive parameters");
  sample->add_option("--mask", mask, "Bit k keeps letter k of the reduced word of w0");
  add_common(sample);

  int samples = 20;
  int workers = 1;
  auto* audit = app.add_subcommand("audit", "Run the decomposition and semigroup audits");
  audit->add_option("--n", cfg.n, "Rank of SL_n")->required();
  audit->add_option("--samples", samples, "Draws per mask, chart, and reduced word");
  audit->add_option("--seed", cfg.seed, "Seed for all random draws");
  audit->add_option("--workers", workers, "Threads for the decomposition audit");
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream sink;
    const int code = app.exit(e, out, sink);
    err << sink.str();
    return code == 0 ? kExitOk : kExitParse;
  }
  cfg.word_strategy = strategies.at(strategy);

  try {
    if (cells->parsed()) return cmd_cells(cfg, out);
    if (chart->parsed()) return cmd_chart(cfg, w_text, wp_text, format, out);
    if (eval->parsed()) return cmd_eval(cfg, w_text, wp_text, params_text, format, out);
    if (cls->parsed()) return cmd_classify(cfg, matrix_path, out);
    if (sample->parsed()) return cmd_sample(cfg, mask, out);
    return cmd_audit(cfg, samples, workers, out);
  } catch (const Exit& e) {
    err << "rtnn: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "rtnn: " << e.what() << "\n";
    return e.code() == ErrorCode::RankTooLarge ? kExitBadRank : kExitParse;
  }
}

}  // namespace rtnn
