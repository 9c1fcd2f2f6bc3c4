#include "rtnn/richardson.hpp"

#include <algorithm>

#include "rtnn/error.hpp"

namespace rtnn {

namespace {

void require_additive(const WeylElt& w, const WeylElt& v) {
  if (length(w * v) != length(w) + length(v))
    throw Error(ErrorCode::LengthNotAdditive,
                "l(" + to_oneline(w) + " * " + to_oneline(v) + ") is not l(w) + l(v)");
}

void require_lift_conditions(const WeylElt& w, const WeylElt& wp, int s) {
  if (!bruhat_leq(w, wp))
    throw Error(ErrorCode::NotComparable, to_oneline(w) + " vs " + to_oneline(wp));
  const WeylElt ws = times_simple(w, s);
  const WeylElt wps = times_simple(wp, s);
  if (length(ws) < length(w) || length(wps) > length(wp))
    throw Error(ErrorCode::WrongCell, "s_" + std::to_string(s) + " must lengthen " +
                                          to_oneline(w) + " and shorten " + to_oneline(wp));
}

const Mat& w0_rep(int n) {
  thread_local std::map<int, Mat> reps;
  auto it = reps.find(n);
  if (it == reps.end()) it = reps.emplace(n, rep_weyl(longest_element(n))).first;
  return it->second;
}

// phi_down(w' s, s, .) without the stratum check.
BorelPt project(const WeylElt& wp, int s, const BorelPt& b) {
  const WeylElt sref = WeylElt::simple(wp.rank(), s);
  return phi_down(wp * sref, sref, b);
}

BorelPt psi_with(const WeylElt& wp, int s, const Mat& y, const Mat& y_inv, const BorelPt& b,
                 const Rat& a) {
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroParameter, "psi needs a nonzero parameter");
  const int n = wp.rank();
  const Mat x = opposite_big_cell_factor(y * b.rep()).x;
  return borel_from(y_inv * x * gen_x(n, opposite_index(n, s), a) * w0_rep(n));
}

std::pair<BorelPt, Rat> psi_inv_with(const WeylElt& wp, int s, const Mat& y, const BorelPt& b) {
  const int n = wp.rank();
  const Mat x_full = opposite_big_cell_factor(y * b.rep()).x;
  BorelPt below = project(wp, s, b);
  const Mat x_partial = opposite_big_cell_factor(y * below.rep()).x;
  const Mat residual = x_partial.inverse() * x_full;
  const int ip = opposite_index(n, s);
  const Rat a = residual(ip, ip + 1);
  if (sgn(a) == 0 || !(residual == gen_x(n, ip, a)))
    throw Error(ErrorCode::NotInChartImage, "residual is not a nonzero x_" + std::to_string(ip));
  return {std::move(below), a};
}

BorelPt eval_node(const Chart& chart, std::span<const Rat> params) {
  return std::visit(
      [&](const auto& node) -> BorelPt {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Chart::Base>) {
          return node.point;
        } else if constexpr (std::is_same_v<T, Chart::Peel>) {
          return phi_down(chart.index().wp, node.v, eval_node(*node.inner, params));
        } else {
          const BorelPt inner = eval_node(*node.inner, params.first(params.size() - 1));
          return psi_with(chart.index().wp, node.s, node.y, node.y_inv, inner, params.back());
        }
      },
      chart.node());
}

void invert_node(const Chart& chart, const BorelPt& b, std::vector<Rat>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Chart::Base>) {
          if (!(b == node.point))
            throw Error(ErrorCode::NotInChartImage, "point differs from the base point");
        } else if constexpr (std::is_same_v<T, Chart::Peel>) {
          invert_node(*node.inner, phi_up(chart.index().w, node.v, b), out);
        } else {
          auto [below, a] = psi_inv_with(chart.index().wp, node.s, node.y, b);
          invert_node(*node.inner, below, out);
          out.push_back(std::move(a));
        }
      },
      chart.node());
}

}  // namespace

BorelPt phi_down(const WeylElt& w, const WeylElt& v, const BorelPt& b) {
  require_additive(w, v);
  const int n = w.rank();
  const BruhatFactors f = bruhat_factor_plus(w0_rep(n).inverse() * b.rep());
  if (f.w != w * v)
    throw Error(ErrorCode::WrongCell, "pos(B-, B) = " + to_oneline(f.w) + ", expected " +
                                          to_oneline(w * v));
  return borel_from(w0_rep(n) * f.b1 * rep_weyl(w));
}

BorelPt phi_up(const WeylElt& w, const WeylElt& v, const BorelPt& b) {
  require_additive(w, v);
  const int n = w.rank();
  const WeylElt w0 = longest_element(n);
  const BruhatFactors f = bruhat_factor_plus(b.rep());
  if (f.w != w0 * w)
    throw Error(ErrorCode::WrongCell, "pos(B+, B) = " + to_oneline(f.w) + ", expected " +
                                          to_oneline(w0 * w));
  return borel_from(f.b1 * rep_weyl(w0 * w * v));
}

BorelPt pi(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b) {
  require_lift_conditions(w, wp, s);
  const CellIndex idx = stratum(b);
  if (!(idx == CellIndex{w, wp}))
    throw Error(ErrorCode::WrongStratum, "pi needs a point of (" + to_oneline(w) + ", " + to_oneline(wp) + ")");
  return project(wp, s, b);
}

Word conjugator_word(const WeylElt& w, WordStrategy strategy) {
  const WeylElt w0 = longest_element(w.rank());
  return reduced_word(w0 * w.inverse() * w0, strategy);
}

Mat conjugator(const WeylElt& w, WordStrategy strategy) {
  const Word word = conjugator_word(w, strategy);
  const std::vector<Rat> ones(word.size(), Rat(1));
  return y_product(w.rank(), word, ones);
}

BorelPt psi(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b, const Rat& a,
            WordStrategy strategy) {
  if (sgn(a) == 0) throw Error(ErrorCode::ZeroParameter, "psi needs a nonzero parameter");
  require_lift_conditions(w, wp, s);
  const Mat y = conjugator(w, strategy);
  return psi_with(wp, s, y, y.inverse(), b, a);
}

std::pair<BorelPt, Rat> psi_inv(const WeylElt& w, const WeylElt& wp, int s, const BorelPt& b,
                                WordStrategy strategy) {
  require_lift_conditions(w, wp, s);
  return psi_inv_with(wp, s, conjugator(w, strategy), b);
}

BorelPt KeyChart::operator()(std::span<const Rat> params) const {
  if (kind == Kind::Upper) return borel_from(x_product(n, word, params) * w0_rep(n));
  return borel_from(y_product(n, word, params));
}

KeyChart key_chart_upper(const WeylElt& wp) {
  const WeylElt w0 = longest_element(wp.rank());
  return KeyChart{KeyChart::Kind::Upper, wp.rank(), reduced_word(w0 * wp * w0)};
}

KeyChart key_chart_lower(const WeylElt& w) {
  const WeylElt w0 = longest_element(w.rank());
  return KeyChart{KeyChart::Kind::Lower, w.rank(), reduced_word(w0 * w)};
}

BorelPt base_point(const WeylElt& w) {
  const int n = w.rank();
  for (const WeylElt& x : {w, w.inverse()}) {
    BorelPt p = borel_from(w0_rep(n) * rep_weyl(x));
    const CellIndex idx = stratum(p);
    if (idx.w == w && idx.wp == w) return p;
  }
  throw Error(ErrorCode::InternalInconsistency, "no base point found for " + to_oneline(w));
}

std::string Chart::shape() const {
  std::string out;
  const Chart* c = this;
  for (;;) {
    if (!out.empty()) out += ' ';
    if (std::holds_alternative<Base>(c->node_)) return out + "B";
    if (const auto* p = std::get_if<Peel>(&c->node_)) {
      out += 'P';
      c = p->inner.get();
    } else {
      out += 'E';
      c = std::get<Extend>(c->node_).inner.get();
    }
  }
}

ChartPtr build_chart(const WeylElt& w, const WeylElt& wp, WordStrategy strategy) {
  if (!bruhat_leq(w, wp))
    throw Error(ErrorCode::NotComparable, to_oneline(w) + " vs " + to_oneline(wp));
  CellIndex idx{w, wp};
  const int dim = length(wp) - length(w);
  if (w == wp) return std::make_shared<const Chart>(idx, 0, strategy, Chart::Base{base_point(w)});

  PeelResult peeled = peel(w, wp, strategy);
  if (!peeled.v.is_identity()) {
    ChartPtr inner = build_chart(w * peeled.v, wp * peeled.v, strategy);
    if (inner->dim() != dim) throw Error(ErrorCode::InternalInconsistency, "peel changed the dimension");
    return std::make_shared<const Chart>(
        idx, dim, strategy, Chart::Peel{std::move(peeled.v), std::move(peeled.word_v), std::move(inner)});
  }

  const int s = find_descent_pair(w, wp);
  ChartPtr inner = build_chart(w, times_simple(wp, s), strategy);
  if (inner->dim() + 1 != dim) throw Error(ErrorCode::InternalInconsistency, "extend skipped a dimension");
  Word y_word = conjugator_word(w, strategy);
  const std::vector<Rat> ones(y_word.size(), Rat(1));
  Mat y = y_product(w.rank(), y_word, ones);
  Mat y_inv = y.inverse();
  return std::make_shared<const Chart>(
      idx, dim, strategy,
      Chart::Extend{s, std::move(y_word), std::move(y), std::move(y_inv), std::move(inner)});
}

BorelPt eval_chart(const Chart& chart, std::span<const Rat> params) {
  if (static_cast<int>(params.size()) != chart.dim())
    throw Error(ErrorCode::ParamCountMismatch, "chart of dimension " + std::to_string(chart.dim()) +
                                                   " got " + std::to_string(params.size()) + " parameters");
  for (const Rat& a : params)
    if (sgn(a) == 0) throw Error(ErrorCode::ZeroParameter, "chart parameters must be nonzero");
  return eval_node(chart, params);
}

std::vector<Rat> invert_chart(const Chart& chart, const BorelPt& b) {
  const CellIndex idx = stratum(b);
  if (!(idx == chart.index()))
    throw Error(ErrorCode::WrongStratum, "point lies in (" + to_oneline(idx.w) + ", " +
                                             to_oneline(idx.wp) + ")");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(chart.dim()));
  invert_node(chart, b, out);
  return out;
}

ChartPtr ChartCache::get(const WeylElt& w, const WeylElt& wp, WordStrategy strategy) {
  Key key{w.rank(), w.images(), wp.images(), static_cast<int>(strategy)};
  {
    std::shared_lock lock(mutex_);
    if (auto it = charts_.find(key); it != charts_.end()) return it->second;
  }
  ChartPtr built = build_chart(w, wp, strategy);
  std::unique_lock lock(mutex_);
  return charts_.try_emplace(std::move(key), std::move(built)).first->second;
}

std::size_t ChartCache::size() const {
  std::shared_lock lock(mutex_);
  return charts_.size();
}

ChartCache& default_chart_cache() {
  static ChartCache cache;
  return cache;
}

ClassifyResult classify(const BorelPt& b, WordStrategy strategy, ChartCache& cache) {
  ClassifyResult out;
  try {
    out.index = stratum(b);
  } catch (const Error& e) {
    out.reason = std::string(to_string(e.code()));
    return out;
  }
  try {
    const ChartPtr chart = cache.get(out.index.w, out.index.wp, strategy);
    out.coords = invert_chart(*chart, b);
    if (!(eval_chart(*chart, out.coords) == b)) {
      out.reason = "round_trip_mismatch";
      return out;
    }
  } catch (const Error& e) {
    out.reason = std::string(to_string(e.code()));
    return out;
  }
  out.nonneg = std::all_of(out.coords.begin(), out.coords.end(), [](const Rat& a) { return sgn(a) > 0; });
  out.reason = out.nonneg ? "ok" : "nonpositive_coordinate";
  return out;
}

}  // namespace rtnn
