#include "belyi/covering.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "belyi/error.hpp"

namespace belyi {

Triple::Triple(int i, int j, int k) : v_{i, j, k} {
  for (int x : v_)
    if (x < 1 || x > kRootCount)
      throw Error(ErrorCode::BadTriple, "triple index " + std::to_string(x) + " outside 1..12");
  std::sort(v_.begin(), v_.end());
  if (v_[0] == v_[1] || v_[1] == v_[2])
    throw Error(ErrorCode::BadTriple, "triple indices must be distinct");
}

bool Triple::contains(int label) const noexcept {
  return std::find(v_.begin(), v_.end(), label) != v_.end();
}

std::string Triple::to_string() const {
  return "(" + std::to_string(v_[0]) + "," + std::to_string(v_[1]) + "," +
         std::to_string(v_[2]) + ")";
}

bool SpherePoint::approx_equal(const SpherePoint& other, double tol) const {
  if (infinite || other.infinite) return infinite == other.infinite;
  return std::abs(value - other.value) <= tol;
}

// ---------------------------------------------------------------- MapExpr

MapExpr::MapExpr(std::vector<Primitive> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw Error(ErrorCode::Empty, "map expression has no primitives");
  bool seen_f = false;
  for (std::size_t idx = 0; idx < chain_.size(); ++idx) {
    const auto& p = chain_[idx];
    if (std::holds_alternative<Proj>(p) && idx + 1 != chain_.size())
      throw Error(ErrorCode::MisplacedPrimitive, "pi(...) must be the innermost primitive");
    if (std::holds_alternative<FPoly>(p)) {
      if (seen_f) throw Error(ErrorCode::MisplacedPrimitive, "f may appear at most once");
      seen_f = true;
    }
    if (std::holds_alternative<BelyiMN>(p) && seen_f)
      throw Error(ErrorCode::MisplacedPrimitive, "b(m,n) may not appear inside f");
  }
}

MapExpr MapExpr::full_chain(const Triple& t) {
  return MapExpr({BelyiMN{1, 1}, BelyiMN{10, 1}, FPoly{}, Proj{t}});
}

std::size_t degree(const Primitive& p) noexcept {
  return std::visit(
      [](const auto& q) -> std::size_t {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, BelyiMN>) return q.m + q.n;
        else if constexpr (std::is_same_v<T, FPoly>) return 12;
        else return 2;
      },
      p);
}

std::string to_string(const Primitive& p) {
  return std::visit(
      [](const auto& q) -> std::string {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, BelyiMN>)
          return "b(" + std::to_string(q.m) + "," + std::to_string(q.n) + ")";
        else if constexpr (std::is_same_v<T, FPoly>) return "f";
        else
          return "pi(" + std::to_string(q.triple.i()) + "," + std::to_string(q.triple.j()) + "," +
                 std::to_string(q.triple.k()) + ")";
      },
      p);
}

std::size_t MapExpr::degree() const noexcept {
  std::size_t d = 1;
  for (const auto& p : chain_) d *= belyi::degree(p);
  return d;
}

bool MapExpr::has_projection() const noexcept {
  return std::holds_alternative<Proj>(chain_.back());
}

std::optional<Triple> MapExpr::triple() const noexcept {
  if (const auto* p = std::get_if<Proj>(&chain_.back())) return p->triple;
  return std::nullopt;
}

std::vector<Primitive> MapExpr::inner() const {
  return {chain_.begin() + 1, chain_.end()};
}

std::string MapExpr::to_string() const {
  std::string out;
  for (const auto& p : chain_) {
    if (!out.empty()) out += '.';
    out += belyi::to_string(p);
  }
  return out;
}

namespace {

constexpr unsigned kMaxBelyiExponent = 1000;

// Recursive-descent parser over the text with whitespace removed; offsets
// are mapped back to the original string for error reporting.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      compact_ += text[i];
      origin_.push_back(i);
    }
    origin_.push_back(text.size());
  }

  MapExpr parse() {
    if (compact_.empty()) throw Error(ErrorCode::Empty, "empty map expression");
    std::vector<Primitive> chain;
    chain.push_back(primitive());
    while (pos_ < compact_.size() && compact_[pos_] == '.') {
      ++pos_;
      chain.push_back(primitive());
    }
    if (pos_ != compact_.size()) fail("expected '.' or end of input");
    return MapExpr(std::move(chain));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(origin_[std::min(pos_, origin_.size() - 1)], what);
  }

  bool accept(std::string_view token) {
    if (compact_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= compact_.size() || compact_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  unsigned integer() {
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < compact_.size() && std::isdigit(static_cast<unsigned char>(compact_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(compact_[pos_] - '0');
      if (v > 1000000) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    if (start == pos_) fail("expected an unsigned decimal integer");
    return static_cast<unsigned>(v);
  }

  Primitive primitive() {
    std::size_t start = pos_;
    if (accept("pi(")) {
      unsigned i = integer();
      expect(',');
      unsigned j = integer();
      expect(',');
      unsigned k = integer();
      expect(')');
      return Proj{Triple(static_cast<int>(std::min(i, 1000u)), static_cast<int>(std::min(j, 1000u)),
                         static_cast<int>(std::min(k, 1000u)))};
    }
    if (accept("b(")) {
      unsigned m = integer();
      expect(',');
      unsigned n = integer();
      expect(')');
      if (m == 0 || n == 0 || m > kMaxBelyiExponent || n > kMaxBelyiExponent) {
        pos_ = start;
        fail("b(m,n) needs 1 <= m, n <= " + std::to_string(kMaxBelyiExponent));
      }
      return BelyiMN{m, n};
    }
    if (accept("f")) return FPoly{};
    fail("expected b(m,n), f or pi(i,j,k)");
  }

  std::string compact_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

}  // namespace

MapExpr MapExpr::parse(std::string_view text) { return ExprParser(text).parse(); }

// ---------------------------------------------------------------- numerics

double belyi_constant(unsigned m, unsigned n) {
  const double s = m + n;
  if (m + n <= 100) return std::pow(s, s) / (std::pow(double(m), double(m)) * std::pow(double(n), double(n)));
  return std::exp(s * std::log(s) - m * std::log(double(m)) - n * std::log(double(n)));
}

ComplexPoly belyi_poly(unsigned m, unsigned n, cplx w) {
  const double K = belyi_constant(m, n);
  std::vector<cplx> c(m + n + 1);
  double binom = 1;
  for (unsigned k = 0; k <= n; ++k) {
    c[m + k] = K * binom * ((k % 2) ? -1.0 : 1.0);
    binom = binom * (n - k) / (k + 1);
  }
  c[0] -= w;
  return ComplexPoly(std::move(c));
}

Cubic Cubic::from_roots(cplx e1, cplx e2, cplx e3) {
  Cubic c;
  c.roots = {e1, e2, e3};
  c.a2 = -(e1 + e2 + e3);
  c.a1 = e1 * e2 + e1 * e3 + e2 * e3;
  c.a0 = -(e1 * e2 * e3);
  return c;
}

Cubic cubic_for(const Triple& t, const LabeledRoots& roots) {
  return Cubic::from_roots(roots.r(t.i()), roots.r(t.j()), roots.r(t.k()));
}

ChainEvaluator::ChainEvaluator(const MapExpr& e, const RootOptions& root_options) : expr_(e) {
  for (const auto& p : e.chain()) {
    if (const auto* b = std::get_if<BelyiMN>(&p))
      stages_.push_back({false, b->m, b->n, belyi_constant(b->m, b->n)});
    else if (std::holds_alternative<FPoly>(p))
      stages_.push_back({true, 0, 0, 0.0});
  }
  if (auto t = e.triple()) {
    roots_ = roots_of_f(root_options);
    cubic_ = cubic_for(*t, roots_);
  }
}

cplx ChainEvaluator::value(cplx x) const noexcept { return value_from(0, x); }

namespace {

cplx ipow(cplx b, unsigned e) noexcept {
  cplx r = 1.0;
  for (; e; e >>= 1, b *= b)
    if (e & 1) r *= b;
  return r;
}

}  // namespace

void ChainEvaluator::apply(const Stage& st, cplx u, cplx cu, cplx& v, cplx& cv,
                           cplx* dv) noexcept {
  if (st.is_f) {
    // 1 - f(u) = u^11 (12/11 - u)
    const cplx u10 = ipow(u, 10);
    cv = u10 * u * (12.0 / 11.0 - u);
    v = 1.0 - cv;
    if (dv) *dv = 12.0 * u10 * (u - 1.0);
    return;
  }
  const cplx um1 = ipow(u, st.m - 1);
  const cplx cn1 = ipow(cu, st.n - 1);
  v = st.k * um1 * u * cn1 * cu;
  if (st.m == 1 && st.n == 1) cv = (cu - u) * (cu - u);  // 1 - 4u(1-u) = (1-2u)^2
  else cv = 1.0 - v;
  if (dv) *dv = st.k * um1 * cn1 * (double(st.m) * cu - double(st.n) * u);
}

cplx ChainEvaluator::value_from(std::size_t first, cplx x) const noexcept {
  cplx cx = 1.0 - x;
  for (std::size_t s = stages_.size(); s-- > first;) {
    cplx v, cv;
    apply(stages_[s], x, cx, v, cv, nullptr);
    x = v;
    cx = cv;
  }
  return x;
}

void ChainEvaluator::value_and_derivative(cplx x, cplx& value, cplx& deriv) const noexcept {
  cplx d = 1.0;
  cplx cx = 1.0 - x;
  for (std::size_t s = stages_.size(); s-- > 0;) {
    cplx v, cv, dv;
    apply(stages_[s], x, cx, v, cv, &dv);
    d *= dv;
    x = v;
    cx = cv;
  }
  value = x;
  deriv = d;
}

SpherePoint eval_chain(const MapExpr& e, const CurvePoint& pt, const RootOptions& ro) {
  if (pt.x.infinite) return SpherePoint::infinity();
  ChainEvaluator ev(e, ro);
  if (ev.has_projection()) {
    if (!pt.y) throw Error(ErrorCode::PointOffCurve, "chain ends in pi but the point has no y");
    cplx residual = *pt.y * *pt.y - ev.cubic()(pt.x.value);
    if (!(std::abs(residual) < 1e-8))
      throw Error(ErrorCode::PointOffCurve, "|y^2 - c(x)| >= 1e-8");
  } else if (pt.y) {
    throw Error(ErrorCode::PointOffCurve, "chain has no pi but the point carries a y");
  }
  return SpherePoint::finite(ev.value(pt.x.value));
}

// ---------------------------------------------------------------- branching

namespace {

SpherePoint snap(SpherePoint p) {
  if (p.infinite) return p;
  if (std::abs(p.value) < 1e-9) p.value = 0.0;
  else if (std::abs(p.value - 1.0) < 1e-9) p.value = 1.0;
  return p;
}

void insert_unique(std::vector<SpherePoint>& set, SpherePoint p) {
  p = snap(p);
  for (const auto& q : set)
    if (q.approx_equal(p, 1e-9)) return;
  set.push_back(p);
}

SpherePoint apply(const Primitive& prim, const SpherePoint& p) {
  if (p.infinite) return p;
  if (const auto* b = std::get_if<BelyiMN>(&prim)) return SpherePoint::finite(belyi_poly(b->m, b->n)(p.value));
  if (std::holds_alternative<FPoly>(prim)) return SpherePoint::finite(f_poly()(p.value));
  return p;  // pi acts as x on the x-coordinate
}

std::vector<SpherePoint> own_branch_values(const Primitive& prim, const RootOptions& ro) {
  using SP = SpherePoint;
  if (std::holds_alternative<BelyiMN>(prim))
    // critical points 0, m/(m+n), 1, inf map to 0, 1, 0, inf
    return {SP::finite(0.0), SP::finite(1.0), SP::infinity()};
  if (std::holds_alternative<FPoly>(prim))
    return {SP::finite(1.0), SP::finite(10.0 / 11.0), SP::infinity()};
  const auto& t = std::get<Proj>(prim).triple;
  LabeledRoots r = roots_of_f(ro);
  return {SP::finite(r.r(t.i())), SP::finite(r.r(t.j())), SP::finite(r.r(t.k())), SP::infinity()};
}

}  // namespace

std::vector<SpherePoint> branch_values(const std::vector<Primitive>& chain, const RootOptions& ro) {
  std::vector<SpherePoint> values;
  for (std::size_t idx = chain.size(); idx-- > 0;) {
    std::vector<SpherePoint> next;
    for (const auto& v : values) insert_unique(next, apply(chain[idx], v));
    for (const auto& v : own_branch_values(chain[idx], ro)) insert_unique(next, v);
    values = std::move(next);
  }
  std::sort(values.begin(), values.end(), [](const SpherePoint& a, const SpherePoint& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    if (std::abs(a.value.real() - b.value.real()) > 1e-9) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return values;
}

BranchData branch_values(const MapExpr& e, const RootOptions& ro) {
  BranchData data;
  data.branch_values = branch_values(e.chain(), ro);
  const auto& last = e.chain().back();
  using SP = SpherePoint;
  if (const auto* b = std::get_if<BelyiMN>(&last)) {
    data.innermost_ramification = {{SP::finite(0.0), b->m},
                                   {SP::finite(double(b->m) / (b->m + b->n)), 2},
                                   {SP::finite(1.0), b->n},
                                   {SP::infinity(), std::size_t{b->m + b->n}}};
  } else if (std::holds_alternative<FPoly>(last)) {
    data.innermost_ramification = {
        {SP::finite(0.0), 11}, {SP::finite(1.0), 2}, {SP::infinity(), 12}};
  } else {
    const auto& t = std::get<Proj>(last).triple;
    LabeledRoots r = roots_of_f(ro);
    for (int label : t.indices()) data.innermost_ramification.push_back({SP::finite(r.r(label)), 2});
    data.innermost_ramification.push_back({SP::infinity(), 2});
  }
  return data;
}

bool BranchData::contains(const SpherePoint& p, double tol) const {
  return std::any_of(branch_values.begin(), branch_values.end(),
                     [&](const SpherePoint& q) { return q.approx_equal(p, tol); });
}

bool BranchData::subset_of_01inf(double tol) const {
  const SpherePoint allowed[] = {SpherePoint::finite(0.0), SpherePoint::finite(1.0),
                                 SpherePoint::infinity()};
  return std::all_of(branch_values.begin(), branch_values.end(), [&](const SpherePoint& v) {
    return std::any_of(std::begin(allowed), std::end(allowed),
                       [&](const SpherePoint& a) { return a.approx_equal(v, tol); });
  });
}

bool is_clean_syntactic(const MapExpr& e, const RootOptions& ro) {
  const auto* outer = std::get_if<BelyiMN>(&e.chain().front());
  if (!outer || outer->m != 1 || outer->n != 1) return false;
  BranchData inner;
  inner.branch_values = branch_values(e.inner(), ro);
  return inner.subset_of_01inf();
}

}  // namespace belyi
