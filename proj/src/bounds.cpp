#include "ecd/bounds.hpp"

#include <sstream>

namespace ecd::bounds {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void require_ccc(int q, int n, const Composition& comp, int min_weight) {
  require(comp.q() == q, "composition length does not match q - 1");
  comp.require_monotone();
  require(comp.weight() >= min_weight, "weight must be at least " + std::to_string(min_weight));
  require(n >= comp.weight(), "length n must be at least the weight");
}

std::string floor_expr(std::int64_t a, std::int64_t b) {
  std::ostringstream os;
  os << "floor(" << a << "/" << b << ")";
  return os.str();
}

}  // namespace

std::int64_t johnson_step_ccc(int q, int n, int /*d*/, const Composition& comp, std::int64_t inner) {
  require(comp.q() == q, "composition length does not match q - 1");
  require(comp[0] > 0, "w_1 must be positive");
  require(inner >= 0, "inner value must be nonnegative");
  return static_cast<std::int64_t>(n) * inner / comp[0];
}

std::int64_t base_full_distance(int n, int w) {
  require(w >= 1 && w <= n, "need 1 <= w <= n");
  return n / w;
}

std::int64_t bound_ccc_2w2(int q, int n, const Composition& comp) {
  require_ccc(q, n, comp, 2);
  const std::int64_t w = comp.weight();
  const std::int64_t inner = (n - 1) / (w - 1);
  return n * inner / comp[0];
}

std::int64_t bound_ccc_2w3(int q, int n, const Composition& comp) {
  require_ccc(q, n, comp, 3);
  const std::int64_t w1 = comp[0];
  const std::int64_t w2 = comp.symbol_count() > 1 ? comp[1] : 0;
  std::int64_t inner;
  if (w1 > w2) {
    require(w1 > 1, "w_1 = 1 leaves floor((n-1)/(w_1-1)) undefined");
    inner = (n - 1) / (w1 - 1);
  } else {
    inner = (n - 1) / w1;
  }
  return n * inner / w1;
}

std::int64_t bound_cwc_2w2(int q, int n, int w) {
  require(q >= 2, "q must be at least 2");
  require(w >= 2 && w <= n, "need 2 <= w <= n");
  const std::int64_t inner = (n - 1) / (w - 1);
  return static_cast<std::int64_t>(q - 1) * n * inner / w;
}

std::int64_t bound_cwc_2w3(int q, int n, int w) {
  require(q >= 2, "q must be at least 2");
  require(w >= 2 && w <= n, "need 2 <= w <= n");
  const std::int64_t inner = static_cast<std::int64_t>(q - 1) * (n - 1) / (w - 1);
  return static_cast<std::int64_t>(q - 1) * n * inner / w;
}

std::int64_t bound_mcwc(int m, int n, int w) {
  require(m >= 1, "m must be positive");
  require(w >= 1 && w <= n, "need 1 <= w <= n");
  const std::int64_t inner = n / w;
  return n * inner / w;
}

BoundResult evaluate(const BoundQuery& qy) {
  BoundResult r;
  std::ostringstream f;
  switch (qy.kind) {
    case CodeKind::Ccc: {
      require(qy.composition.has_value(), "CCC bound needs a composition");
      const auto& c = *qy.composition;
      const int w = c.weight();
      const int w1 = c[0];
      if (qy.d == 2 * w) {
        r.value = base_full_distance(qy.n, w);
        r.rule = "full-distance";
        f << floor_expr(qy.n, w);
      } else if (qy.d == 2 * w - 2) {
        r.value = bound_ccc_2w2(qy.q, qy.n, c);
        r.rule = "ccc-2w-2";
        f << "floor(" << qy.n << "*" << floor_expr(qy.n - 1, w - 1) << "/" << w1 << ")";
      } else if (qy.d == 2 * w - 3) {
        r.value = bound_ccc_2w3(qy.q, qy.n, c);
        r.rule = "ccc-2w-3";
        const int w2 = c.symbol_count() > 1 ? c[1] : 0;
        f << "floor(" << qy.n << "*" << floor_expr(qy.n - 1, w1 > w2 ? w1 - 1 : w1) << "/" << w1 << ")";
      } else {
        throw InvalidArgument("no closed-form CCC bound for d = " + std::to_string(qy.d) +
                              " (supported: 2w, 2w-2, 2w-3)");
      }
      break;
    }
    case CodeKind::Cwc: {
      const int w = qy.w;
      if (qy.d == 2 * w) {
        r.value = base_full_distance(qy.n, w);
        r.rule = "full-distance";
        f << floor_expr(qy.n, w);
      } else if (qy.d == 2 * w - 2) {
        r.value = bound_cwc_2w2(qy.q, qy.n, w);
        r.rule = "cwc-2w-2";
        f << "floor(" << (qy.q - 1) << "*" << qy.n << "*" << floor_expr(qy.n - 1, w - 1) << "/" << w << ")";
      } else if (qy.d == 2 * w - 3) {
        r.value = bound_cwc_2w3(qy.q, qy.n, w);
        r.rule = "cwc-2w-3";
        f << "floor(" << (qy.q - 1) << "*" << qy.n << "*"
          << floor_expr(static_cast<std::int64_t>(qy.q - 1) * (qy.n - 1), w - 1) << "/" << w << ")";
      } else {
        throw InvalidArgument("no closed-form CWC bound for d = " + std::to_string(qy.d) +
                              " (supported: 2w, 2w-2, 2w-3)");
      }
      break;
    }
    case CodeKind::Mcwc: {
      if (qy.d != 2 * qy.m * qy.w - 2) {
        throw InvalidArgument("MCWC bound is only available for d = 2mw-2 = " +
                              std::to_string(2 * qy.m * qy.w - 2));
      }
      r.value = bound_mcwc(qy.m, qy.n, qy.w);
      r.rule = "mcwc-2mw-2";
      f << "floor(" << qy.n << "*" << floor_expr(qy.n, qy.w) << "/" << qy.w << ")";
      break;
    }
  }
  r.formula = f.str();
  return r;
}

}  // namespace ecd::bounds
