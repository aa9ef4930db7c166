#include "cbr/simplex.hpp"

#include <algorithm>
#include <set>

namespace cbr {

namespace {

thread_local std::uint64_t g_simplex_calls = 0;

// Dense rational tableau. Free variables are split as x = u - w with
// u, w >= 0; every row is an equality with b >= 0 and one artificial
// column, which keeps phase 1 uniform.
class Tableau {
 public:
  Tableau(const std::vector<LinearConstraint>& cs, const std::vector<Var>& dims) {
    for (std::size_t i = 0; i < dims.size(); ++i) var_col_[dims[i]] = 2 * i;
    num_struct_ = 2 * dims.size();

    m_ = cs.size();
    std::size_t slacks = 0;
    std::size_t artificials = 0;
    // A >=0 row whose constant is nonnegative flips into slack-basic form
    // and needs no artificial variable; phase 1 is skipped entirely when
    // no row needs one.
    for (const auto& c : cs) {
      if (!c.is_equality()) {
        ++slacks;
        if (c.expr().constant().sign() < 0) ++artificials;
      } else {
        ++artificials;
      }
    }
    art0_ = num_struct_ + slacks;
    n_ = art0_ + artificials;

    rows_.assign(m_, std::vector<Rational>(n_ + 1, Rational(0)));
    basis_.assign(m_, 0);

    std::size_t slack = num_struct_;
    std::size_t art = art0_;
    for (std::size_t r = 0; r < m_; ++r) {
      const auto& c = cs[r];
      auto& row = rows_[r];
      for (const auto& [v, k] : c.expr().coefficients()) {
        std::size_t col = var_col_.at(v);
        row[col] = k;
        row[col + 1] = -k;
      }
      Rational b = -c.expr().constant();
      bool need_artificial;
      bool flip;
      if (c.is_equality()) {
        need_artificial = true;
        flip = b.sign() < 0;
      } else {
        row[slack] = Rational(-1);  // expr >= 0  <=>  ax - s = b
        need_artificial = b.sign() > 0;
        flip = !need_artificial;    // b <= 0: flipping makes the slack +1 basic
      }
      if (flip) {
        for (auto& x : row) x = -x;
        b = -b;
      }
      row[n_] = b;
      if (need_artificial) {
        row[art] = Rational(1);
        basis_[r] = art;
        ++art;
        ++has_artificial_;
      } else {
        basis_[r] = slack;
      }
      if (!c.is_equality()) ++slack;
    }
  }

  bool needs_phase1() const { return has_artificial_ > 0; }

  // Maximizes the objective encoded in zrow_/zval_. Returns false when
  // unbounded. `allow_artificial` keeps artificial columns eligible
  // (phase 1 only).
  bool maximize(bool allow_artificial) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!allow_artificial && j >= art0_) break;
        if (zrow_[j].sign() > 0) {
          enter = j;
          break;  // Bland: smallest eligible index
        }
      }
      if (enter == n_) return true;

      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][enter].sign() <= 0) continue;
        Rational ratio = rows_[r][n_] / rows_[r][enter];
        if (leave == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leave])) {
          leave = r;
          best_ratio = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = rows_[r];
    Rational inv = prow[c].reciprocal();
    for (auto& x : prow) x *= inv;
    prow[c] = Rational(1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || rows_[i][c].is_zero()) continue;
      Rational k = rows_[i][c];
      for (std::size_t j = 0; j <= n_; ++j) rows_[i][j] -= k * prow[j];
      rows_[i][c] = Rational(0);
    }
    if (!zrow_[c].is_zero()) {
      Rational k = zrow_[c];
      zval_ += k * prow[n_];
      for (std::size_t j = 0; j < n_; ++j) zrow_[j] -= k * prow[j];
      zrow_[c] = Rational(0);
    }
    basis_[r] = c;
  }

  // Installs raw costs and eliminates the basic columns.
  void set_objective(const std::vector<Rational>& raw) {
    zrow_ = raw;
    zrow_.resize(n_, Rational(0));
    zval_ = Rational(0);
    for (std::size_t r = 0; r < m_; ++r) {
      std::size_t b = basis_[r];
      if (zrow_[b].is_zero()) continue;
      Rational k = zrow_[b];
      zval_ += k * rows_[r][n_];
      for (std::size_t j = 0; j < n_; ++j) zrow_[j] -= k * rows_[r][j];
      zrow_[b] = Rational(0);
    }
  }

  bool phase1() {
    std::vector<Rational> raw(n_, Rational(0));
    for (std::size_t j = art0_; j < n_; ++j) raw[j] = Rational(-1);
    set_objective(raw);
    maximize(/*allow_artificial=*/true);
    if (zval_.sign() < 0) return false;
    // Drive artificials out of the basis where possible; rows where no
    // structural pivot exists are redundant and stay at level zero.
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < art0_) continue;
      for (std::size_t j = 0; j < art0_; ++j) {
        if (!rows_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
    return true;
  }

  LpResult phase2(const LinearExpression& objective, const std::vector<Var>& dims) {
    std::vector<Rational> raw(n_, Rational(0));
    for (const auto& [v, k] : objective.coefficients()) {
      std::size_t col = var_col_.at(v);
      raw[col] = k;
      raw[col + 1] = -k;
    }
    set_objective(raw);
    if (!maximize(/*allow_artificial=*/false)) return {LpStatus::Unbounded, Rational(0), {}};
    LpResult res;
    res.status = LpStatus::Optimal;
    res.value = zval_ + objective.constant();
    std::vector<Rational> vals(n_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) vals[basis_[r]] = rows_[r][n_];
    for (const auto& v : dims) {
      std::size_t col = var_col_.at(v);
      res.point[v] = vals[col] - vals[col + 1];
    }
    return res;
  }

 private:
  std::map<Var, std::size_t> var_col_;
  std::size_t num_struct_ = 0;
  std::size_t m_ = 0, n_ = 0, art0_ = 0;
  std::size_t has_artificial_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> zrow_;
  Rational zval_;
};

std::vector<Var> collect_dims(const std::vector<LinearConstraint>& cs,
                              const LinearExpression& objective) {
  std::set<Var> vars;
  for (const auto& c : cs)
    for (const auto& [v, k] : c.expr().coefficients()) vars.insert(v);
  for (const auto& [v, k] : objective.coefficients()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

}  // namespace

LpResult simplex_optimize(const std::vector<LinearConstraint>& constraints,
                          const LinearExpression& objective, Sense sense) {
  ++g_simplex_calls;
  std::vector<Var> dims = collect_dims(constraints, objective);
  LinearExpression obj = sense == Sense::Maximize ? objective : -objective;

  Tableau t(constraints, dims);
  if (t.needs_phase1() && !t.phase1()) return {LpStatus::Infeasible, Rational(0), {}};
  LpResult res = t.phase2(obj, dims);
  if (res.status == LpStatus::Optimal && sense == Sense::Minimize) res.value = -res.value;
  return res;
}

bool lp_infeasible(const std::vector<LinearConstraint>& constraints) {
  return simplex_optimize(constraints, LinearExpression(), Sense::Maximize).status ==
         LpStatus::Infeasible;
}

std::uint64_t simplex_call_count() { return g_simplex_calls; }

}  // namespace cbr
