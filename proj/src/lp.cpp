#include "rofw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/LU>

namespace rofw {

Index LinearProgram::add_row(const Eigen::Ref<const Vector>& coefficients, Relation relation,
                             double value) {
  if (coefficients.size() != num_variables()) {
    throw std::invalid_argument("lp: row length does not match variable count");
  }
  const Index r = A.rows();
  Matrix grown(r + 1, num_variables());
  if (r > 0) grown.topRows(r) = A;
  grown.row(r) = coefficients.transpose();
  A.swap(grown);
  relations.push_back(relation);
  rhs.conservativeResize(r + 1);
  rhs(r) = value;
  return r;
}

void LinearProgram::validate() const {
  const Index n = num_variables();
  if (n < 1) throw std::invalid_argument("lp: no variables");
  if (!objective.allFinite()) throw std::invalid_argument("lp: non-finite objective");
  if (A.rows() > 0 && A.cols() != n) throw std::invalid_argument("lp: constraint width mismatch");
  if (static_cast<Index>(relations.size()) != A.rows() || rhs.size() != A.rows()) {
    throw std::invalid_argument("lp: relations/rhs do not match constraint count");
  }
  if (!A.allFinite() || !rhs.allFinite()) throw std::invalid_argument("lp: non-finite constraint data");
  if ((lower.size() != 0 && lower.size() != n) || (upper.size() != 0 && upper.size() != n)) {
    throw std::invalid_argument("lp: bound vectors have wrong length");
  }
  for (Index j = 0; j < n; ++j) {
    const double lo = lower.size() ? lower(j) : 0.0;
    const double hi = upper.size() ? upper(j) : kInf;
    if (std::isnan(lo) || std::isnan(hi) || lo > hi || lo == kInf || hi == -kInf) {
      throw std::invalid_argument("lp: invalid variable bounds");
    }
  }
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal:
      return "optimal";
    case LpStatus::Infeasible:
      return "infeasible";
    case LpStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

enum class ColumnMap { Shift, Mirror, SplitPos, SplitNeg };

struct StructuralColumn {
  Index original;
  ColumnMap map;
};

// Standard form: maximize cost^T x  s.t.  A x = b,  0 <= x <= upper.
class BoundedSimplex {
 public:
  BoundedSimplex(Matrix A, Vector b, Vector upper, std::vector<Index> basis, double tol)
      : A0_(std::move(A)), b_(std::move(b)), upper_(std::move(upper)), basis_(std::move(basis)), tol_(tol) {
    m_ = A0_.rows();
    N_ = A0_.cols();
    at_upper_.assign(static_cast<std::size_t>(N_), false);
    is_basic_.assign(static_cast<std::size_t>(N_), -1);
    for (Index i = 0; i < m_; ++i) is_basic_[basis_[i]] = i;
    refactor(Vector::Zero(N_));
  }

  // Returns false when unbounded.
  bool optimize(const Vector& cost, std::int64_t& pivots) {
    cost_ = cost;
    compute_reduced_costs();
    std::int64_t degenerate_run = 0;
    bool bland = false;
    const std::int64_t bland_after = 3 * (m_ + N_);
    const std::int64_t pivot_cap = 50 * (m_ + N_) + 1000;
    std::int64_t since_refactor = 0;
    while (true) {
      const Index q = choose_entering(bland);
      if (q < 0) return true;
      const double sigma = at_upper_[q] ? -1.0 : 1.0;

      double step = upper_(q);
      Index leave = -1;
      bool leave_to_upper = false;
      double leave_alpha = 0.0;
      for (Index i = 0; i < m_; ++i) {
        const double alpha = sigma * T_(i, q);
        if (std::abs(alpha) <= kPivotTol) continue;
        const Index bi = basis_[i];
        double limit;
        bool to_upper;
        if (alpha > 0.0) {
          limit = std::max(xB_(i), 0.0) / alpha;
          to_upper = false;
        } else {
          if (!std::isfinite(upper_(bi))) continue;
          limit = std::max(upper_(bi) - xB_(i), 0.0) / -alpha;
          to_upper = true;
        }
        bool take;
        if (leave < 0) {
          take = limit <= step;  // on an exact tie, pivot rather than flip
        } else if (limit < step - 1e-12) {
          take = true;
        } else if (limit <= step + 1e-12) {
          take = bland ? bi < basis_[leave] : std::abs(alpha) > std::abs(leave_alpha);
        } else {
          take = false;
        }
        if (take) {
          step = limit;
          leave = i;
          leave_to_upper = to_upper;
          leave_alpha = alpha;
        }
      }
      if (leave < 0 && !std::isfinite(step)) return false;

      if (++pivots > pivot_cap) {
        std::ostringstream msg;
        msg << "simplex pivot cap exceeded (m=" << m_ << ", n=" << N_ << ", pivots=" << pivots
            << ", bland=" << bland << ")";
        throw SolverError(msg.str());
      }
      if (step <= 1e-12) {
        if (++degenerate_run >= bland_after) bland = true;
      } else {
        degenerate_run = 0;
      }

      xB_ -= (sigma * step) * T_.col(q);
      if (leave < 0) {
        at_upper_[q] = !at_upper_[q];
        continue;
      }
      const double entering_value = sigma > 0 ? step : upper_(q) - step;
      const Index out = basis_[leave];
      pivot(leave, q);
      is_basic_[out] = -1;
      at_upper_[out] = leave_to_upper;
      basis_[leave] = q;
      is_basic_[q] = leave;
      at_upper_[q] = false;
      xB_(leave) = entering_value;

      if (++since_refactor >= kRefactorPeriod) {
        since_refactor = 0;
        refactor(nonbasic_values());
        compute_reduced_costs();
      }
    }
  }

  Vector nonbasic_values() const {
    Vector x = Vector::Zero(N_);
    for (Index j = 0; j < N_; ++j) {
      if (is_basic_[j] < 0 && at_upper_[j]) x(j) = upper_(j);
    }
    return x;
  }

  Vector values() const {
    Vector x = nonbasic_values();
    for (Index i = 0; i < m_; ++i) x(basis_[i]) = xB_(i);
    return x;
  }

  // Recomputes the tableau, basic values and duals from the original matrix.
  void refactor(const Vector& nonbasic) {
    Matrix B(m_, m_);
    for (Index i = 0; i < m_; ++i) B.col(i) = A0_.col(basis_[i]);
    lu_.compute(B);
    T_ = lu_.solve(A0_);
    xB_ = lu_.solve(b_ - A0_ * nonbasic);
  }

  Vector duals() const {
    Vector cB(m_);
    for (Index i = 0; i < m_; ++i) cB(i) = cost_(basis_[i]);
    return lu_.transpose().solve(cB);
  }

  void set_upper(Index j, double value) { upper_(j) = value; }
  const Vector& upper() const { return upper_; }
  bool at_upper(Index j) const { return at_upper_[j]; }
  bool basic(Index j) const { return is_basic_[j] >= 0; }
  const Matrix& matrix() const { return A0_; }
  const Vector& rhs() const { return b_; }

 private:
  static constexpr double kPivotTol = 1e-9;
  static constexpr std::int64_t kRefactorPeriod = 100;

  void compute_reduced_costs() {
    Vector cB(m_);
    for (Index i = 0; i < m_; ++i) cB(i) = cost_(basis_[i]);
    d_ = cost_ - T_.transpose() * cB;
    for (Index i = 0; i < m_; ++i) d_(basis_[i]) = 0.0;
  }

  Index choose_entering(bool bland) const {
    Index best = -1;
    double best_score = 0.0;
    for (Index j = 0; j < N_; ++j) {
      if (is_basic_[j] >= 0 || upper_(j) <= 0.0) continue;
      const double score = at_upper_[j] ? -d_(j) : d_(j);
      if (score <= tol_) continue;
      if (bland) return j;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    return best;
  }

  void pivot(Index r, Index q) {
    const double p = T_(r, q);
    T_.row(r) /= p;
    Vector factors = T_.col(q);
    factors(r) = 0.0;
    const Eigen::RowVectorXd pivot_row = T_.row(r);
    T_.noalias() -= factors * pivot_row;
    const double dq = d_(q);
    if (dq != 0.0) d_ -= dq * T_.row(r).transpose();
    d_(q) = 0.0;
  }

  Matrix A0_;
  Vector b_;
  Vector upper_;
  std::vector<Index> basis_;
  double tol_;
  Index m_ = 0;
  Index N_ = 0;
  Matrix T_;
  Vector xB_;
  Vector cost_;
  Vector d_;
  std::vector<bool> at_upper_;
  std::vector<Index> is_basic_;
  Eigen::PartialPivLU<Matrix> lu_;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double tol) {
  lp.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("lp tolerance must be positive");
  const Index n = lp.num_variables();
  const Index m = lp.num_constraints();
  auto lower_of = [&](Index j) { return lp.lower.size() ? lp.lower(j) : 0.0; };
  auto upper_of = [&](Index j) { return lp.upper.size() ? lp.upper(j) : kInf; };

  // Structural columns after shifting bounds to [0, u].
  std::vector<StructuralColumn> columns;
  std::vector<double> column_upper;
  Vector b = m > 0 ? lp.rhs : Vector(0);
  for (Index j = 0; j < n; ++j) {
    const double lo = lower_of(j), hi = upper_of(j);
    if (std::isfinite(lo)) {
      columns.push_back({j, ColumnMap::Shift});
      column_upper.push_back(std::isfinite(hi) ? hi - lo : kInf);
      if (m > 0 && lo != 0.0) b -= lp.A.col(j) * lo;
    } else if (std::isfinite(hi)) {
      columns.push_back({j, ColumnMap::Mirror});
      column_upper.push_back(kInf);
      if (m > 0) b -= lp.A.col(j) * hi;
    } else {
      columns.push_back({j, ColumnMap::SplitPos});
      column_upper.push_back(kInf);
      columns.push_back({j, ColumnMap::SplitNeg});
      column_upper.push_back(kInf);
    }
  }
  const Index ns = static_cast<Index>(columns.size());
  auto column_sign = [](ColumnMap map) {
    return (map == ColumnMap::Mirror || map == ColumnMap::SplitNeg) ? -1.0 : 1.0;
  };

  Index num_slacks = 0;
  for (Relation rel : lp.relations) num_slacks += rel != Relation::Equal;

  Matrix S = Matrix::Zero(m, ns + num_slacks);
  Vector row_scale = Vector::Ones(m);
  Vector row_flip = Vector::Ones(m);
  std::vector<Index> slack_of(static_cast<std::size_t>(m), -1);
  {
    Index next_slack = ns;
    for (Index r = 0; r < m; ++r) {
      for (Index k = 0; k < ns; ++k) {
        S(r, k) = column_sign(columns[k].map) * lp.A(r, columns[k].original);
      }
      const double scale = S.row(r).head(ns).cwiseAbs().maxCoeff();
      if (scale > 0.0) row_scale(r) = scale;
      S.row(r).head(ns) /= row_scale(r);
      b(r) /= row_scale(r);
      if (lp.relations[r] != Relation::Equal) {
        slack_of[r] = next_slack;
        S(r, next_slack++) = lp.relations[r] == Relation::LessEqual ? 1.0 : -1.0;
      }
      if (b(r) < 0.0) {
        S.row(r) *= -1.0;
        b(r) = -b(r);
        row_flip(r) = -1.0;
      }
    }
  }

  // Initial basis: slacks with coefficient +1, artificials elsewhere.
  std::vector<Index> basis(static_cast<std::size_t>(m));
  std::vector<Index> artificial_rows;
  for (Index r = 0; r < m; ++r) {
    if (slack_of[r] >= 0 && S(r, slack_of[r]) > 0.0) {
      basis[r] = slack_of[r];
    } else {
      artificial_rows.push_back(r);
    }
  }
  const Index first_artificial = S.cols();
  const Index num_artificial = static_cast<Index>(artificial_rows.size());
  Matrix A(m, first_artificial + num_artificial);
  A.leftCols(first_artificial) = S;
  A.rightCols(num_artificial).setZero();
  for (Index k = 0; k < num_artificial; ++k) {
    A(artificial_rows[k], first_artificial + k) = 1.0;
    basis[artificial_rows[k]] = first_artificial + k;
  }
  const Index N = A.cols();
  Vector upper = Vector::Constant(N, kInf);
  for (Index k = 0; k < ns; ++k) upper(k) = column_upper[static_cast<std::size_t>(k)];

  Vector cost = Vector::Zero(N);
  for (Index k = 0; k < ns; ++k) cost(k) = column_sign(columns[k].map) * lp.objective(columns[k].original);

  LpSolution solution;
  solution.duals = Vector::Zero(m);
  if (m == 0) {
    solution.x = Vector::Zero(n);
    for (Index j = 0; j < n; ++j) {
      const double c = lp.objective(j);
      const double target = c > 0.0 ? upper_of(j) : (c < 0.0 ? lower_of(j) : std::clamp(0.0, lower_of(j), upper_of(j)));
      if (!std::isfinite(target)) {
        solution.status = LpStatus::Unbounded;
        return solution;
      }
      solution.x(j) = target;
    }
    solution.status = LpStatus::Optimal;
    solution.objective_value = lp.objective.dot(solution.x);
    return solution;
  }
  BoundedSimplex simplex(A, b, upper, basis, tol);

  if (num_artificial > 0) {
    Vector phase1 = Vector::Zero(N);
    phase1.tail(num_artificial).setConstant(-1.0);
    simplex.optimize(phase1, solution.pivots);
    simplex.refactor(simplex.nonbasic_values());
    const Vector x = simplex.values();
    const double infeasibility = x.tail(num_artificial).sum();
    if (infeasibility > tol * (1.0 + b.cwiseAbs().maxCoeff()) * 10.0) {
      solution.status = LpStatus::Infeasible;
      solution.x = Vector::Zero(n);
      return solution;
    }
    for (Index k = 0; k < num_artificial; ++k) simplex.set_upper(first_artificial + k, 0.0);
  }

  if (!simplex.optimize(cost, solution.pivots)) {
    solution.status = LpStatus::Unbounded;
    solution.x = Vector::Zero(n);
    return solution;
  }
  simplex.refactor(simplex.nonbasic_values());
  const Vector xs = simplex.values();
  const Vector y = simplex.duals();

  solution.status = LpStatus::Optimal;
  solution.x = Vector::Zero(n);
  for (Index k = 0; k < ns; ++k) {
    const Index j = columns[k].original;
    switch (columns[k].map) {
      case ColumnMap::Shift:
        solution.x(j) += lower_of(j) + xs(k);
        break;
      case ColumnMap::Mirror:
        solution.x(j) += upper_of(j) - xs(k);
        break;
      case ColumnMap::SplitPos:
        solution.x(j) += xs(k);
        break;
      case ColumnMap::SplitNeg:
        solution.x(j) -= xs(k);
        break;
    }
  }
  solution.objective_value = lp.objective.dot(solution.x);
  for (Index r = 0; r < m; ++r) solution.duals(r) = y(r) * row_flip(r) / row_scale(r);

  // Certificates in the scaled standard form.
  const Vector& su = simplex.upper();
  double primal = m > 0 ? (A * xs - b).cwiseAbs().maxCoeff() : 0.0;
  for (Index j = 0; j < N; ++j) {
    primal = std::max(primal, -xs(j));
    if (std::isfinite(su(j))) primal = std::max(primal, xs(j) - su(j));
  }
  const Vector reduced = cost - A.transpose() * y;
  double dual = 0.0, complementarity = 0.0;
  for (Index j = 0; j < N; ++j) {
    if (su(j) <= 0.0) continue;  // fixed column, any sign allowed
    const double r = reduced(j);
    if (r > 0.0) {
      if (!std::isfinite(su(j))) dual = std::max(dual, r);
      else complementarity = std::max(complementarity, r * (su(j) - xs(j)));
    } else {
      complementarity = std::max(complementarity, -r * std::max(xs(j), 0.0));
    }
  }
  solution.primal_residual = primal;
  solution.dual_residual = dual;
  solution.complementarity = complementarity;
  return solution;
}

}  // namespace rofw
