#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "csketch/sketch.hpp"

namespace csketch {

/// Flat view of all primitive parameters, concatenated in primitive order
/// (Arc 6, Circle 3, Line 4, Point 2).
struct VariableLayout {
    std::vector<int> offsets;  // per primitive, into the flat vector
    int total = 0;

    static VariableLayout of(const SketchGraph& sketch);
    int index(int prim, int param) const { return offsets[prim] + param; }
};

Eigen::VectorXd pack_params(const SketchGraph& sketch);
SketchGraph unpack_params(const SketchGraph& proto, const Eigen::VectorXd& theta);

/// One residual contribution. dim is 1 or 2; weight multiplies the
/// residual before squaring.
class ResidualBlock {
public:
    virtual ~ResidualBlock() = default;
    virtual int dim() const = 0;
    virtual double weight() const { return 1.0; }
    virtual bool is_constraint() const { return true; }
    virtual std::string label() const = 0;
    virtual void eval(const Eigen::VectorXd& theta, double* out) const = 0;
    /// Writes dim() x n derivative rows. The default is a forward
    /// difference of eval() with step 1e-7; catalog entries with simple
    /// closed forms override it.
    virtual void jacobian(const Eigen::VectorXd& theta,
                          Eigen::Ref<Eigen::MatrixXd> rows) const;
    /// True when jacobian() is an analytic override rather than the
    /// finite-difference default.
    virtual bool has_analytic_jacobian() const { return false; }
};

struct Pin {
    int prim = 0;
    int subref = 1;  // must be point-valued for the primitive kind
    Point2 target;
    double weight = 1.0;
};

class ResidualSystem {
public:
    /// reg_ref is the anchor of the weak per-variable regularization rows;
    /// w_reg their weight.
    ResidualSystem(VariableLayout layout,
                   std::vector<std::unique_ptr<ResidualBlock>> blocks,
                   Eigen::VectorXd reg_ref, double w_reg)
        : layout_(std::move(layout)),
          blocks_(std::move(blocks)),
          reg_ref_(std::move(reg_ref)),
          w_reg_(w_reg) {}

    const VariableLayout& layout() const { return layout_; }
    const Eigen::VectorXd& reg_ref() const { return reg_ref_; }
    const std::vector<std::unique_ptr<ResidualBlock>>& blocks() const { return blocks_; }

    int residual_dim() const;
    /// Stacked weighted residual vector (constraint and pin blocks, then
    /// the regularization rows).
    Eigen::VectorXd residuals(const Eigen::VectorXd& theta) const;
    /// Stacked weighted Jacobian.
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& theta) const;
    /// max |component| over constraint blocks only, unweighted.
    double max_constraint_residual(const Eigen::VectorXd& theta) const;
    /// Rows of the unweighted Jacobian restricted to constraint blocks.
    Eigen::MatrixXd constraint_jacobian(const Eigen::VectorXd& theta) const;

private:
    VariableLayout layout_;
    std::vector<std::unique_ptr<ResidualBlock>> blocks_;
    Eigen::VectorXd reg_ref_;
    double w_reg_;
};

struct SolverOptions {
    double tol_feas = 1e-6;
    double tol_step = 1e-10;
    int max_iter = 200;
    double lambda0 = 1e-3;
    double lambda_down = 0.3;
    double lambda_up = 10.0;
    double fd_step = 1e-7;
    double w_reg = 1e-3;
    double rank_tol = 1e-8;  // relative, for dof_estimate
};

struct SolveReport {
    bool converged = false;
    int iterations = 0;
    double max_constraint_residual = 0.0;
    Eigen::VectorXd theta_final;
};

/// Residual system for the sketch: one block per constraint (per the
/// residual catalog), one 2-component block per pin, and one weak
/// regularization term per variable pulling theta toward the sketch's own
/// parameters. Throws std::invalid_argument for constraints whose residual
/// is undefined for the primitive kinds/subrefs involved.
ResidualSystem build_system(const SketchGraph& sketch, const std::vector<Pin>& pins = {},
                            const SolverOptions& opts = {});

/// Levenberg-Marquardt on the weighted squared residual norm. Convergence:
/// max constraint residual <= tol_feas and accepted step norm <= tol_step.
/// Non-convergence is a report, not an error; a non-finite residual at
/// theta0 throws.
SolveReport solve(const ResidualSystem& system, const Eigen::VectorXd& theta0,
                  const SolverOptions& opts = {});

/// Max |residual| over all constraint blocks at the sketch's own
/// parameters. 0 for a sketch with no constraints.
double check(const SketchGraph& sketch);

/// (#variables) - rank of the constraint Jacobian at the sketch's
/// parameters. Requires check(sketch) <= tol_feas; throws otherwise.
int dof_estimate(const SketchGraph& sketch, const SolverOptions& opts = {});

}  // namespace csketch
