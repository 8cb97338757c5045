#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

namespace dynuq {

enum class KernelFamily { PowerExponential, Matern25 };
enum class KernelStructure { Isotropic, Product };

/// Correlation-kernel configuration shared by every output coordinate of a
/// PP-GP. Ranges are the length scales gamma (one entry for isotropic
/// structure, one per input dimension for product structure); the nugget eta
/// is added to the correlation matrix diagonal by the model, never by
/// kernel_eval itself.
struct KernelSpec {
    KernelFamily family = KernelFamily::Matern25;
    KernelStructure structure = KernelStructure::Isotropic;
    double alpha = 1.9; // power-exponential roughness in (0, 2]; unused by Matern
    Eigen::VectorXd ranges = Eigen::VectorXd::Ones(1);
    double nugget = 0.0;

    /// Checks the invariants against an input dimension p; throws
    /// std::invalid_argument naming the offending field.
    void validate(Eigen::Index input_dim) const;

    nlohmann::json to_json() const;
    static KernelSpec from_json(const nlohmann::json& j);
};

/// K(x, x') in (0, 1]; exactly 1 at zero distance.
double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y);

/// n x n correlation matrix for the columns of X (p x n, one input per
/// column). Unit diagonal, symmetric by construction.
Eigen::MatrixXd corr_matrix(const KernelSpec& spec, const Eigen::MatrixXd& X);

/// n-vector of correlations between each column of X and the test input.
Eigen::VectorXd cross_corr(const KernelSpec& spec, const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& xstar);

/// n x B correlation block between the columns of X and the columns of Xstar.
/// Column b equals cross_corr(spec, X, Xstar.col(b)).
Eigen::MatrixXd cross_corr_batch(const KernelSpec& spec, const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& Xstar);

} // namespace dynuq
