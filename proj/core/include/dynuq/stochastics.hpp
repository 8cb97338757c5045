#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace dynuq {

/// Counter-keyed random stream: identical (seed, stream_id) pairs produce
/// identical draw sequences, and distinct stream_ids are independent, so any
/// number of streams can run concurrently without shared state.
class RngStream {
public:
    RngStream(std::int64_t seed, std::int64_t stream_id);

    std::int64_t seed() const { return seed_; }
    std::int64_t stream_id() const { return stream_id_; }

    /// Uniform on (0, 1), endpoints excluded.
    double uniform();
    /// Standard normal via the Marsaglia polar method.
    double normal();
    /// Gamma(shape, 1) for shape > 0 (Marsaglia-Tsang squeeze).
    double gamma(double shape);
    /// Chi-square with dof > 0 degrees of freedom.
    double chi_square(double dof);

private:
    std::int64_t seed_;
    std::int64_t stream_id_;
    std::uint64_t state_;

    std::uint64_t next_u64();
};

/// Standard Student-t draw with dof >= 1 (normal over scaled chi-square).
double sample_student_t(int dof, RngStream& stream);

/// mean + chol * z with z iid standard normal; chol is lower triangular.
Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov_chol,
                           RngStream& stream);

/// Wishart(identity scale, dof) draw via the Bartlett construction;
/// requires dof >= m and returns an SPD m x m matrix.
Eigen::MatrixXd sample_wishart_identity(int m, int dof, RngStream& stream);

/// Inverse standard-normal CDF.
double normal_quantile(double p);
/// Inverse Student-t CDF with dof degrees of freedom.
double student_t_quantile(double p, int dof);

/// Cyclic Lorenz 96 right-hand side: component j is
/// (y_{j+1} - y_{j-2}) * y_{j-1} - y_j + F, indices modulo m.
Eigen::VectorXd lorenz96_rhs(const Eigen::VectorXd& y, double forcing);

/// One classical Runge-Kutta 4 step of size h. Throws NumericalError naming
/// the stage index if a stage evaluation turns non-finite.
Eigen::VectorXd rk4_step(const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& f,
                         const Eigen::VectorXd& y, double h);

struct Lorenz96Config {
    int m = 40;
    double forcing = 8.0;
    double h = 0.01;
    int steps = 1000;
    std::int64_t seed = 0;
    /// When set, replaces the random MVN(0, Wishart) initial state.
    std::optional<Eigen::VectorXd> initial_state;

    void validate() const;
};

struct Lorenz96Data {
    Eigen::MatrixXd states; // m x (steps + 1)
    Eigen::MatrixXd derivs; // m x (steps + 1), rhs evaluated at each state
};

/// Integrates Lorenz 96 from a random initial state (MVN with a
/// Wishart-sampled covariance) and records the derivative at every stored
/// state. Throws NumericalError with the step index on blow-up.
Lorenz96Data gen_lorenz96(const Lorenz96Config& cfg);

} // namespace dynuq
