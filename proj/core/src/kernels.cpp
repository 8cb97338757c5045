#include "dynuq/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "dynuq/parallel.hpp"

namespace dynuq {

namespace {

constexpr double kSqrt5 = 2.2360679774997896964;

// Splits the kernel into a polynomial prefactor and an exponent so that a
// product over input dimensions costs a single exp() per point pair.
//   matern 2.5:  poly = 1 + sqrt5*d/g + 5d^2/(3g^2),  exponent = sqrt5*d/g
//   pow-exp:     poly = 1,                            exponent = d^alpha / g
inline void accumulate_factor(KernelFamily family, double alpha, double dist,
                              double gamma, double& poly, double& exponent) {
    if (family == KernelFamily::Matern25) {
        const double u = dist / gamma;
        const double su = kSqrt5 * u;
        poly *= 1.0 + su + (5.0 / 3.0) * u * u;
        exponent += su;
    } else {
        exponent += std::pow(dist, alpha) / gamma;
    }
}

inline double eval_cols(const KernelSpec& spec, const Eigen::MatrixXd& A,
                        Eigen::Index i, const Eigen::MatrixXd& B, Eigen::Index j) {
    double poly = 1.0;
    double exponent = 0.0;
    if (spec.structure == KernelStructure::Isotropic) {
        const double d = (A.col(i) - B.col(j)).norm();
        accumulate_factor(spec.family, spec.alpha, d, spec.ranges[0], poly, exponent);
    } else {
        for (Eigen::Index l = 0; l < A.rows(); ++l) {
            const double d = std::abs(A(l, i) - B(l, j));
            accumulate_factor(spec.family, spec.alpha, d, spec.ranges[l], poly, exponent);
        }
    }
    return poly * std::exp(-exponent);
}

} // namespace

void KernelSpec::validate(Eigen::Index input_dim) const {
    if (ranges.size() == 0) throw std::invalid_argument("KernelSpec: ranges is empty");
    if ((ranges.array() <= 0.0).any())
        throw std::invalid_argument("KernelSpec: all range entries must be positive");
    if (!(nugget >= 0.0)) throw std::invalid_argument("KernelSpec: nugget must be >= 0");
    if (structure == KernelStructure::Isotropic) {
        if (ranges.size() != 1)
            throw std::invalid_argument("KernelSpec: isotropic structure takes one range");
    } else if (ranges.size() != input_dim) {
        throw std::invalid_argument(
            "KernelSpec: product structure needs one range per input dimension (got " +
            std::to_string(ranges.size()) + ", need " + std::to_string(input_dim) + ")");
    }
    if (family == KernelFamily::PowerExponential && !(alpha > 0.0 && alpha <= 2.0))
        throw std::invalid_argument("KernelSpec: power-exponential alpha must be in (0, 2]");
}

double kernel_eval(const KernelSpec& spec, const Eigen::VectorXd& x,
                   const Eigen::VectorXd& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("kernel_eval: point dimensions differ");
    spec.validate(x.size());
    return eval_cols(spec, x, 0, y, 0);
}

Eigen::MatrixXd corr_matrix(const KernelSpec& spec, const Eigen::MatrixXd& X) {
    spec.validate(X.rows());
    const Eigen::Index n = X.cols();
    if (n < 1) throw std::invalid_argument("corr_matrix: need at least one input");
    if (!X.allFinite()) throw std::invalid_argument("corr_matrix: inputs must be finite");
    Eigen::MatrixXd K(n, n);
    parallel_for(0, static_cast<int>(n), [&](int i) {
        K(i, i) = 1.0;
        for (Eigen::Index j = 0; j < i; ++j) {
            const double v = eval_cols(spec, X, i, X, j);
            K(i, j) = v;
            K(j, i) = v;
        }
    });
    return K;
}

Eigen::VectorXd cross_corr(const KernelSpec& spec, const Eigen::MatrixXd& X,
                           const Eigen::VectorXd& xstar) {
    if (X.rows() != xstar.size())
        throw std::invalid_argument("cross_corr: test input dimension mismatch");
    spec.validate(X.rows());
    Eigen::VectorXd k(X.cols());
    for (Eigen::Index t = 0; t < X.cols(); ++t) k[t] = eval_cols(spec, X, t, xstar, 0);
    return k;
}

Eigen::MatrixXd cross_corr_batch(const KernelSpec& spec, const Eigen::MatrixXd& X,
                                 const Eigen::MatrixXd& Xstar) {
    if (X.rows() != Xstar.rows())
        throw std::invalid_argument("cross_corr_batch: input dimension mismatch");
    spec.validate(X.rows());
    Eigen::MatrixXd K(X.cols(), Xstar.cols());
    for (Eigen::Index b = 0; b < Xstar.cols(); ++b)
        for (Eigen::Index t = 0; t < X.cols(); ++t)
            K(t, b) = eval_cols(spec, X, t, Xstar, b);
    return K;
}

nlohmann::json KernelSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family == KernelFamily::PowerExponential ? "pow_exp" : "matern_2_5";
    j["structure"] = structure == KernelStructure::Isotropic ? "isotropic" : "product";
    if (family == KernelFamily::PowerExponential) j["alpha"] = alpha;
    j["ranges"] = std::vector<double>(ranges.begin(), ranges.end());
    j["nugget"] = nugget;
    return j;
}

KernelSpec KernelSpec::from_json(const nlohmann::json& j) {
    KernelSpec spec;
    const std::string family = j.at("family").get<std::string>();
    if (family == "pow_exp") {
        spec.family = KernelFamily::PowerExponential;
        spec.alpha = j.at("alpha").get<double>();
    } else if (family == "matern_2_5") {
        spec.family = KernelFamily::Matern25;
    } else {
        throw std::invalid_argument("KernelSpec: unknown family '" + family + "'");
    }
    const std::string structure = j.at("structure").get<std::string>();
    if (structure == "isotropic") {
        spec.structure = KernelStructure::Isotropic;
    } else if (structure == "product") {
        spec.structure = KernelStructure::Product;
    } else {
        throw std::invalid_argument("KernelSpec: unknown structure '" + structure + "'");
    }
    const auto ranges = j.at("ranges").get<std::vector<double>>();
    spec.ranges = Eigen::Map<const Eigen::VectorXd>(ranges.data(),
                                                    static_cast<Eigen::Index>(ranges.size()));
    spec.nugget = j.at("nugget").get<double>();
    return spec;
}

} // namespace dynuq
