#pragma once

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "disklab/enumerator.hpp"
#include "disklab/truncated_operator.hpp"

namespace disklab {

struct CriterionReport {
    std::vector<int> n_ks;
    std::vector<Cx> lambda_ks;   // empty in the plain form
    std::vector<double> cond1;
    std::vector<double> cond2;
    std::vector<double> cond3;
    double tolerance = 1e-6;
    bool overflow = false;
    enum class Verdict { pass_trend, fail };
    Verdict verdict = Verdict::fail;
};

const char* verdict_name(CriterionReport::Verdict v);

/// Formal right inverse of a weighted backward shift: the forward shift
/// with reciprocal weights (recurses through scalar multiples).
OperatorSpec right_inverse_map(const OperatorSpec& spec);

/// Residuals of the three plain criterion conditions over sampled dense
/// sets, cond1[k] = max_x ||T^n x|| * max_y ||S^n y||,
/// cond2[k] = max_y ||S^n y||, cond3[k] = max_y ||T^n S^n y - y||.
CriterionReport criterion_residuals(const TruncatedOperator& T, const TruncatedOperator& S,
                                    const DenseSetEnumerator& X, const DenseSetEnumerator& Y,
                                    const std::vector<int>& n_ks, int sample_count,
                                    double tolerance = 1e-6);

/// Scalar-sequence form: cond1[k] = |lambda_k| * max_x ||T^n x||,
/// cond2[k] = max_y ||S^n y|| / |lambda_k|, cond3 as in the plain form.
/// Requires every lambda nonzero with |lambda| <= 1.
CriterionReport lambda_criterion_residuals(const TruncatedOperator& T, const TruncatedOperator& S,
                                           const std::vector<Cx>& lambda_ks,
                                           const DenseSetEnumerator& X,
                                           const DenseSetEnumerator& Y,
                                           const std::vector<int>& n_ks, int sample_count,
                                           double tolerance = 1e-6);

/// Scalar bridging the plain form to the sequence form:
/// lambda = ||S^n y|| / eps (norm reading of the conversion formula).
/// Preconditions checked: ||S^n y|| < eps, lambda != 0, and when a
/// witness x is supplied, ||T^n x||*||S^n y|| < eps^2.
Cx equivalence_transform(const TruncatedOperator& T, const TruncatedOperator& S, const Vec& y,
                         int n_k, double eps, const std::optional<Vec>& x = std::nullopt);

/// Constant-ratio rescaling alpha_k = sqrt(eps) * lambda_k (0 < eps < 1).
std::vector<Cx> rescale_sequence(const std::vector<Cx>& lambda_ks, double eps);

/// User-supplied vanishing-ratio variant: alpha_k = ratio_k * lambda_k,
/// each ratio nonzero and every |alpha_k| <= 1.
std::vector<Cx> apply_vanishing_ratios(const std::vector<Cx>& lambda_ks,
                                       const std::vector<Cx>& ratios);

struct GapRule {
    /// When nonempty these are the iterate indices m_j themselves.
    std::vector<int> explicit_gaps;
    /// Extra cap on the automatic tail budgets min(2^-j, tail_cap).
    double tail_cap = std::numeric_limits<double>::infinity();
    /// Lower bound for the first iterate index.
    int first_gap = 1;
};

struct ConstructionCertificate {
    std::vector<int> gaps; // m_j, strictly increasing
    std::vector<Vec> targets;
    std::vector<double> residual_bounds;    // exact tail sums
    std::vector<double> achieved_residuals; // ||T^{m_j} x - y_j|| measured
};

/// Series construction x = sum_j S^{m_j} y_j with an exact per-target
/// error certificate; the automatic schedule keeps every tail below
/// min(2^-j, tail_cap) and errors out when the truncation cannot hold
/// the shifted supports.
std::pair<Vec, ConstructionCertificate>
build_diskcyclic_vector(const TruncatedOperator& T, const TruncatedOperator& S,
                        const std::vector<Vec>& targets, const GapRule& rule = {});

} // namespace disklab
