#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bbdec/code.hpp"
#include "bbdec/noise.hpp"
#include "bbdec/record.hpp"

namespace bbdec {

/// True iff defect_count mod w == 0 (the converge prediction). w >= 2.
bool predict_convergence(const Syndrome& s, std::size_t w);

struct FeatureVector {
    std::size_t defect_count = 0;
    bool mod_w_zero = false;
    std::size_t max_component = 0;
    double position_variance = 0.0;
};

/// Detector-graph features of a nontrivial syndrome. Vertices are defect
/// checks; two defects are adjacent when their checks share a data qubit.
class FeatureExtractor {
public:
    explicit FeatureExtractor(const BBCode& code, Basis basis = Basis::z_memory);

    /// Throws on a trivial syndrome.
    FeatureVector extract(const Syndrome& s) const;

private:
    std::size_t w_;
    std::vector<std::vector<std::uint32_t>> check_neighbors_;
};

FeatureVector extract_features(const BBCode& code, const Syndrome& s, Basis basis = Basis::z_memory);

/// Mann-Whitney AUC with midrank tie handling:
/// P(score+ > score-) + 0.5 P(score+ == score-). Throws when only one
/// class is present. labels: nonzero = positive.
double auc(const std::vector<double>& scores, const std::vector<std::uint8_t>& labels);

struct PredictRule {
    enum class Kind { mod_w, threshold };
    Kind kind = Kind::mod_w;
    std::size_t k = 0;  // threshold: predict converge iff defect_count <= k

    static PredictRule mod_w() { return {Kind::mod_w, 0}; }
    static PredictRule threshold(std::size_t k) { return {Kind::threshold, k}; }
    bool predicts_converge(const DecodeRecord& rec) const;
};

struct ClassifierReport {
    std::optional<double> fp_rate;  // P(BP fails | predicted converge)
    std::optional<double> fn_rate;  // P(BP converges | predicted fail)
    std::size_t pred_conv_conv = 0;
    std::size_t pred_conv_fail = 0;
    std::size_t pred_fail_conv = 0;
    std::size_t pred_fail_fail = 0;

    std::size_t total() const {
        return pred_conv_conv + pred_conv_fail + pred_fail_conv + pred_fail_fail;
    }
};

/// Confusion report over nontrivial records.
ClassifierReport classifier_report(const std::vector<DecodeRecord>& records, const PredictRule& rule);

struct PowerLawFit {
    double alpha = 0.0;      // exponent
    double prefactor = 0.0;  // C in fp = C * p^alpha
    double r_squared = 0.0;
    std::size_t points_used = 0;
    std::vector<double> excluded_p;  // points dropped for fp == 0
};

/// OLS on (ln p, ln fp). Points with fp == 0 are excluded and noted.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct ClusterReport {
    struct WeightBin {
        std::size_t failures = 0;
        std::size_t with_cluster = 0;
    };
    std::size_t failures = 0;
    std::size_t with_cluster = 0;
    std::map<std::size_t, WeightBin> by_weight;

    double fraction() const {
        return failures == 0 ? 0.0 : static_cast<double>(with_cluster) / static_cast<double>(failures);
    }
};

/// True when two data errors in e sit on qubits whose check columns share at
/// least one check.
bool has_weight2_cluster(const BBCode& code, const BitVec& data_errors, Basis basis = Basis::z_memory);

/// Weight-2 cluster statistics over BP-failure ground truths, broken down by
/// error weight |e|.
ClusterReport cluster_analysis(const BBCode& code, const std::vector<ErrorSample>& failures,
                               Basis basis = Basis::z_memory);

/// Wilson 95% score interval for a binomial rate.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t total);

}  // namespace bbdec
