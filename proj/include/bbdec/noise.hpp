#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bbdec/code.hpp"
#include "bbdec/gf2.hpp"

namespace bbdec {

enum class NoiseKind {
    code_capacity_iid,
    code_capacity_fixed_weight,
    phenomenological,
};

enum class Basis { z_memory, x_memory };

/// How the physical rate p maps onto the T extraction rounds of the
/// phenomenological model:
///  - aggregate: p is the per-shot channel strength; each round runs at the
///    rate q with (1 - (1-2q)^T)/2 == p, so the round-accumulated flip
///    probability of every bit and every measurement is exactly p.
///  - per_round: p is applied raw in every round, so the accumulated rate
///    grows with T.
enum class RateModel { aggregate, per_round };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::code_capacity_iid;
    double p = 0.0;
    std::optional<std::size_t> fixed_weight;
    std::size_t rounds = 5;
    Basis basis = Basis::z_memory;
    RateModel rate_model = RateModel::aggregate;

    void validate() const;
};

/// Ground truth for one shot: accumulated data errors plus the per-round
/// measurement error bits.
struct ErrorSample {
    BitVec data_errors;                  // length n
    std::vector<BitVec> meas_errors;     // rounds x n_checks
    BitVec meas_syndrome;                // per-check XOR over rounds
    std::size_t meas_count = 0;          // total set bits across all rounds
};

struct Syndrome {
    BitVec bits;
    std::size_t defect_count = 0;
    std::size_t mod_w_class = 0;

    Syndrome() = default;
    Syndrome(BitVec b, std::size_t w);
    bool trivial() const { return defect_count == 0; }
};

/// The check matrix a basis decodes against.
const Gf2Matrix& check_matrix(const BBCode& code, Basis basis);

/// Draws one shot. Deterministic in (code, spec, seed).
std::pair<ErrorSample, Syndrome> sample(const BBCode& code, const NoiseSpec& spec, std::uint64_t seed);

/// Terms of defect_count = w*|e| + |m_syn| - 2*overlap_correction.
struct DefectDecomposition {
    std::size_t w_times_e = 0;
    std::size_t m_syn_weight = 0;
    std::size_t overlap_correction = 0;
};

DefectDecomposition defect_decomposition(const BBCode& code, const ErrorSample& sample,
                                         Basis basis = Basis::z_memory);

/// Per-round rate q with round-accumulated flip probability exactly p.
double per_round_rate(double p, std::size_t rounds);

}  // namespace bbdec
