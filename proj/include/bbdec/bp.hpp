#pragma once

#include <cstdint>
#include <vector>

#include "bbdec/code.hpp"
#include "bbdec/gf2.hpp"
#include "bbdec/noise.hpp"

namespace bbdec {

enum class Schedule { parallel, serial, serial_relative };

const char* schedule_name(Schedule s);
Schedule schedule_from_name(const std::string& name);

struct BPConfig {
    std::size_t max_iter = 100;
    Schedule schedule = Schedule::parallel;
    double ms_scaling = 1.0;   // min-sum scaling factor, (0, 1]
    double channel_p = 0.01;   // prior error probability for LLR init

    void validate() const;
};

struct BPResult {
    bool converged = false;
    std::size_t iterations_used = 0;
    BitVec estimate;
    std::vector<double> final_llrs;
};

struct RelayConfig {
    std::size_t num_relays = 10;
    std::size_t iters_per_relay = 20;
    double scaling_low = 0.5;
    double scaling_high = 1.0;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Min-sum belief propagation on one check matrix. Instances hold mutable
/// message state; use one instance per concurrent shot.
class BpDecoder {
public:
    explicit BpDecoder(const Gf2Matrix& H);

    BPResult decode(const BitVec& syndrome, const BPConfig& cfg);

    /// Same, with explicit per-bit prior LLRs (used by the relay legs).
    BPResult decode_with_priors(const BitVec& syndrome, const BPConfig& cfg,
                                const std::vector<double>& priors);

    /// Sequential ensemble of BP legs with randomized min-sum scaling,
    /// each leg seeded with the previous leg's posteriors.
    BPResult decode_relay(const BitVec& syndrome, const RelayConfig& rcfg, const BPConfig& base);

    std::size_t num_bits() const { return n_bits_; }
    std::size_t num_checks() const { return n_checks_; }

    /// Messages saturate at this magnitude to avoid runaway values.
    static constexpr double kLlrClip = 50.0;

private:
    void init_state(const std::vector<double>& priors);
    void sweep_parallel(const std::vector<std::uint8_t>& syn, double scale);
    void sweep_serial(const std::vector<std::uint8_t>& syn, double scale,
                      const std::vector<std::uint32_t>& order);
    void hard_decision();
    bool syndrome_matched(const std::vector<std::uint8_t>& syn) const;

    std::size_t n_checks_ = 0;
    std::size_t n_bits_ = 0;
    std::vector<std::size_t> check_ptr_;
    std::vector<std::uint32_t> edge_bit_;
    std::vector<std::size_t> bit_ptr_;
    std::vector<std::uint32_t> bit_edge_;

    std::vector<double> nu_;       // check-to-bit message per edge
    std::vector<double> nu_next_;  // scratch for flooding sweeps
    std::vector<double> lambda_;   // posterior LLR per bit
    std::vector<double> prior_;
    std::vector<std::uint8_t> hard_;
    std::vector<std::uint32_t> order_;
};

double channel_llr(double p);

/// Convenience wrappers decoding against the basis check matrix.
BPResult decode_bp(const BBCode& code, const Syndrome& s, const BPConfig& cfg,
                   Basis basis = Basis::z_memory);
BPResult decode_relay(const BBCode& code, const Syndrome& s, const RelayConfig& rcfg,
                      const BPConfig& base, Basis basis = Basis::z_memory);

}  // namespace bbdec
