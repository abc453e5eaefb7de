#include "bbdec/bp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bbdec/rng.hpp"

namespace bbdec {

const char* schedule_name(Schedule s) {
    switch (s) {
        case Schedule::parallel: return "parallel";
        case Schedule::serial: return "serial";
        case Schedule::serial_relative: return "serial_relative";
    }
    return "?";
}

Schedule schedule_from_name(const std::string& name) {
    if (name == "parallel") return Schedule::parallel;
    if (name == "serial") return Schedule::serial;
    if (name == "serial_relative") return Schedule::serial_relative;
    throw std::invalid_argument("unknown schedule '" + name + "'");
}

void BPConfig::validate() const {
    if (max_iter < 1) {
        throw std::invalid_argument("BPConfig: max_iter must be >= 1");
    }
    if (ms_scaling <= 0.0 || ms_scaling > 1.0) {
        throw std::invalid_argument("BPConfig: ms_scaling must be in (0, 1]");
    }
    if (channel_p <= 0.0 || channel_p >= 0.5) {
        throw std::invalid_argument("BPConfig: channel_p must be in (0, 0.5)");
    }
}

void RelayConfig::validate() const {
    if (num_relays < 1 || iters_per_relay < 1) {
        throw std::invalid_argument("RelayConfig: counts must be >= 1");
    }
    if (scaling_low > scaling_high) {
        throw std::invalid_argument("RelayConfig: scaling_low must be <= scaling_high");
    }
}

double channel_llr(double p) {
    return std::log((1.0 - p) / p);
}

BpDecoder::BpDecoder(const Gf2Matrix& H) : n_checks_(H.rows()), n_bits_(H.cols()) {
    check_ptr_.assign(n_checks_ + 1, 0);
    std::vector<std::vector<std::uint32_t>> per_bit(n_bits_);
    for (std::size_t r = 0; r < n_checks_; ++r) {
        check_ptr_[r + 1] = check_ptr_[r];
        for (std::size_t c = 0; c < n_bits_; ++c) {
            if (H.get(r, c)) {
                const auto edge = static_cast<std::uint32_t>(edge_bit_.size());
                edge_bit_.push_back(static_cast<std::uint32_t>(c));
                per_bit[c].push_back(edge);
                ++check_ptr_[r + 1];
            }
        }
    }
    bit_ptr_.assign(n_bits_ + 1, 0);
    for (std::size_t j = 0; j < n_bits_; ++j) {
        bit_ptr_[j + 1] = bit_ptr_[j] + per_bit[j].size();
        bit_edge_.insert(bit_edge_.end(), per_bit[j].begin(), per_bit[j].end());
    }
    nu_.resize(edge_bit_.size());
    nu_next_.resize(edge_bit_.size());
    lambda_.resize(n_bits_);
    prior_.resize(n_bits_);
    hard_.resize(n_bits_);
    order_.resize(n_checks_);
}

void BpDecoder::init_state(const std::vector<double>& priors) {
    prior_ = priors;
    lambda_ = priors;
    std::fill(nu_.begin(), nu_.end(), 0.0);
}

void BpDecoder::hard_decision() {
    for (std::size_t j = 0; j < n_bits_; ++j) {
        hard_[j] = lambda_[j] < 0.0 ? 1 : 0;
    }
}

bool BpDecoder::syndrome_matched(const std::vector<std::uint8_t>& syn) const {
    for (std::size_t i = 0; i < n_checks_; ++i) {
        std::uint8_t parity = 0;
        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
            parity ^= hard_[edge_bit_[e]];
        }
        if (parity != syn[i]) {
            return false;
        }
    }
    return true;
}

namespace {

inline double clip(double x, double limit) {
    return x > limit ? limit : (x < -limit ? -limit : x);
}

}  // namespace

void BpDecoder::sweep_parallel(const std::vector<std::uint8_t>& syn, double scale) {
    for (std::size_t i = 0; i < n_checks_; ++i) {
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = min1;
        unsigned neg = syn[i];
        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
            const double mu = lambda_[edge_bit_[e]] - nu_[e];
            neg += mu < 0.0 ? 1U : 0U;
            const double a = std::fabs(mu);
            if (a < min1) {
                min2 = min1;
                min1 = a;
            } else if (a < min2) {
                min2 = a;
            }
        }
        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
            const double mu = lambda_[edge_bit_[e]] - nu_[e];
            const double a = std::fabs(mu);
            const unsigned parity = neg - (mu < 0.0 ? 1U : 0U);
            const double magnitude = a == min1 ? min2 : min1;
            const double value = scale * ((parity & 1U) != 0 ? -magnitude : magnitude);
            nu_next_[e] = clip(value, kLlrClip);
        }
    }
    nu_.swap(nu_next_);
    for (std::size_t j = 0; j < n_bits_; ++j) {
        double acc = prior_[j];
        for (std::size_t k = bit_ptr_[j]; k < bit_ptr_[j + 1]; ++k) {
            acc += nu_[bit_edge_[k]];
        }
        lambda_[j] = acc;
    }
}

void BpDecoder::sweep_serial(const std::vector<std::uint8_t>& syn, double scale,
                             const std::vector<std::uint32_t>& order) {
    for (const auto i : order) {
        double min1 = std::numeric_limits<double>::infinity();
        double min2 = min1;
        unsigned neg = syn[i];
        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
            const double mu = lambda_[edge_bit_[e]] - nu_[e];
            neg += mu < 0.0 ? 1U : 0U;
            const double a = std::fabs(mu);
            if (a < min1) {
                min2 = min1;
                min1 = a;
            } else if (a < min2) {
                min2 = a;
            }
        }
        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
            const auto j = edge_bit_[e];
            const double mu = lambda_[j] - nu_[e];
            const double a = std::fabs(mu);
            const unsigned parity = neg - (mu < 0.0 ? 1U : 0U);
            const double magnitude = a == min1 ? min2 : min1;
            const double value = clip(scale * ((parity & 1U) != 0 ? -magnitude : magnitude), kLlrClip);
            lambda_[j] += value - nu_[e];
            nu_[e] = value;
        }
    }
}

BPResult BpDecoder::decode(const BitVec& syndrome, const BPConfig& cfg) {
    return decode_with_priors(syndrome, cfg,
                              std::vector<double>(n_bits_, channel_llr(cfg.channel_p)));
}

BPResult BpDecoder::decode_with_priors(const BitVec& syndrome, const BPConfig& cfg,
                                       const std::vector<double>& priors) {
    cfg.validate();
    if (syndrome.size() != n_checks_) {
        throw std::invalid_argument("BpDecoder::decode: syndrome length mismatch");
    }
    if (priors.size() != n_bits_) {
        throw std::invalid_argument("BpDecoder::decode: prior length mismatch");
    }
    std::vector<std::uint8_t> syn(n_checks_);
    for (std::size_t i = 0; i < n_checks_; ++i) {
        syn[i] = syndrome.get(i) ? 1 : 0;
    }
    init_state(priors);
    hard_decision();

    BPResult res;
    res.iterations_used = 0;
    if (syndrome_matched(syn)) {
        res.converged = true;
    } else {
        for (std::size_t iter = 1; iter <= cfg.max_iter; ++iter) {
            switch (cfg.schedule) {
                case Schedule::parallel:
                    sweep_parallel(syn, cfg.ms_scaling);
                    break;
                case Schedule::serial:
                    std::iota(order_.begin(), order_.end(), 0);
                    sweep_serial(syn, cfg.ms_scaling, order_);
                    break;
                case Schedule::serial_relative: {
                    // Checks holding the least reliable bits update first.
                    std::vector<double> key(n_checks_);
                    for (std::size_t i = 0; i < n_checks_; ++i) {
                        double least = std::numeric_limits<double>::infinity();
                        for (std::size_t e = check_ptr_[i]; e < check_ptr_[i + 1]; ++e) {
                            least = std::min(least, std::fabs(lambda_[edge_bit_[e]]));
                        }
                        key[i] = least;
                    }
                    std::iota(order_.begin(), order_.end(), 0);
                    std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
                        return key[a] != key[b] ? key[a] < key[b] : a < b;
                    });
                    sweep_serial(syn, cfg.ms_scaling, order_);
                    break;
                }
            }
            hard_decision();
            res.iterations_used = iter;
            if (syndrome_matched(syn)) {
                res.converged = true;
                break;
            }
        }
    }

    res.estimate = BitVec(n_bits_);
    for (std::size_t j = 0; j < n_bits_; ++j) {
        if (hard_[j] != 0) {
            res.estimate.set(j, true);
        }
    }
    res.final_llrs = lambda_;
    return res;
}

BPResult BpDecoder::decode_relay(const BitVec& syndrome, const RelayConfig& rcfg,
                                 const BPConfig& base) {
    rcfg.validate();
    Rng rng(rcfg.seed);
    std::vector<double> priors(n_bits_, channel_llr(base.channel_p));

    BPResult last;
    std::size_t total_iters = 0;
    for (std::size_t leg = 0; leg < rcfg.num_relays; ++leg) {
        BPConfig leg_cfg = base;
        leg_cfg.ms_scaling = rng.uniform_in(rcfg.scaling_low, rcfg.scaling_high);
        leg_cfg.max_iter = rcfg.iters_per_relay;
        last = decode_with_priors(syndrome, leg_cfg, priors);
        total_iters += last.iterations_used;
        if (last.converged) {
            break;
        }
        for (std::size_t j = 0; j < n_bits_; ++j) {
            priors[j] = clip(last.final_llrs[j], kLlrClip);
        }
    }
    last.iterations_used = total_iters;
    return last;
}

BPResult decode_bp(const BBCode& code, const Syndrome& s, const BPConfig& cfg, Basis basis) {
    BpDecoder dec(check_matrix(code, basis));
    return dec.decode(s.bits, cfg);
}

BPResult decode_relay(const BBCode& code, const Syndrome& s, const RelayConfig& rcfg,
                      const BPConfig& base, Basis basis) {
    BpDecoder dec(check_matrix(code, basis));
    return dec.decode_relay(s.bits, rcfg, base);
}

}  // namespace bbdec
