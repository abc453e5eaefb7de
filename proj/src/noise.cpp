#include "bbdec/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "bbdec/rng.hpp"

namespace bbdec {

void NoiseSpec::validate() const {
    if (p < 0.0 || p >= 0.5) {
        throw std::invalid_argument("NoiseSpec: p must be in [0, 0.5)");
    }
    if (rounds < 1) {
        throw std::invalid_argument("NoiseSpec: rounds must be >= 1");
    }
    if (fixed_weight.has_value() && kind != NoiseKind::code_capacity_fixed_weight) {
        throw std::invalid_argument("NoiseSpec: fixed_weight requires the fixed-weight kind");
    }
    if (kind == NoiseKind::code_capacity_fixed_weight && !fixed_weight.has_value()) {
        throw std::invalid_argument("NoiseSpec: fixed-weight kind needs fixed_weight");
    }
}

Syndrome::Syndrome(BitVec b, std::size_t w) : bits(std::move(b)) {
    defect_count = bits.popcount();
    mod_w_class = w == 0 ? 0 : defect_count % w;
}

const Gf2Matrix& check_matrix(const BBCode& code, Basis basis) {
    return basis == Basis::z_memory ? code.Hz : code.Hx;
}

double per_round_rate(double p, std::size_t rounds) {
    if (rounds == 1) {
        return p;
    }
    return 0.5 * (1.0 - std::pow(1.0 - 2.0 * p, 1.0 / static_cast<double>(rounds)));
}

std::pair<ErrorSample, Syndrome> sample(const BBCode& code, const NoiseSpec& spec, std::uint64_t seed) {
    spec.validate();
    Rng rng(seed);
    const Gf2Matrix& H = check_matrix(code, spec.basis);

    ErrorSample out;
    out.data_errors = BitVec(code.n);
    out.meas_syndrome = BitVec(code.n_checks);

    switch (spec.kind) {
        case NoiseKind::code_capacity_iid:
            for (std::size_t i = 0; i < code.n; ++i) {
                if (rng.bernoulli(spec.p)) {
                    out.data_errors.flip(i);
                }
            }
            break;
        case NoiseKind::code_capacity_fixed_weight: {
            const std::size_t weight = *spec.fixed_weight;
            if (weight > code.n) {
                throw std::invalid_argument("sample: fixed_weight exceeds qubit count");
            }
            // Floyd's uniform-subset algorithm.
            for (std::size_t i = code.n - weight; i < code.n; ++i) {
                const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
                if (out.data_errors.get(j)) {
                    out.data_errors.set(i, true);
                } else {
                    out.data_errors.set(j, true);
                }
            }
            break;
        }
        case NoiseKind::phenomenological: {
            const double q = spec.rate_model == RateModel::aggregate
                                 ? per_round_rate(spec.p, spec.rounds)
                                 : spec.p;
            out.meas_errors.reserve(spec.rounds);
            for (std::size_t t = 0; t < spec.rounds; ++t) {
                for (std::size_t i = 0; i < code.n; ++i) {
                    if (rng.bernoulli(q)) {
                        out.data_errors.flip(i);
                    }
                }
                BitVec round(code.n_checks);
                for (std::size_t c = 0; c < code.n_checks; ++c) {
                    if (rng.bernoulli(q)) {
                        round.flip(c);
                    }
                }
                out.meas_count += round.popcount();
                out.meas_syndrome ^= round;
                out.meas_errors.push_back(std::move(round));
            }
            break;
        }
    }

    BitVec s = matvec(H, out.data_errors);
    s ^= out.meas_syndrome;
    return {std::move(out), Syndrome(std::move(s), code.w)};
}

DefectDecomposition defect_decomposition(const BBCode& code, const ErrorSample& sample, Basis basis) {
    const Gf2Matrix& H = check_matrix(code, basis);
    const BitVec he = matvec(H, sample.data_errors);

    DefectDecomposition d;
    d.w_times_e = code.w * sample.data_errors.popcount();
    d.m_syn_weight = sample.meas_syndrome.popcount();
    // Cancellations inside H*e come in pairs; cancellations against the
    // measurement syndrome are the AND overlap.
    const std::size_t data_cancel = (d.w_times_e - he.popcount()) / 2;
    const std::size_t meas_cancel = BitVec::and_popcount(he, sample.meas_syndrome);
    d.overlap_correction = data_cancel + meas_cancel;
    return d;
}

}  // namespace bbdec
