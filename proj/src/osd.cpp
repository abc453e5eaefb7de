#include "bbdec/osd.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace bbdec {

const char* path_name(DecodePath p) {
    return p == DecodePath::bp_only ? "bp_only" : "bp_osd";
}

OSDResult decode_osd0(const Gf2Matrix& H, const BitVec& s, const std::vector<double>& reliabilities) {
    if (s.size() != H.rows()) {
        throw std::invalid_argument("decode_osd0: syndrome length mismatch");
    }
    if (reliabilities.size() != H.cols()) {
        throw std::invalid_argument("decode_osd0: reliability length mismatch");
    }
    const std::size_t n = H.cols();

    // Augment with the syndrome as a trailing column; if elimination ever
    // pivots on it, s is outside the image.
    Gf2Matrix scol(H.rows(), 1);
    for (std::size_t r = 0; r < H.rows(); ++r) {
        if (s.get(r)) {
            scol.set(r, 0, true);
        }
    }
    const Gf2Matrix aug = H.hstack(scol);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (reliabilities[a] != reliabilities[b]) {
            return reliabilities[a] > reliabilities[b];
        }
        return a < b;
    });
    order.push_back(n);

    const RowReduceResult rr = row_reduce(aug, order);

    OSDResult res;
    res.valid = true;
    std::vector<std::uint8_t> is_pivot(n, 0);
    for (auto c : rr.pivot_cols) {
        if (c == n) {
            res.valid = false;
        } else {
            is_pivot[c] = 1;
            res.pivot_cols.push_back(c);
        }
    }

    res.estimate = BitVec(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (!is_pivot[j] && reliabilities[j] < 0.0) {
            res.estimate.set(j, true);
        }
    }
    // Pivot rows appear in elimination order; solve each pivot bit against
    // the free assignment.
    std::size_t row = 0;
    for (auto c : rr.pivot_cols) {
        if (c == n) {
            ++row;
            continue;
        }
        const std::uint64_t* words = rr.reduced.row_data(row);
        std::uint8_t value = 0;
        for (std::size_t wi = 0; wi < rr.reduced.words_per_row(); ++wi) {
            std::uint64_t bits = words[wi];
            while (bits != 0) {
                const std::size_t col = wi * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                bits &= bits - 1;
                if (col == n) {
                    value ^= 1;
                } else if (col != c && !is_pivot[col]) {
                    value ^= res.estimate.get(col) ? 1 : 0;
                }
            }
        }
        res.estimate.set(c, value != 0);
        ++row;
    }
    return res;
}

OSDResult decode_osd0(const BBCode& code, const Syndrome& s, const std::vector<double>& reliabilities,
                      Basis basis) {
    return decode_osd0(check_matrix(code, basis), s.bits, reliabilities);
}

BpOsdDecoder::BpOsdDecoder(const BBCode& code, Basis basis)
    : H_(&check_matrix(code, basis)), bp_(*H_) {}

DecodeRecord BpOsdDecoder::finish(const Syndrome& s, const BPResult& bp_result) {
    DecodeRecord rec;
    rec.defect_count = s.defect_count;
    rec.mod_w_class = s.mod_w_class;
    rec.converged = bp_result.converged;
    rec.iterations = bp_result.iterations_used;
    if (bp_result.converged) {
        rec.path = DecodePath::bp_only;
        rec.valid = true;
    } else {
        rec.path = DecodePath::bp_osd;
        const OSDResult osd = decode_osd0(*H_, s.bits, bp_result.final_llrs);
        rec.valid = osd.valid;
    }
    return rec;
}

DecodeRecord BpOsdDecoder::decode(const Syndrome& s, const BPConfig& cfg) {
    return finish(s, bp_.decode(s.bits, cfg));
}

DecodeRecord BpOsdDecoder::decode_relay(const Syndrome& s, const RelayConfig& rcfg, const BPConfig& base) {
    return finish(s, bp_.decode_relay(s.bits, rcfg, base));
}

DecodeRecord decode_bp_osd(const BBCode& code, const Syndrome& s, const BPConfig& cfg, Basis basis) {
    BpOsdDecoder dec(code, basis);
    return dec.decode(s, cfg);
}

}  // namespace bbdec
