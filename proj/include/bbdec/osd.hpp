#pragma once

#include <optional>
#include <vector>

#include "bbdec/bp.hpp"
#include "bbdec/code.hpp"
#include "bbdec/gf2.hpp"
#include "bbdec/record.hpp"

namespace bbdec {

struct OSDResult {
    BitVec estimate;
    bool valid = false;                   // H * estimate == s
    std::vector<std::size_t> pivot_cols;  // original column indices
};

/// Order-0 ordered statistics decoding: columns are eliminated in order of
/// descending reliability (most-likely-zero first, ties by ascending index),
/// non-pivot bits take their hard decision, pivot bits are solved to satisfy
/// the syndrome. When s is outside the image the estimate from the
/// consistent rows is returned with valid = false.
OSDResult decode_osd0(const Gf2Matrix& H, const BitVec& s, const std::vector<double>& reliabilities);

OSDResult decode_osd0(const BBCode& code, const Syndrome& s, const std::vector<double>& reliabilities,
                      Basis basis = Basis::z_memory);

/// BP with OSD fallback bound to one code and basis. Holds decoder state;
/// one instance per concurrent shot.
class BpOsdDecoder {
public:
    BpOsdDecoder(const BBCode& code, Basis basis = Basis::z_memory);

    /// Runs BP; on failure runs OSD-0 on the final LLRs. Fills the decoder
    /// fields of the record (path, converged, iterations, valid).
    DecodeRecord decode(const Syndrome& s, const BPConfig& cfg);

    /// Relay-BP with the same OSD fallback.
    DecodeRecord decode_relay(const Syndrome& s, const RelayConfig& rcfg, const BPConfig& base);

    BpDecoder& bp() { return bp_; }
    const Gf2Matrix& matrix() const { return *H_; }

private:
    DecodeRecord finish(const Syndrome& s, const BPResult& bp_result);

    const Gf2Matrix* H_;
    BpDecoder bp_;
};

/// One-shot convenience wrapper.
DecodeRecord decode_bp_osd(const BBCode& code, const Syndrome& s, const BPConfig& cfg,
                           Basis basis = Basis::z_memory);

}  // namespace bbdec
