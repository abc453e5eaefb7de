#pragma once

#include <cstdint>
#include <string>

namespace bbdec {

enum class DecodePath { bp_only, bp_osd };

const char* path_name(DecodePath p);

/// Per-shot outcome row; the unit behind every aggregate table.
struct DecodeRecord {
    std::uint64_t shot = 0;
    std::size_t defect_count = 0;
    std::size_t mod_w_class = 0;
    std::size_t max_component = 0;      // 0 for trivial syndromes
    double position_variance = 0.0;     // 0 for trivial syndromes
    DecodePath path = DecodePath::bp_only;
    bool converged = false;             // BP converged
    std::size_t iterations = 0;
    bool valid = false;                 // final correction reproduces the syndrome
    std::size_t e_weight = 0;           // ground-truth |e|
    std::size_t m_weight = 0;           // ground-truth |m|, all rounds
    std::size_t m_syn_weight = 0;       // collapsed measurement syndrome weight

    bool trivial() const { return defect_count == 0; }
    bool mod_w_zero() const { return mod_w_class == 0; }
};

}  // namespace bbdec
