#ifndef MSSC_VERIFY_HPP
#define MSSC_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mssc {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/**
 * Self-check against the oracles: incremental deltas against recomputed objectives,
 * the two-squares instances, and small random instances solved exhaustively.
 */
std::vector<VerifyCheck> run_verify(std::uint64_t seed = 20240601);

}

#endif
