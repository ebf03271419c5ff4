#ifndef MSSC_REGISTRY_HPP
#define MSSC_REGISTRY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

/**
 * @file registry.hpp
 * @brief Best-known objective values for the benchmark instances.
 */

namespace mssc {

struct BestKnownEntry {
    std::string name;
    std::size_t k = 0;
    double value = 0;
    /// Number of the published table the value was transcribed from.
    int source_table = 0;
    /// The value was first reported together with these heuristics.
    bool tagged_new = false;
};

/// Registry values carry six significant digits; closer results are indistinguishable from them.
inline constexpr double kRegistryRelativePrecision = 5e-6;

/// Parse `name,k,best_known,source_table,tag` rows; '#' lines are comments.
std::vector<BestKnownEntry> parse_registry(std::string_view csv);

/// The bundled registry.
const std::vector<BestKnownEntry>& best_known_registry();

std::optional<BestKnownEntry> best_known_entry(std::string_view name, std::size_t k);
std::optional<double> best_known(std::string_view name, std::size_t k);

}

#endif
