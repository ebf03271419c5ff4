#ifndef MSSC_IO_HPP
#define MSSC_IO_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mssc/core.hpp"

/**
 * @file io.hpp
 * @brief Dataset loaders and the manifest of known benchmark instances.
 */

namespace mssc {

enum class DatasetFormat { matrix, tsplib };

std::string_view to_string(DatasetFormat format) noexcept;
DatasetFormat parse_dataset_format(std::string_view text);

/**
 * Read one point per line, coordinates separated by whitespace and/or commas.
 * Blank lines and lines starting with '#' are skipped. The dataset is named after the file stem.
 * Throws ParseError (with the line number) on ragged rows, non-numeric tokens, or an empty file.
 */
Dataset load_matrix(const std::string& path);
Dataset parse_matrix(std::string_view text, const std::string& name, const std::string& origin = "<memory>");

/**
 * Read the `NODE_COORD_SECTION` of a TSPLIB file as 2-D points. Header fields other than
 * DIMENSION are ignored; an `EOF` line ends the section.
 */
Dataset load_tsplib(const std::string& path);
Dataset parse_tsplib(std::string_view text, const std::string& name, const std::string& origin = "<memory>");

/// Load with the given format, optionally renaming the dataset, then validate against the manifest.
Dataset load_dataset(const std::string& path, DatasetFormat format, const std::string& name = {});

struct ManifestEntry {
    std::string name;
    std::size_t n;
    std::size_t d;
    DatasetFormat format;
};

const std::vector<ManifestEntry>& dataset_manifest();
std::optional<ManifestEntry> manifest_entry(std::string_view name);

/// Throw InvalidInput if `data` is a manifest instance whose shape differs from the manifest.
void validate_against_manifest(const Dataset& data);

/// Look for `<dir>/<name>` with the usual extensions (.txt, .csv, .dat, .tsp). Empty if none exists.
std::optional<std::string> find_dataset_file(const std::string& dir, const ManifestEntry& entry);

}

#endif
