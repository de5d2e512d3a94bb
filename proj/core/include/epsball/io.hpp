#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "epsball/geometry.hpp"
#include "epsball/scheme.hpp"

namespace epsball {

/// Field CSV: a comment line carrying the grid hash, then node_id,value rows.
/// Doubles print as %.17g so identical inputs reproduce identical bytes.
void write_field_csv(const std::filesystem::path& path, const ScalarField& u);

/// Reads a field dumped by write_field_csv. Fails when the recorded grid hash
/// does not match the given grid.
ScalarField read_field_csv(const std::filesystem::path& path, const Grid& grid);

void write_grid_csv(const std::filesystem::path& path, const Grid& grid);

/// d=1 convenience dump: x,value rows.
void write_profile_csv(const std::filesystem::path& path, const ScalarField& u);

/// 8-bit P5 heatmap over the bounding lattice (d=2 only). Values map affinely
/// to 1..255, absent lattice points to 0; the mapping goes to a sidecar file
/// "<path>.scale.txt".
void write_pgm_heatmap(const std::filesystem::path& path, const ScalarField& u);

/// d=3: one CSV per configured axis-aligned slice (lattice index along axis).
void write_slice_csv(const std::filesystem::path& path, const ScalarField& u, int axis,
                     std::int32_t index);

void write_json(const std::filesystem::path& path, const nlohmann::ordered_json& j);

/// Runs the writer against "<path>.partial" and renames on success, so an
/// interrupted run leaves only suffixed partial artifacts behind.
void write_atomically(const std::filesystem::path& path,
                      const std::function<void(std::ostream&)>& writer);

std::string format_double(double v);
std::string hash_string(std::uint64_t h);

}  // namespace epsball
