#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace spritemesh {

// Every threshold of the mesh pipeline with its default value. A config file
// (flat key=value lines, keys matching the field names) can override any of
// them; see PipelineConfig::load and apply_override.
struct PipelineConfig {
    // Mask acquisition
    int tau_alpha = 128;          // alpha > tau_alpha is foreground
    double mask_sigma = 1.0;      // gaussian smoothing of the mask, pixels

    // Exterior placement
    double dp_eps_frac = 0.003;   // DP tolerance as fraction of perimeter
    int n_target = 50;            // exterior vertex budget over all components
    int min_component_area = 100; // components below this pixel area are dropped

    // Interior edge detection
    int bilateral_d = 9;
    double bilateral_sigma_color = 75.0;
    double bilateral_sigma_space = 75.0;
    double canny_low = 40.0;
    double canny_high = 120.0;
    int erode_kernel = 11;
    int erode_iters = 2;
    int close_kernel = 3;

    // Interior placement
    double interior_min_len = 150.0;        // chains shorter than this are discarded
    double interior_dp_frac = 0.012;        // DP tolerance as fraction of chain length
    double interior_seg_len = 40.0;         // max arc length between interior vertices
    double interior_min_boundary_dist = 6.0;// distance-transform gate
    double dedup_radius = 18.0;             // global interior dedup

    // Merge before triangulation
    double vertex_merge_dist = 2.0;

    // Throws Error on any out-of-range field.
    void validate() const;

    // Applies "key=value"; unknown key or unparsable value throws.
    void apply_override(const std::string& key, const std::string& value);

    // Reads a flat key=value file ('#' comments, blank lines allowed).
    static PipelineConfig load(const std::filesystem::path& path);
};

}  // namespace spritemesh
