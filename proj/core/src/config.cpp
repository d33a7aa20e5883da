#include "spritemesh/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>

#include "spritemesh/error.hpp"

namespace spritemesh {

void PipelineConfig::validate() const {
    auto require = [](bool ok, const char* what) {
        if (!ok) fail(strf("invalid config: %s", what));
    };
    require(tau_alpha >= 0 && tau_alpha <= 255, "tau_alpha must be in [0,255]");
    require(mask_sigma > 0, "mask_sigma must be > 0");
    require(dp_eps_frac > 0 && dp_eps_frac < 1, "dp_eps_frac must be in (0,1)");
    require(n_target >= 4, "n_target must be >= 4");
    require(min_component_area > 0, "min_component_area must be > 0");
    require(bilateral_d > 0 && bilateral_d % 2 == 1, "bilateral_d must be odd and > 0");
    require(bilateral_sigma_color > 0, "bilateral_sigma_color must be > 0");
    require(bilateral_sigma_space > 0, "bilateral_sigma_space must be > 0");
    require(canny_low > 0, "canny_low must be > 0");
    require(canny_low < canny_high, "canny_low must be < canny_high");
    require(erode_kernel > 0 && erode_kernel % 2 == 1, "erode_kernel must be odd and > 0");
    require(erode_iters >= 0, "erode_iters must be >= 0");
    require(close_kernel > 0 && close_kernel % 2 == 1, "close_kernel must be odd and > 0");
    require(interior_min_len > 0, "interior_min_len must be > 0");
    require(interior_dp_frac > 0 && interior_dp_frac < 1, "interior_dp_frac must be in (0,1)");
    require(interior_seg_len > 0, "interior_seg_len must be > 0");
    require(interior_min_boundary_dist > 0, "interior_min_boundary_dist must be > 0");
    require(dedup_radius > 0, "dedup_radius must be > 0");
    require(vertex_merge_dist > 0, "vertex_merge_dist must be > 0");
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail(strf("config key '%s': cannot parse '%s' as number", key.c_str(), value.c_str()));
    }
}

int parse_int(const std::string& key, const std::string& value) {
    double v = parse_double(key, value);
    int i = int(v);
    if (double(i) != v) fail(strf("config key '%s': expected integer, got '%s'", key.c_str(), value.c_str()));
    return i;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void PipelineConfig::apply_override(const std::string& key, const std::string& value) {
    const std::map<std::string, std::function<void()>> setters = {
        {"tau_alpha", [&] { tau_alpha = parse_int(key, value); }},
        {"mask_sigma", [&] { mask_sigma = parse_double(key, value); }},
        {"dp_eps_frac", [&] { dp_eps_frac = parse_double(key, value); }},
        {"n_target", [&] { n_target = parse_int(key, value); }},
        {"min_component_area", [&] { min_component_area = parse_int(key, value); }},
        {"bilateral_d", [&] { bilateral_d = parse_int(key, value); }},
        {"bilateral_sigma_color", [&] { bilateral_sigma_color = parse_double(key, value); }},
        {"bilateral_sigma_space", [&] { bilateral_sigma_space = parse_double(key, value); }},
        {"canny_low", [&] { canny_low = parse_double(key, value); }},
        {"canny_high", [&] { canny_high = parse_double(key, value); }},
        {"erode_kernel", [&] { erode_kernel = parse_int(key, value); }},
        {"erode_iters", [&] { erode_iters = parse_int(key, value); }},
        {"close_kernel", [&] { close_kernel = parse_int(key, value); }},
        {"interior_min_len", [&] { interior_min_len = parse_double(key, value); }},
        {"interior_dp_frac", [&] { interior_dp_frac = parse_double(key, value); }},
        {"interior_seg_len", [&] { interior_seg_len = parse_double(key, value); }},
        {"interior_min_boundary_dist", [&] { interior_min_boundary_dist = parse_double(key, value); }},
        {"dedup_radius", [&] { dedup_radius = parse_double(key, value); }},
        {"vertex_merge_dist", [&] { vertex_merge_dist = parse_double(key, value); }},
    };
    auto it = setters.find(key);
    if (it == setters.end()) fail(strf("unknown config key '%s'", key.c_str()));
    it->second();
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(strf("cannot open config file: %s", path.string().c_str()));
    PipelineConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            fail(strf("%s:%d: expected key=value", path.string().c_str(), lineno));
        cfg.apply_override(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

}  // namespace spritemesh
