#include "impnoise/suppression.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "impnoise/kv.hpp"

namespace impnoise {

DenoiseConfig DenoiseConfig::defaults() {
    DenoiseConfig cfg;
    cfg.k_s = {{1, 3.5}, {2, 3.5}, {3, 3.5}};
    cfg.k_c = {{4, 1.0}, {5, 1.0}, {6, 1.0}};
    cfg.median_len = {{1, 65}, {2, 33}, {3, 17}};
    return cfg;
}

void DenoiseConfig::validate() const {
    if (fine_levels.empty())
        throw std::invalid_argument("no fine levels configured");
    int max_fine = 0;
    for (int j : fine_levels) {
        if (j < 1) throw std::invalid_argument("bad fine level");
        max_fine = std::max(max_fine, j);
        auto k = k_s.find(j);
        if (k == k_s.end() || !(k->second > 0.0))
            throw std::invalid_argument("missing or non-positive k_s");
        auto m = median_len.find(j);
        if (m == median_len.end() || m->second < 3 || m->second % 2 == 0)
            throw std::invalid_argument("invalid median window");
    }
    for (int j : coarse_levels) {
        if (j <= max_fine)
            throw std::invalid_argument("coarse level not deeper than fine levels");
        auto k = k_c.find(j);
        if (k == k_c.end() || !(k->second > 0.0))
            throw std::invalid_argument("missing or non-positive k_c");
    }
    if (std::find(fine_levels.begin(), fine_levels.end(),
                  detection_source_level) == fine_levels.end())
        throw std::invalid_argument("detection source is not a fine level");
}

std::vector<double> dynamic_threshold(std::span<const double> coeffs,
                                      double k, int window_len) {
    if (window_len < 3 || window_len % 2 == 0)
        throw std::invalid_argument("invalid median window");
    if (!(k > 0.0))
        throw std::invalid_argument("non-positive threshold factor");

    const std::size_t n = coeffs.size();
    if (n == 0) return {};
    if (std::isinf(k)) // disabled sentinel; avoids inf*0 on silent bands
        return std::vector<double>(n, std::numeric_limits<double>::infinity());
    const long K = window_len / 2;

    // |coeffs| with edge replication
    auto mag = [&](long i) {
        i = std::clamp<long>(i, 0, static_cast<long>(n) - 1);
        return std::fabs(coeffs[static_cast<std::size_t>(i)]);
    };

    // sorted sliding window, updated by one insert/erase per step
    std::vector<double> window;
    window.reserve(window_len);
    for (long i = -K; i <= K; ++i) window.push_back(mag(i));
    std::sort(window.begin(), window.end());

    std::vector<double> tau(n);
    for (std::size_t c = 0; c < n; ++c) {
        tau[c] = k * window[K];
        if (c + 1 == n) break;
        const long center = static_cast<long>(c);
        const double leaving = mag(center - K);
        const double entering = mag(center + K + 1);
        window.erase(std::lower_bound(window.begin(), window.end(), leaving));
        window.insert(std::lower_bound(window.begin(), window.end(), entering),
                      entering);
    }
    return tau;
}

std::pair<std::vector<double>, std::vector<DetectionRecord>>
clip_fine(std::span<const double> coeffs, std::span<const double> tau,
          int level) {
    if (coeffs.size() != tau.size())
        throw std::invalid_argument("length mismatch");

    std::vector<double> out(coeffs.size());
    std::vector<DetectionRecord> detections;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const double c = coeffs[i];
        const double a = std::fabs(c);
        const double t = tau[i];
        if (t < 0.0)
            throw std::invalid_argument("negative threshold");
        if (a < t) {
            out[i] = c;
        } else {
            out[i] = c >= 0.0 ? t : -t;
            if (a - t > 0.0)
                detections.push_back({level, i, a - t, t});
        }
    }
    return {std::move(out), std::move(detections)};
}

std::vector<double> attenuate_coarse(std::span<const double> coeffs,
                                     int coarse_level,
                                     const std::vector<DetectionRecord>& detections,
                                     int fine_level,
                                     const ImpulseProfile& profile,
                                     double k_c,
                                     bool strict_literal) {
    if (coarse_level <= fine_level)
        throw std::invalid_argument("coarse level not deeper than fine level");
    if (profile.lambda.size() < static_cast<std::size_t>(coarse_level))
        throw std::invalid_argument("profile does not cover coarse level");

    const double ratio = k_c * profile.lambda[coarse_level - 1] /
                         profile.lambda[fine_level - 1];
    const int shift = coarse_level - fine_level;

    // subtraction amount per coarse index, aggregated by maximum
    std::unordered_map<std::size_t, double> amount;
    for (const DetectionRecord& d : detections) {
        const std::size_t nc = d.index >> shift;
        if (nc >= coeffs.size())
            throw std::invalid_argument("scale mapping overflow");
        const double a = ratio * d.excess;
        auto [it, inserted] = amount.try_emplace(nc, a);
        if (!inserted) it->second = std::max(it->second, a);
    }

    std::vector<double> out(coeffs.begin(), coeffs.end());
    for (const auto& [nc, a] : amount) {
        const double c = out[nc];
        if (strict_literal) {
            const double k = c - a;
            out[nc] = k < 0.0 ? 0.0 : k;
        } else {
            const double m = std::fabs(c) - a;
            out[nc] = m > 0.0 ? std::copysign(m, c) : 0.0;
        }
    }
    return out;
}

WaveletDecomposition denoise_block(const WaveletDecomposition& decomp,
                                   const DenoiseConfig& cfg,
                                   const ImpulseProfile& profile) {
    cfg.validate();
    decomp.validate();
    for (int j : cfg.coarse_levels)
        if (j > decomp.levels)
            throw std::invalid_argument("decomposition too shallow for config");

    WaveletDecomposition out = decomp;
    std::vector<DetectionRecord> source_detections;
    for (int j : cfg.fine_levels) {
        std::vector<double>& d = out.detail[j - 1];
        const std::vector<double> tau =
            dynamic_threshold(d, cfg.k_s.at(j), cfg.median_len.at(j));
        auto [clipped, detections] = clip_fine(d, tau, j);
        d = std::move(clipped);
        if (j == cfg.detection_source_level)
            source_detections = std::move(detections);
    }
    for (int j : cfg.coarse_levels) {
        out.detail[j - 1] = attenuate_coarse(
            out.detail[j - 1], j, source_detections, cfg.detection_source_level,
            profile, cfg.k_c.at(j), cfg.strict_literal);
    }
    return out;
}

namespace {

std::string join_levels(const std::vector<int>& levels) {
    std::string out;
    for (int j : levels) {
        if (!out.empty()) out += ",";
        out += std::to_string(j);
    }
    return out;
}

std::vector<int> split_levels(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(static_cast<int>(kv::parse_long(item)));
    return out;
}

std::string format_factor(double v) {
    return std::isinf(v) ? "inf" : kv::format_double(v);
}

} // namespace

void save_config(std::ostream& out, const DenoiseConfig& cfg) {
    kv::Records recs;
    recs.emplace_back("fine_levels", join_levels(cfg.fine_levels));
    recs.emplace_back("coarse_levels", join_levels(cfg.coarse_levels));
    recs.emplace_back("detection_source_level",
                      std::to_string(cfg.detection_source_level));
    recs.emplace_back("strict_literal", cfg.strict_literal ? "true" : "false");
    for (const auto& [j, v] : cfg.k_s)
        recs.emplace_back("k_s." + std::to_string(j), format_factor(v));
    for (const auto& [j, v] : cfg.k_c)
        recs.emplace_back("k_c." + std::to_string(j), format_factor(v));
    for (const auto& [j, v] : cfg.median_len)
        recs.emplace_back("median_len." + std::to_string(j), std::to_string(v));
    kv::write(out, recs);
}

void save_config(const std::string& path, const DenoiseConfig& cfg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    save_config(out, cfg);
}

DenoiseConfig load_config(std::istream& in) {
    DenoiseConfig cfg = DenoiseConfig::defaults();
    for (const auto& [key, value] : kv::parse(in)) {
        if (key == "fine_levels") {
            cfg.fine_levels = split_levels(value);
        } else if (key == "coarse_levels") {
            cfg.coarse_levels = split_levels(value);
        } else if (key == "detection_source_level") {
            cfg.detection_source_level = static_cast<int>(kv::parse_long(value));
        } else if (key == "strict_literal") {
            if (value != "true" && value != "false")
                throw std::runtime_error("bad boolean: " + value);
            cfg.strict_literal = value == "true";
        } else if (key.rfind("k_s.", 0) == 0) {
            cfg.k_s[static_cast<int>(kv::parse_long(key.substr(4)))] =
                value == "inf" ? std::numeric_limits<double>::infinity()
                               : kv::parse_double(value);
        } else if (key.rfind("k_c.", 0) == 0) {
            cfg.k_c[static_cast<int>(kv::parse_long(key.substr(4)))] =
                kv::parse_double(value);
        } else if (key.rfind("median_len.", 0) == 0) {
            cfg.median_len[static_cast<int>(kv::parse_long(key.substr(11)))] =
                static_cast<int>(kv::parse_long(value));
        } else {
            throw std::runtime_error("unknown config key: " + key);
        }
    }
    cfg.validate();
    return cfg;
}

DenoiseConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_config(in);
}

} // namespace impnoise
