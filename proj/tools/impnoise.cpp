// Command-line front end: denoise WAV files, learn impulse profiles,
// generate synthetic test material, analyze coefficient decay and report
// objective quality metrics.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "impnoise/audio_io.hpp"
#include "impnoise/kv.hpp"
#include "impnoise/metrics.hpp"
#include "impnoise/pipeline.hpp"
#include "impnoise/synth.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitOk = 0;
constexpr int kExitIo = 2;
constexpr int kExitConfig = 3;
constexpr int kExitNoImpulses = 4;

using Clock = std::chrono::steady_clock;

void write_manifest(const std::string& output_path,
                    const std::string& command,
                    impnoise::kv::Records params,
                    Clock::time_point started) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - started);
    impnoise::kv::Records recs;
    recs.emplace_back("command", command);
    recs.emplace_back("version", kVersion);
    for (auto& p : params) recs.push_back(std::move(p));
    recs.emplace_back("duration_ms", std::to_string(elapsed.count()));
    impnoise::kv::write_file(output_path + ".manifest", recs);
}

std::vector<std::size_t> pick_impulse_centers(const impnoise::Signal& signal,
                                              double threshold_db,
                                              std::size_t block_len,
                                              std::size_t max_count) {
    std::vector<double> mags(signal.size());
    for (std::size_t i = 0; i < signal.size(); ++i)
        mags[i] = std::fabs(signal.samples[i]);
    std::vector<double> sorted = mags;
    std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                     sorted.end());
    const double median = sorted[sorted.size() / 2];
    const double threshold = median * std::pow(10.0, threshold_db / 20.0);

    // local peaks above threshold, strongest first
    std::vector<std::size_t> candidates;
    const long r = 16;
    for (std::size_t i = 0; i < signal.size(); ++i) {
        if (!(mags[i] > threshold) || mags[i] == 0.0) continue;
        bool is_peak = true;
        for (long d = -r; d <= r && is_peak; ++d) {
            const long j = static_cast<long>(i) + d;
            if (d == 0 || j < 0 || j >= static_cast<long>(signal.size()))
                continue;
            if (mags[static_cast<std::size_t>(j)] > mags[i]) is_peak = false;
        }
        if (is_peak) candidates.push_back(i);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return mags[a] > mags[b]; });

    // greedily keep peaks at least one block apart
    std::vector<std::size_t> accepted;
    for (std::size_t c : candidates) {
        if (accepted.size() >= max_count) break;
        bool ok = true;
        for (std::size_t a : accepted)
            if ((a > c ? a - c : c - a) < block_len) { ok = false; break; }
        if (ok) accepted.push_back(c);
    }
    std::sort(accepted.begin(), accepted.end());
    return accepted;
}

struct DenoiseArgs {
    std::string input, output, config_path;
    std::string profile_path = "builtin:click";
    bool strict_literal = false;
};

int cmd_denoise(const DenoiseArgs& args) {
    const auto started = Clock::now();
    impnoise::DenoiseConfig cfg;
    impnoise::ImpulseProfile profile;
    const impnoise::FrameConfig frame_cfg;
    const impnoise::WaveletSpec spec = impnoise::WaveletSpec::daubechies(6);

    try {
        cfg = args.config_path.empty() ? impnoise::DenoiseConfig::defaults()
                                       : impnoise::load_config(args.config_path);
        if (args.strict_literal) cfg.strict_literal = true;
        if (args.profile_path == "builtin:click") {
            profile = impnoise::builtin_click_profile(spec, frame_cfg);
        } else {
            if (!std::filesystem::exists(args.profile_path)) {
                std::cerr << "profile not found: " << args.profile_path << "\n";
                return kExitConfig;
            }
            profile = impnoise::load_profile(args.profile_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        const impnoise::WavFile in = impnoise::read_wav(args.input);
        impnoise::WavFile out;
        out.format = in.format;
        out.signal = impnoise::denoise_signal(in.signal, frame_cfg, spec, 6,
                                              cfg, profile);
        impnoise::write_wav(args.output, out);
        write_manifest(args.output, "denoise",
                       {{"input", args.input},
                        {"output", args.output},
                        {"profile", args.profile_path},
                        {"config", args.config_path.empty() ? "(defaults)"
                                                            : args.config_path},
                        {"strict_literal", cfg.strict_literal ? "true" : "false"}},
                       started);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct LearnArgs {
    std::string input, output;
    double threshold_db = 20.0;
    std::size_t max_segments = 200;
    std::size_t radius = 16;
};

int cmd_learn_profile(const LearnArgs& args) {
    const auto started = Clock::now();
    const impnoise::FrameConfig frame_cfg;
    const impnoise::WaveletSpec spec = impnoise::WaveletSpec::daubechies(6);

    impnoise::WavFile in;
    try {
        in = impnoise::read_wav(args.input);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    const std::vector<std::size_t> centers = pick_impulse_centers(
        in.signal, args.threshold_db, frame_cfg.block_len, args.max_segments);
    if (centers.empty() || in.signal.size() < frame_cfg.block_len) {
        std::cerr << "no usable impulses\n";
        return kExitNoImpulses;
    }

    try {
        std::vector<std::pair<impnoise::Signal, std::size_t>> segments;
        segments.reserve(centers.size());
        for (std::size_t c : centers) segments.emplace_back(in.signal, c);
        const impnoise::ImpulseProfile profile = impnoise::learn_impulse_profile(
            segments, spec, frame_cfg, args.radius);
        impnoise::save_profile(args.output, profile);
        write_manifest(args.output, "learn-profile",
                       {{"input", args.input},
                        {"output", args.output},
                        {"threshold_db", impnoise::kv::format_double(args.threshold_db)},
                        {"segment_count", std::to_string(profile.segment_count)}},
                       started);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoImpulses;
    }
    return kExitOk;
}

struct AnalyzeArgs {
    std::string input, output;
    std::string centers = "auto";
    std::size_t radius = 16;
};

int cmd_analyze(const AnalyzeArgs& args) {
    const auto started = Clock::now();
    const impnoise::FrameConfig frame_cfg;
    const impnoise::WaveletSpec spec = impnoise::WaveletSpec::daubechies(6);
    const int levels = 6;

    impnoise::WavFile in;
    try {
        in = impnoise::read_wav(args.input);
        if (in.signal.size() < frame_cfg.block_len)
            throw std::runtime_error("input shorter than one block");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    std::vector<std::size_t> centers;
    if (args.centers == "auto") {
        centers = pick_impulse_centers(in.signal, 20.0, frame_cfg.block_len, 200);
        if (centers.empty()) {
            // fall back to the strongest sample so analyze always reports
            std::size_t best = 0;
            for (std::size_t i = 0; i < in.signal.size(); ++i)
                if (std::fabs(in.signal.samples[i]) >
                    std::fabs(in.signal.samples[best]))
                    best = i;
            centers.push_back(best);
        }
    } else {
        std::stringstream ss(args.centers);
        std::string item;
        try {
            while (std::getline(ss, item, ',')) {
                const long v = impnoise::kv::parse_long(item);
                if (v < 0 || static_cast<std::size_t>(v) >= in.signal.size())
                    throw std::runtime_error("center out of range: " + item);
                centers.push_back(static_cast<std::size_t>(v));
            }
            if (centers.empty()) throw std::runtime_error("no centers given");
        } catch (const std::exception& e) {
            std::cerr << "bad centers: " << e.what() << "\n";
            return kExitConfig;
        }
    }

    std::ofstream csv(args.output);
    if (!csv) {
        std::cerr << "cannot write " << args.output << "\n";
        return kExitIo;
    }
    csv << "center";
    for (int j = 1; j <= levels; ++j) csv << ",m" << j;
    csv << ",slope\n";
    for (std::size_t c : centers) {
        std::size_t start = c > frame_cfg.block_len / 2 ? c - frame_cfg.block_len / 2 : 0;
        start = std::min(start, in.signal.size() - frame_cfg.block_len);
        const std::span<const double> block(in.signal.samples.data() + start,
                                            frame_cfg.block_len);
        const impnoise::WaveletDecomposition decomp =
            impnoise::forward_dwt(block, spec, levels);
        const impnoise::DecayProfile profile = impnoise::normalize(
            impnoise::decay_profile(decomp, c - start, args.radius));
        csv << c;
        for (double m : profile.magnitude)
            csv << "," << impnoise::kv::format_double(m);
        if (profile.degenerate) {
            csv << ",degenerate\n";
        } else {
            csv << "," << impnoise::kv::format_double(impnoise::lipschitz_slope(profile))
                << "\n";
        }
    }
    csv.close();
    write_manifest(args.output, "analyze",
                   {{"input", args.input},
                    {"output", args.output},
                    {"centers", args.centers}},
                   started);
    return kExitOk;
}

struct SynthArgs {
    std::string kind, output;
    double duration_s = 1.0;
    std::uint64_t seed = 0;
    double sample_rate = 16000.0;
    double rate_hz = 10.0;
    double amp_lo = 0.5, amp_hi = 1.0;
    double width_lo_ms = 1.0, width_hi_ms = 2.0;
};

int cmd_synth(const SynthArgs& args) {
    const auto started = Clock::now();
    impnoise::Signal signal;
    std::vector<std::size_t> centers;
    try {
        if (args.kind == "vowel" || args.kind == "consonant" ||
            args.kind == "impulse") {
            const auto kind = args.kind == "vowel" ? impnoise::SurrogateKind::vowel
                              : args.kind == "consonant"
                                  ? impnoise::SurrogateKind::consonant
                                  : impnoise::SurrogateKind::impulse;
            signal = impnoise::synth_surrogate(kind, args.duration_s, args.seed,
                                               args.sample_rate);
        } else if (args.kind == "train") {
            impnoise::ImpulseTrainParams p;
            p.duration_s = args.duration_s;
            p.rate_hz = args.rate_hz;
            p.amp_lo = args.amp_lo;
            p.amp_hi = args.amp_hi;
            p.width_lo_ms = args.width_lo_ms;
            p.width_hi_ms = args.width_hi_ms;
            p.seed = args.seed;
            p.sample_rate = args.sample_rate;
            std::tie(signal, centers) = impnoise::synth_impulse_train(p);
        } else {
            std::cerr << "invalid kind: " << args.kind << "\n";
            return kExitConfig;
        }
    } catch (const std::exception& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        impnoise::WavFile out;
        out.format = impnoise::WavFormat::float32;
        out.signal = std::move(signal);
        impnoise::write_wav(args.output, out);
        if (args.kind == "train") {
            std::ofstream cf(args.output + ".centers");
            for (std::size_t c : centers) cf << c << "\n";
        }
        write_manifest(args.output, "synth",
                       {{"kind", args.kind},
                        {"output", args.output},
                        {"duration_s", impnoise::kv::format_double(args.duration_s)},
                        {"seed", std::to_string(args.seed)},
                        {"impulse_count", std::to_string(centers.size())}},
                       started);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct MetricsArgs {
    std::string clean, processed, centers_path;
};

int cmd_metrics(const MetricsArgs& args) {
    try {
        const impnoise::WavFile clean = impnoise::read_wav(args.clean);
        const impnoise::WavFile processed = impnoise::read_wav(args.processed);
        std::vector<std::size_t> centers;
        if (!args.centers_path.empty()) {
            std::ifstream cf(args.centers_path);
            if (!cf) throw std::runtime_error("cannot open " + args.centers_path);
            long v;
            while (cf >> v) centers.push_back(static_cast<std::size_t>(v));
        }
        const impnoise::QualityReport report =
            impnoise::metrics(clean.signal, processed.signal, 32.0, -60.0, centers);
        impnoise::kv::Records recs;
        recs.emplace_back("seg_snr_db", impnoise::kv::format_double(report.seg_snr_db));
        recs.emplace_back("peak_residual_db",
                          impnoise::kv::format_double(report.peak_residual_db));
        recs.emplace_back("active_distortion_db",
                          impnoise::kv::format_double(report.active_distortion_db));
        recs.emplace_back("active_frames", std::to_string(report.active_frames));
        recs.emplace_back("impulse_free_frames",
                          std::to_string(report.impulse_free_frames));
        impnoise::kv::write(std::cout, recs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Impulse-noise removal for speech in the wavelet domain"};
    app.require_subcommand(1);

    DenoiseArgs denoise_args;
    auto* denoise = app.add_subcommand("denoise", "Denoise a WAV file");
    denoise->add_option("input", denoise_args.input, "Input WAV")->required();
    denoise->add_option("output", denoise_args.output, "Output WAV")->required();
    denoise->add_option("--config", denoise_args.config_path, "Denoise config file");
    denoise->add_option("--profile", denoise_args.profile_path,
                        "Impulse profile file, or builtin:click");
    denoise->add_flag("--strict-literal", denoise_args.strict_literal,
                      "Signed coarse attenuation rule");

    LearnArgs learn_args;
    auto* learn = app.add_subcommand("learn-profile",
                                     "Learn an impulse profile from a noise recording");
    learn->add_option("input", learn_args.input, "Noise-only WAV")->required();
    learn->add_option("output", learn_args.output, "Output profile file")->required();
    learn->add_option("--threshold-db", learn_args.threshold_db,
                      "Peak threshold above the clip median level");
    learn->add_option("--max-segments", learn_args.max_segments, "Segment cap");
    learn->add_option("--radius", learn_args.radius, "Neighborhood radius, samples");

    AnalyzeArgs analyze_args;
    auto* analyze = app.add_subcommand("analyze", "Report coefficient decay per center");
    analyze->add_option("input", analyze_args.input, "Input WAV")->required();
    analyze->add_option("output", analyze_args.output, "Output CSV")->required();
    analyze->add_option("--centers", analyze_args.centers,
                        "Comma-separated sample indices, or auto");
    analyze->add_option("--radius", analyze_args.radius, "Neighborhood radius, samples");

    SynthArgs synth_args;
    auto* synth = app.add_subcommand("synth", "Generate synthetic test material");
    synth->add_option("kind", synth_args.kind, "vowel|consonant|impulse|train")
        ->required();
    synth->add_option("output", synth_args.output, "Output WAV")->required();
    synth->add_option("--duration", synth_args.duration_s, "Seconds");
    synth->add_option("--seed", synth_args.seed, "Random seed");
    synth->add_option("--sample-rate", synth_args.sample_rate, "Hz");
    synth->add_option("--rate", synth_args.rate_hz, "Mean impulses per second");
    synth->add_option("--amp-lo", synth_args.amp_lo, "Min impulse amplitude");
    synth->add_option("--amp-hi", synth_args.amp_hi, "Max impulse amplitude");
    synth->add_option("--width-lo", synth_args.width_lo_ms, "Min impulse width, ms");
    synth->add_option("--width-hi", synth_args.width_hi_ms, "Max impulse width, ms");

    MetricsArgs metrics_args;
    auto* metrics_cmd = app.add_subcommand("metrics", "Objective quality metrics");
    metrics_cmd->add_option("clean", metrics_args.clean, "Clean reference WAV")
        ->required();
    metrics_cmd->add_option("processed", metrics_args.processed, "Processed WAV")
        ->required();
    metrics_cmd->add_option("--impulse-centers", metrics_args.centers_path,
                            "File with one impulse sample index per line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (denoise->parsed()) return cmd_denoise(denoise_args);
    if (learn->parsed()) return cmd_learn_profile(learn_args);
    if (analyze->parsed()) return cmd_analyze(analyze_args);
    if (synth->parsed()) return cmd_synth(synth_args);
    if (metrics_cmd->parsed()) return cmd_metrics(metrics_args);
    return kExitConfig;
}
