#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "amgecg/errors.hpp"
#include "amgecg/record.hpp"
#include "amgecg/rng.hpp"

namespace amgecg::synth {

/// One Gaussian bump of a simplified PQRST beat: amplitude in mV, center
/// offset in seconds relative to the R instant, width (Gaussian sigma) in
/// seconds.
struct Bump {
    double amplitude_mv = 0.0;
    double center_offset_s = 0.0;
    double width_s = 0.0;
};

/// Five-bump beat model. The R bump must be strictly the largest by
/// magnitude so the per-beat maximum is analytically known, which is what
/// makes generated records usable as peak-detection oracles.
class BeatMorphology {
public:
    BeatMorphology(Bump p, Bump q, Bump r, Bump s, Bump t) : bumps_{p, q, r, s, t} {
        for (const Bump& b : bumps_) {
            if (!(b.width_s > 0.0)) throw validation_error("BeatMorphology: widths must be > 0");
        }
        if (!(r.amplitude_mv > 0.0)) {
            throw validation_error("BeatMorphology: R amplitude must be positive");
        }
        for (std::size_t i = 0; i < bumps_.size(); ++i) {
            if (i != 2 && !(std::abs(bumps_[i].amplitude_mv) < r.amplitude_mv)) {
                throw validation_error("BeatMorphology: R must be strictly the largest bump");
            }
        }
        for (std::size_t i = 1; i < bumps_.size(); ++i) {
            if (!(bumps_[i - 1].center_offset_s < bumps_[i].center_offset_s)) {
                throw validation_error("BeatMorphology: bump centers must be strictly increasing");
            }
        }
    }

    const std::array<Bump, 5>& bumps() const noexcept { return bumps_; }
    const Bump& r_bump() const noexcept { return bumps_[2]; }

    /// Beat amplitude at time offset dt from the R instant.
    double value_at(double dt_s) const {
        double v = 0.0;
        for (const Bump& b : bumps_) {
            const double z = (dt_s - b.center_offset_s) / b.width_s;
            v += b.amplitude_mv * std::exp(-0.5 * z * z);
        }
        return v;
    }

    static BeatMorphology standard() {
        return BeatMorphology{{0.12, -0.20, 0.030},
                              {-0.14, -0.046, 0.012},
                              {1.10, 0.0, 0.020},
                              {-0.20, 0.040, 0.014},
                              {0.28, 0.26, 0.060}};
    }

    /// Deterministic per-subject morphology: the standard shape with
    /// amplitude/width/offset factors drawn from the variant index. Keeps
    /// the construction invariants for any index.
    static BeatMorphology variant(std::uint64_t index) {
        SplitMix64 rng(0x6d6f726768ULL + index * 0x9e37ULL);
        auto amp = [&](double base) { return base * (0.75 + 0.5 * rng.next_unit()); };
        auto wid = [&](double base) { return base * (0.80 + 0.45 * rng.next_unit()); };
        const double p_off = -0.20 + 0.03 * rng.next_symmetric();
        const double q_off = -0.046 + 0.006 * rng.next_symmetric();
        const double s_off = 0.040 + 0.006 * rng.next_symmetric();
        const double t_off = 0.26 + 0.04 * rng.next_symmetric();
        return BeatMorphology{{amp(0.12), p_off, wid(0.030)},
                              {amp(-0.14), q_off, wid(0.012)},
                              {1.10, 0.0, wid(0.020)},
                              {amp(-0.20), s_off, wid(0.014)},
                              {amp(0.28), t_off, wid(0.060)}};
    }

private:
    std::array<Bump, 5> bumps_;
};

struct SynthSpec {
    double fs_hz = 400.0;
    double duration_s = 20.0;
    double heart_rate_bpm = 75.0;
    BeatMorphology morphology = BeatMorphology::standard();
    double rr_jitter_frac = 0.0;  // in [0, 1)
    std::uint64_t seed = 1;

    void validate() const {
        if (!(fs_hz > 0.0)) throw validation_error("SynthSpec: fs_hz must be > 0");
        if (!(heart_rate_bpm > 20.0 && heart_rate_bpm < 240.0)) {
            throw validation_error("SynthSpec: heart_rate_bpm must be in (20, 240)");
        }
        if (!(rr_jitter_frac >= 0.0 && rr_jitter_frac < 1.0)) {
            throw validation_error("SynthSpec: rr_jitter_frac must be in [0, 1)");
        }
        if (!(duration_s > 60.0 / heart_rate_bpm)) {
            throw validation_error("SynthSpec: duration must exceed one beat interval");
        }
    }

    /// Heart rate that places exactly `beats` beats in `duration_s` seconds
    /// (first beat at half an interval, one beat per interval thereafter).
    static double bpm_for_beat_count(int beats, double duration_s) {
        if (beats < 1 || !(duration_s > 0.0)) {
            throw validation_error("bpm_for_beat_count: need beats >= 1 and duration > 0");
        }
        return 60.0 * static_cast<double>(beats) / duration_s;
    }
};

struct SynthResult {
    EcgRecord record;
    std::vector<std::int64_t> ground_truth_peaks;  // sample index of each R center
};

/// Generate a clean beat train: Gaussian bumps at beat instants with
/// deterministic RR jitter drawn from the seed. Baseline is exactly zero.
inline SynthResult generate(const SynthSpec& spec, const std::string& record_id = "synthetic",
                            const std::string& subject_id = "") {
    spec.validate();
    const double nominal_interval = 60.0 / spec.heart_rate_bpm;
    SplitMix64 rng(spec.seed);

    std::vector<double> beat_centers;
    double center = 0.5 * nominal_interval;
    while (center < spec.duration_s) {
        beat_centers.push_back(center);
        center += nominal_interval * (1.0 + spec.rr_jitter_frac * rng.next_symmetric());
    }

    const auto n = static_cast<std::size_t>(std::llround(spec.duration_s * spec.fs_hz));
    std::vector<double> samples(n, 0.0);

    // Each bump only touches +-6 sigma around its center.
    for (double c : beat_centers) {
        for (const Bump& b : spec.morphology.bumps()) {
            const double lo = c + b.center_offset_s - 6.0 * b.width_s;
            const double hi = c + b.center_offset_s + 6.0 * b.width_s;
            const auto i0 = static_cast<std::int64_t>(std::max(0.0, std::floor(lo * spec.fs_hz)));
            const auto i1 = static_cast<std::int64_t>(
                std::min(static_cast<double>(n) - 1.0, std::ceil(hi * spec.fs_hz)));
            for (std::int64_t i = i0; i <= i1; ++i) {
                const double t = static_cast<double>(i) / spec.fs_hz;
                const double z = (t - c - b.center_offset_s) / b.width_s;
                samples[static_cast<std::size_t>(i)] += b.amplitude_mv * std::exp(-0.5 * z * z);
            }
        }
    }

    std::vector<std::int64_t> peaks;
    const double r_off = spec.morphology.r_bump().center_offset_s;
    for (double c : beat_centers) {
        const std::int64_t idx = seconds_to_index(c + r_off, spec.fs_hz);
        if (idx >= 0 && idx < static_cast<std::int64_t>(n)) peaks.push_back(idx);
    }

    EcgRecord record(record_id, spec.fs_hz, std::move(samples),
                     subject_id.empty() ? std::nullopt : std::optional<std::string>(subject_id));
    return SynthResult{std::move(record), std::movepeaks_workaround(peaks)};
}

enum class DriftKind { Sinusoid, Polynomial };

struct DriftResult {
    EcgRecord record;
    std::vector<double> drift;  // output - input, per sample
};

/// Add sinusoidal baseline wander: amplitude_mv * sin(2 pi f t + phase).
/// Frequencies at or above 0.5 Hz are rejected.
inline DriftResult add_baseline_sinusoid(const EcgRecord& record, double frequency_hz,
                                         double amplitude_mv, double phase_rad = 0.0) {
    if (!(frequency_hz > 0.0) || frequency_hz >= 0.5) {
        throw validation_error("baseline sinusoid frequency must be in (0, 0.5) Hz");
    }
    std::vector<double> drift(record.size());
    std::vector<double> out(record.size());
    for (std::size_t i = 0; i < record.size(); ++i) {
        const double t = static_cast<double>(i) / record.fs_hz();
        drift[i] = amplitude_mv * std::sin(2.0 * std::numbers::pi * frequency_hz * t + phase_rad);
        out[i] = record.samples()[i] + drift[i];
    }
    return DriftResult{record.with_samples(std::move(out)), std::move(drift)};
}

/// Add polynomial baseline wander; coefficients are in ascending powers of
/// the time axis in seconds. Degree above 10 is rejected.
inline DriftResult add_baseline_polynomial(const EcgRecord& record,
                                           const std::vector<double>& coefficients) {
    if (coefficients.empty() || coefficients.size() > 11) {
        throw validation_error("polynomial drift degree must be <= 10");
    }
    std::vector<double> drift(record.size());
    std::vector<double> out(record.size());
    for (std::size_t i = 0; i < record.size(); ++i) {
        const double t = static_cast<double>(i) / record.fs_hz();
        double v = 0.0;
        for (std::size_t k = coefficients.size(); k-- > 0;) v = v * t + coefficients[k];
        drift[i] = v;
        out[i] = record.samples()[i] + drift[i];
    }
    return DriftResult{record.with_samples(std::move(out)), std::move(drift)};
}

/// Add powerline interference: amplitude * sum_{h=0..harmonics}
/// sin(2 pi f0 (h+1) t) / (h+1). Every harmonic must stay below Nyquist.
inline EcgRecord add_powerline(const EcgRecord& record, double f0_hz, double amplitude_mv,
                               int harmonics = 0) {
    if (!(f0_hz > 0.0)) throw validation_error("powerline frequency must be > 0");
    if (harmonics < 0) throw validation_error("harmonics must be >= 0");
    const double highest = f0_hz * static_cast<double>(harmonics + 1);
    if (highest >= record.fs_hz() / 2.0) {
        throw validation_error("powerline harmonic at or above Nyquist would alias");
    }
    std::vector<double> out = record.samples();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double t = static_cast<double>(i) / record.fs_hz();
        double v = 0.0;
        for (int h = 0; h <= harmonics; ++h) {
            const double mult = static_cast<double>(h + 1);
            v += std::sin(2.0 * std::numbers::pi * f0_hz * mult * t) / mult;
        }
        out[i] += amplitude_mv * v;
    }
    return record.with_samples(std::move(out));
}

/// Negate every sample (electrode-reversal simulation). Involution.
inline EcgRecord flip_signal(const EcgRecord& record) {
    std::vector<double> out = record.samples();
    for (double& v : out) v = -v;
    return record.with_samples(std::move(out));
}

/// Add iid Gaussian noise, deterministic for a given seed. Sigma zero
/// returns the input unchanged.
inline EcgRecord add_gaussian_noise(const EcgRecord& record, double sigma_mv, std::uint64_t seed) {
    if (sigma_mv < 0.0) throw validation_error("noise sigma must be >= 0");
    if (sigma_mv == 0.0) return record;
    SplitMix64 rng(seed);
    std::vector<double> out = record.samples();
    for (double& v : out) v += sigma_mv * rng.next_gaussian();
    return record.with_samples(std::move(out));
}

}  // namespace amgecg::synth
