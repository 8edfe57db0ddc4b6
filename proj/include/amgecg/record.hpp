#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amgecg/errors.hpp"

namespace amgecg {

/// Seconds -> sample index, rounding half away from zero. The single
/// conversion convention used across the library.
inline std::int64_t seconds_to_index(double seconds, double fs_hz) {
    return std::llround(seconds * fs_hz);
}

inline void require_finite(const std::vector<double>& samples, const char* what) {
    for (double v : samples) {
        if (!std::isfinite(v)) {
            throw validation_error(std::string(what) + ": non-finite sample value");
        }
    }
}

/// One single-lead ECG recording: sampling frequency plus amplitude samples
/// in mV. Immutable after construction; every transform returns a new record.
class EcgRecord {
public:
    EcgRecord(std::string record_id,
              double fs_hz,
              std::vector<double> samples,
              std::optional<std::string> subject_id = std::nullopt,
              std::optional<bool> flipped_hint = std::nullopt)
        : record_id_(std::move(record_id)),
          subject_id_(std::move(subject_id)),
          fs_hz_(fs_hz),
          samples_(std::move(samples)),
          flipped_hint_(flipped_hint) {
        if (!(fs_hz_ > 0.0) || !std::isfinite(fs_hz_)) {
            throw validation_error("EcgRecord: fs_hz must be a positive finite value");
        }
        if (samples_.empty()) {
            throw validation_error("EcgRecord: samples must be non-empty");
        }
        require_finite(samples_, "EcgRecord");
    }

    const std::string& record_id() const noexcept { return record_id_; }
    const std::optional<std::string>& subject_id() const noexcept { return subject_id_; }
    double fs_hz() const noexcept { return fs_hz_; }
    const std::vector<double>& samples() const noexcept { return samples_; }
    std::optional<bool> flipped_hint() const noexcept { return flipped_hint_; }

    std::size_t size() const noexcept { return samples_.size(); }
    double duration_s() const noexcept { return static_cast<double>(samples_.size()) / fs_hz_; }

    /// Same metadata, new samples. Sample count may change (segmenting).
    EcgRecord with_samples(std::vector<double> samples) const {
        return EcgRecord(record_id_, fs_hz_, std::move(samples), subject_id_, flipped_hint_);
    }

private:
    std::string record_id_;
    std::optional<std::string> subject_id_;
    double fs_hz_;
    std::vector<double> samples_;
    std::optional<bool> flipped_hint_;
};

/// Slice extent in seconds relative to the anchoring R-peak. Offsets may be
/// negative (pre-peak context).
class SliceWindow {
public:
    SliceWindow(double start_offset_s, double end_offset_s)
        : start_offset_s_(start_offset_s), end_offset_s_(end_offset_s) {
        if (!std::isfinite(start_offset_s) || !std::isfinite(end_offset_s)) {
            throw validation_error("SliceWindow: offsets must be finite");
        }
        if (!(start_offset_s < end_offset_s)) {
            throw validation_error("SliceWindow: start offset must be less than end offset");
        }
    }

    double start_offset_s() const noexcept { return start_offset_s_; }
    double end_offset_s() const noexcept { return end_offset_s_; }
    double length_s() const noexcept { return end_offset_s_ - start_offset_s_; }

    /// Row length the window produces at a given sampling rate.
    std::int64_t row_length(double fs_hz) const {
        return seconds_to_index(length_s(), fs_hz);
    }

    bool operator==(const SliceWindow& other) const noexcept {
        return start_offset_s_ == other.start_offset_s_ && end_offset_s_ == other.end_offset_s_;
    }

private:
    double start_offset_s_;
    double end_offset_s_;
};

/// N equal-length slices anchored at R-peaks; the ML-ready sample matrix.
/// peak_indices holds the anchors of the rows that were kept, in row order.
class TimeSlicedDataset {
public:
    TimeSlicedDataset(std::optional<std::string> subject_id,
                      double fs_hz,
                      SliceWindow window,
                      std::vector<std::vector<double>> slices,
                      std::vector<std::int64_t> peak_indices)
        : subject_id_(std::move(subject_id)),
          fs_hz_(fs_hz),
          window_(window),
          slices_(std::move(slices)),
          peak_indices_(std::move(peak_indices)) {
        if (!(fs_hz_ > 0.0) || !std::isfinite(fs_hz_)) {
            throw validation_error("TimeSlicedDataset: fs_hz must be positive");
        }
        if (slices_.size() != peak_indices_.size()) {
            throw validation_error("TimeSlicedDataset: one anchor per slice required");
        }
        const std::size_t expected = static_cast<std::size_t>(window_.row_length(fs_hz_));
        for (const auto& row : slices_) {
            if (row.size() != expected) {
                throw validation_error("TimeSlicedDataset: all rows must have length " +
                                       std::to_string(expected));
            }
            require_finite(row, "TimeSlicedDataset");
        }
        for (std::size_t i = 1; i < peak_indices_.size(); ++i) {
            if (peak_indices_[i] <= peak_indices_[i - 1]) {
                throw validation_error("TimeSlicedDataset: peak indices must be strictly increasing");
            }
        }
    }

    const std::optional<std::string>& subject_id() const noexcept { return subject_id_; }
    double fs_hz() const noexcept { return fs_hz_; }
    const SliceWindow& window() const noexcept { return window_; }
    const std::vector<std::vector<double>>& slices() const noexcept { return slices_; }
    const std::vector<std::int64_t>& peak_indices() const noexcept { return peak_indices_; }

    std::size_t slice_count() const noexcept { return slices_.size(); }
    std::size_t row_length() const {
        return static_cast<std::size_t>(window_.row_length(fs_hz_));
    }

private:
    std::optional<std::string> subject_id_;
    double fs_hz_;
    SliceWindow window_;
    std::vector<std::vector<double>> slices_;
    std::vector<std::int64_t> peak_indices_;
};

/// Authentication use-case category. HOS: closed-set identification;
/// SCK: open-set (unknowns allowed); WD: single enrolled identity.
enum class UseCaseCategory { HOS, SCK, WD };

inline const char* to_string(UseCaseCategory c) {
    switch (c) {
        case UseCaseCategory::HOS: return "hos";
        case UseCaseCategory::SCK: return "sck";
        case UseCaseCategory::WD: return "wd";
    }
    return "?";
}

inline UseCaseCategory parse_use_case(const std::string& text) {
    if (text == "hos" || text == "HOS") return UseCaseCategory::HOS;
    if (text == "sck" || text == "SCK") return UseCaseCategory::SCK;
    if (text == "wd" || text == "WD") return UseCaseCategory::WD;
    throw validation_error("unknown use-case category: " + text);
}

/// Extract the samples in [round(t0*fs), round(t1*fs)), metadata preserved.
inline EcgRecord segment(const EcgRecord& record, double t0_s, double t1_s) {
    if (!std::isfinite(t0_s) || !std::isfinite(t1_s)) {
        throw validation_error("segment: interval bounds must be finite");
    }
    if (t0_s < 0.0) {
        throw validation_error("segment: interval start must be >= 0");
    }
    if (!(t0_s < t1_s)) {
        throw validation_error("segment: empty or reversed interval");
    }
    const double duration = record.duration_s();
    if (t1_s > duration * (1.0 + 1e-12) + 1e-12) {
        throw validation_error("segment: interval exceeds record duration");
    }
    const auto n = static_cast<std::int64_t>(record.size());
    std::int64_t i0 = seconds_to_index(t0_s, record.fs_hz());
    std::int64_t i1 = std::min(seconds_to_index(t1_s, record.fs_hz()), n);
    if (i0 >= i1) {
        throw validation_error("segment: interval rounds to an empty sample range");
    }
    std::vector<double> out(record.samples().begin() + i0, record.samples().begin() + i1);
    return record.with_samples(std::move(out));
}

}  // namespace amgecg
