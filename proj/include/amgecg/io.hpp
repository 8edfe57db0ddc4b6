#pragma once

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "amgecg/errors.hpp"
#include "amgecg/record.hpp"

namespace amgecg {

inline constexpr const char* kRecordMagic = "# amgecg-record v1";
inline constexpr const char* kSlicesMagic = "# amgecg-slices v1";

/// Shortest decimal form that round-trips the double exactly.
inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = std::strtod(buf, nullptr);
    if (back == v) {
        // try shorter representations for readability
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[40];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            if (std::strtod(shorter, nullptr) == v) return shorter;
        }
    }
    return buf;
}

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_strict_double(const std::string& text, std::size_t line_no) {
    const std::string t = strip(text);
    if (t.empty()) throw data_format_error("empty sample line", line_no);
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size() || errno == ERANGE) {
        throw data_format_error("not a decimal number: '" + t + "'", line_no);
    }
    if (!std::isfinite(v)) {
        throw data_format_error("non-finite sample value: '" + t + "'", line_no);
    }
    return v;
}

inline std::vector<double> parse_csv_doubles(const std::string& text, std::size_t line_no) {
    std::vector<double> out;
    std::string field;
    std::stringstream ss(text);
    while (std::getline(ss, field, ',')) {
        out.push_back(parse_strict_double(field, line_no));
    }
    return out;
}

inline std::vector<std::int64_t> parse_csv_indices(const std::string& text, std::size_t line_no) {
    std::vector<std::int64_t> out;
    const std::string t = strip(text);
    if (t.empty()) return out;
    std::string field;
    std::stringstream ss(t);
    while (std::getline(ss, field, ',')) {
        const std::string f = strip(field);
        errno = 0;
        char* end = nullptr;
        long long v = std::strtoll(f.c_str(), &end, 10);
        if (f.empty() || end != f.c_str() + f.size() || errno == ERANGE) {
            throw data_format_error("not an integer index: '" + f + "'", line_no);
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// A parsed record file: the validated record plus any extra header
/// key=value pairs the reader does not interpret (e.g. ground-truth peaks).
struct RecordFile {
    EcgRecord record;
    std::map<std::string, std::string> extras;
};

inline RecordFile read_record_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open record file: " + path);

    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(in, line)) throw data_format_error("empty file: " + path, 1);
    ++line_no;
    if (detail::strip(line) != kRecordMagic) {
        throw data_format_error("missing '" + std::string(kRecordMagic) + "' header", line_no);
    }

    std::optional<double> fs_hz;
    std::optional<std::string> subject;
    std::optional<bool> flipped_hint;
    std::map<std::string, std::string> extras;
    std::vector<double> samples;
    bool in_header = true;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::strip(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (!in_header) {
                throw data_format_error("header line after samples began", line_no);
            }
            std::string body = detail::strip(t.substr(1));
            std::size_t eq = body.find('=');
            if (eq == std::string::npos) {
                throw data_format_error("malformed header line (expected key=value)", line_no);
            }
            const std::string key = detail::strip(body.substr(0, eq));
            const std::string value = detail::strip(body.substr(eq + 1));
            if (key == "fs_hz") {
                fs_hz = detail::parse_strict_double(value, line_no);
            } else if (key == "subject") {
                subject = value;
            } else if (key == "flipped_hint") {
                if (value == "0") flipped_hint = false;
                else if (value == "1") flipped_hint = true;
                else throw data_format_error("flipped_hint must be 0 or 1", line_no);
            } else {
                extras[key] = value;  // unknown keys are preserved, not rejected
            }
            continue;
        }
        in_header = false;
        samples.push_back(detail::parse_strict_double(t, line_no));
    }

    if (!fs_hz) throw data_format_error("missing fs_hz header in " + path, 0);
    if (!(*fs_hz > 0.0)) throw validation_error("fs_hz must be > 0 in " + path);
    if (samples.empty()) throw data_format_error("record has no samples: " + path, line_no);

    std::string record_id = path;
    if (std::size_t slash = path.find_last_of('/'); slash != std::string::npos) {
        record_id = path.substr(slash + 1);
    }
    if (std::size_t dot = record_id.find_last_of('.'); dot != std::string::npos && dot > 0) {
        record_id = record_id.substr(0, dot);
    }
    return RecordFile{EcgRecord(record_id, *fs_hz, std::move(samples), subject, flipped_hint),
                      std::move(extras)};
}

inline EcgRecord read_record(const std::string& path) {
    return read_record_file(path).record;
}

inline void write_record(const EcgRecord& record, const std::string& path,
                         const std::map<std::string, std::string>& extras = {}) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write record file: " + path);
    out << kRecordMagic << "\n";
    out << "# fs_hz=" << format_double(record.fs_hz()) << "\n";
    if (record.subject_id()) out << "# subject=" << *record.subject_id() << "\n";
    if (record.flipped_hint()) out << "# flipped_hint=" << (*record.flipped_hint() ? 1 : 0) << "\n";
    for (const auto& [key, value] : extras) out << "# " << key << "=" << value << "\n";
    for (double v : record.samples()) out << format_double(v) << "\n";
    if (!out) throw io_error("write failed: " + path);
}

inline void write_slices(const TimeSlicedDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write slices file: " + path);
    out << kSlicesMagic << "\n";
    out << "# fs_hz=" << format_double(dataset.fs_hz()) << "\n";
    out << "# window=" << format_double(dataset.window().start_offset_s()) << ","
        << format_double(dataset.window().end_offset_s()) << "\n";
    out << "# peaks=";
    for (std::size_t i = 0; i < dataset.peak_indices().size(); ++i) {
        if (i) out << ",";
        out << dataset.peak_indices()[i];
    }
    out << "\n";
    if (dataset.subject_id()) out << "# subject=" << *dataset.subject_id() << "\n";
    for (const auto& row : dataset.slices()) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            out << format_double(row[i]);
        }
        out << "\n";
    }
    if (!out) throw io_error("write failed: " + path);
}

inline TimeSlicedDataset read_slices(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open slices file: " + path);

    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw data_format_error("empty file: " + path, 1);
    ++line_no;
    if (detail::strip(line) != kSlicesMagic) {
        throw data_format_error("missing '" + std::string(kSlicesMagic) + "' header", line_no);
    }

    std::optional<double> fs_hz;
    std::optional<SliceWindow> window;
    std::optional<std::vector<std::int64_t>> peaks;
    std::optional<std::string> subject;
    std::vector<std::vector<double>> rows;
    bool in_header = true;

    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = detail::strip(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            if (!in_header) throw data_format_error("header line after matrix began", line_no);
            std::string body = detail::strip(t.substr(1));
            std::size_t eq = body.find('=');
            if (eq == std::string::npos) {
                throw data_format_error("malformed header line (expected key=value)", line_no);
            }
            const std::string key = detail::strip(body.substr(0, eq));
            const std::string value = detail::strip(body.substr(eq + 1));
            if (key == "fs_hz") {
                fs_hz = detail::parse_strict_double(value, line_no);
            } else if (key == "window") {
                auto vals = detail::parse_csv_doubles(value, line_no);
                if (vals.size() != 2) throw data_format_error("window needs two offsets", line_no);
                window = SliceWindow(vals[0], vals[1]);
            } else if (key == "peaks") {
                peaks = detail::parse_csv_indices(value, line_no);
            } else if (key == "subject") {
                subject = value;
            }
            continue;
        }
        in_header = false;
        rows.push_back(detail::parse_csv_doubles(t, line_no));
    }

    if (!fs_hz || !window || !peaks) {
        throw data_format_error("slices file missing fs_hz/window/peaks headers: " + path, 0);
    }
    return TimeSlicedDataset(subject, *fs_hz, *window, std::move(rows), std::move(*peaks));
}

}  // namespace amgecg
