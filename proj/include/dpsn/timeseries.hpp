#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dpsn {

/// Guard threshold below which a window counts as constant and
/// z-normalizes to all zeros.
inline constexpr double kZNormEpsilon = 1e-8;

/// One labeled series. `label` indexes into the owning Dataset's class
/// list; original label tokens live there.
struct TimeSeries {
    int id = 0;
    std::vector<double> values;
    int label = 0;

    std::size_t length() const noexcept { return values.size(); }
};

struct Dataset {
    std::string name;
    std::vector<TimeSeries> series;
    std::vector<std::string> classes;  // original tokens, first-appearance order

    std::size_t size() const noexcept { return series.size(); }
    std::size_t num_classes() const noexcept { return classes.size(); }
    std::size_t min_length() const;
    std::size_t max_length() const;

    /// Per-class lists of series indices, dataset order preserved.
    std::vector<std::vector<int>> indices_by_class() const;

    /// New dataset holding the given series, ids renumbered 0..n-1.
    /// The class list is carried over unchanged.
    Dataset subset(const std::vector<int>& indices) const;
};

enum class Delimiter { Auto, Tab, Comma };

/// Reads a UCR-style text file: one series per line, first field the
/// label, remaining fields the values. Tab or comma delimited, detected
/// from the first line when Auto. NaN values become 0 and short rows are
/// padded with 0 to the longest row in the file.
Dataset load_ucr(const std::string& path, Delimiter delimiter = Delimiter::Auto);

/// Same ingestion rules as load_ucr, for in-memory rows.
Dataset make_dataset(const std::vector<std::vector<double>>& rows,
                     const std::vector<std::string>& labels,
                     std::string name = "dataset");

/// Zero-mean unit-variance copy of `window` (population std). Windows
/// with std below `epsilon` come back all zero.
std::vector<double> znormalize(std::span<const double> window, double epsilon = kZNormEpsilon);

struct Window {
    std::size_t start = 0;
    std::vector<double> values;
};

/// Number of stride-spaced windows; requires window_len <= length.
std::size_t window_count(std::size_t length, std::size_t window_len, std::size_t stride);

std::vector<Window> sliding_windows(const TimeSeries& series, std::size_t window_len,
                                    std::size_t stride = 1);

}  // namespace dpsn
