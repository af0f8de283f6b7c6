#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace isqw {

/// Sampled observable over a time grid, with metadata naming the observable
/// and the packet it came from.
struct TimeSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::string label;
    std::map<std::string, std::string> metadata;

    void validate() const {
        if (times.size() != values.size())
            throw std::invalid_argument("TimeSeries: length mismatch");
        for (std::size_t i = 1; i < times.size(); ++i)
            if (times[i] <= times[i - 1])
                throw std::invalid_argument("TimeSeries: times not increasing");
    }

    /// CSV with fixed 17-significant-digit formatting for reproducible files.
    void write_csv(std::ostream& os) const {
        validate();
        os << "t," << (label.empty() ? "value" : label) << "\n";
        os.precision(17);
        for (std::size_t i = 0; i < times.size(); ++i)
            os << times[i] << "," << values[i] << "\n";
    }
};

}  // namespace isqw
