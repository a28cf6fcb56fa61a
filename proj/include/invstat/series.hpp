#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace invstat {

// Calendar date, ISO-8601 (YYYY-MM-DD) only.
struct Date {
    int year = 0;
    int month = 0;
    int day = 0;

    static Date parse(const std::string& text); // throws io_error on bad format
    std::string iso() const;
    auto operator<=>(const Date&) const = default;
};

// Column configuration for delimiter-separated price files. Columns are
// addressed by 0-based index when set, otherwise by header name.
struct CsvSchema {
    char delimiter = ',';
    std::string date_column = "date";
    std::string price_column = "price";
    std::optional<int> date_index;
    std::optional<int> price_index;
    std::string label;
};

// Daily observations, strictly increasing dates, positive prices, length >= 2.
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> prices;
    std::string label;

    std::size_t size() const { return prices.size(); }
    void validate() const; // throws io_error when an invariant is broken
};

// Natural log of a PriceSeries, index grid 0..N-1 in trading-day steps.
struct LogSeries {
    std::vector<double> values;
    std::string label;

    std::size_t size() const { return values.size(); }
};

// One-step log differences, length N-1.
struct ReturnSeries {
    std::vector<double> values;
};

PriceSeries parse_price_series(std::istream& in, const CsvSchema& schema);
PriceSeries parse_price_series(const std::string& text, const CsvSchema& schema);
PriceSeries load_price_series(const std::string& path, const CsvSchema& schema);

std::string to_csv(const PriceSeries& p, const CsvSchema& schema);

LogSeries to_log(const PriceSeries& p);
ReturnSeries log_returns(const LogSeries& x);

// Raw value series: one value column, no positivity requirement. Used when a
// file already holds log prices or filtered signals rather than prices.
std::vector<double> parse_value_series(std::istream& in, const CsvSchema& schema);
std::vector<double> load_value_series(const std::string& path, const CsvSchema& schema);

} // namespace invstat
