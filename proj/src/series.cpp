#include "invstat/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "invstat/errors.hpp"

namespace invstat {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string tok;
    std::stringstream ss(line);
    while (std::getline(ss, tok, delim)) out.push_back(trim(tok));
    if (!line.empty() && line.back() == delim) out.push_back("");
    return out;
}

bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e && !s.empty();
}

bool parse_fixed_int(const std::string& s, std::size_t off, std::size_t len, int& out) {
    if (off + len > s.size()) return false;
    int v = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const char c = s[off + i];
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

int days_in_month(int year, int month) {
    static const int table[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return table[month - 1];
}

} // namespace

Date Date::parse(const std::string& text) {
    Date d;
    const std::string s = trim(text);
    if (s.size() != 10 || s[4] != '-' || s[7] != '-' ||
        !parse_fixed_int(s, 0, 4, d.year) || !parse_fixed_int(s, 5, 2, d.month) ||
        !parse_fixed_int(s, 8, 2, d.day)) {
        throw io_error("bad date '" + text + "' (expected YYYY-MM-DD)");
    }
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > days_in_month(d.year, d.month)) {
        throw io_error("bad date '" + text + "' (not a calendar date)");
    }
    return d;
}

std::string Date::iso() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

void PriceSeries::validate() const {
    if (dates.size() != prices.size()) throw io_error("dates/prices length mismatch");
    if (size() < 2) throw io_error("price series needs at least 2 rows");
    for (std::size_t i = 0; i < size(); ++i) {
        if (!(prices[i] > 0.0) || !std::isfinite(prices[i])) {
            throw io_error("non-positive price at row " + std::to_string(i + 1));
        }
        if (i > 0 && !(dates[i - 1] < dates[i])) {
            throw io_error("duplicate or non-increasing date " + dates[i].iso());
        }
    }
}

namespace {

struct Columns {
    int date = -1;
    int price = -1;
};

// Resolve columns against an optional header row. Header presence is decided
// by whether the price cell of the first row parses as a number.
Columns resolve_columns(const std::vector<std::string>& first_row, const CsvSchema& schema,
                        bool& has_header) {
    Columns c;
    if (schema.date_index) c.date = *schema.date_index;
    if (schema.price_index) c.price = *schema.price_index;

    has_header = false;
    if (c.date < 0 || c.price < 0) {
        for (int i = 0; i < static_cast<int>(first_row.size()); ++i) {
            if (c.date < 0 && first_row[i] == schema.date_column) c.date = i;
            if (c.price < 0 && first_row[i] == schema.price_column) c.price = i;
        }
        if (c.date >= 0 && c.price >= 0) {
            has_header = true;
            return c;
        }
        if (c.date < 0 && c.price < 0 && first_row.size() >= 2) {
            // no header and no indexes: first column is the date, second the price
            c.date = 0;
            c.price = 1;
            return c;
        }
        throw io_error("columns '" + schema.date_column + "'/'" + schema.price_column +
                       "' not found in header");
    }
    // indexes given; still skip a header row if the price cell is not numeric
    double v;
    if (c.price < static_cast<int>(first_row.size()) &&
        !parse_double(first_row[c.price], v)) {
        has_header = true;
    }
    return c;
}

} // namespace

PriceSeries parse_price_series(std::istream& in, const CsvSchema& schema) {
    PriceSeries p;
    p.label = schema.label;

    std::string line;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> row_numbers;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        rows.push_back(split(line, schema.delimiter));
        row_numbers.push_back(lineno);
    }
    if (rows.empty()) throw io_error("empty input");

    bool has_header = false;
    Columns cols = resolve_columns(rows.front(), schema, has_header);
    std::size_t first = has_header ? 1 : 0;
    if (rows.size() - first == 0) throw io_error("no data rows");

    struct Row {
        Date date;
        double price;
    };
    std::vector<Row> parsed;
    parsed.reserve(rows.size() - first);
    for (std::size_t r = first; r < rows.size(); ++r) {
        const auto& cells = rows[r];
        const std::string where = "row " + std::to_string(row_numbers[r]);
        const int need = std::max(cols.date, cols.price);
        if (need >= static_cast<int>(cells.size())) {
            throw io_error("malformed " + where + ": expected at least " +
                           std::to_string(need + 1) + " columns");
        }
        if (cells[cols.price].empty()) throw io_error("missing price at " + where);
        double price;
        if (!parse_double(cells[cols.price], price)) {
            throw io_error("malformed " + where + ": bad price '" + cells[cols.price] + "'");
        }
        if (!(price > 0.0)) throw io_error("non-positive price at " + where);
        Date date;
        try {
            date = Date::parse(cells[cols.date]);
        } catch (const io_error& e) {
            throw io_error("malformed " + where + ": " + e.what());
        }
        parsed.push_back({date, price});
    }

    std::stable_sort(parsed.begin(), parsed.end(),
                     [](const Row& a, const Row& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < parsed.size(); ++i) {
        if (parsed[i - 1].date == parsed[i].date) {
            throw io_error("duplicate date " + parsed[i].date.iso());
        }
    }

    p.dates.reserve(parsed.size());
    p.prices.reserve(parsed.size());
    for (const auto& r : parsed) {
        p.dates.push_back(r.date);
        p.prices.push_back(r.price);
    }
    p.validate();
    return p;
}

PriceSeries parse_price_series(const std::string& text, const CsvSchema& schema) {
    std::istringstream in(text);
    return parse_price_series(in, schema);
}

PriceSeries load_price_series(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    CsvSchema s = schema;
    if (s.label.empty()) s.label = path;
    return parse_price_series(in, s);
}

std::string to_csv(const PriceSeries& p, const CsvSchema& schema) {
    std::string out = schema.date_column + schema.delimiter + schema.price_column + "\n";
    char buf[40];
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), p.prices[i]);
        (void)ec;
        out += p.dates[i].iso();
        out += schema.delimiter;
        out.append(buf, end);
        out += '\n';
    }
    return out;
}

LogSeries to_log(const PriceSeries& p) {
    p.validate();
    LogSeries x;
    x.label = p.label;
    x.values.reserve(p.size());
    for (double v : p.prices) x.values.push_back(std::log(v));
    return x;
}

ReturnSeries log_returns(const LogSeries& x) {
    if (x.size() < 2) throw std::invalid_argument("series too short for returns");
    ReturnSeries r;
    r.values.reserve(x.size() - 1);
    for (std::size_t i = 1; i < x.size(); ++i) {
        r.values.push_back(x.values[i] - x.values[i - 1]);
    }
    return r;
}

std::vector<double> parse_value_series(std::istream& in, const CsvSchema& schema) {
    std::vector<double> out;
    std::string line;
    std::size_t lineno = 0;
    bool first = true;
    int col = schema.price_index.value_or(-1);
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split(line, schema.delimiter);
        if (first) {
            first = false;
            if (col < 0) {
                // named column, else a single-column file
                for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
                    if (cells[i] == schema.price_column) col = i;
                }
                if (col < 0) col = static_cast<int>(cells.size()) - 1;
            }
            double v;
            if (!parse_double(cells[std::min<std::size_t>(col, cells.size() - 1)], v)) {
                continue; // header row
            }
        }
        if (col >= static_cast<int>(cells.size())) {
            throw io_error("malformed row " + std::to_string(lineno));
        }
        double v;
        if (!parse_double(cells[col], v)) {
            throw io_error("malformed row " + std::to_string(lineno) + ": bad value '" +
                           cells[col] + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw io_error("empty input");
    return out;
}

std::vector<double> load_value_series(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    return parse_value_series(in, schema);
}

} // namespace invstat
