#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swiptfog::tools {

using Cell = std::variant<double, std::int64_t, std::string>;

struct Column {
    std::string name;
    std::string description;
};

/// Rows of one output CSV. `name` is the file stem.
struct Table {
    std::string name;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::invalid_argument if the row width differs from the column count.
    void add_row(std::vector<Cell> row);

    /// Throws std::out_of_range for an unknown column.
    [[nodiscard]] std::size_t index(std::string_view column) const;

    /// Numeric column; integers are widened, strings throw std::invalid_argument.
    [[nodiscard]] std::vector<double> numbers(std::string_view column) const;
    [[nodiscard]] std::vector<std::string> strings(std::string_view column) const;

    /// Header line then one line per row. Doubles use the shortest round-trip form.
    void write_csv(std::ostream& out) const;
    /// `name: description`, one column per line.
    void write_columns(std::ostream& out) const;
};

} // namespace swiptfog::tools
