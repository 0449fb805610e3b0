#include "swiptfog_tools/table.hpp"

#include <swiptfog/format.hpp>

#include <stdexcept>

namespace swiptfog::tools {
namespace {

std::string cell_text(const Cell& cell) {
    if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
    return std::get<std::string>(cell);
}

} // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw std::invalid_argument(name + ": row has " + std::to_string(row.size()) + " cells, expected " +
                                    std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

std::size_t Table::index(std::string_view column) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i].name == column) return i;
    throw std::out_of_range(name + ": no column '" + std::string(column) + "'");
}

std::vector<double> Table::numbers(std::string_view column) const {
    const auto k = index(column);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (const auto* d = std::get_if<double>(&row[k])) out.push_back(*d);
        else if (const auto* i = std::get_if<std::int64_t>(&row[k])) out.push_back(static_cast<double>(*i));
        else throw std::invalid_argument(name + ": column '" + std::string(column) + "' is not numeric");
    }
    return out;
}

std::vector<std::string> Table::strings(std::string_view column) const {
    const auto k = index(column);
    std::vector<std::string> out;
    out.reserve(rows.size());
    for (const auto& row : rows) out.push_back(cell_text(row[k]));
    return out;
}

void Table::write_csv(std::ostream& out) const {
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i].name;
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

void Table::write_columns(std::ostream& out) const {
    for (const auto& c : columns) out << c.name << ": " << c.description << '\n';
}

} // namespace swiptfog::tools
