#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lto {

// Column-named grid used to ferry every tabular result across the C API.
struct Cell {
    std::variant<std::monostate, std::string, long long, double, bool> value;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::vector<Cell>& add_row() {
        rows.emplace_back(columns.size());
        return rows.back();
    }
};

} // namespace lto
