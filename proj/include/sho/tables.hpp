#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sho/basis.hpp"

namespace sho {

enum class TableId { I, II, III, IV, V, VI };

// "I".."VI" (case-insensitive). Throws DomainError on anything else.
TableId parse_table_id(const std::string& token);
std::string table_id_name(TableId id);

enum class CellKind {
    variational,  // diagonalize, optionally minimizing over A
    oracle,       // Numerov shooting value
    reference,    // published comparison value; nothing of ours to compute
};

struct TableCell {
    CellKind kind = CellKind::variational;
    ModelSpec model;
    int D = 1;               // basis size used for the reproduction run
    bool optimize_A = true;  // false: fixed A = A_fixed
    double A_fixed = 0.0;    // A used when optimize_A is false
    int level = 0;           // eigenvalue index
    double published = 0.0;  // golden constant from the table of origin
    int decimals = 6;        // digits after the point in the published entry
};

struct TableRow {
    std::string label;
    std::vector<std::optional<TableCell>> cells;  // one per column
};

struct TableLayout {
    TableId id = TableId::I;
    std::string title;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
};

// The six reproduction layouts, golden constants included.
TableLayout table_layout(TableId id);

}  // namespace sho
