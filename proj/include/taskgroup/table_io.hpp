#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "taskgroup/analysis.hpp"
#include "taskgroup/model.hpp"

namespace taskgroup {

/// Parses a performance-table file (JSON object with schema_version, tasks
/// and networks). Validation is strict: unknown keys, duplicate ids, unknown
/// tasks, non-positive costs and negative losses are rejected.
PerformanceTable parse_table(const std::string& text);

/// Canonical serialization: networks sorted by id, object keys sorted,
/// shortest round-trip float formatting. serialize(parse(x)) is
/// byte-identical for canonical inputs.
std::string serialize_table(const PerformanceTable& table);

PerformanceTable load_table_file(const std::string& path);
void save_table_file(const PerformanceTable& table, const std::string& path);

using Matrix = std::variant<PairwiseRelationMatrix, AffinityMatrix>;

/// Parses a matrix CSV. The header row selects the kind:
///   trained_with,performance_on,value   (directed)
///   task_a,task_b,affinity              (symmetric)
/// Lines starting with '#' are comments; "# label: NAME" sets the label.
/// The task order is the order of first appearance.
Matrix parse_matrix(const std::string& text);

std::string serialize_matrix(const PairwiseRelationMatrix& matrix);
std::string serialize_matrix(const AffinityMatrix& matrix);
std::string serialize_matrix(const Matrix& matrix);

Matrix load_matrix_file(const std::string& path);

/// Parses a budget given in SNT decimals ("2.5") into milli-SNT, exactly.
/// Values with sub-milli precision are rejected rather than rounded.
std::int64_t parse_snt_to_msnt(std::string_view text);

/// Fixed three-decimal SNT rendering of a milli-SNT amount ("2.500").
std::string format_msnt_as_snt(std::int64_t msnt);

}  // namespace taskgroup
