#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "taskgroup/analysis.hpp"

namespace taskgroup {

using Fixture = std::variant<PairwiseRelationMatrix, AffinityMatrix>;

/// Names of the embedded study tables, in canonical order.
std::vector<std::string> fixture_names();

/// Loads an embedded table by name. Short aliases are accepted:
/// "setting1".."setting4" for the pairwise tables, "transfer" for
/// taskonomy_transfer and "affinity" for setting1_affinity.
Fixture load_fixture(std::string_view name);

PairwiseRelationMatrix load_pairwise_fixture(std::string_view name);
AffinityMatrix load_affinity_fixture(std::string_view name);

}  // namespace taskgroup
