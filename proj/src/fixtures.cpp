#include "taskgroup/fixtures.hpp"

#include <array>

namespace taskgroup {

namespace {

// Values are the published two-decimal relative-performance percentages
// (three decimals for the transfer affinities), stored exactly as printed.

TaskSet study_tasks() {
  return TaskSet({"SemSeg", "Depth", "Normals", "Keypoints", "Edges"});
}

TaskSet alt_tasks() {
  return TaskSet({"AutoEnc", "Normals", "OccEdges", "Reshading", "Curvature"});
}

struct DirectedRow {
  const char* trained_with;
  std::array<double, 4> values;  // columns in task order, diagonal skipped
};

PairwiseRelationMatrix build_directed(TaskSet tasks, std::string label,
                                      const std::array<DirectedRow, 5>& rows) {
  PairwiseRelationMatrix m(tasks, std::move(label));
  for (const auto& row : rows) {
    std::size_t v = 0;
    for (const auto& on : m.task_set().tasks()) {
      if (on == row.trained_with) continue;
      m.set(row.trained_with, on, row.values[v++]);
    }
  }
  return m;
}

PairwiseRelationMatrix setting1() {
  return build_directed(study_tasks(), "setting1",
                        {{{"SemSeg", {-5.41, -11.29, -4.32, -34.64}},
                          {"Depth", {4.17, -3.55, 3.49, 3.76}},
                          {"Normals", {8.50, 2.48, 1.37, 12.33}},
                          {"Keypoints", {4.82, 1.38, -0.02, -5.26}},
                          {"Edges", {3.07, -0.92, -4.42, 1.37}}}});
}

PairwiseRelationMatrix setting2() {
  return build_directed(study_tasks(), "setting2",
                        {{{"SemSeg", {3.00, -2.79, -5.20, 27.80}},
                          {"Depth", {1.72, 1.18, -3.52, 25.73}},
                          {"Normals", {10.81, 7.12, 88.98, 71.59}},
                          {"Keypoints", {3.12, -0.41, -10.12, 61.07}},
                          {"Edges", {0.03, -1.40, -4.78, -3.05}}}});
}

PairwiseRelationMatrix setting3() {
  return build_directed(study_tasks(), "setting3",
                        {{{"SemSeg", {1.91, -6.00, -9.91, -21.93}},
                          {"Depth", {-12.63, 2.95, 1.44, -9.70}},
                          {"Normals", {8.32, 15.38, -1.35, 52.08}},
                          {"Keypoints", {-5.84, -7.21, -2.26, 55.63}},
                          {"Edges", {-5.62, 6.02, -4.16, -5.02}}}});
}

PairwiseRelationMatrix setting4() {
  return build_directed(alt_tasks(), "setting4",
                        {{{"AutoEnc", {-3.23, -2.66, 0.10, -1.39}},
                          {"Normals", {19.31, 3.16, 4.60, 1.95}},
                          {"OccEdges", {35.83, -0.25, 1.15, 0.84}},
                          {"Reshading", {-24.46, 3.71, 3.16, 1.88}},
                          {"Curvature", {10.69, 2.61, 2.46, 3.15}}}});
}

AffinityMatrix taskonomy_transfer() {
  AffinityMatrix m(study_tasks(), "taskonomy_transfer");
  m.set("SemSeg", "Depth", 1.740);
  m.set("SemSeg", "Normals", 1.828);
  m.set("SemSeg", "Keypoints", 0.723);
  m.set("SemSeg", "Edges", 0.700);
  m.set("Depth", "Normals", 1.915);
  m.set("Depth", "Keypoints", 0.406);
  m.set("Depth", "Edges", 0.468);
  m.set("Normals", "Keypoints", 0.089);
  m.set("Normals", "Edges", 0.118);
  m.set("Keypoints", "Edges", 0.232);
  return m;
}

AffinityMatrix setting1_affinity() {
  AffinityMatrix m(study_tasks(), "setting1_affinity");
  m.set("SemSeg", "Depth", -0.62);
  m.set("SemSeg", "Normals", -1.39);
  m.set("SemSeg", "Keypoints", 0.25);
  m.set("SemSeg", "Edges", -15.78);
  m.set("Depth", "Normals", -0.54);
  m.set("Depth", "Keypoints", 2.43);
  m.set("Depth", "Edges", 1.42);
  m.set("Normals", "Keypoints", 0.67);
  m.set("Normals", "Edges", 3.95);
  m.set("Keypoints", "Edges", -1.95);
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"setting1_pairwise", "setting2_pairwise", "setting3_pairwise",
          "setting4_pairwise", "taskonomy_transfer", "setting1_affinity"};
}

Fixture load_fixture(std::string_view name) {
  if (name == "setting1_pairwise" || name == "setting1") return setting1();
  if (name == "setting2_pairwise" || name == "setting2") return setting2();
  if (name == "setting3_pairwise" || name == "setting3") return setting3();
  if (name == "setting4_pairwise" || name == "setting4") return setting4();
  if (name == "taskonomy_transfer" || name == "transfer") return taskonomy_transfer();
  if (name == "setting1_affinity" || name == "affinity") return setting1_affinity();
  throw UnknownFixture(std::string(name));
}

PairwiseRelationMatrix load_pairwise_fixture(std::string_view name) {
  Fixture f = load_fixture(name);
  if (auto* m = std::get_if<PairwiseRelationMatrix>(&f)) return std::move(*m);
  throw ValidationError("fixture " + std::string(name) + " is not a directed matrix");
}

AffinityMatrix load_affinity_fixture(std::string_view name) {
  Fixture f = load_fixture(name);
  if (auto* m = std::get_if<AffinityMatrix>(&f)) return std::move(*m);
  throw ValidationError("fixture " + std::string(name) + " is not an affinity matrix");
}

}  // namespace taskgroup
