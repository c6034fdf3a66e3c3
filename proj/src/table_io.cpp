#include "taskgroup/table_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace taskgroup {

namespace {

using nlohmann::json;

void require_keys(const json& obj, const std::string& location,
                  const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ParseError(location, "unexpected key \"" + key + "\"");
  }
}

std::string shortest_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

double parse_double_field(std::string_view text, const std::string& location) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(location, "bad numeric value \"" + std::string(text) + "\"");
  return value;
}

}  // namespace

PerformanceTable parse_table(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  if (!root.is_object()) throw ParseError("document", "expected a JSON object");
  require_keys(root, "document", {"schema_version", "tasks", "networks"});

  if (!root.contains("schema_version"))
    throw ParseError("document", "missing schema_version");
  if (!root["schema_version"].is_number_integer() || root["schema_version"].get<int>() != 1)
    throw ValidationError("unsupported schema_version");

  if (!root.contains("tasks") || !root["tasks"].is_array())
    throw ParseError("tasks", "expected an array of task ids");
  std::vector<std::string> tasks;
  for (const auto& t : root["tasks"]) {
    if (!t.is_string()) throw ParseError("tasks", "task ids must be strings");
    tasks.push_back(t.get<std::string>());
  }

  if (!root.contains("networks") || !root["networks"].is_array())
    throw ParseError("networks", "expected an array of networks");
  std::vector<CandidateNetwork> nets;
  std::size_t index = 0;
  for (const auto& jn : root["networks"]) {
    std::string location = "networks[" + std::to_string(index++) + "]";
    if (!jn.is_object()) throw ParseError(location, "expected an object");
    require_keys(jn, location, {"id", "cost_msnt", "losses", "predicted"});

    CandidateNetwork n;
    if (!jn.contains("id") || !jn["id"].is_string())
      throw ParseError(location, "missing string field \"id\"");
    n.id = jn["id"].get<std::string>();
    if (!jn.contains("cost_msnt") || !jn["cost_msnt"].is_number_integer())
      throw ParseError(location, "missing integer field \"cost_msnt\"");
    n.cost_msnt = jn["cost_msnt"].get<std::int64_t>();
    if (!jn.contains("losses") || !jn["losses"].is_object())
      throw ParseError(location, "missing object field \"losses\"");
    for (const auto& [task, value] : jn["losses"].items()) {
      if (!value.is_number())
        throw ParseError(location + ".losses." + task, "loss must be a number");
      n.losses[task] = value.get<double>();
    }
    if (jn.contains("predicted")) {
      if (!jn["predicted"].is_boolean())
        throw ParseError(location, "\"predicted\" must be a boolean");
      n.predicted = jn["predicted"].get<bool>();
    }
    nets.push_back(std::move(n));
  }

  return PerformanceTable(TaskSet(std::move(tasks)), std::move(nets));
}

std::string serialize_table(const PerformanceTable& table) {
  json root;
  root["schema_version"] = 1;
  root["tasks"] = table.task_set().tasks();

  std::vector<const CandidateNetwork*> nets;
  for (const CandidateNetwork& n : table.networks()) nets.push_back(&n);
  std::sort(nets.begin(), nets.end(),
            [](const CandidateNetwork* a, const CandidateNetwork* b) { return a->id < b->id; });

  root["networks"] = json::array();
  for (const CandidateNetwork* n : nets) {
    json jn;
    jn["id"] = n->id;
    jn["cost_msnt"] = n->cost_msnt;
    jn["losses"] = json::object();
    for (const auto& [task, loss] : n->losses) jn["losses"][task] = loss;
    if (n->predicted) jn["predicted"] = true;
    root["networks"].push_back(std::move(jn));
  }
  return root.dump(2) + "\n";
}

PerformanceTable load_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_table(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void save_table_file(const PerformanceTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write table file: " + path);
  out << serialize_table(table);
}

namespace {

constexpr std::string_view kDirectedHeader = "trained_with,performance_on,value";
constexpr std::string_view kAffinityHeader = "task_a,task_b,affinity";

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

struct MatrixRecord {
  std::string from, to;
  double value;
};

}  // namespace

Matrix parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::string label;
  bool saw_header = false;
  bool directed = false;
  std::vector<MatrixRecord> records;
  std::vector<std::string> task_order;

  auto note_task = [&](const std::string& t) {
    if (std::find(task_order.begin(), task_order.end(), t) == task_order.end())
      task_order.push_back(t);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      constexpr std::string_view tag = "# label: ";
      if (line.rfind(tag, 0) == 0) label = line.substr(tag.size());
      continue;
    }
    std::string location = "line " + std::to_string(line_no);
    if (!saw_header) {
      if (line == kDirectedHeader)
        directed = true;
      else if (line == kAffinityHeader)
        directed = false;
      else
        throw ParseError(location, "unrecognized matrix header");
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 3)
      throw ParseError(location, "expected 3 comma-separated fields");
    if (fields[0].empty() || fields[1].empty())
      throw ParseError(location, "empty task name");
    MatrixRecord rec{fields[0], fields[1], parse_double_field(fields[2], location)};
    note_task(rec.from);
    note_task(rec.to);
    records.push_back(std::move(rec));
  }
  if (!saw_header) throw ParseError("document", "missing matrix header");
  if (records.empty()) throw ParseError("document", "matrix has no records");

  TaskSet tasks(task_order);
  if (directed) {
    PairwiseRelationMatrix m(tasks, label);
    for (const auto& rec : records) m.set(rec.from, rec.to, rec.value);
    return m;
  }
  AffinityMatrix m(tasks, label);
  for (const auto& rec : records) m.set(rec.from, rec.to, rec.value);
  return m;
}

namespace {

void check_matrix_names(const TaskSet& tasks) {
  for (const auto& t : tasks.tasks())
    if (t.find(',') != std::string::npos || t.find('\n') != std::string::npos ||
        t.find('#') == 0)
      throw ValidationError("task name not representable in matrix files: " + t);
}

std::string matrix_prologue(const std::string& label) {
  return label.empty() ? std::string() : "# label: " + label + "\n";
}

}  // namespace

std::string serialize_matrix(const PairwiseRelationMatrix& matrix) {
  check_matrix_names(matrix.task_set());
  std::string out = matrix_prologue(matrix.label());
  out += std::string(kDirectedHeader) + "\n";
  for (const auto& e : matrix.entries())
    out += e.trained_with + "," + e.performance_on + "," + shortest_double(e.value) + "\n";
  return out;
}

std::string serialize_matrix(const AffinityMatrix& matrix) {
  check_matrix_names(matrix.task_set());
  std::string out = matrix_prologue(matrix.label());
  out += std::string(kAffinityHeader) + "\n";
  for (const auto& e : matrix.entries())
    out += e.task_a + "," + e.task_b + "," + shortest_double(e.value) + "\n";
  return out;
}

std::string serialize_matrix(const Matrix& matrix) {
  if (const auto* m = std::get_if<PairwiseRelationMatrix>(&matrix)) return serialize_matrix(*m);
  return serialize_matrix(std::get<AffinityMatrix>(matrix));
}

Matrix load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open matrix file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::int64_t parse_snt_to_msnt(std::string_view text) {
  auto fail = [&] {
    throw ValidationError("bad SNT amount \"" + std::string(text) +
                          "\" (expected decimal with at most milli-SNT precision)");
  };
  if (text.empty()) fail();

  std::string_view whole = text;
  std::string_view frac;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (frac.empty()) fail();
  }
  if (whole.empty()) fail();

  auto digits_only = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits_only(whole) || !digits_only(frac)) fail();
  if (whole.size() > 15) fail();

  std::int64_t whole_value = 0;
  std::from_chars(whole.data(), whole.data() + whole.size(), whole_value);

  // sub-milli digits must be zero: reject precision we cannot represent
  std::int64_t frac_value = 0;
  std::string_view milli = frac.substr(0, std::min<std::size_t>(frac.size(), 3));
  for (std::size_t i = 3; i < frac.size(); ++i)
    if (frac[i] != '0') fail();
  if (!milli.empty()) std::from_chars(milli.data(), milli.data() + milli.size(), frac_value);
  for (std::size_t i = milli.size(); i < 3; ++i) frac_value *= 10;

  return whole_value * 1000 + frac_value;
}

std::string format_msnt_as_snt(std::int64_t msnt) {
  std::int64_t sign = msnt < 0 ? -1 : 1;
  std::int64_t abs = msnt * sign;
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%s%lld.%03lld", sign < 0 ? "-" : "",
                static_cast<long long>(abs / 1000), static_cast<long long>(abs % 1000));
  return buf;
}

}  // namespace taskgroup
