#pragma once

#include <string>
#include <vector>

#include "anyons/curves.hpp"
#include "anyons/model.hpp"
#include "anyons/unitary.hpp"

namespace anyons {

// All JSON documents carry this schema_version.
inline constexpr int kSchemaVersion = 1;

// Deterministic JSON assembler: fixed key order (as emitted), two-space
// indentation, doubles printed with %.17g so emission is byte-stable.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v);
  JsonWriter& value(bool v);
  // Shorthand for key(k) followed by value(v).
  template <typename T>
  JsonWriter& field(const std::string& k, const T& v) {
    key(k);
    return value(v);
  }
  std::string str() const;

 private:
  struct Frame {
    char type;  // 'o' or 'a'
    std::vector<std::string> items;
    std::string key;
    bool key_set = false;
  };
  void add_item(std::string rendered);
  std::vector<Frame> frames_;
  std::string root_;
  bool done_ = false;
};

// ---- parsing (strict: wrong types, bad names, unknown keys -> InputError) --
ModelData parse_model(const std::string& json_text);
AnyonModel load_model_file(const std::string& path);
StandardSurface parse_surface(const std::string& json_text,
                              const AnyonModel& model);
CurveDiagram parse_diagram(const std::string& json_text,
                           const AnyonModel& model);
std::vector<Move> parse_moves(const std::string& json_text);
// Accepts either a {"schema_version", "matrix": {...}} document or a bare
// {"rows", "cols", "entries"} object; entries reproduce emitted values
// bit-exactly.
Eigen::MatrixXcd parse_matrix(const std::string& json_text);
std::string read_file(const std::string& path);

// ---- deterministic emission (all strings end with a trailing newline) -----
std::string model_to_json(const AnyonModel& model);
std::string surface_to_json(const AnyonModel& model, const StandardSurface& s);
std::string diagram_to_json(const AnyonModel& model, const CurveDiagram& d);
std::string matrix_to_json(const Eigen::MatrixXcd& m);
std::string unitary_to_json(const AnyonModel& model, const Unitary& u);
std::string report_to_json(const AnyonModel& model, const ValidationReport& r);
std::string moves_to_json(const std::vector<Move>& moves);

// Nested-object writers for assembling larger documents.
void write_surface(JsonWriter& w, const AnyonModel& model,
                   const StandardSurface& s);
void write_matrix(JsonWriter& w, const Eigen::MatrixXcd& m);
void write_unitary(JsonWriter& w, const AnyonModel& model, const Unitary& u);

void write_file(const std::string& path, const std::string& content);

}  // namespace anyons
