#include "anyons/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace anyons {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

std::string render_double(double v) {
  if (!std::isfinite(v)) throw Error("cannot serialize a non-finite number");
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string indent_block(const std::string& s) {
  std::string out = "  ";
  for (char c : s) {
    out += c;
    if (c == '\n') out += "  ";
  }
  return out;
}

}  // namespace

JsonWriter& JsonWriter::begin_object() {
  frames_.push_back(Frame{'o', {}, {}, false});
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  frames_.push_back(Frame{'a', {}, {}, false});
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  if (frames_.empty() || frames_.back().type != 'o' || frames_.back().key_set)
    throw Error("JSON writer: key outside an object");
  frames_.back().key = k;
  frames_.back().key_set = true;
  return *this;
}

void JsonWriter::add_item(std::string rendered) {
  if (frames_.empty()) {
    if (done_) throw Error("JSON writer: multiple roots");
    root_ = std::move(rendered);
    done_ = true;
    return;
  }
  Frame& f = frames_.back();
  if (f.type == 'o') {
    if (!f.key_set) throw Error("JSON writer: value in object without key");
    f.items.push_back(quote(f.key) + ": " + rendered);
    f.key_set = false;
  } else {
    f.items.push_back(std::move(rendered));
  }
}

JsonWriter& JsonWriter::end_object() {
  if (frames_.empty() || frames_.back().type != 'o' || frames_.back().key_set)
    throw Error("JSON writer: mismatched end_object");
  Frame f = std::move(frames_.back());
  frames_.pop_back();
  if (f.items.empty()) {
    add_item("{}");
    return *this;
  }
  std::string out = "{\n";
  for (size_t i = 0; i < f.items.size(); ++i) {
    out += indent_block(f.items[i]);
    out += (i + 1 < f.items.size()) ? ",\n" : "\n";
  }
  out += "}";
  add_item(std::move(out));
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  if (frames_.empty() || frames_.back().type != 'a')
    throw Error("JSON writer: mismatched end_array");
  Frame f = std::move(frames_.back());
  frames_.pop_back();
  if (f.items.empty()) {
    add_item("[]");
    return *this;
  }
  bool flat = true;
  size_t total = 0;
  for (const std::string& it : f.items) {
    if (it.find('\n') != std::string::npos) flat = false;
    total += it.size() + 2;
  }
  std::string out;
  if (flat && total <= 72) {
    out = "[";
    for (size_t i = 0; i < f.items.size(); ++i) {
      out += f.items[i];
      if (i + 1 < f.items.size()) out += ", ";
    }
    out += "]";
  } else {
    out = "[\n";
    for (size_t i = 0; i < f.items.size(); ++i) {
      out += indent_block(f.items[i]);
      out += (i + 1 < f.items.size()) ? ",\n" : "\n";
    }
    out += "]";
  }
  add_item(std::move(out));
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  add_item(quote(v));
  return *this;
}
JsonWriter& JsonWriter::value(const char* v) { return value(std::string(v)); }
JsonWriter& JsonWriter::value(double v) {
  add_item(render_double(v));
  return *this;
}
JsonWriter& JsonWriter::value(long long v) {
  add_item(std::to_string(v));
  return *this;
}
JsonWriter& JsonWriter::value(int v) { return value(static_cast<long long>(v)); }
JsonWriter& JsonWriter::value(bool v) {
  add_item(v ? "true" : "false");
  return *this;
}

std::string JsonWriter::str() const {
  if (!done_ || !frames_.empty())
    throw Error("JSON writer: document is not complete");
  return root_ + "\n";
}

// ---------------------------------------------------------------------------
// parsing

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

const json& require(const json& j, const char* k, const std::string& where) {
  if (!j.is_object())
    throw InputError(where + " must be a JSON object");
  auto it = j.find(k);
  if (it == j.end())
    throw InputError(where + " is missing \"" + k + "\"");
  return *it;
}

std::string require_string(const json& j, const char* k,
                           const std::string& where) {
  const json& v = require(j, k, where);
  if (!v.is_string())
    throw InputError("\"" + std::string(k) + "\" in " + where +
                     " must be a string");
  return v.get<std::string>();
}

long long require_int(const json& j, const char* k, const std::string& where) {
  const json& v = require(j, k, where);
  if (!v.is_number_integer())
    throw InputError("\"" + std::string(k) + "\" in " + where +
                     " must be an integer");
  return v.get<long long>();
}

double require_number(const json& j, const char* k, const std::string& where) {
  const json& v = require(j, k, where);
  if (!v.is_number())
    throw InputError("\"" + std::string(k) + "\" in " + where +
                     " must be a number");
  return v.get<double>();
}

const json& require_array(const json& j, const char* k,
                          const std::string& where) {
  const json& v = require(j, k, where);
  if (!v.is_array())
    throw InputError("\"" + std::string(k) + "\" in " + where +
                     " must be an array");
  return v;
}

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  if (!j.is_object())
    throw InputError(where + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
          return k == a;
        }) == allowed.end())
      throw InputError("unknown key \"" + k + "\" in " + where);
  }
}

void check_schema_version(const json& j, const std::string& where,
                          bool required) {
  if (!j.is_object())
    throw InputError(where + " must be a JSON object");
  if (!required && !j.contains("schema_version")) return;
  long long v = require_int(j, "schema_version", where);
  if (v != kSchemaVersion)
    throw InputError("unsupported schema_version " + std::to_string(v) +
                     " in " + where + " (expected " +
                     std::to_string(kSchemaVersion) + ")");
}

Label name_to_label(const std::vector<std::string>& labels,
                    const std::string& name, const std::string& where) {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end())
    throw InputError("unknown label \"" + name + "\" in " + where);
  return static_cast<Label>(it - labels.begin());
}

Label label_from(const json& v, const std::vector<std::string>& labels,
                 const std::string& where) {
  if (!v.is_string())
    throw InputError("label in " + where + " must be a string");
  return name_to_label(labels, v.get<std::string>(), where);
}

cx re_im(const json& j, const std::string& where) {
  return cx(require_number(j, "re", where), require_number(j, "im", where));
}

}  // namespace

ModelData parse_model(const std::string& json_text) {
  json j = parse_text(json_text);
  const std::string where = "model";
  check_schema_version(j, where, true);
  check_keys(j,
             {"schema_version", "name", "labels", "vacuum", "dual", "fusion",
              "f_symbols", "r_symbols", "twists"},
             where);
  ModelData d;
  d.name = require_string(j, "name", where);
  for (const json& l : require_array(j, "labels", where)) {
    if (!l.is_string())
      throw InputError("entries of \"labels\" must be strings");
    d.labels.push_back(l.get<std::string>());
  }
  if (d.labels.empty()) throw InputError("model has no labels");
  d.vacuum = name_to_label(d.labels, require_string(j, "vacuum", where),
                           "\"vacuum\"");
  for (const json& v : require_array(j, "dual", where))
    d.dual.push_back(label_from(v, d.labels, "\"dual\""));
  for (const json& t : require_array(j, "fusion", where)) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("entries of \"fusion\" must be [a, b, c] label triples");
    d.fusion.push_back({label_from(t[0], d.labels, "\"fusion\""),
                        label_from(t[1], d.labels, "\"fusion\""),
                        label_from(t[2], d.labels, "\"fusion\"")});
  }
  for (const json& e : require_array(j, "f_symbols", where)) {
    const std::string fw = "\"f_symbols\" entry";
    check_keys(e, {"a", "b", "c", "d", "x", "y", "re", "im"}, fw);
    FEntry fe;
    fe.a = label_from(require(e, "a", fw), d.labels, fw);
    fe.b = label_from(require(e, "b", fw), d.labels, fw);
    fe.c = label_from(require(e, "c", fw), d.labels, fw);
    fe.d = label_from(require(e, "d", fw), d.labels, fw);
    fe.x = label_from(require(e, "x", fw), d.labels, fw);
    fe.y = label_from(require(e, "y", fw), d.labels, fw);
    fe.value = re_im(e, fw);
    d.f_symbols.push_back(fe);
  }
  if (j.contains("r_symbols")) {
    d.r_symbols.emplace();
    for (const json& e : require_array(j, "r_symbols", where)) {
      const std::string rw = "\"r_symbols\" entry";
      check_keys(e, {"a", "b", "c", "re", "im"}, rw);
      REntry re;
      re.a = label_from(require(e, "a", rw), d.labels, rw);
      re.b = label_from(require(e, "b", rw), d.labels, rw);
      re.c = label_from(require(e, "c", rw), d.labels, rw);
      re.value = re_im(e, rw);
      d.r_symbols->push_back(re);
    }
  }
  if (j.contains("twists")) {
    std::vector<cx> tw(d.labels.size());
    std::vector<bool> seen(d.labels.size(), false);
    for (const json& e : require_array(j, "twists", where)) {
      const std::string tws = "\"twists\" entry";
      check_keys(e, {"label", "re", "im"}, tws);
      Label l = label_from(require(e, "label", tws), d.labels, tws);
      if (seen[l])
        throw InputError("duplicate twist for label \"" + d.labels[l] + "\"");
      seen[l] = true;
      tw[l] = re_im(e, tws);
    }
    for (size_t i = 0; i < seen.size(); ++i)
      if (!seen[i])
        throw InputError("missing twist for label \"" + d.labels[i] + "\"");
    d.twists = std::move(tw);
  }
  return d;
}

AnyonModel load_model_file(const std::string& path) {
  return AnyonModel(parse_model(read_file(path)));
}

namespace {

StandardSurface surface_from_json(const json& j, const AnyonModel& model,
                                  const std::string& where) {
  check_schema_version(j, where, false);
  check_keys(j, {"schema_version", "interior", "exterior"}, where);
  std::vector<std::string> names;
  for (Label a = 0; a < model.num_labels(); ++a)
    names.push_back(model.label_name(a));
  StandardSurface s;
  for (const json& v : require_array(j, "interior", where))
    s.interior.push_back(label_from(v, names, where));
  s.exterior =
      label_from(require(j, "exterior", where), names, where);
  return s;
}

}  // namespace

StandardSurface parse_surface(const std::string& json_text,
                              const AnyonModel& model) {
  return surface_from_json(parse_text(json_text), model, "surface");
}

CurveDiagram parse_diagram(const std::string& json_text,
                           const AnyonModel& model) {
  json j = parse_text(json_text);
  const std::string where = "diagram";
  check_schema_version(j, where, true);
  check_keys(j, {"schema_version", "surface", "word", "exterior_choice"},
             where);
  CurveDiagram d;
  d.surface = surface_from_json(require(j, "surface", where), model,
                                "diagram surface");
  d.word = FramedBraidWord::parse(require_string(j, "word", where),
                                  d.surface.num_holes());
  if (j.contains("exterior_choice")) {
    long long ec = require_int(j, "exterior_choice", where);
    int n = d.surface.num_holes();
    if (ec < 0 || ec > n)
      throw InputError("\"exterior_choice\" must lie in [0, " +
                       std::to_string(n) + "]");
    d.exterior_choice = static_cast<int>(ec);
  }
  return d;
}

std::vector<Move> parse_moves(const std::string& json_text) {
  json j = parse_text(json_text);
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else {
    check_schema_version(j, "move sequence", true);
    check_keys(j, {"schema_version", "moves"}, "move sequence");
    arr = &require_array(j, "moves", "move sequence");
  }
  std::vector<Move> moves;
  for (const json& m : *arr) {
    if (!m.is_string())
      throw InputError("moves must be strings like \"R@holes1,2\"");
    moves.push_back(Move::parse(m.get<std::string>()));
  }
  return moves;
}

Eigen::MatrixXcd parse_matrix(const std::string& json_text) {
  json j = parse_text(json_text);
  const json* m = &j;
  if (m->is_object() && m->contains("unitary")) m = &m->at("unitary");
  if (m->is_object() && m->contains("matrix")) m = &m->at("matrix");
  if (!m->is_object())
    throw InputError("matrix must be a JSON object with rows/cols/entries");
  long long rows = require_int(*m, "rows", "matrix");
  long long cols = require_int(*m, "cols", "matrix");
  if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be >= 0");
  const json& entries = require_array(*m, "entries", "matrix");
  if (static_cast<long long>(entries.size()) != rows * cols)
    throw InputError("matrix has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  Eigen::MatrixXcd out(rows, cols);
  long long k = 0;
  for (long long r = 0; r < rows; ++r)
    for (long long c = 0; c < cols; ++c, ++k) {
      const json& e = entries.at(static_cast<std::size_t>(k));
      if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() ||
          !e.at(1).is_number())
        throw InputError("matrix entries must be [re, im] pairs");
      out(r, c) = cx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write file \"" + path + "\"");
  out << content;
  if (!out) throw InputError("failed writing file \"" + path + "\"");
}

// ---------------------------------------------------------------------------
// emission

void write_surface(JsonWriter& w, const AnyonModel& model,
                   const StandardSurface& s) {
  w.begin_object();
  w.key("interior").begin_array();
  for (Label a : s.interior) w.value(model.label_name(a));
  w.end_array();
  w.field("exterior", model.label_name(s.exterior));
  w.end_object();
}

void write_matrix(JsonWriter& w, const Eigen::MatrixXcd& m) {
  w.begin_object();
  w.field("rows", static_cast<long long>(m.rows()));
  w.field("cols", static_cast<long long>(m.cols()));
  w.key("entries").begin_array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      w.begin_array();
      w.value(m(r, c).real());
      w.value(m(r, c).imag());
      w.end_array();
    }
  w.end_array();
  w.end_object();
}

void write_unitary(JsonWriter& w, const AnyonModel& model, const Unitary& u) {
  auto basis = [&](const BasisRef& b) {
    w.begin_object();
    w.key("surface");
    write_surface(w, model, b.surface);
    w.field("shape", b.shape.to_string());
    w.end_object();
  };
  w.begin_object();
  w.key("domain");
  basis(u.domain);
  w.key("codomain");
  basis(u.codomain);
  w.key("matrix");
  write_matrix(w, u.matrix);
  w.end_object();
}

std::string model_to_json(const AnyonModel& model) {
  const ModelData& d = model.data();
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.field("name", d.name);
  w.key("labels").begin_array();
  for (const std::string& l : d.labels) w.value(l);
  w.end_array();
  w.field("vacuum", d.labels[d.vacuum]);
  w.key("dual").begin_array();
  for (Label a : d.dual) w.value(d.labels[a]);
  w.end_array();

  std::vector<std::array<Label, 3>> fusion = d.fusion;
  std::sort(fusion.begin(), fusion.end());
  w.key("fusion").begin_array();
  for (const auto& t : fusion) {
    w.begin_array();
    for (Label a : t) w.value(d.labels[a]);
    w.end_array();
  }
  w.end_array();

  std::vector<FEntry> fs = d.f_symbols;
  std::sort(fs.begin(), fs.end(), [](const FEntry& p, const FEntry& q) {
    return std::tie(p.a, p.b, p.c, p.d, p.x, p.y) <
           std::tie(q.a, q.b, q.c, q.d, q.x, q.y);
  });
  w.key("f_symbols").begin_array();
  for (const FEntry& e : fs) {
    w.begin_object();
    w.field("a", d.labels[e.a]).field("b", d.labels[e.b]);
    w.field("c", d.labels[e.c]).field("d", d.labels[e.d]);
    w.field("x", d.labels[e.x]).field("y", d.labels[e.y]);
    w.field("re", e.value.real()).field("im", e.value.imag());
    w.end_object();
  }
  w.end_array();

  if (d.r_symbols) {
    std::vector<REntry> rs = *d.r_symbols;
    std::sort(rs.begin(), rs.end(), [](const REntry& p, const REntry& q) {
      return std::tie(p.a, p.b, p.c) < std::tie(q.a, q.b, q.c);
    });
    w.key("r_symbols").begin_array();
    for (const REntry& e : rs) {
      w.begin_object();
      w.field("a", d.labels[e.a]).field("b", d.labels[e.b]);
      w.field("c", d.labels[e.c]);
      w.field("re", e.value.real()).field("im", e.value.imag());
      w.end_object();
    }
    w.end_array();
  }
  if (d.twists) {
    w.key("twists").begin_array();
    for (size_t i = 0; i < d.twists->size(); ++i) {
      w.begin_object();
      w.field("label", d.labels[i]);
      w.field("re", (*d.twists)[i].real()).field("im", (*d.twists)[i].imag());
      w.end_object();
    }
    w.end_array();
  }
  w.end_object();
  return w.str();
}

std::string surface_to_json(const AnyonModel& model, const StandardSurface& s) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.key("interior").begin_array();
  for (Label a : s.interior) w.value(model.label_name(a));
  w.end_array();
  w.field("exterior", model.label_name(s.exterior));
  w.end_object();
  return w.str();
}

std::string diagram_to_json(const AnyonModel& model, const CurveDiagram& d) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.key("surface");
  write_surface(w, model, d.surface);
  w.field("word", d.word.to_string());
  w.field("exterior_choice", d.exterior_choice);
  w.end_object();
  return w.str();
}

std::string matrix_to_json(const Eigen::MatrixXcd& m) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.key("matrix");
  write_matrix(w, m);
  w.end_object();
  return w.str();
}

std::string unitary_to_json(const AnyonModel& model, const Unitary& u) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.key("unitary");
  write_unitary(w, model, u);
  w.end_object();
  return w.str();
}

std::string report_to_json(const AnyonModel& model, const ValidationReport& r) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.field("model", model.name());
  w.field("tolerance", r.tolerance);
  w.field("pass", r.pass);
  w.key("checks").begin_array();
  for (const CheckResult& c : r.checks) {
    w.begin_object();
    w.field("name", c.name);
    const char* st = c.status == CheckResult::Status::Pass     ? "pass"
                     : c.status == CheckResult::Status::Fail   ? "fail"
                                                               : "skipped";
    w.field("status", st);
    if (c.residual) w.field("residual", *c.residual);
    if (!c.detail.empty()) w.field("detail", c.detail);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string moves_to_json(const std::vector<Move>& moves) {
  JsonWriter w;
  w.begin_object();
  w.field("schema_version", kSchemaVersion);
  w.key("moves").begin_array();
  for (const Move& m : moves) w.value(m.to_string());
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace anyons
