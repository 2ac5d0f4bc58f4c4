#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "anyons/curves.hpp"
#include "anyons/model.hpp"
#include "anyons/moves.hpp"
#include "anyons/serialize.hpp"

namespace {

using namespace anyons;

std::vector<Label> parse_label_list(const AnyonModel& model,
                                    const std::string& csv) {
  std::vector<Label> out;
  std::string cur;
  auto flush = [&] {
    // trim surrounding whitespace
    size_t b = cur.find_first_not_of(" \t");
    size_t e = cur.find_last_not_of(" \t");
    std::string name =
        (b == std::string::npos) ? "" : cur.substr(b, e - b + 1);
    if (name.empty()) throw InputError("empty label name in label list");
    auto l = model.find_label(name);
    if (!l) throw InputError("unknown label \"" + name + "\"");
    out.push_back(*l);
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else
      cur += c;
  }
  if (!cur.empty() || !csv.empty()) flush();
  return out;
}

Label parse_label(const AnyonModel& model, const std::string& name) {
  auto l = model.find_label(name);
  if (!l) throw InputError("unknown label \"" + name + "\"");
  return *l;
}

TreeShape shape_or_comb(const std::string& shape_text, int n) {
  if (shape_text.empty()) return TreeShape::left_comb(n);
  TreeShape s = TreeShape::parse(shape_text);
  if (s.leaf_count() != n)
    throw InputError("tree shape has " + std::to_string(s.leaf_count()) +
                     " leaves but the surface has " + std::to_string(n) +
                     " holes");
  return s;
}

void emit(const std::string& output_path, const std::string& doc) {
  if (output_path.empty())
    std::cout << doc;
  else
    write_file(output_path, doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "anyons: fusion spaces, move calculus, and braid compilation for "
      "multiplicity-free anyon models"};
  app.require_subcommand(1);

  std::string builtin, model_file, output_path;
  double tolerance = 1e-9;
  app.add_option("--builtin", builtin,
                 "use a built-in model: trivial, fibonacci, or ising");
  app.add_option("--model", model_file, "load the model from a JSON file");
  app.add_option("--tolerance", tolerance,
                 "numeric tolerance for validation and verification");
  app.add_option("--output", output_path,
                 "write the output document to this file instead of stdout");

  CLI::App* c_validate = app.add_subcommand(
      "validate", "check the model's defining equations and report residuals");
  c_validate->fallthrough();

  std::string interior_csv, exterior_name, shape_text, word_text;
  bool with_basis = false;
  CLI::App* c_dims = app.add_subcommand(
      "dims", "dimension of the fusion space of a labeled surface");
  c_dims->fallthrough();
  c_dims->add_option("--interior", interior_csv,
                     "comma-separated hole labels (omit for a disc)");
  c_dims->add_option("--exterior", exterior_name, "exterior label")
      ->required();
  c_dims->add_flag("--basis", with_basis, "also list the fusion-tree basis");
  c_dims->add_option("--shape", shape_text,
                     "bracketing for --basis, e.g. \"((1 2) 3)\"; default "
                     "left comb");

  std::string fa, fb, fc, fd;
  CLI::App* c_fmatrix = app.add_subcommand(
      "fmatrix", "re-association matrix for three charges with a fixed total");
  c_fmatrix->fallthrough();
  c_fmatrix->add_option("--a", fa, "first charge")->required();
  c_fmatrix->add_option("--b", fb, "second charge")->required();
  c_fmatrix->add_option("--c", fc, "third charge")->required();
  c_fmatrix->add_option("--d", fd, "total charge")->required();

  CLI::App* c_compile = app.add_subcommand(
      "compile", "unitary of a framed braid word on a labeled surface");
  c_compile->fallthrough();
  c_compile->add_option("--interior", interior_csv, "comma-separated hole labels")
      ->required();
  c_compile->add_option("--exterior", exterior_name, "exterior label")
      ->required();
  c_compile->add_option("--word", word_text,
                        "braid word, e.g. \"s1 s2^-1 t1\" (\"e\" = empty)");

  std::string from_file, to_file;
  bool verify = false;
  CLI::App* c_refactor = app.add_subcommand(
      "refactor", "move sequence transforming one curve diagram into another");
  c_refactor->fallthrough();
  c_refactor->add_option("--from", from_file, "starting diagram JSON file")
      ->required();
  c_refactor->add_option("--to", to_file, "target diagram JSON file")
      ->required();
  c_refactor->add_flag("--verify", verify,
                       "re-check the result and report residuals");

  int node_1based = 0;
  CLI::App* c_twist = app.add_subcommand(
      "twist", "Dehn twist about a curve of the decomposition");
  c_twist->fallthrough();
  c_twist->add_option("--interior", interior_csv, "comma-separated hole labels")
      ->required();
  c_twist->add_option("--exterior", exterior_name, "exterior label")
      ->required();
  c_twist->add_option("--shape", shape_text,
                      "bracketing, e.g. \"((1 2) 3)\"; default left comb");
  c_twist->add_option("--node", node_1based,
                      "tree node the curve encloses (1-based; default: root)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    std::optional<AnyonModel> owned;
    const AnyonModel* model = nullptr;
    if (!builtin.empty() && !model_file.empty())
      throw InputError("give either --builtin or --model, not both");
    if (!builtin.empty()) {
      model = &AnyonModel::builtin(builtin);
    } else if (!model_file.empty()) {
      owned.emplace(load_model_file(model_file));
      model = &*owned;
    } else {
      throw InputError("a model is required: pass --builtin or --model");
    }

    if (app.got_subcommand(c_validate)) {
      ValidationReport report = model->validate(tolerance);
      emit(output_path, report_to_json(*model, report));
      return report.pass ? 0 : 1;
    }

    if (app.got_subcommand(c_dims)) {
      StandardSurface s{parse_label_list(*model, interior_csv),
                        parse_label(*model, exterior_name)};
      JsonWriter w;
      w.begin_object();
      w.field("schema_version", kSchemaVersion);
      w.field("model", model->name());
      w.key("surface");
      write_surface(w, *model, s);
      w.field("dim", dim(*model, s));
      if (with_basis) {
        TreeShape shape = shape_or_comb(shape_text, s.num_holes());
        w.field("shape", shape.to_string());
        w.key("basis").begin_array();
        for (const FusionTree& t : enumerate_basis(*model, s, shape))
          w.value(t.to_string(*model));
        w.end_array();
      }
      w.end_object();
      emit(output_path, w.str());
      return 0;
    }

    if (app.got_subcommand(c_fmatrix)) {
      Label a = parse_label(*model, fa), b = parse_label(*model, fb);
      Label c = parse_label(*model, fc), d = parse_label(*model, fd);
      JsonWriter w;
      w.begin_object();
      w.field("schema_version", kSchemaVersion);
      w.field("model", model->name());
      w.field("a", fa).field("b", fb).field("c", fc).field("d", fd);
      w.key("matrix");
      write_matrix(w, f_matrix(*model, a, b, c, d));
      w.end_object();
      emit(output_path, w.str());
      return 0;
    }

    if (app.got_subcommand(c_compile)) {
      StandardSurface s{parse_label_list(*model, interior_csv),
                        parse_label(*model, exterior_name)};
      FramedBraidWord word = FramedBraidWord::parse(word_text, s.num_holes());
      Unitary u = compile(*model, s, word);
      JsonWriter w;
      w.begin_object();
      w.field("schema_version", kSchemaVersion);
      w.field("model", model->name());
      w.field("word", word.to_string());
      w.key("unitary");
      write_unitary(w, *model, u);
      w.end_object();
      emit(output_path, w.str());
      return 0;
    }

    if (app.got_subcommand(c_refactor)) {
      CurveDiagram from = parse_diagram(read_file(from_file), *model);
      CurveDiagram to = parse_diagram(read_file(to_file), *model);
      std::vector<Move> moves = refactor(*model, from, to);
      Unitary u = induced_unitary(*model, from, moves);
      JsonWriter w;
      w.begin_object();
      w.field("schema_version", kSchemaVersion);
      w.field("model", model->name());
      w.key("moves").begin_array();
      for (const Move& m : moves) w.value(m.to_string());
      w.end_array();
      w.key("unitary");
      write_unitary(w, *model, u);
      bool ok = true;
      if (verify) {
        bool eq = equal(apply_moves(*model, from, moves), to);
        double uerr = u.unitarity_error();
        ok = eq && uerr <= tolerance;
        w.key("verification").begin_object();
        w.field("equal", eq);
        w.field("unitarity_error", uerr);
        w.end_object();
      }
      w.end_object();
      emit(output_path, w.str());
      if (!ok) {
        std::cerr << "error: refactoring verification failed\n";
        return 3;
      }
      return 0;
    }

    if (app.got_subcommand(c_twist)) {
      StandardSurface s{parse_label_list(*model, interior_csv),
                        parse_label(*model, exterior_name)};
      TreeShape shape = shape_or_comb(shape_text, s.num_holes());
      int node = (node_1based == 0) ? shape.root() : node_1based - 1;
      BasisRef basis{s, shape};
      Unitary u = dehn_twist(*model, basis, node);
      JsonWriter w;
      w.begin_object();
      w.field("schema_version", kSchemaVersion);
      w.field("model", model->name());
      w.field("node", node + 1);
      w.key("unitary");
      write_unitary(w, *model, u);
      w.end_object();
      emit(output_path, w.str());
      return 0;
    }

    throw InputError("no subcommand given");
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
