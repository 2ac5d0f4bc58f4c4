#pragma once

#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "anyons/common.hpp"

namespace anyons {

// One F-symbol record. `d` is the total charge of the triple (a, b, c);
// `x` runs over a*b and `y` over b*c:
//   |((a b)_x c) -> d>  =  sum_y F[a,b,c,d][x,y] |(a (b c)_y) -> d>
struct FEntry {
  Label a, b, c, d, x, y;
  cx value;
};

// One R-symbol record: |(a b) -> c>  ->  R^{ab}_c |(b a) -> c>,
// the counterclockwise half-twist exchanging a and b.
struct REntry {
  Label a, b, c;
  cx value;
};

// Raw model data as supplied by a file or a builder. Indices refer to
// `labels`; resolution from names happens at parse time.
struct ModelData {
  std::string name;
  std::vector<std::string> labels;
  Label vacuum = 0;
  std::vector<Label> dual;
  std::vector<std::array<Label, 3>> fusion;  // admissible (a, b, c) triples
  std::vector<FEntry> f_symbols;
  std::optional<std::vector<REntry>> r_symbols;  // absent: braiding unavailable
  std::optional<std::vector<cx>> twists;         // absent: twists unavailable
};

struct CheckResult {
  enum class Status { Pass, Fail, Skipped };
  std::string name;
  Status status = Status::Pass;
  std::optional<double> residual;  // absent for structural/skipped checks
  std::string detail;              // human-readable failure description
};

struct ValidationReport {
  double tolerance = 0;
  std::vector<CheckResult> checks;
  bool pass = false;  // true iff no check failed (skipped checks do not fail)
};

// A multiplicity-free anyon model: label set with duals, fusion rules,
// F-symbols, and optionally R-symbols and twist factors. Immutable after
// construction; all accessors are const and thread-safe.
class AnyonModel {
 public:
  // Throws InputError if the data cannot be stored at all: out-of-range
  // indices, duplicate labels, or a repeated fusion triple (multiplicity > 1).
  // Softer structural defects (e.g. dual not an involution) are stored
  // verbatim and reported by validate().
  explicit AnyonModel(ModelData data);

  // "trivial", "fibonacci", or "ising". Cached; throws InputError otherwise.
  static const AnyonModel& builtin(const std::string& name);
  static const std::vector<std::string>& builtin_names();

  const std::string& name() const { return data_.name; }
  int num_labels() const { return n_; }
  const std::string& label_name(Label a) const;
  std::optional<Label> find_label(const std::string& name) const;
  Label vacuum() const { return data_.vacuum; }
  Label dual(Label a) const;

  bool fuses(Label a, Label b, Label c) const;
  std::vector<Label> fusion_products(Label a, Label b) const;

  // Value of F[a,b,c,d][x,y]. Returns 0 for inadmissible (x, y); synthesizes
  // the identity when any of a, b, c is the vacuum; throws Error when an
  // admissible non-vacuum entry is absent from the model.
  cx f_entry(Label a, Label b, Label c, Label d, Label x, Label y) const;

  bool has_braiding() const { return data_.r_symbols.has_value(); }
  bool has_twists() const { return data_.twists.has_value(); }

  // R^{ab}_c. Throws InputError for an inadmissible triple and Error when
  // braiding data is unavailable or the entry is absent. Vacuum entries
  // synthesize to 1.
  cx r_symbol(Label a, Label b, Label c) const;

  // Twist factor of label a. Throws Error when twist data is unavailable.
  cx twist(Label a) const;

  // Maximum deviation over all label tuples between the two F-move
  // compositions around the pentagon of five decompositions.
  double pentagon_residual() const;

  // Maximum deviation over both braid-past orientations (R and R^-1) of the
  // six-sided F/R coherence diagrams. Throws Error without braiding data.
  double hexagon_residual() const;

  // max |R^{ba}_c R^{ab}_c - theta_c / (theta_a theta_b)| over admissible
  // (a, b, c). Throws Error without braiding or twist data.
  double ribbon_residual() const;

  // max over (a, b, c, d) of ||F^dagger F - I||_max for the F-matrix blocks.
  double f_unitarity_error() const;

  // Runs structural checks plus the residuals above against `tolerance`.
  // Never throws on malformed data; failures become report rows.
  ValidationReport validate(double tolerance) const;

  const ModelData& data() const { return data_; }

  // Semantic equality: same labels, duals, fusion rules, and symbol values
  // (synthesized vacuum entries included). Names are compared too.
  bool equals(const AnyonModel& other, double tol = 0.0) const;

 private:
  ModelData data_;
  int n_ = 0;
  std::vector<char> fusion_;                 // n^3 admissibility table
  std::unordered_map<std::uint64_t, cx> f_;  // packed (a,b,c,d,x,y) -> value
  std::vector<char> r_present_;              // n^3
  std::vector<cx> r_val_;                    // n^3
  std::unordered_map<std::string, Label> label_index_;

  std::uint64_t fkey(Label a, Label b, Label c, Label d, Label x, Label y) const;
  int ridx(Label a, Label b, Label c) const;
  void check_label(Label a, const char* what) const;
};

}  // namespace anyons
