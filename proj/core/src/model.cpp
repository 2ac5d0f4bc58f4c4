#include "anyons/model.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace anyons {

namespace {

std::string triple_str(const AnyonModel& m, Label a, Label b, Label c) {
  return "(" + m.label_name(a) + ", " + m.label_name(b) + ", " + m.label_name(c) + ")";
}

}  // namespace

AnyonModel::AnyonModel(ModelData data) : data_(std::move(data)) {
  n_ = static_cast<int>(data_.labels.size());
  if (n_ == 0) throw InputError("model must have at least one label");
  for (Label a = 0; a < n_; ++a) {
    if (!label_index_.emplace(data_.labels[a], a).second)
      throw InputError("duplicate label name \"" + data_.labels[a] + "\"");
  }
  auto in_range = [&](Label a) { return a >= 0 && a < n_; };
  if (!in_range(data_.vacuum)) throw InputError("vacuum label out of range");
  if (static_cast<int>(data_.dual.size()) != n_)
    throw InputError("dual map must cover every label");
  for (Label a : data_.dual)
    if (!in_range(a)) throw InputError("dual map entry out of range");

  fusion_.assign(static_cast<size_t>(n_) * n_ * n_, 0);
  for (const auto& t : data_.fusion) {
    for (Label a : t)
      if (!in_range(a)) throw InputError("fusion triple label out of range");
    char& slot = fusion_[ridx(t[0], t[1], t[2])];
    if (slot)
      throw InputError("fusion multiplicity exceeds one for " +
                       triple_str(*this, t[0], t[1], t[2]) +
                       "; only multiplicity-free models are supported");
    slot = 1;
  }

  for (const auto& e : data_.f_symbols) {
    for (Label a : {e.a, e.b, e.c, e.d, e.x, e.y})
      if (!in_range(a)) throw InputError("f-symbol label out of range");
    if (!(fuses(e.a, e.b, e.x) && fuses(e.x, e.c, e.d) &&
          fuses(e.b, e.c, e.y) && fuses(e.a, e.y, e.d))) {
      std::ostringstream os;
      os << "f-symbol entry (" << label_name(e.a) << ", " << label_name(e.b)
         << ", " << label_name(e.c) << "; " << label_name(e.d) << ")["
         << label_name(e.x) << ", " << label_name(e.y)
         << "] is inadmissible under the fusion rules";
      throw InputError(os.str());
    }
    if (!f_.emplace(fkey(e.a, e.b, e.c, e.d, e.x, e.y), e.value).second)
      throw InputError("duplicate f-symbol entry");
  }

  r_present_.assign(static_cast<size_t>(n_) * n_ * n_, 0);
  r_val_.assign(static_cast<size_t>(n_) * n_ * n_, cx(0));
  if (data_.r_symbols) {
    for (const auto& e : *data_.r_symbols) {
      for (Label a : {e.a, e.b, e.c})
        if (!in_range(a)) throw InputError("r-symbol label out of range");
      if (!fuses(e.a, e.b, e.c))
        throw InputError("r-symbol entry for inadmissible triple " +
                         triple_str(*this, e.a, e.b, e.c));
      char& slot = r_present_[ridx(e.a, e.b, e.c)];
      if (slot) throw InputError("duplicate r-symbol entry");
      slot = 1;
      r_val_[ridx(e.a, e.b, e.c)] = e.value;
    }
  }

  if (data_.twists && static_cast<int>(data_.twists->size()) != n_)
    throw InputError("twist list must cover every label");
}

std::uint64_t AnyonModel::fkey(Label a, Label b, Label c, Label d, Label x,
                               Label y) const {
  std::uint64_t k = static_cast<std::uint64_t>(a);
  for (Label v : {b, c, d, x, y}) k = k * n_ + static_cast<std::uint64_t>(v);
  return k;
}

int AnyonModel::ridx(Label a, Label b, Label c) const {
  return (a * n_ + b) * n_ + c;
}

void AnyonModel::check_label(Label a, const char* what) const {
  if (a < 0 || a >= n_)
    throw InputError(std::string(what) + " label index out of range");
}

const std::string& AnyonModel::label_name(Label a) const {
  check_label(a, "label_name");
  return data_.labels[a];
}

std::optional<Label> AnyonModel::find_label(const std::string& name) const {
  auto it = label_index_.find(name);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Label AnyonModel::dual(Label a) const {
  check_label(a, "dual");
  return data_.dual[a];
}

bool AnyonModel::fuses(Label a, Label b, Label c) const {
  check_label(a, "fusion");
  check_label(b, "fusion");
  check_label(c, "fusion");
  return fusion_[ridx(a, b, c)] != 0;
}

std::vector<Label> AnyonModel::fusion_products(Label a, Label b) const {
  std::vector<Label> out;
  for (Label c = 0; c < n_; ++c)
    if (fuses(a, b, c)) out.push_back(c);
  return out;
}

cx AnyonModel::f_entry(Label a, Label b, Label c, Label d, Label x,
                       Label y) const {
  if (!(fuses(a, b, x) && fuses(x, c, d) && fuses(b, c, y) && fuses(a, y, d)))
    return cx(0);
  auto it = f_.find(fkey(a, b, c, d, x, y));
  if (it != f_.end()) return it->second;
  if (a == vacuum() || b == vacuum() || c == vacuum()) return cx(1);
  std::ostringstream os;
  os << "missing f-symbol for admissible tuple (" << label_name(a) << ", "
     << label_name(b) << ", " << label_name(c) << "; " << label_name(d) << ")["
     << label_name(x) << ", " << label_name(y) << "]";
  throw Error(os.str());
}

cx AnyonModel::r_symbol(Label a, Label b, Label c) const {
  if (!fuses(a, b, c))
    throw InputError("r-symbol requested for inadmissible triple " +
                     triple_str(*this, a, b, c));
  if (!has_braiding())
    throw Error("model \"" + name() + "\" carries no braiding data");
  if (r_present_[ridx(a, b, c)]) return r_val_[ridx(a, b, c)];
  if (a == vacuum() || b == vacuum()) return cx(1);
  throw Error("missing r-symbol for admissible triple " +
              triple_str(*this, a, b, c));
}

cx AnyonModel::twist(Label a) const {
  check_label(a, "twist");
  if (!has_twists())
    throw Error("model \"" + name() + "\" carries no twist data");
  return (*data_.twists)[a];
}

double AnyonModel::pentagon_residual() const {
  double worst = 0;
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c)
        for (Label d = 0; d < n_; ++d)
          for (Label f = 0; f < n_; ++f) {
            if (!fuses(a, b, f)) continue;
            for (Label g = 0; g < n_; ++g) {
              if (!fuses(f, c, g)) continue;
              for (Label e = 0; e < n_; ++e) {
                if (!fuses(g, d, e)) continue;
                for (Label h = 0; h < n_; ++h)
                  for (Label k = 0; k < n_; ++k) {
                    cx lhs = f_entry(f, c, d, e, g, h) * f_entry(a, b, h, e, f, k);
                    cx rhs = 0;
                    for (Label x = 0; x < n_; ++x)
                      rhs += f_entry(a, b, c, g, f, x) * f_entry(a, x, d, e, g, k) *
                             f_entry(b, c, d, k, x, h);
                    worst = std::max(worst, std::abs(lhs - rhs));
                  }
              }
            }
          }
  return worst;
}

double AnyonModel::hexagon_residual() const {
  if (!has_braiding())
    throw Error("hexagon residual needs braiding data, which model \"" + name() +
                "\" does not carry");
  double worst = 0;
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c)
        for (Label d = 0; d < n_; ++d)
          for (Label e = 0; e < n_; ++e)
            for (Label g = 0; g < n_; ++g) {
              // braid-past with R: both routes from ((c a) b) to (a (b c))
              cx lhs = 0, rhs = 0;
              if (fuses(c, a, e) && fuses(b, c, g))
                lhs = r_symbol(c, a, e) * f_entry(a, c, b, d, e, g) *
                      r_symbol(c, b, g);
              for (Label f = 0; f < n_; ++f)
                if (fuses(c, f, d))
                  rhs += f_entry(c, a, b, d, e, f) * r_symbol(c, f, d) *
                         f_entry(a, b, c, d, f, g);
              worst = std::max(worst, std::abs(lhs - rhs));
              // same diagram traversed with the inverse braiding
              lhs = rhs = 0;
              if (fuses(a, c, e) && fuses(b, c, g))
                lhs = f_entry(a, c, b, d, e, g) /
                      (r_symbol(a, c, e) * r_symbol(b, c, g));
              for (Label f = 0; f < n_; ++f)
                if (fuses(f, c, d))
                  rhs += f_entry(c, a, b, d, e, f) / r_symbol(f, c, d) *
                         f_entry(a, b, c, d, f, g);
              worst = std::max(worst, std::abs(lhs - rhs));
            }
  return worst;
}

double AnyonModel::ribbon_residual() const {
  if (!has_braiding() || !has_twists())
    throw Error("ribbon residual needs braiding and twist data");
  double worst = 0;
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c) {
        if (!fuses(a, b, c)) continue;
        cx lhs = r_symbol(b, a, c) * r_symbol(a, b, c);
        cx rhs = twist(c) / (twist(a) * twist(b));
        worst = std::max(worst, std::abs(lhs - rhs));
      }
  return worst;
}

double AnyonModel::f_unitarity_error() const {
  double worst = 0;
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c)
        for (Label d = 0; d < n_; ++d) {
          std::vector<Label> xs, ys;
          for (Label x = 0; x < n_; ++x)
            if (fuses(a, b, x) && fuses(x, c, d)) xs.push_back(x);
          for (Label y = 0; y < n_; ++y)
            if (fuses(b, c, y) && fuses(a, y, d)) ys.push_back(y);
          if (xs.empty() && ys.empty()) continue;
          if (xs.size() != ys.size()) {
            std::ostringstream os;
            os << "F-block for (" << label_name(a) << ", " << label_name(b)
               << ", " << label_name(c) << "; " << label_name(d)
               << ") is not square (" << ys.size() << "x" << xs.size() << ")";
            throw Error(os.str());
          }
          Eigen::MatrixXcd m(ys.size(), xs.size());
          for (size_t iy = 0; iy < ys.size(); ++iy)
            for (size_t ix = 0; ix < xs.size(); ++ix)
              m(iy, ix) = f_entry(a, b, c, d, xs[ix], ys[iy]);
          Eigen::MatrixXcd dev =
              m.adjoint() * m -
              Eigen::MatrixXcd::Identity(xs.size(), xs.size());
          worst = std::max(worst, dev.cwiseAbs().maxCoeff());
        }
  return worst;
}

ValidationReport AnyonModel::validate(double tolerance) const {
  ValidationReport rep;
  rep.tolerance = tolerance;
  auto structural = [&](const std::string& name, bool ok,
                        const std::string& detail) {
    CheckResult r;
    r.name = name;
    r.status = ok ? CheckResult::Status::Pass : CheckResult::Status::Fail;
    if (!ok) r.detail = detail;
    rep.checks.push_back(std::move(r));
  };
  auto numeric = [&](const std::string& name, auto&& fn) {
    CheckResult r;
    r.name = name;
    try {
      double res = fn();
      r.residual = res;
      r.status = res <= tolerance ? CheckResult::Status::Pass
                                  : CheckResult::Status::Fail;
      if (r.status == CheckResult::Status::Fail)
        r.detail = "residual exceeds tolerance";
    } catch (const Error& e) {
      r.status = CheckResult::Status::Fail;
      r.detail = e.what();
    }
    rep.checks.push_back(std::move(r));
  };
  auto skipped = [&](const std::string& name, const std::string& why) {
    CheckResult r;
    r.name = name;
    r.status = CheckResult::Status::Skipped;
    r.detail = why;
    rep.checks.push_back(std::move(r));
  };

  {
    std::string detail;
    bool ok = true;
    if (dual(vacuum()) != vacuum()) {
      ok = false;
      detail = "vacuum is not self-dual";
    }
    for (Label a = 0; a < n_ && ok; ++a)
      if (dual(dual(a)) != a) {
        ok = false;
        detail = "dual is not an involution at label " + label_name(a);
      }
    structural("duality", ok, detail);
  }
  {
    std::string detail;
    bool ok = true;
    for (Label a = 0; a < n_ && ok; ++a)
      for (Label c = 0; c < n_ && ok; ++c) {
        if (fuses(a, vacuum(), c) != (a == c) ||
            fuses(vacuum(), a, c) != (a == c)) {
          ok = false;
          detail = "fusion with the vacuum must fix " + label_name(a);
        }
        if (fuses(a, c, vacuum()) != (c == dual(a))) {
          ok = false;
          detail = "vacuum channel of " + label_name(a) + " x " +
                   label_name(c) + " disagrees with the dual map";
        }
      }
    structural("units", ok, detail);
  }
  {
    std::string detail;
    bool ok = true;
    for (Label a = 0; a < n_ && ok; ++a)
      for (Label b = 0; b < n_ && ok; ++b)
        for (Label c = 0; c < n_ && ok; ++c)
          if (fuses(a, b, c) != fuses(b, a, c)) {
            ok = false;
            detail = "fusion is not commutative at " + triple_str(*this, a, b, c);
          }
    structural("commutativity", ok, detail);
  }

  numeric("f-unitarity", [&] { return f_unitarity_error(); });
  numeric("pentagon", [&] { return pentagon_residual(); });

  if (!has_braiding()) {
    skipped("hexagon", "no braiding data");
  } else {
    std::string detail;
    bool ok = true;
    for (Label a = 0; a < n_ && ok; ++a)
      for (Label b = 0; b < n_ && ok; ++b)
        for (Label c = 0; c < n_ && ok; ++c) {
          if (!fuses(a, b, c)) continue;
          try {
            double mod = std::abs(r_symbol(a, b, c));
            if (std::abs(mod - 1.0) > tolerance) {
              ok = false;
              detail = "r-symbol for " + triple_str(*this, a, b, c) +
                       " is not unit modulus";
            }
          } catch (const Error& e) {
            ok = false;
            detail = e.what();
          }
        }
    structural("r-symbols", ok, detail);
    numeric("hexagon", [&] { return hexagon_residual(); });
  }

  if (!has_twists()) {
    skipped("twists", "no twist data");
  } else {
    std::string detail;
    bool ok = true;
    if (std::abs(twist(vacuum()) - cx(1)) > tolerance) {
      ok = false;
      detail = "vacuum twist must equal 1";
    }
    for (Label a = 0; a < n_ && ok; ++a)
      if (std::abs(std::abs(twist(a)) - 1.0) > tolerance) {
        ok = false;
        detail = "twist of " + label_name(a) + " is not unit modulus";
      }
    structural("twists", ok, detail);
  }
  if (!has_braiding() || !has_twists())
    skipped("ribbon", "needs braiding and twist data");
  else
    numeric("ribbon", [&] { return ribbon_residual(); });

  rep.pass = std::none_of(rep.checks.begin(), rep.checks.end(),
                          [](const CheckResult& c) {
                            return c.status == CheckResult::Status::Fail;
                          });
  return rep;
}

bool AnyonModel::equals(const AnyonModel& other, double tol) const {
  if (data_.name != other.data_.name || n_ != other.n_ ||
      data_.labels != other.data_.labels || data_.vacuum != other.data_.vacuum ||
      data_.dual != other.data_.dual)
    return false;
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c)
        if (fuses(a, b, c) != other.fuses(a, b, c)) return false;
  if (has_braiding() != other.has_braiding() ||
      has_twists() != other.has_twists())
    return false;
  auto close = [&](cx u, cx v) { return std::abs(u - v) <= tol; };
  // compare symbol values over every admissible tuple, synthesis included;
  // a missing entry on one side only is a mismatch
  auto same_or_both_missing = [&](auto&& get_u, auto&& get_v) {
    cx u, v;
    bool mu = false, mv = false;
    try { u = get_u(); } catch (const Error&) { mu = true; }
    try { v = get_v(); } catch (const Error&) { mv = true; }
    return mu == mv && (mu || close(u, v));
  };
  for (Label a = 0; a < n_; ++a)
    for (Label b = 0; b < n_; ++b)
      for (Label c = 0; c < n_; ++c)
        for (Label d = 0; d < n_; ++d)
          for (Label x = 0; x < n_; ++x)
            for (Label y = 0; y < n_; ++y)
              if (!same_or_both_missing(
                      [&] { return f_entry(a, b, c, d, x, y); },
                      [&] { return other.f_entry(a, b, c, d, x, y); }))
                return false;
  if (has_braiding())
    for (Label a = 0; a < n_; ++a)
      for (Label b = 0; b < n_; ++b)
        for (Label c = 0; c < n_; ++c)
          if (fuses(a, b, c) &&
              !same_or_both_missing([&] { return r_symbol(a, b, c); },
                                    [&] { return other.r_symbol(a, b, c); }))
            return false;
  if (has_twists())
    for (Label a = 0; a < n_; ++a)
      if (!close(twist(a), other.twist(a))) return false;
  return true;
}

namespace {

ModelData trivial_data() {
  ModelData d;
  d.name = "trivial";
  d.labels = {"I"};
  d.vacuum = 0;
  d.dual = {0};
  d.fusion = {{0, 0, 0}};
  d.r_symbols.emplace();
  d.twists = std::vector<cx>{cx(1)};
  return d;
}

ModelData fibonacci_data() {
  using std::numbers::pi;
  const Label I = 0, T = 1;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  ModelData d;
  d.name = "fibonacci";
  d.labels = {"I", "tau"};
  d.vacuum = I;
  d.dual = {I, T};
  d.fusion = {{I, I, I}, {I, T, T}, {T, I, T}, {T, T, I}, {T, T, T}};
  d.f_symbols = {
      {T, T, T, T, I, I, cx(1.0 / phi)},
      {T, T, T, T, I, T, cx(1.0 / std::sqrt(phi))},
      {T, T, T, T, T, I, cx(1.0 / std::sqrt(phi))},
      {T, T, T, T, T, T, cx(-1.0 / phi)},
      {T, T, T, I, T, T, cx(1)},
  };
  d.r_symbols = std::vector<REntry>{
      {T, T, I, std::polar(1.0, 4 * pi / 5)},
      {T, T, T, std::polar(1.0, -3 * pi / 5)},
  };
  d.twists = std::vector<cx>{cx(1), std::polar(1.0, -4 * pi / 5)};
  return d;
}

ModelData ising_data() {
  using std::numbers::pi;
  const Label I = 0, S = 1, P = 2;
  const double s2 = 1.0 / std::sqrt(2.0);
  ModelData d;
  d.name = "ising";
  d.labels = {"I", "sigma", "psi"};
  d.vacuum = I;
  d.dual = {I, S, P};
  d.fusion = {{I, I, I}, {I, S, S}, {I, P, P}, {S, I, S}, {P, I, P},
              {S, S, I}, {S, S, P}, {S, P, S}, {P, S, S}, {P, P, I}};
  d.f_symbols = {
      {S, S, S, S, I, I, cx(s2)},
      {S, S, S, S, I, P, cx(s2)},
      {S, S, S, S, P, I, cx(s2)},
      {S, S, S, S, P, P, cx(-s2)},
      {S, S, P, I, P, S, cx(1)},
      {S, S, P, P, I, S, cx(1)},
      {S, P, S, I, S, S, cx(1)},
      {S, P, S, P, S, S, cx(-1)},
      {P, S, S, I, S, P, cx(1)},
      {P, S, S, P, S, I, cx(1)},
      {P, S, P, S, S, S, cx(-1)},
      {S, P, P, S, S, I, cx(1)},
      {P, P, S, S, I, S, cx(1)},
      {P, P, P, P, I, I, cx(1)},
  };
  d.r_symbols = std::vector<REntry>{
      {S, S, I, std::polar(1.0, -pi / 8)},
      {S, S, P, std::polar(1.0, 3 * pi / 8)},
      {P, P, I, cx(-1)},
      {S, P, S, cx(0, -1)},
      {P, S, S, cx(0, -1)},
  };
  d.twists = std::vector<cx>{cx(1), std::polar(1.0, pi / 8), cx(-1)};
  return d;
}

}  // namespace

const AnyonModel& AnyonModel::builtin(const std::string& name) {
  static const std::map<std::string, AnyonModel> models = [] {
    std::map<std::string, AnyonModel> m;
    m.emplace("trivial", AnyonModel(trivial_data()));
    m.emplace("fibonacci", AnyonModel(fibonacci_data()));
    m.emplace("ising", AnyonModel(ising_data()));
    return m;
  }();
  auto it = models.find(name);
  if (it == models.end())
    throw InputError("unknown builtin model \"" + name +
                     "\" (available: trivial, fibonacci, ising)");
  return it->second;
}

const std::vector<std::string>& AnyonModel::builtin_names() {
  static const std::vector<std::string> names = {"trivial", "fibonacci", "ising"};
  return names;
}

}  // namespace anyons
