#include "wcomp/symbol_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace wcomp {

using nlohmann::json;

namespace {

const json& require_field(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) {
    throw SpecError(path.empty() ? "<root>" : path, "expected an object");
  }
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw SpecError(path.empty() ? key : path + "." + key, "missing required field");
  }
  return *it;
}

double parse_number(const json& j, const std::string& path) {
  if (!j.is_number()) {
    throw SpecError(path, "expected a number");
  }
  return j.get<double>();
}

int parse_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) {
    throw SpecError(path, "expected an integer");
  }
  return j.get<int>();
}

cplx parse_complex(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw SpecError(path, "expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<cplx> parse_complex_list(const json& j, const std::string& path) {
  if (!j.is_array()) {
    throw SpecError(path, "expected an array of [re, im] pairs");
  }
  std::vector<cplx> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(parse_complex(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

DiskFunction parse_disk_function(const json& j, const std::string& path) {
  const auto& kind_j = require_field(j, "kind", path);
  if (!kind_j.is_string()) {
    throw SpecError(path + ".kind", "expected \"poly\" or \"blaschke\"");
  }
  const auto kind = kind_j.get<std::string>();
  try {
    if (kind == "poly") {
      auto coeffs = parse_complex_list(require_field(j, "coeffs", path), path + ".coeffs");
      if (coeffs.empty()) {
        throw SpecError(path + ".coeffs", "needs at least one coefficient");
      }
      return TaylorPoly(std::move(coeffs));
    }
    if (kind == "blaschke") {
      auto zeros = parse_complex_list(require_field(j, "zeros", path), path + ".zeros");
      const double rotation = j.contains("rotation") ? parse_number(j["rotation"], path + ".rotation") : 0.0;
      return BlaschkeProduct(std::move(zeros), rotation);
    }
  } catch (const std::invalid_argument& e) {
    throw SpecError(path, e.what());
  }
  throw SpecError(path + ".kind", "unknown kind \"" + kind + "\" (expected \"poly\" or \"blaschke\")");
}

GridSpec parse_grid(const json& j) {
  GridSpec g;
  if (!j.is_object()) {
    throw SpecError("grid", "expected an object");
  }
  if (j.contains("radial")) g.radial = parse_int(j["radial"], "grid.radial");
  if (j.contains("angular")) g.angular = parse_int(j["angular"], "grid.angular");
  if (j.contains("boundary_k_max")) g.boundary_k_max = parse_int(j["boundary_k_max"], "grid.boundary_k_max");
  if (g.angular < 1) throw SpecError("grid.angular", "must be at least 1");
  if (g.boundary_k_max < 0 || g.boundary_k_max > 52) {
    throw SpecError("grid.boundary_k_max", "must lie in [0, 52]");
  }
  if (g.radial < 1 || g.radial < g.boundary_k_max) {
    throw SpecError("grid.radial", "must be at least 1 and at least boundary_k_max");
  }
  return g;
}

}  // namespace

DiskGrid GridSpec::to_grid() const { return DiskGrid::make(radial - boundary_k_max, angular, boundary_k_max, 0.5); }

GridSpec parse_grid_flag(std::string_view text) {
  GridSpec g;
  int* fields[] = {&g.radial, &g.angular, &g.boundary_k_max};
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const auto end = i < 2 ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) {
      throw SpecError("--grid", "expected R,A,K (radial, angular, boundary_k_max)");
    }
    const auto piece = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), *fields[i]);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw SpecError("--grid", "expected R,A,K with integer entries, got \"" + std::string(text) + "\"");
    }
    pos = end + 1;
  }
  json j = {{"radial", g.radial}, {"angular", g.angular}, {"boundary_k_max", g.boundary_k_max}};
  return parse_grid(j);
}

OperatorSymbols SymbolSpec::to_symbols() const {
  std::optional<AlphaParam> a;
  try {
    a.emplace(alpha);
  } catch (const std::invalid_argument& e) {
    throw SpecError("alpha", e.what());
  }
  const struct {
    const DiskFunction& f;
    const char* name;
  } symbols[] = {{omega, "omega"}, {phi, "phi"}};
  for (const auto& s : symbols) {
    const auto report = is_schwarz(s.f, tol);
    if (!report.is_schwarz) {
      std::ostringstream msg;
      msg << "not a Schwarz function (|f(0)| = " << report.value_at_zero << ", sup = " << report.sup
          << ", tol = " << tol << ")";
      throw SpecError(s.name, msg.str());
    }
  }
  return OperatorSymbols(*a, omega, phi, tol);
}

SymbolSpec parse_symbol_spec(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SpecError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) {
    throw SpecError("<root>", "expected an object");
  }
  SymbolSpec spec;
  spec.alpha = parse_complex(require_field(root, "alpha", ""), "alpha");
  spec.omega = parse_disk_function(require_field(root, "omega", ""), "omega");
  spec.phi = parse_disk_function(require_field(root, "phi", ""), "phi");
  if (root.contains("grid")) spec.grid = parse_grid(root["grid"]);
  if (root.contains("tol")) {
    spec.tol = parse_number(root["tol"], "tol");
    if (!(spec.tol >= 0.0)) throw SpecError("tol", "must be nonnegative");
  }
  for (const auto& [key, value] : root.items()) {
    if (key != "alpha" && key != "omega" && key != "phi" && key != "grid" && key != "tol") {
      throw SpecError(key, "unknown field");
    }
  }
  return spec;
}

SymbolSpec load_symbol_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw SpecError("", "cannot read spec file " + path.string());
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_symbol_spec(buffer.str());
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const DiskFunction& f) {
  json out;
  if (const auto* p = std::get_if<TaylorPoly>(&f)) {
    out["kind"] = "poly";
    out["coeffs"] = json::array();
    for (const auto& c : p->coeffs()) out["coeffs"].push_back(to_json(c));
  } else {
    const auto& b = std::get<BlaschkeProduct>(f);
    out["kind"] = "blaschke";
    out["zeros"] = json::array();
    for (const auto& a : b.zeros()) out["zeros"].push_back(to_json(a));
    out["rotation"] = b.rotation();
  }
  return out;
}

json to_json(const SymbolSpec& spec) {
  return {{"alpha", to_json(spec.alpha)},
          {"omega", to_json(spec.omega)},
          {"phi", to_json(spec.phi)},
          {"grid", {{"radial", spec.grid.radial}, {"angular", spec.grid.angular}, {"boundary_k_max", spec.grid.boundary_k_max}}},
          {"tol", spec.tol}};
}

std::string serialize_symbol_spec(const SymbolSpec& spec) { return to_json(spec).dump(2) + "\n"; }

SymbolSpec spec_from_symbols(const OperatorSymbols& sym, GridSpec grid, double tol) {
  SymbolSpec spec;
  spec.alpha = sym.alpha().value();
  spec.omega = sym.omega();
  spec.phi = sym.phi();
  spec.grid = grid;
  spec.tol = tol;
  return spec;
}

}  // namespace wcomp
