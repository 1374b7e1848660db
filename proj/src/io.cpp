#include "weil/io.hpp"

#include <fstream>
#include <sstream>

namespace weil {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_unsigned()) throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& s : v) {
    if (!s.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::vector<Rational> rational_list(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of rationals");
  std::vector<Rational> out;
  for (const auto& q : v) out.push_back(rational_from_json(q));
  return out;
}

// "1,2" -> 0-based {0,1}; keys must be strictly increasing and in range.
IndexSet parse_index_key(const std::string& key, std::size_t nvars) {
  IndexSet out;
  if (key.empty()) return out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad index key \"" + key + "\"");
    }
    if (pos != part.size() || v == 0 || v > nvars)
      throw ParseError("index key \"" + key + "\" is out of range 1.." + std::to_string(nvars));
    if (!out.empty() && v - 1 <= out.back())
      throw ParseError("index key \"" + key + "\" must be strictly increasing");
    out.push_back(v - 1);
  }
  return out;
}

template <class P, class ParseFn>
MultiVector<P> cochain_from_json(const Json& j, std::size_t nvars, MultiVector<P> out, ParseFn parse) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) throw ParseError("\"coeffs\" must be an object");
  for (const auto& [key, value] : coeffs.items()) {
    const IndexSet idx = parse_index_key(key, nvars);
    if (idx.size() != out.degree())
      throw ParseError("index key \"" + key + "\" does not have " + std::to_string(out.degree()) + " entries");
    if (!value.is_string()) throw ParseError("cochain coefficient at \"" + key + "\" must be a string");
    out.set(idx, out.get(idx) + parse(value.template get<std::string>()));
  }
  return out;
}

template <class P>
Json cochain_json(const MultiVector<P>& omega) {
  Json j;
  j["complex"] = to_string(omega.kind());
  j["p"] = omega.degree();
  Json coeffs = Json::object();
  for (const auto& [idx, c] : omega.coeffs()) coeffs[index_key(idx)] = to_string(c);
  j["coeffs"] = std::move(coeffs);
  return j;
}

Json optional_size(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or \"p/q\" string, got " + j.dump());
}

Json rational_to_json(const Rational& q) { return to_string(q); }

AlgebraPtr algebra_from_json(const Json& j) {
  try {
    const std::string kind = string_field(j, "kind");
    if (kind == "jet") {
      return WeilAlgebra::jet(size_field(j, "generators"), static_cast<unsigned>(size_field(j, "order")));
    }
    if (kind == "monomial_quotient") {
      const auto vars = string_list(field(j, "vars"), "\"vars\"");
      const auto rels = string_list(field(j, "relations"), "\"relations\"");
      std::optional<unsigned> cap;
      if (j.contains("degree_cap")) cap = static_cast<unsigned>(size_field(j, "degree_cap"));
      return WeilAlgebra::monomial_quotient(vars, rels, cap);
    }
    if (kind == "table") {
      const auto labels = string_list(field(j, "basis"), "\"basis\"");
      const Json& t = field(j, "table");
      if (!t.is_array()) throw ParseError("\"table\" must be a nested array");
      StructureTable table;
      for (const auto& row : t) {
        if (!row.is_array()) throw ParseError("\"table\" rows must be arrays");
        auto& r = table.emplace_back();
        for (const auto& cell : row) r.push_back(rational_list(cell, "table entry"));
      }
      return WeilAlgebra::from_table(labels, table, rational_list(field(j, "aug"), "\"aug\""));
    }
    throw ParseError("unknown algebra kind \"" + kind + "\"");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("algebra spec: ") + e.what());
  }
}

Json algebra_to_json(const WeilAlgebra& a) {
  Json j;
  j["kind"] = "table";
  j["basis"] = a.labels();
  Json table = Json::array();
  for (const auto& row : a.table()) {
    Json r = Json::array();
    for (const auto& cell : row) {
      Json c = Json::array();
      for (const auto& q : cell) c.push_back(rational_to_json(q));
      r.push_back(std::move(c));
    }
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  Json aug = Json::array();
  for (const auto& q : a.augmentation()) aug.push_back(rational_to_json(q));
  j["aug"] = std::move(aug);
  return j;
}

Json algebra_info(const WeilAlgebra& a) {
  Json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  j["height"] = a.height();
  Json aug = Json::array();
  for (const auto& q : a.augmentation()) aug.push_back(rational_to_json(q));
  j["augmentation"] = std::move(aug);
  Json unit = Json::array();
  for (const auto& q : a.unit()) unit.push_back(rational_to_json(q));
  j["unit"] = std::move(unit);
  Json ideal = Json::array();
  for (unsigned k = 0; k <= a.height() + 1; ++k) ideal.push_back(a.ideal_power_dim(k));
  j["ideal_power_dims"] = std::move(ideal);
  j["valid"] = true;
  return j;
}

PoissonStructure structure_from_json(const Json& j, PoissonStructure::Jacobi mode) {
  try {
    const std::string kind = string_field(j, "kind");
    if (kind == "symplectic") return PoissonStructure::symplectic(size_field(j, "n"));
    if (kind == "so3") return PoissonStructure::so3();
    if (kind == "zero") return PoissonStructure::zero(size_field(j, "n"));
    if (kind == "matrix") {
      const std::size_t n = size_field(j, "n");
      const Json& entries = field(j, "entries");
      if (!entries.is_object()) throw ParseError("\"entries\" must be an object");
      std::map<std::pair<std::size_t, std::size_t>, Poly> upper;
      for (const auto& [key, value] : entries.items()) {
        std::size_t comma = key.find(',');
        if (comma == std::string::npos) throw ParseError("entry key \"" + key + "\" must look like \"i,j\"");
        std::size_t i = 0, k = 0;
        try {
          std::size_t pos = 0;
          i = std::stoul(key.substr(0, comma), &pos);
          if (pos != comma) throw ParseError("");
          k = std::stoul(key.substr(comma + 1), &pos);
          if (pos != key.size() - comma - 1) throw ParseError("");
        } catch (const std::exception&) {
          throw ParseError("entry key \"" + key + "\" must look like \"i,j\"");
        }
        if (i == 0 || k == 0 || i > n || k > n || i == k)
          throw ParseError("entry key \"" + key + "\" is not an off-diagonal position in 1.." + std::to_string(n));
        if (!value.is_string()) throw ParseError("entry \"" + key + "\" must be a polynomial string");
        Poly entry = parse_poly(value.get<std::string>(), n);
        if (i > k) {
          std::swap(i, k);
          entry = -entry;
        }
        auto [it, inserted] = upper.emplace(std::make_pair(i, k), entry);
        if (!inserted && !(it->second == entry))
          throw ParseError("entries \"" + key + "\" and its transpose disagree");
      }
      std::string name = j.contains("name") ? string_field(j, "name") : "matrix";
      return PoissonStructure::from_entries(n, upper, mode, name);
    }
    throw ParseError("unknown structure kind \"" + kind + "\"");
  } catch (const Json::exception& e) {
    throw ParseError(std::string("structure spec: ") + e.what());
  }
}

Json structure_to_json(const PoissonStructure& pi) {
  Json j;
  j["kind"] = "matrix";
  j["n"] = pi.nvars();
  j["name"] = pi.name();
  Json entries = Json::object();
  for (std::size_t i = 0; i < pi.nvars(); ++i)
    for (std::size_t k = i + 1; k < pi.nvars(); ++k)
      if (!pi(i, k).is_zero()) entries[std::to_string(i + 1) + "," + std::to_string(k + 1)] = to_string(pi(i, k));
  j["entries"] = std::move(entries);
  return j;
}

ComplexKind cochain_kind(const Json& j) {
  try {
    return parse_complex_kind(string_field(j, "complex"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

BaseCochain base_cochain_from_json(const Json& j, std::size_t nvars) {
  if (cochain_kind(j) != ComplexKind::base) throw ParseError("expected a base-complex cochain");
  return cochain_from_json(j, nvars, make_base_cochain(nvars, size_field(j, "p")),
                           [&](const std::string& s) { return parse_poly(s, nvars); });
}

ACochain a_cochain_from_json(const Json& j, std::size_t nvars, const AlgebraPtr& a) {
  const ComplexKind kind = cochain_kind(j);
  if (kind == ComplexKind::base) {
    const BaseCochain base = base_cochain_from_json(j, nvars);
    ACochain out = make_a_cochain(ComplexKind::mixed, nvars, base.degree(), a);
    for (const auto& [idx, c] : base.coeffs()) out.set(idx, prolong_function(c, a));
    return out;
  }
  return cochain_from_json(j, nvars, make_a_cochain(kind, nvars, size_field(j, "p"), a),
                           [&](const std::string& s) { return parse_apoly(s, nvars, a); });
}

Json cochain_to_json(const BaseCochain& omega) { return cochain_json(omega); }
Json cochain_to_json(const ACochain& omega) { return cochain_json(omega); }

Json report_to_json(const BettiReport& r, std::optional<std::uint64_t> seed) {
  Json j;
  j["complex"] = to_string(r.kind);
  j["algebra"] = r.algebra;
  j["algebra_dim"] = r.algebra_dim;
  j["structure"] = r.structure;
  j["homogeneity"] = to_string(r.homogeneity);
  j["D"] = r.D;
  j["cochains"] = "multiderivation";
  j["certified"] = r.quotient_certified;
  if (!r.note.empty()) j["note"] = r.note;
  Json table = Json::array();
  for (const auto& row : r.rows) {
    Json t;
    t["p"] = row.p;
    t["dim"] = row.dim;
    t["rank"] = row.rank;
    t["ker"] = row.ker;
    t["boundaries"] = optional_size(row.boundaries);
    t["H"] = optional_size(row.homology);
    if (r.kind != ComplexKind::base) t["A_rank"] = optional_size(row.a_rank);
    if (!row.slices.empty()) {
      Json slices = Json::array();
      for (const auto& s : row.slices)
        slices.push_back({{"degree", s.degree}, {"dim", s.dim}, {"rank", s.rank}, {"ker", s.ker},
                          {"boundaries", s.boundaries}, {"H", s.homology}});
      t["slices"] = std::move(slices);
    }
    table.push_back(std::move(t));
  }
  j["table"] = std::move(table);
  Json reps = Json::object();
  for (const auto& [p, texts] : r.representatives) reps[std::to_string(p)] = texts;
  j["representatives"] = std::move(reps);
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  return j;
}

std::string report_to_text(const BettiReport& r) {
  std::ostringstream out;
  out << "complex " << to_string(r.kind) << ", algebra " << r.algebra << " (dim " << r.algebra_dim
      << "), structure " << r.structure << " (" << to_string(r.homogeneity) << "), degree <= " << r.D << "\n";
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  out << "p\tdim\trank\tker\tB\tH\n";
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  for (const auto& row : r.rows)
    out << row.p << "\t" << row.dim << "\t" << row.rank << "\t" << row.ker << "\t" << opt(row.boundaries) << "\t"
        << opt(row.homology) << "\n";
  for (const auto& [p, texts] : r.representatives)
    for (const auto& t : texts) out << "H^" << p << " representative: " << t << "\n";
  return out.str();
}

GoldenResult compare_golden(const std::string& text, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open golden file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string expected = buf.str();
  GoldenResult res;
  res.equal = expected == text;
  if (res.equal) return res;
  std::istringstream a(expected), b(text);
  std::string la, lb;
  std::size_t line = 0;
  while (true) {
    ++line;
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha) la.clear();
    if (!hb) lb.clear();
    if (ha != hb || la != lb) break;
    if (!ha) break;
  }
  res.line = line;
  res.expected = la;
  res.actual = lb;
  return res;
}

}  // namespace weil
