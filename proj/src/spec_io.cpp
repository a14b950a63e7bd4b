#include "tkk/spec_io.hpp"

#include <fstream>
#include <sstream>

namespace tkk {

namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ParseError("field '" + (path.empty() ? std::string("<root>") : path) + "': expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError("field '" + join(path, key) + "' is missing");
  return *it;
}

std::string get_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("field '" + path + "': expected a string");
  return j.get<std::string>();
}

long long get_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError("field '" + path + "': expected an integer");
  return j.get<long long>();
}

Index get_index(const Json& j, const std::string& path, Index bound) {
  long long v = get_int(j, path);
  if (v < 0 || static_cast<Index>(v) >= bound)
    throw ParseError("field '" + path + "': index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<Index>(v);
}

Scalar get_scalar(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (!j.is_string()) throw ParseError("field '" + path + "': scalars are written as strings \"p\" or \"p/q\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError("field '" + path + "': " + e.what());
  }
}

std::vector<std::string> get_labels(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError("field '" + path + "': expected a list of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < j.size(); ++i) labels.push_back(get_string(j[i], at_index(path, i)));
  return labels;
}

BasedSpace get_basis(const Json& j, const std::string& path) {
  try {
    return BasedSpace(get_labels(j, path));
  } catch (const DimensionError& e) {
    throw ParseError("field '" + path + "': " + e.what());
  }
}

// "terms": [{"<key>": index, "c": scalar}]
SparseVec get_terms(const Json& j, const std::string& key, const std::string& path, Index dim) {
  if (!j.is_array()) throw ParseError("field '" + path + "': expected a list of terms");
  std::vector<SparseVec::Entry> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at_index(path, i);
    out.emplace_back(get_index(require(j[i], key, p), join(p, key), dim), get_scalar(require(j[i], "c", p), join(p, "c")));
  }
  return SparseVec::from_entries(std::move(out));
}

Algebra table_from_json(const Json& j, const std::string& path) {
  std::string name = j.contains("name") ? get_string(j["name"], join(path, "name")) : "A";
  AlgebraKind kind = AlgebraKind::untagged;
  if (j.contains("kind")) {
    try {
      kind = parse_kind(get_string(j["kind"], join(path, "kind")));
    } catch (const ParseError& e) {
      throw ParseError("field '" + join(path, "kind") + "': " + e.what());
    }
  }
  BasedSpace space = get_basis(require(j, "basis", path), join(path, "basis"));
  const Index n = space.dim();
  StructureTable table(n);
  const Json& products = require(j, "products", path);
  const std::string pp = join(path, "products");
  if (!products.is_array()) throw ParseError("field '" + pp + "': expected a list");
  for (std::size_t r = 0; r < products.size(); ++r) {
    const std::string p = at_index(pp, r);
    Index i = get_index(require(products[r], "i", p), join(p, "i"), n);
    Index k = get_index(require(products[r], "j", p), join(p, "j"), n);
    SparseVec v = get_terms(require(products[r], "terms", p), "k", join(p, "terms"), n);
    for (const auto& [t, c] : v) table.add(i, k, t, c);
  }
  std::optional<SparseVec> unit;
  if (j.contains("unit") && !j["unit"].is_null()) {
    const Json& u = j["unit"];
    const std::string up = join(path, "unit");
    if (!u.is_array() || u.size() != n)
      throw ParseError("field '" + up + "': expected " + std::to_string(n) + " coefficients");
    std::vector<SparseVec::Entry> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, get_scalar(u[i], at_index(up, i)));
    unit = SparseVec::from_entries(std::move(e));
  }
  return make_algebra(std::move(name), std::move(space), std::move(table), kind, std::move(unit));
}

int get_n(const Json& j, const std::string& path) {
  long long n = get_int(require(j, "n", path), join(path, "n"));
  if (n < 1 || n > 16) throw ParseError("field '" + join(path, "n") + "': expected 1 <= n <= 16");
  return static_cast<int>(n);
}

Algebra builder_from_json(const Json& j, const std::string& path) {
  const std::string c = get_string(j["construct"], join(path, "construct"));
  auto sub = [&](const std::string& key) { return algebra_from_json(require(j, key, path), join(path, key)); };
  if (c == "scalar") return scalar_algebra();
  if (c == "fixture") return fixture(get_string(require(j, "name", path), join(path, "name")));
  if (c == "matrix") return matrix_algebra(sub("base"), get_n(j, path));
  if (c == "sl") return sl_n(sub("base"), get_n(j, path)).lie;
  if (c == "plus") return plus_algebra(sub("base"));
  if (c == "direct_sum") return direct_sum(sub("left"), sub("right"));
  if (c == "grassmann") {
    long long m = get_int(require(j, "generators", path), join(path, "generators"));
    if (m < 0 || m > 10) throw ParseError("field '" + join(path, "generators") + "': expected 0 <= m <= 10");
    return grassmann(static_cast<int>(m));
  }
  if (c == "truncated_free") {
    std::vector<std::string> gens = get_labels(require(j, "generators", path), join(path, "generators"));
    long long d = get_int(require(j, "degree", path), join(path, "degree"));
    if (d < 1) throw ParseError("field '" + join(path, "degree") + "': expected a degree >= 1");
    std::vector<NcPolynomial> rels;
    if (j.contains("relations")) {
      std::vector<std::string> texts = get_labels(j["relations"], join(path, "relations"));
      for (std::size_t i = 0; i < texts.size(); ++i) {
        try {
          rels.push_back(parse_nc_polynomial(texts[i], gens));
        } catch (const ParseError& e) {
          throw ParseError("field '" + at_index(join(path, "relations"), i) + "': " + e.what());
        }
      }
    }
    return truncated_free(gens, static_cast<int>(d), rels);
  }
  throw ParseError("field '" + join(path, "construct") + "': unknown construction '" + c + "'");
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"scalar", "dual", "double", "grassmann2", "mat2", "free2d2", "free2d3"};
  return names;
}

Algebra fixture(const std::string& name) {
  Algebra a;
  if (name == "scalar") {
    a = scalar_algebra();
  } else if (name == "dual") {
    a = truncated_free({"x"}, 1);
    a.name = "k[x]/(x^2)";
  } else if (name == "double") {
    a = direct_sum(scalar_algebra(), scalar_algebra());
    a.name = "k+k";
  } else if (name == "grassmann2") {
    a = grassmann(2);
  } else if (name == "mat2") {
    a = matrix_algebra(scalar_algebra(), 2);
  } else if (name == "free2d2") {
    a = truncated_free({"x", "y"}, 2);
  } else if (name == "free2d3") {
    a = truncated_free({"x", "y"}, 3);
  } else {
    std::string known;
    for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
    throw ParseError("unknown base '" + name + "' (known: " + known + ")");
  }
  return a;
}

Algebra algebra_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError("field '" + (path.empty() ? std::string("<root>") : path) + "': expected an object");
  if (j.contains("construct")) return builder_from_json(j, path);
  return table_from_json(j, path);
}

TripleSystem triple_from_json(const Json& j, const std::string& path) {
  std::string name = j.contains("name") ? get_string(j["name"], join(path, "name")) : "T";
  BasedSpace space = get_basis(require(j, "basis", path), join(path, "basis"));
  const Index n = space.dim();
  std::vector<SparseVec> gamma(n * n * n);
  const Json& g = require(j, "gamma", path);
  const std::string gp = join(path, "gamma");
  if (!g.is_array()) throw ParseError("field '" + gp + "': expected a list");
  for (std::size_t r = 0; r < g.size(); ++r) {
    const std::string p = at_index(gp, r);
    Index u = get_index(require(g[r], "u", p), join(p, "u"), n);
    Index v = get_index(require(g[r], "v", p), join(p, "v"), n);
    Index w = get_index(require(g[r], "w", p), join(p, "w"), n);
    gamma[(u * n + v) * n + w] += get_terms(require(g[r], "terms", p), "t", join(p, "terms"), n);
  }
  TripleSystem t = make_triple(std::move(name), std::move(space), std::move(gamma));
  IdentityReport r = check_jts(t);
  if (!r.holds) throw ValidationError("'" + t.name + "' is not a Jordan triple system: " + r.describe(t.space), r);
  return t;
}

SpecObject parse_spec_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(origin + ": line " + std::to_string(line_of(text, e.byte)) + ": malformed JSON");
  }
  try {
    if (j.is_object() && j.contains("gamma")) return triple_from_json(j);
    return algebra_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

SpecObject parse_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_spec_text(ss.str(), path);
}

Algebra load_algebra(const std::string& name_or_path) {
  for (const auto& n : fixture_names())
    if (n == name_or_path) return fixture(n);
  if (name_or_path.find('/') == std::string::npos && name_or_path.find('.') == std::string::npos)
    return fixture(name_or_path);
  SpecObject obj = parse_spec(name_or_path);
  if (auto* a = std::get_if<Algebra>(&obj)) return std::move(*a);
  throw ParseError("'" + name_or_path + "' describes a triple system, not an algebra");
}

Json vector_to_json(const SparseVec& v) {
  Json out = Json::array();
  for (const auto& [i, c] : v) out.push_back(Json{{"k", i}, {"c", c.str()}});
  return out;
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["name"] = a.name;
  j["kind"] = to_string(a.kind);
  j["basis"] = a.space.labels();
  if (a.unit) {
    Json u = Json::array();
    for (Index i = 0; i < a.dim(); ++i) u.push_back(a.unit->coeff(i).str());
    j["unit"] = u;
  } else {
    j["unit"] = nullptr;
  }
  Json products = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k) {
      const SparseVec& v = a.table.at(i, k);
      if (v.empty()) continue;
      products.push_back(Json{{"i", i}, {"j", k}, {"terms", vector_to_json(v)}});
    }
  j["products"] = products;
  return j;
}

Json triple_to_json(const TripleSystem& t) {
  Json j;
  j["name"] = t.name;
  j["basis"] = t.space.labels();
  Json gamma = Json::array();
  const Index n = t.dim();
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index w = 0; w < n; ++w) {
        const SparseVec& x = t.at(u, v, w);
        if (x.empty()) continue;
        Json terms = Json::array();
        for (const auto& [i, c] : x) terms.push_back(Json{{"t", i}, {"c", c.str()}});
        gamma.push_back(Json{{"u", u}, {"v", v}, {"w", w}, {"terms", terms}});
      }
  j["gamma"] = gamma;
  return j;
}

Json graded_to_json(const GradedLie& k, Index kernel_dim_over_standard) {
  Json j;
  auto d = k.dims();
  j["dims"] = {d[0], d[1], d[2]};
  j["basis"] = k.lie.space.labels();
  Json bracket = Json::array();
  for (Index a = 0; a < k.lie.dim(); ++a)
    for (Index b = a + 1; b < k.lie.dim(); ++b) {
      const SparseVec& v = k.lie.table.at(a, b);
      if (v.empty()) continue;
      bracket.push_back(Json{{"i", a}, {"j", b}, {"terms", vector_to_json(v)}});
    }
  j["bracket"] = bracket;
  j["kernel_dim_over_standard"] = kernel_dim_over_standard;
  return j;
}

}  // namespace tkk
