#include "repdescent/engine.hpp"

#include "repdescent/error.hpp"

#include <fstream>
#include <sstream>

namespace repdescent::engine {

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::schema, (pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

const json& field(const json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(pointer + "/" + key, "missing required field");
  return *it;
}

std::size_t as_index(const json& j, const std::string& pointer) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema_error(pointer, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_index_list(const json& j, const std::string& pointer) {
  if (!j.is_array()) schema_error(pointer, "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_index(j[k], pointer + "/" + std::to_string(k)));
  return out;
}

std::vector<std::vector<std::size_t>> as_square_table(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.empty()) schema_error(pointer, "expected a non-empty array of rows");
  std::vector<std::vector<std::size_t>> t;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_ptr = pointer + "/" + std::to_string(r);
    auto row = as_index_list(j[r], row_ptr);
    if (row.size() != j.size()) {
      schema_error(row_ptr, "row " + std::to_string(r) + " has length " + std::to_string(row.size()) +
                                ", expected " + std::to_string(j.size()));
    }
    t.push_back(std::move(row));
  }
  return t;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed, const std::string& pointer) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema_error(pointer + "/" + key, "unknown field");
  }
}

// Re-raises a domain error with the field that caused it.
template <class F>
auto located(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::schema) throw;
    throw Error(e.code(), (pointer.empty() ? std::string("/") : pointer) + ": " + e.what());
  }
}

std::vector<std::size_t> parse_key(const std::string& key, std::size_t arity, std::size_t n, const std::string& pointer) {
  std::vector<std::size_t> out;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      schema_error(pointer, "key must be comma-separated indices");
    }
    out.push_back(std::stoul(part));
  }
  if (out.size() != arity) schema_error(pointer, "key needs " + std::to_string(arity) + " indices");
  for (std::size_t a = 0; a < out.size(); ++a) {
    if (out[a] >= n) schema_error(pointer, "index " + std::to_string(out[a]) + " is outside the index set");
    for (std::size_t b = 0; b < a; ++b) {
      if (out[a] == out[b]) schema_error(pointer, "indices must be pairwise distinct");
    }
  }
  return out;
}

std::string join_key(std::initializer_list<std::size_t> parts) {
  std::string s;
  for (auto p : parts) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

json rational_to_json(const Rational& q) {
  if (q.fits_long() && q.is_integer()) return json::array({q.to_long(), 1});
  const Rational num(mpq_class(q.raw().get_num()));
  const Rational den(mpq_class(q.raw().get_den()));
  json n = num.fits_long() ? json(num.to_long()) : json(q.numerator());
  json d = den.fits_long() ? json(den.to_long()) : json(q.denominator());
  return json::array({n, d});
}

Rational rational_from_json(const json& j, const std::string& pointer) {
  if (!j.is_array() || j.size() != 2) schema_error(pointer, "expected [numerator, denominator]");
  auto part = [&](const json& x, const std::string& p) {
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    if (x.is_string()) return x.get<std::string>();
    schema_error(p, "expected an integer or a decimal string");
  };
  const std::string num = part(j[0], pointer + "/0"), den = part(j[1], pointer + "/1");
  try {
    return Rational::parse(num + "/" + den);
  } catch (const Error&) {
    schema_error(pointer, "not a valid rational");
  }
}

}  // namespace

json to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rational_to_json(q));
  return json{{"order", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const json& j, const std::string& pointer) {
  const std::size_t e = as_index(field(j, "order", pointer), pointer + "/order");
  if (e == 0) schema_error(pointer + "/order", "order must be positive");
  const json& cs = field(j, "coeffs", pointer);
  if (!cs.is_array()) schema_error(pointer + "/coeffs", "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < cs.size(); ++k) coeffs.push_back(rational_from_json(cs[k], pointer + "/coeffs/" + std::to_string(k)));
  return Cyclotomic(static_cast<unsigned>(e), std::move(coeffs));
}

FiniteGroup group_from_json(const json& j, const std::string& pointer) {
  if (!j.is_object()) schema_error(pointer, "expected a group object");
  reject_unknown(j, {"order", "table", "degree", "generators", "name"}, pointer);
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) schema_error(pointer + "/name", "expected a string");
    name = j["name"].get<std::string>();
  }
  if (j.contains("table")) {
    auto table = as_square_table(j["table"], pointer + "/table");
    if (j.contains("order") && as_index(j["order"], pointer + "/order") != table.size()) {
      schema_error(pointer + "/order", "order does not match the table size");
    }
    return located(pointer + "/table", [&] { return FiniteGroup::from_table(std::move(table), name); });
  }
  if (j.contains("generators")) {
    const std::size_t degree = as_index(field(j, "degree", pointer), pointer + "/degree");
    const json& gens = j["generators"];
    if (!gens.is_array()) schema_error(pointer + "/generators", "expected an array of permutations");
    std::vector<std::vector<std::size_t>> perms;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      perms.push_back(as_index_list(gens[k], pointer + "/generators/" + std::to_string(k)));
    }
    return located(pointer + "/generators", [&] { return FiniteGroup::from_permutations(degree, perms, name); });
  }
  schema_error(pointer, "group needs either \"table\" or \"degree\" and \"generators\"");
}

GroupExtension extension_from_json(const json& j, const std::string& pointer) {
  reject_unknown(j, {"H", "kernel", "name"}, pointer);
  auto h = std::make_shared<const FiniteGroup>(group_from_json(field(j, "H", pointer), pointer + "/H"));
  auto kernel = as_index_list(field(j, "kernel", pointer), pointer + "/kernel");
  return located(pointer + "/kernel", [&] { return make_extension(h, kernel); });
}

CocycleDatum datum_from_json(const json& j, const std::string& pointer) {
  reject_unknown(j, {"group", "indices", "alpha", "beta", "name"}, pointer);
  auto g = std::make_shared<const FiniteGroup>(group_from_json(field(j, "group", pointer), pointer + "/group"));
  const std::size_t n = as_index(field(j, "indices", pointer), pointer + "/indices");
  if (n == 0 || n > 8) schema_error(pointer + "/indices", "index set size must be between 1 and 8");
  const json& alpha = field(j, "alpha", pointer);
  const json& beta = field(j, "beta", pointer);
  if (!alpha.is_object()) schema_error(pointer + "/alpha", "expected an object keyed by \"i,j\"");
  if (!beta.is_object()) schema_error(pointer + "/beta", "expected an object keyed by \"i,j,k\"");
  CocycleDatum d(g, n);
  for (const auto& [key, value] : alpha.items()) {
    const std::string p = pointer + "/alpha/" + key;
    const auto ij = parse_key(key, 2, n, p);
    auto image = as_index_list(value, p);
    located(p, [&] {
      d.set_alpha(ij[0], ij[1], Automorphism{std::move(image)});
      return 0;
    });
  }
  for (const auto& [key, value] : beta.items()) {
    const std::string p = pointer + "/beta/" + key;
    const auto ijk = parse_key(key, 3, n, p);
    const std::size_t b = as_index(value, p);
    located(p, [&] {
      d.set_beta(ijk[0], ijk[1], ijk[2], b);
      return 0;
    });
  }
  for (const auto& [i, jj] : ordered_pairs(n)) {
    const std::string key = join_key({i, jj});
    if (!alpha.contains(key)) schema_error(pointer + "/alpha/" + key, "missing alpha entry");
  }
  for (const auto& [i, jj, k] : ordered_triples(n)) {
    const std::string key = join_key({i, jj, k});
    if (!beta.contains(key)) schema_error(pointer + "/beta/" + key, "missing beta entry");
  }
  return d;
}

json group_to_json(const FiniteGroup& g) {
  json j{{"order", g.order()}, {"table", g.table()}};
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

json datum_to_json(const CocycleDatum& d) {
  json alpha = json::object(), beta = json::object();
  for (const auto& [i, j] : ordered_pairs(d.size())) alpha[join_key({i, j})] = d.alpha(i, j).image;
  for (const auto& [i, j, k] : ordered_triples(d.size())) beta[join_key({i, j, k})] = d.beta(i, j, k);
  return json{{"group", group_to_json(*d.group())}, {"indices", d.size()}, {"alpha", alpha}, {"beta", beta}};
}

FiniteCommRing ring_from_json(const json& j, const std::string& pointer) {
  reject_unknown(j, {"order", "add", "mul", "name"}, pointer);
  auto add = as_square_table(field(j, "add", pointer), pointer + "/add");
  auto mul = as_square_table(field(j, "mul", pointer), pointer + "/mul");
  if (j.contains("order") && as_index(j["order"], pointer + "/order") != add.size()) {
    schema_error(pointer + "/order", "order does not match the table size");
  }
  if (mul.size() != add.size()) schema_error(pointer + "/mul", "table size differs from \"add\"");
  std::string name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return located(pointer, [&] { return FiniteCommRing::from_tables(std::move(add), std::move(mul), name); });
}

json validate_input(const std::string& path, const std::string& verb) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::schema, path + ": malformed JSON: " + e.what());
  }
  try {
    if (verb == "chartable" || verb == "auts") {
      (void)group_from_json(j);
    } else if (verb == "extension") {
      (void)extension_from_json(j);
    } else if (verb == "cocycle-check" || verb == "dual" || verb == "twist" || verb == "gerbe-check") {
      if (j.is_object() && j.contains("H")) {
        (void)extension_from_json(j);
      } else {
        (void)datum_from_json(j);
      }
    } else if (verb == "affine-demo") {
      if (!j.is_object()) schema_error("", "expected {\"source\": ring, \"target\": ring}");
      reject_unknown(j, {"source", "target", "name"}, "");
      (void)ring_from_json(field(j, "source", ""), "/source");
      (void)ring_from_json(field(j, "target", ""), "/target");
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown verb \"" + verb + "\"");
    }
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
  return j;
}

}  // namespace repdescent::engine
