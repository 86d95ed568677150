#include "repdescent/engine.hpp"

#include "repdescent/error.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace repdescent::engine {

namespace {

json violation_to_json(const Violation& v) { return json{{"rule", v.rule}, {"at", v.at}, {"detail", v.detail}}; }

json check_to_json(const CheckReport& r) {
  json vs = json::array();
  for (const auto& v : r.violations) vs.push_back(violation_to_json(v));
  return json{{"status", status_name(r.status)}, {"checked", r.checked}, {"violations", vs}};
}

std::string key_of(const std::vector<std::size_t>& parts) {
  std::string s;
  for (auto p : parts) s += (s.empty() ? "" : ",") + std::to_string(p);
  return s;
}

std::size_t bound_from(const std::optional<std::size_t>& flag, const char* env, std::size_t fallback) {
  if (flag) return *flag;
  if (const char* v = std::getenv(env); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (*end != '\0' || n == 0) throw Error(ErrorCode::invalid_argument, std::string(env) + " must be a positive integer");
    return static_cast<std::size_t>(n);
  }
  return fallback;
}

json base_provenance() {
  return json{{"tool", kToolName},
              {"version", kToolVersion},
              {"conventions",
               {{"inner_automorphism", "iota(b)(x) = b^-1 x b"},
                {"class_order", "identity first, then class size, then least element"},
                {"irreducible_order", "trivial first, then ascending degree, then descending character values"},
                {"element_product", "table[a][b] = a*b"}}}};
}

void add_table_provenance(json& prov, const CharacterTable& t) {
  prov["dixon_prime"] = t.prime();
  prov["dixon_embedding"] = t.embedding();
  prov["cyclotomic_order"] = t.order();
}

// Sorted union of the violations of several checks.
std::vector<Violation> merged(std::initializer_list<const std::vector<Violation>*> parts) {
  std::vector<Violation> out;
  for (const auto* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  return out;
}

json violations_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(violation_to_json(v));
  return out;
}

CheckStatus combine(std::initializer_list<const CheckReport*> parts) {
  bool any_pass = false;
  for (const auto* p : parts) {
    if (p->status == CheckStatus::fail) return CheckStatus::fail;
    any_pass = any_pass || p->status == CheckStatus::pass;
  }
  return any_pass ? CheckStatus::pass : CheckStatus::vacuous;
}

json classes_json(const FiniteGroup& g) {
  json out = json::array();
  const auto& cl = g.classes();
  for (std::size_t c = 0; c < cl.count(); ++c) {
    out.push_back({{"representative", cl.representatives[c]},
                   {"size", cl.sizes[c]},
                   {"element_order", g.element_order(cl.representatives[c])},
                   {"members", cl.members[c]}});
  }
  return out;
}

json group_summary(const FiniteGroup& g) {
  return json{{"name", g.name()}, {"order", g.order()}, {"exponent", g.exponent()}, {"classes", g.classes().count()}};
}

/// Plain datum from either input shape, plus the refined datum when the
/// input was an extension.
struct DatumInput {
  std::string source;
  CocycleDatum datum;
  std::optional<RefinedCocycleDatum> refined;
};

DatumInput load_datum(const std::string& path, const Options& opt) {
  const json j = validate_input(path, "cocycle-check");
  if (j.contains("H")) {
    const auto ext = extension_from_json(j);
    auto refined = extension_cocycle(ext);
    auto datum = datum_from_extension(refined, opt.indices);
    return {"extension", std::move(datum), std::move(refined)};
  }
  return {"datum", datum_from_json(j), std::nullopt};
}

void require_inputs(const Command& cmd, std::size_t n) {
  if (cmd.inputs.size() != n) {
    throw Error(ErrorCode::invalid_argument,
                cmd.verb + " takes " + std::to_string(n) + " input file" + (n == 1 ? "" : "s") + ", got " +
                    std::to_string(cmd.inputs.size()));
  }
}

Report run_chartable(const Command& cmd) {
  const json j = validate_input(cmd.inputs[0], cmd.verb);
  auto g = std::make_shared<const FiniteGroup>(group_from_json(j));
  const auto table = character_table(g);
  const unsigned e = table->order();
  const auto& cl = g->classes();

  std::vector<Violation> violations;
  std::size_t sum = 0;
  for (auto d : table->degrees()) sum += d * d;
  if (sum != g->order()) violations.push_back({"degree-sum", {}, "squared degrees sum to " + std::to_string(sum)});
  for (std::size_t a = 0; a < table->size(); ++a) {
    for (std::size_t b = 0; b < table->size(); ++b) {
      const auto ip = class_inner_product(*g, table->values()[a], table->values()[b]);
      if (!(ip == Cyclotomic(e, Rational(a == b ? 1 : 0)))) {
        violations.push_back({"row-orthogonality", {a, b}, "inner product " + ip.str()});
      }
    }
  }
  for (std::size_t c = 0; c < cl.count(); ++c) {
    for (std::size_t c2 = 0; c2 < cl.count(); ++c2) {
      Cyclotomic s(e);
      for (std::size_t i = 0; i < table->size(); ++i) s += table->value(i, c) * table->value(i, c2).conj();
      const Rational expect = c == c2 ? Rational(static_cast<long>(g->order() / cl.sizes[c])) : Rational(0);
      if (!(s == Cyclotomic(e, expect))) violations.push_back({"column-orthogonality", {c, c2}, "sum " + s.str()});
    }
  }
  for (std::size_t i = 0; i < table->size(); ++i) {
    const auto ch = table->model(i)->character();
    for (std::size_t c = 0; c < cl.count(); ++c) {
      if (!(ch[cl.representatives[c]] == table->value(i, c))) {
        violations.push_back({"model-trace", {i, c}, "model trace differs from the character value"});
      }
    }
  }
  std::sort(violations.begin(), violations.end());

  json values = json::array();
  for (const auto& row : table->values()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    values.push_back(r);
  }
  Report rep{cmd.verb, violations.empty() ? CheckStatus::pass : CheckStatus::fail,
             json{{"group", group_summary(*g)},
                  {"degrees", table->degrees()},
                  {"classes", classes_json(*g)},
                  {"values", values},
                  {"power_map", table->power_map()},
                  {"violations", violations_json(violations)}},
             base_provenance()};
  add_table_provenance(rep.provenance, *table);
  return rep;
}

Report run_auts(const Command& cmd) {
  const json j = validate_input(cmd.inputs[0], cmd.verb);
  const FiniteGroup g = group_from_json(j);
  const std::size_t bound = bound_from(cmd.options.aut_bound, "REPDESCENT_AUT_BOUND", kDefaultAutBound);
  const auto auts = automorphism_group(g, bound);
  std::set<Automorphism> inners;
  for (Element b = 0; b < g.order(); ++b) inners.insert(inner(g, b));
  json images = json::array(), inner_idx = json::array();
  for (std::size_t a = 0; a < auts.size(); ++a) {
    images.push_back(auts[a].image);
    if (inners.count(auts[a])) inner_idx.push_back(a);
  }
  std::vector<Violation> violations;
  if (inners.size() != inner_idx.size()) {
    violations.push_back({"inner-closure", {}, "an inner automorphism is missing from the enumeration"});
  }
  Report rep{cmd.verb, violations.empty() ? CheckStatus::pass : CheckStatus::fail,
             json{{"group", group_summary(g)},
                  {"count", auts.size()},
                  {"inner_count", inners.size()},
                  {"automorphisms", images},
                  {"inner", inner_idx},
                  {"violations", violations_json(violations)}},
             base_provenance()};
  rep.provenance["aut_bound"] = bound;
  return rep;
}

Report run_extension(const Command& cmd) {
  const json j = validate_input(cmd.inputs[0], cmd.verb);
  const auto ext = extension_from_json(j);
  const auto refined = extension_cocycle(ext);
  const auto refined_violations = verify_refined(refined);
  const auto datum = datum_from_extension(refined, cmd.options.indices);
  const auto table = character_table(ext.G);
  const auto cocycle = verify_cocycle(datum);
  const auto tetra = tetrahedron_check(datum, *table);

  json alpha = json::array();
  for (const auto& a : refined.alpha) alpha.push_back(a.image);
  const auto all = merged({&refined_violations, &cocycle.violations, &tetra.violations});
  const CheckStatus st = all.empty() ? CheckStatus::pass : CheckStatus::fail;
  Report rep{cmd.verb, st,
             json{{"H", group_summary(*ext.H)},
                  {"G", group_to_json(*ext.G)},
                  {"Q", group_to_json(*ext.Q)},
                  {"embed", ext.embed},
                  {"projection", ext.proj},
                  {"section", ext.section},
                  {"alpha", alpha},
                  {"beta", refined.beta},
                  {"plain_datum", datum_to_json(datum)},
                  {"cocycle", check_to_json(cocycle)},
                  {"tetrahedron", check_to_json(tetra)},
                  {"violations", violations_json(all)}},
             base_provenance()};
  rep.provenance["section"] = "least element of each coset; identity over the identity coset";
  rep.provenance["index_lift"] = "index i lies over q_i = i mod |Q|";
  add_table_provenance(rep.provenance, *table);
  return rep;
}

Report run_cocycle_check(const Command& cmd) {
  const auto in = load_datum(cmd.inputs[0], cmd.options);
  const auto table = character_table(in.datum.group());
  const auto cocycle = verify_cocycle(in.datum);
  const auto tetra = tetrahedron_check(in.datum, *table);
  const auto all = merged({&cocycle.violations, &tetra.violations});
  Report rep{cmd.verb, combine({&cocycle, &tetra}),
             json{{"source", in.source},
                  {"indices", in.datum.size()},
                  {"group", group_summary(*in.datum.group())},
                  {"cocycle", check_to_json(cocycle)},
                  {"tetrahedron", check_to_json(tetra)},
                  {"violations", violations_json(all)}},
             base_provenance()};
  add_table_provenance(rep.provenance, *table);
  return rep;
}

Report run_dual(const Command& cmd) {
  const auto in = load_datum(cmd.inputs[0], cmd.options);
  const auto table = character_table(in.datum.group());
  const auto cocycle = verify_cocycle(in.datum);
  json payload{{"source", in.source}, {"indices", in.datum.size()}, {"cocycle", check_to_json(cocycle)}};
  Report rep{cmd.verb, CheckStatus::pass, {}, base_provenance()};
  add_table_provenance(rep.provenance, *table);
  if (cocycle.status == CheckStatus::fail) {
    payload["violations"] = violations_json(cocycle.violations);
    rep.status = CheckStatus::fail;
    rep.payload = payload;
    return rep;
  }
  const DualSpaceDatum dual = in.refined ? dual_space(*in.refined, *table) : dual_space(in.datum, *table);
  const std::size_t acting_order = dual.acting.size();
  std::vector<Violation> violations;
  std::size_t covered = 0;
  for (std::size_t o = 0; o < dual.orbits.size(); ++o) {
    covered += dual.orbits[o].size();
    const std::size_t stab = dual.stabilizers[o].size();
    if (stab == 0 || acting_order % stab != 0 || stab * dual.orbits[o].size() != acting_order) {
      violations.push_back({"orbit-stabilizer", {o}, "stabilizer order " + std::to_string(stab)});
    }
  }
  if (covered != table->size()) {
    violations.push_back({"orbit-partition", {}, "orbits cover " + std::to_string(covered) + " irreducibles"});
  }
  json orbits = json::array();
  for (std::size_t o = 0; o < dual.orbits.size(); ++o) {
    json degs = json::array();
    for (auto s : dual.orbits[o]) degs.push_back(table->degree(s));
    orbits.push_back({{"members", dual.orbits[o]}, {"degrees", degs}, {"stabilizer", dual.stabilizers[o]}});
  }
  payload["acting"] = dual.acting;
  payload["acting_group"] = in.refined ? "Q" : "generated by the Phi_ij";
  payload["irreducible_count"] = table->size();
  payload["orbit_count"] = dual.orbits.size();
  payload["orbits"] = orbits;
  payload["violations"] = violations_json(violations);
  rep.status = violations.empty() ? CheckStatus::pass : CheckStatus::fail;
  rep.payload = payload;
  return rep;
}

Report run_twist(const Command& cmd) {
  const auto in = load_datum(cmd.inputs[0], cmd.options);
  const auto table = character_table(in.datum.group());
  const auto cocycle = verify_cocycle(in.datum);
  json payload{{"source", in.source}, {"indices", in.datum.size()}, {"cocycle", check_to_json(cocycle)}};
  Report rep{cmd.verb, CheckStatus::pass, {}, base_provenance()};
  add_table_provenance(rep.provenance, *table);
  rep.provenance["tau_normalization"] = kTauNormalization;
  rep.provenance["transport"] = "c_{s,ijk} keyed by s at corner i; t = Phi_ki(s), u = Phi_jk(t)";
  if (cocycle.status == CheckStatus::fail) {
    payload["violations"] = violations_json(cocycle.violations);
    rep.status = CheckStatus::fail;
    rep.payload = payload;
    return rep;
  }
  const auto tw = compute_twist(in.datum, *table);
  const auto check = verify_twist_cocycle(tw, in.datum, *table);
  json scalars = json::object(), transport = json::object();
  std::set<Cyclotomic> distinct;
  std::vector<Violation> violations = check.violations;
  for (const auto& [key, c] : tw.scalars) {
    scalars[key_of({key[0], key[1], key[2], key[3]})] = to_json(c);
    distinct.insert(c);
    if (c.is_zero()) violations.push_back({"twist-nonzero", {key[0], key[1], key[2], key[3]}, "scalar is zero"});
  }
  for (const auto& [key, phi] : tw.transport) transport[key_of({key[0], key[1]})] = phi;
  std::sort(violations.begin(), violations.end());
  json distinct_json = json::array();
  for (const auto& c : distinct) distinct_json.push_back(to_json(c));
  payload["scalars"] = scalars;
  payload["scalar_count"] = tw.scalars.size();
  payload["distinct_values"] = distinct_json;
  payload["transport"] = transport;
  payload["tau_normalization"] = tw.tau_normalization;
  payload["twist_cocycle"] = check_to_json(check);
  payload["violations"] = violations_json(violations);
  rep.status = !violations.empty() ? CheckStatus::fail : (cocycle.status == CheckStatus::vacuous ? CheckStatus::vacuous : CheckStatus::pass);
  rep.payload = payload;
  return rep;
}

Report run_gerbe_check(const Command& cmd) {
  const auto in = load_datum(cmd.inputs[0], cmd.options);
  const auto cocycle = verify_cocycle(in.datum);
  json payload{{"source", in.source}, {"indices", in.datum.size()}, {"cocycle", check_to_json(cocycle)}};
  Report rep{cmd.verb, CheckStatus::pass, {}, base_provenance()};
  rep.provenance["delta"] = "delta_ij permutes the group-algebra basis by e_x -> e_{alpha_ij(x)}";
  if (cocycle.status == CheckStatus::fail) {
    payload["violations"] = violations_json(cocycle.violations);
    rep.status = CheckStatus::fail;
    rep.payload = payload;
    return rep;
  }
  const auto gerbe = verify_gerbe_side(in.datum, in.datum.group()->exponent());
  payload["gerbe_side"] = check_to_json(gerbe);
  payload["violations"] = violations_json(gerbe.violations);
  rep.status = gerbe.status;
  rep.payload = payload;
  return rep;
}

Report run_affine_demo(const Command& cmd) {
  const json j = validate_input(cmd.inputs[0], cmd.verb);
  auto r = std::make_shared<const FiniteCommRing>(ring_from_json(j["source"], "/source"));
  auto s = std::make_shared<const FiniteCommRing>(ring_from_json(j["target"], "/target"));
  const std::size_t bound = bound_from(cmd.options.ring_bound, "REPDESCENT_RING_BOUND", kDefaultRingBound);
  const auto homs = ring_homs(r, s, bound);

  std::vector<Violation> violations;
  json images = json::array(), round_trip = json::array();
  for (std::size_t h = 0; h < homs.size(); ++h) {
    images.push_back(homs[h].image);
    const RingHom back = reconstruct_hom(base_change_functor(homs[h]));
    const bool ok = back.image == homs[h].image;
    round_trip.push_back(ok);
    if (!ok) violations.push_back({"round-trip", {h}, "reconstructed hom differs"});
  }

  // A 1x1 presented module R/(a) telling each pair of homs apart.
  json distinguishing = json::array();
  for (std::size_t f = 0; f < homs.size(); ++f) {
    for (std::size_t g = f + 1; g < homs.size(); ++g) {
      std::optional<std::size_t> witness;
      for (std::size_t a = 0; a < r->order() && !witness; ++a) {
        const auto m = cyclic_module(r, a);
        if (!modules_isomorphic(base_change(homs[f], m), base_change(homs[g], m))) witness = a;
      }
      if (witness) {
        distinguishing.push_back({{"pair", {f, g}}, {"module_generator_relation", *witness}});
      } else {
        violations.push_back({"distinguishing-module", {f, g}, "no 1x1 module separates the base changes"});
      }
    }
  }

  // Two functor data with the same F(1): base change along f, and along the
  // hom reconstructed from it, agree on a battery of modules.
  std::size_t battery = 0;
  for (std::size_t h = 0; h < homs.size(); ++h) {
    const RingHom other = reconstruct_hom(base_change_functor(homs[h]));
    std::vector<PresentedModule> mods{free_module(r, 1), free_module(r, 2)};
    for (std::size_t a = 0; a < r->order(); ++a) mods.push_back(cyclic_module(r, a));
    for (std::size_t a = 0; a < r->order(); ++a) {
      mods.push_back(direct_sum(cyclic_module(r, a), free_module(r, 1)));
      mods.push_back(tensor(cyclic_module(r, a), cyclic_module(r, a)));
    }
    for (std::size_t m = 0; m < mods.size(); ++m) {
      ++battery;
      if (!modules_isomorphic(base_change(homs[h], mods[m]), base_change(other, mods[m]))) {
        violations.push_back({"equal-unit-battery", {h, m}, "base changes are not isomorphic"});
      }
    }
  }

  const auto two = two_point_example(cmd.options.prime);
  json idempotents = json::array();
  for (const auto& [c0, c1] : two.idempotents) idempotents.push_back({c0, c1});
  if (!two.split_isomorphism) violations.push_back({"two-point-split", {two.p}, "idempotents do not split R"});
  if (two.unit_X == two.unit_G) violations.push_back({"two-point-units", {two.p}, "unit objects coincide"});
  std::sort(violations.begin(), violations.end());

  auto ring_summary = [](const FiniteCommRing& x) { return json{{"name", x.name()}, {"order", x.order()}}; };
  Report rep{cmd.verb, violations.empty() ? CheckStatus::pass : CheckStatus::fail,
             json{{"source", ring_summary(*r)},
                  {"target", ring_summary(*s)},
                  {"hom_count", homs.size()},
                  {"homs", images},
                  {"round_trip", round_trip},
                  {"distinguishing", distinguishing},
                  {"equal_unit_battery", battery},
                  {"two_point",
                   {{"p", two.p},
                    {"ring", "F" + std::to_string(two.p) + "[t]/(t^2 - 1)"},
                    {"idempotents", idempotents},
                    {"split_isomorphism", two.split_isomorphism},
                    {"unit_X", two.unit_X},
                    {"unit_G", two.unit_G},
                    {"square_roots_of_unit", two.square_roots_of_unit}}},
                  {"violations", violations_json(violations)}},
             base_provenance()};
  rep.provenance["ring_bound"] = bound;
  rep.provenance["idempotent_coordinates"] = "(c0, c1) means c0 + c1 t";
  return rep;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string set_str(const json& a) {
  std::string s = "{";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + a[k].dump();
  return s + "}";
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> v{"chartable", "auts", "extension", "cocycle-check",
                                          "dual", "twist", "gerbe-check", "affine-demo"};
  return v;
}

Options options_from_json(const json& j) {
  Options o;
  if (j.is_null()) return o;
  if (!j.is_object()) throw Error(ErrorCode::schema, "/: options must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned() || value.get<std::size_t>() == 0) {
      throw Error(ErrorCode::schema, "/" + key + ": expected a positive integer");
    }
    const auto n = value.get<std::size_t>();
    if (key == "indices") o.indices = n;
    else if (key == "prime") o.prime = n;
    else if (key == "aut_bound") o.aut_bound = n;
    else if (key == "ring_bound") o.ring_bound = n;
    else throw Error(ErrorCode::schema, "/" + key + ": unknown option");
  }
  if (o.indices > 8) throw Error(ErrorCode::invalid_argument, "indices must be at most 8");
  return o;
}

Report dispatch(const Command& cmd) {
  if (std::find(verbs().begin(), verbs().end(), cmd.verb) == verbs().end()) {
    throw Error(ErrorCode::invalid_argument, "unknown verb \"" + cmd.verb + "\"");
  }
  require_inputs(cmd, 1);
  if (cmd.verb == "chartable") return run_chartable(cmd);
  if (cmd.verb == "auts") return run_auts(cmd);
  if (cmd.verb == "extension") return run_extension(cmd);
  if (cmd.verb == "cocycle-check") return run_cocycle_check(cmd);
  if (cmd.verb == "dual") return run_dual(cmd);
  if (cmd.verb == "twist") return run_twist(cmd);
  if (cmd.verb == "gerbe-check") return run_gerbe_check(cmd);
  return run_affine_demo(cmd);
}

json report_to_json(const Report& r) {
  return json{{"verb", r.verb}, {"status", status_name(r.status)}, {"payload", r.payload}, {"provenance", r.provenance}};
}

Report report_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::schema, "/: report must be an object");
  for (const char* k : {"verb", "status", "payload", "provenance"}) {
    if (!j.contains(k)) throw Error(ErrorCode::schema, std::string("/") + k + ": missing required field");
  }
  if (!j["verb"].is_string()) throw Error(ErrorCode::schema, "/verb: expected a string");
  Report r;
  r.verb = j["verb"].get<std::string>();
  const std::string st = j["status"].is_string() ? j["status"].get<std::string>() : "";
  if (st == "pass") r.status = CheckStatus::pass;
  else if (st == "fail") r.status = CheckStatus::fail;
  else if (st == "vacuous") r.status = CheckStatus::vacuous;
  else throw Error(ErrorCode::schema, "/status: expected pass, fail or vacuous");
  r.payload = j["payload"];
  r.provenance = j["provenance"];
  return r;
}

int exit_code(CheckStatus s) { return s == CheckStatus::fail ? 1 : 0; }

std::string render_summary(const Report& r) {
  std::ostringstream out;
  const char* head = r.status == CheckStatus::pass ? "OK" : r.status == CheckStatus::fail ? "FAIL" : "VACUOUS";
  out << head << ' ' << r.verb;
  const json& p = r.payload;
  std::vector<std::string> table;
  if (r.status != CheckStatus::fail) {
    if (r.verb == "chartable") {
      out << "  degrees";
      for (const auto& d : p["degrees"]) out << ' ' << d.get<std::size_t>();
    } else if (r.verb == "auts") {
      out << "  " << p["count"] << " automorphisms, " << p["inner_count"] << " inner";
    } else if (r.verb == "extension") {
      out << "  |G| " << p["G"]["order"] << ", |Q| " << p["Q"]["order"] << ", " << p["cocycle"]["checked"]
          << " cocycle identities, " << p["tetrahedron"]["checked"] << " tetrahedron matrices";
    } else if (r.verb == "cocycle-check") {
      out << "  " << p["cocycle"]["checked"] << " cocycle identities, " << p["tetrahedron"]["checked"]
          << " tetrahedron matrices";
    } else if (r.verb == "dual") {
      out << "  " << p["orbit_count"] << " orbits on " << p["irreducible_count"] << " irreducibles";
      for (const auto& o : p["orbits"]) {
        table.push_back("  orbit " + pad(set_str(o["members"]), 14) + " stabilizer " + set_str(o["stabilizer"]));
      }
    } else if (r.verb == "twist" && p.contains("scalar_count")) {
      out << "  " << p["scalar_count"] << " scalars, " << p["distinct_values"].size() << " distinct";
    } else if (r.verb == "gerbe-check" && p.contains("gerbe_side")) {
      out << "  " << p["gerbe_side"]["checked"] << " identities";
    } else if (r.verb == "affine-demo") {
      const json& t = p["two_point"];
      out << "  " << p["hom_count"] << " homs; F" << t["p"] << "[t]/(t^2 - 1) unit_X " << t["unit_X"].dump()
          << " vs unit_G " << t["unit_G"].dump();
    }
  }
  out << '\n';
  for (const auto& line : table) out << line << '\n';
  if (p.contains("violations")) {
    for (const auto& v : p["violations"]) {
      std::vector<std::size_t> at = v["at"].get<std::vector<std::size_t>>();
      out << "  " << pad(v["rule"].get<std::string>(), 24) << ' ' << pad(format_tuple(at), 14) << ' '
          << v["detail"].get<std::string>() << '\n';
    }
  }
  out << "-- " << r.provenance.value("tool", std::string(kToolName)) << ' '
      << r.provenance.value("version", std::string(kToolVersion));
  if (r.provenance.contains("dixon_prime")) out << ", dixon prime " << r.provenance["dixon_prime"];
  out << '\n';
  return out.str();
}

void write_atomically(const std::string& path, const std::string& text) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::io, "cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error(ErrorCode::io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorCode::io, "cannot rename onto " + path);
  }
}

}  // namespace repdescent::engine
