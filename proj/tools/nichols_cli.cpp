// Batch entry point for the tables and verifications of the library.
// Exit status: 0 all checks pass, 1 a verification failed, 2 invalid input.

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "nichols/classify.hpp"

#ifndef NICHOLS_DATA_DIR
#define NICHOLS_DATA_DIR "data"
#endif

using namespace nichols;
using ojson = nlohmann::ordered_json;

namespace {

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string rack = "o2_3";
  std::string cocycle = "minus";
  std::string group = "s3";
  int degree_cap = 16;
  std::uint32_t prime = 0;  // 0: drawn from the seed
  unsigned seed = 1;
  std::string format = "json";
  std::vector<std::string> params;
  std::string datum;  // JSON text or path
  std::string file = std::string(NICHOLS_DATA_DIR) + "/appendix_matrices.json";
  std::string ql = "none";
  std::string sigma;
  std::string item;
  long samples = -1;
  bool corrupt = false;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

PS parse_scalar(const std::string& s) {
  if (is_identifier(s)) return PS::param(s);
  try {
    return PS(Rational::parse(s));
  } catch (const std::exception&) {
  }
  try {
    Poly p = parse_poly(s, {});
    return p.coeff(Word());
  } catch (const std::exception& e) {
    throw InvalidInput("cannot read scalar '" + s + "': " + e.what());
  }
}

std::map<std::string, PS> parse_params(const std::vector<std::string>& kv) {
  std::map<std::string, PS> out;
  for (const auto& s : kv) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("--params expects k=v, got '" + s + "'");
    out[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
  }
  return out;
}

std::uint32_t pick_prime(const RunConfig& c) {
  if (c.prime) return c.prime;
  std::mt19937 rng(c.seed);
  std::uniform_int_distribution<std::uint32_t> d(30000, 65000);
  auto is_prime = [](std::uint32_t n) {
    for (std::uint32_t k = 2; k * k <= n; ++k)
      if (n % k == 0) return false;
    return n > 1;
  };
  std::uint32_t p = d(rng);
  while (!is_prime(p)) ++p;
  return p;
}

RackPreset preset(const RunConfig& c) {
  try {
    return rack_preset(c.rack, c.cocycle);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
}

RackPreset group_preset(const RunConfig& c) {
  if (c.group == "s3") return rack_preset("o2_3", "minus");
  if (c.group == "s4") return rack_preset("o2_4", c.cocycle);
  throw InvalidInput("unknown group " + c.group);
}

// {"rack", "cocycle", "Y": [...], "F": [generators], "psi": trivial|sign|nontrivial,
//  "xi": [{"pair": [i, j], "value": "..."}]}
ModuleDatum read_datum(const RunConfig& c) {
  if (c.datum.empty()) throw InvalidInput("--datum is required");
  nlohmann::json j;
  try {
    if (c.datum.front() == '{') {
      j = nlohmann::json::parse(c.datum);
    } else {
      std::ifstream in(c.datum);
      if (!in) throw InvalidInput("cannot open " + c.datum);
      j = nlohmann::json::parse(in);
    }
    RackPreset p = rack_preset(j.value("rack", c.rack), j.value("cocycle", c.cocycle));
    ModuleDatum d = make_datum(p, j.value("Y", std::vector<std::string>{}),
                               j.value("F", std::vector<std::string>{}));
    std::string psi = j.value("psi", "trivial");
    if (psi == "sign") d.psi = sign_pullback_cocycle(d.real.G, d.F);
    else if (psi == "nontrivial") {
      if (d.real.G.order() != 24) throw InvalidInput("the nontrivial cocycle needs S_4");
      d.psi = restrict_cocycle(d.real.G, s4_nontrivial_cocycle(d.real.G), d.F);
    } else if (psi != "trivial") throw InvalidInput("unknown psi " + psi);
    for (const auto& e : j.value("xi", nlohmann::json::array())) {
      auto pr = e.at("pair").get<std::vector<std::string>>();
      if (pr.size() != 2) throw InvalidInput("xi pair needs two rack elements");
      int a = p.rack.index(pr[0]), b = p.rack.index(pr[1]);
      if (a < 0 || b < 0) throw InvalidInput("unknown rack element in xi pair");
      d.xi[class_of(d.classes, a, b)] = parse_scalar(e.at("value").get<std::string>());
    }
    return d;
  } catch (const InvalidInput&) {
    throw;
  } catch (const std::exception& e) {
    throw InvalidInput(std::string("datum: ") + e.what());
  }
}

std::vector<std::string> labels(const Rack& r, const std::vector<int>& Y) {
  std::vector<std::string> out;
  for (int l : Y) out.push_back(r.labels[l]);
  return out;
}

// The S_3 datum with xi on the diagonal classes and mu on the others.
ModuleDatum s3_full(const PS& xi, const PS& mu) {
  ModuleDatum d = make_datum(rack_preset("o2_3", "minus"), {"(1 2)", "(1 3)", "(2 3)"}, {"(1 2)", "(1 3)"});
  for (int c : classes_prime(d.preset.rack, d.preset.q, d.classes))
    d.xi[c] = d.classes[c].size() == 1 ? xi : mu;
  return d;
}

// Output assembly.
struct Out {
  ojson body = ojson::object();
  std::string tsv;
  bool table = false;
  bool ok = true;
  std::vector<std::string> violations;

  void add(const std::string& key, const Report& r) {
    body[key] = r.to_json();
    if (!r.ok()) {
      ok = false;
      for (const auto& v : r.violations) violations.push_back(key + ": " + v);
    }
  }
};

int emit(const Out& o, const RunConfig& c) {
  if (c.format == "tsv" && o.table) {
    std::cout << o.tsv;
    if (!o.ok) {
      ojson f;
      f["violations"] = o.violations;
      std::cerr << f.dump(2) << "\n";
    }
  } else if (!o.body.empty()) {
    ojson j = o.body;
    j["ok"] = o.ok;
    if (!o.ok) j["violations"] = o.violations;
    std::cout << j.dump(2) << "\n";
  }
  return o.ok ? 0 : 1;
}

// ---- rack ----

Out rack_check(const RunConfig& c) {
  RackPreset p = preset(c);
  Rack r = p.rack;
  if (c.corrupt) r.op[0 * r.size() + 1] = r.op[0 * r.size() + 2];
  Out o;
  o.body["rack"] = p.name;
  o.body["cocycle"] = p.cocycle;
  o.add("axioms", check_rack(r));
  o.add("cocycle_condition", check_cocycle(p.rack, p.q));
  o.add("realization", check_realization(standard_realization(p), p.rack, p.q));
  return o;
}

Out rack_classes(const RunConfig& c) {
  RackPreset p = preset(c);
  auto cls = enumerate_classes(p.rack);
  auto prime = classes_prime(p.rack, p.q, cls);
  Out o;
  o.table = true;
  o.tsv = "class\tsize\tin_R_prime\n";
  ojson rows = ojson::array();
  for (std::size_t k = 0; k < cls.size(); ++k) {
    bool in = std::find(prime.begin(), prime.end(), static_cast<int>(k)) != prime.end();
    std::string lab = class_label(cls[k], p.rack);
    rows.push_back({{"class", lab}, {"size", cls[k].size()}, {"in_R_prime", in}});
    o.tsv += lab + "\t" + std::to_string(cls[k].size()) + "\t" + (in ? "1" : "0") + "\n";
  }
  o.body["rack"] = p.name;
  o.body["cocycle"] = p.cocycle;
  o.body["classes"] = rows;
  o.body["R_prime"] = prime.size();
  return o;
}

// ---- nichols ----

Out nichols_dim(const RunConfig& c) {
  Out o;
  if (c.ql != "none") {
    // The lifting H(Q) of a ql-datum.
    QlDatum q;
    try {
      q = ql_datum(c.ql, parse_params(c.params));
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception& e) {
      throw InvalidInput(e.what());
    }
    Algebra h = lifted_algebra(q, c.degree_cap);
    o.body["ql"] = c.ql;
    o.body["finite"] = h.status.finite;
    o.body["dimension"] = h.zero() ? 0 : h.dim();
    o.add("datum", check_ql_datum(q));
    if (h.zero() || !h.status.finite) {
      Report r("lifting");
      r.fail(h.zero() ? "the lifting is zero" : "completion did not finish");
      o.add("status", r);
    }
    return o;
  }
  RackPreset p = preset(c);
  Algebra b = nichols_quadratic(p.rack, p.q);
  o.body["rack"] = p.name;
  o.body["cocycle"] = p.cocycle;
  o.body["finite"] = b.status.finite;
  o.body["dimension"] = b.dim();
  o.body["hilbert"] = b.rs.hilbert(c.degree_cap);
  if (!b.status.finite) {
    Report r("nichols dim");
    r.fail("completion did not finish below degree " + std::to_string(c.degree_cap));
    o.add("status", r);
  }
  return o;
}

// ---- coideal ----

const std::vector<CatalogItem>* catalog_for(const RackPreset& p) {
  if (p.name == "o2_4") return &o24_catalog();
  if (p.name == "o2_3" && p.cocycle == "minus") return &o23_catalog();
  return nullptr;
}

Out coideal_table_cmd(const RunConfig& c) {
  RackPreset p = preset(c);
  Realization re = standard_realization(p);
  CoidealTable t = coideal_table(p, re);
  Out o;
  o.table = true;
  o.tsv = "Y\tdim\tstabilizer\n";
  ojson rows = ojson::array();
  std::map<std::string, const CoidealRow*> by_item;
  for (const auto& row : t.rows) {
    std::string Y = nlohmann::json(labels(p.rack, row.Y)).dump();
    std::string st = subgroup_name(re.G, row.stabilizer);
    ojson j{{"Y", labels(p.rack, row.Y)}, {"dim", row.dim}, {"stabilizer", st},
            {"orbit_size", row.orbit_size}, {"hilbert", row.hilbert}};
    if (!row.item.empty()) {
      j["item"] = row.item;
      by_item[row.item] = &row;
    }
    rows.push_back(j);
    o.tsv += Y + "\t" + std::to_string(row.dim) + "\t" + st + "\n";
  }
  o.body["rack"] = p.name;
  o.body["cocycle"] = p.cocycle;
  o.body["total"] = t.total;
  o.body["rows"] = rows;
  if (const auto* cat = catalog_for(p)) {
    Report r("catalog");
    for (const auto& it : *cat) {
      auto f = by_item.find(it.item);
      if (f == by_item.end()) {
        r.fail("item (" + it.item + "): no row");
        continue;
      }
      if (f->second->dim != it.dim)
        r.fail("item (" + it.item + "): dim " + std::to_string(f->second->dim) + ", listed " +
               std::to_string(it.dim));
      std::string st = subgroup_name(re.G, f->second->stabilizer);
      if (!it.stabilizer.empty() && st != it.stabilizer)
        r.fail("item (" + it.item + "): stabilizer " + st + ", listed " + it.stabilizer);
    }
    o.add("catalog", r);
  }
  if (p.name == "o2_3") {
    // L_Y has the same dimension as K_Y for every Y.
    Report ly("L_Y");
    for (const auto& [Y, dim] : t.dims) {
      if (Y.empty()) continue;
      long long d = build_LY(p.rack, p.q, Y, c.degree_cap).dim();
      if (d != dim)
        ly.fail(nlohmann::json(labels(p.rack, Y)).dump() + ": dim L_Y " + std::to_string(d) + ", dim K_Y " +
                std::to_string(dim));
    }
    o.add("L_Y", ly);
  }
  return o;
}

Out coideal_present(const RunConfig& c) {
  RackPreset p = preset(c);
  const auto* cat = catalog_for(p);
  if (!cat) throw InvalidInput("no catalog for " + p.name + "/" + p.cocycle);
  Algebra b = nichols_quadratic(p.rack, p.q);
  Rational eps = p.cocycle == "minus" ? Rational(1) : Rational(-1);
  Out o;
  o.body["rack"] = p.name;
  o.body["cocycle"] = p.cocycle;
  bool any = false;
  for (const auto& it : *cat) {
    if (!c.item.empty() && c.item != it.item) continue;
    any = true;
    std::vector<int> Y;
    for (const auto& s : it.Y) Y.push_back(p.rack.index(s));
    std::sort(Y.begin(), Y.end());
    auto rels = parse_relations(it.relations, it.letters);
    for (auto& r : rels) r = r.substitute({{"eps", eps}});
    o.add("item " + it.item, check_presentation(b, p.rack, Y, it.letters, rels, it.dim));
  }
  if (!any) throw InvalidInput("no catalog item " + c.item);
  return o;
}

// ---- comodule ----

Out comodule_build(const RunConfig& c) {
  ModuleDatum d = read_datum(c);
  if (c.corrupt) {
    for (int k : classes_prime(d.preset.rack, d.preset.q, d.classes))
      if (d.classes[k].size() > 1 && tag_class(d.classes[k], d.Y).tag == YTag::R1) {
        d.xi[k] += PS(1);
        break;
      }
  }
  Out o;
  const Rack& r = d.preset.rack;
  o.body["Y"] = labels(r, d.Y);
  o.body["F"] = subgroup_name(d.real.G, d.F);
  Report comp = check_compatible(d);
  o.add("compatibility", comp);
  Algebra bx = nichols_quadratic(r, d.preset.q);
  long long expected = coideal_KY(bx, d.Y).dim * static_cast<long long>(d.real.G.members(d.F).size());
  Report dim("dimension");
  try {
    Algebra a = build_A(d, c.degree_cap);
    dim.data["dimension"] = a.zero() ? 0 : a.dim();
    if (a.zero()) dim.fail("the algebra is zero");
    else if (a.dim() != expected) dim.fail("dimension " + std::to_string(a.dim()) + ", expected " + std::to_string(expected));
  } catch (const NonUnitLead& e) {
    dim.fail("completion meets the non-unit coefficient " + e.coeff.str());
  }
  dim.data["expected"] = expected;
  o.add("dimension", dim);
  GroupCtx g = module_group_ctx(d);
  std::vector<std::string> rels;
  for (const auto& p : module_relations(d)) rels.push_back(to_string(p, labels(r, d.Y), g.labels));
  o.body["relations"] = rels;
  return o;
}

struct ComoduleSetup {
  ModuleDatum d;
  std::unique_ptr<BasisAlgebra> H, A;
  std::unique_ptr<Coaction> lam;
};

ComoduleSetup setup(const RunConfig& c, ModuleDatum d) {
  ComoduleSetup s;
  s.d = std::move(d);
  Algebra a = build_A(s.d, c.degree_cap);
  if (a.zero()) throw std::domain_error("the algebra A is zero");
  s.H = std::make_unique<BasisAlgebra>(graded_hopf(s.d.preset, s.d.real));
  s.A = std::make_unique<BasisAlgebra>(std::move(a));
  s.lam = std::make_unique<Coaction>(*s.H, *s.A, s.d, c.corrupt ? 0 : -1);
  return s;
}

Out zero_algebra(const std::string& what) {
  Out o;
  Report r(what);
  r.fail("the algebra A is zero");
  o.add(what, r);
  return o;
}

Out comodule_coaction(const RunConfig& c) {
  ModuleDatum d = read_datum(c);
  Report comp = check_compatible(d);
  try {
    ComoduleSetup s = setup(c, d);
    Out o;
    o.add("compatibility", comp);
    o.add("coaction", verify_coaction(*s.lam, module_relations(s.d)));
    return o;
  } catch (const std::domain_error&) {
    Out o = zero_algebra("coaction");
    o.add("compatibility", comp);
    return o;
  }
}

Out comodule_galois(const RunConfig& c) {
  ModuleDatum d = read_datum(c);
  ComoduleSetup s = setup(c, d);
  Out o;
  std::uint32_t prime = pick_prime(c);
  o.body["prime"] = prime;
  o.add("canonical_rank", canonical_map_rank(*s.lam, prime));
  o.add("preimages", verify_can_preimages(*s.lam));
  return o;
}

Out comodule_loewy(const RunConfig& c) {
  ModuleDatum d = read_datum(c);
  ComoduleSetup s = setup(c, d);
  Out o;
  auto dims = loewy_dims(*s.lam);
  o.body["loewy"] = dims;
  Algebra bx = nichols_quadratic(d.preset.rack, d.preset.q);
  SubalgebraBasis k = coideal_KY(bx, d.Y);
  long long nF = static_cast<long long>(d.real.G.members(d.F).size());
  Report r("loewy");
  std::vector<long long> expect;
  for (int h : k.by_level) expect.push_back(h * nF);
  while (!expect.empty() && expect.back() == 0) expect.pop_back();
  if (dims != expect) r.fail("levels differ from the Hilbert series of K_Y times |F|");
  r.data["expected"] = expect;
  o.add("loewy", r);
  return o;
}

Out comodule_bigalois(const RunConfig& c) {
  auto params = parse_params(c.params);
  PS diag;
  if (auto it = params.find("diag"); it != params.end()) {
    diag = it->second;
    params.erase(it);
  }
  QlDatum q;
  try {
    q = ql_datum(c.ql == "none" ? "q3m" : c.ql, params);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  Mask G = q.real.G.full_mask();
  std::vector<int> X(q.preset.rack.size());
  std::iota(X.begin(), X.end(), 0);
  ModuleDatum d = make_datum(q.preset, q.real, X, G, trivial_cocycle(q.real.G, G));
  for (int k : q.prime) {
    if (!q.gamma[k].is_zero()) d.xi[k] = c.corrupt ? q.gamma[k] : -q.gamma[k];
    else if (class_group_element(q.real, q.classes[k]) == q.real.G.id()) d.xi[k] = diag;
  }
  Out o;
  o.body["ql"] = q.name;
  o.add("datum", check_ql_datum(q));
  o.add("scalars", bigalois_scalars(d, q));
  RunConfig plain = c;
  plain.corrupt = false;
  try {
    ComoduleSetup s = setup(plain, d);
    BasisAlgebra HQ(lifted_algebra(q, c.degree_cap));
    o.add("bigalois", verify_bigalois(*s.lam, HQ, q, module_relations(s.d)));
  } catch (const std::domain_error&) {
    Report r("bigalois");
    r.fail("the algebra A is zero");
    o.add("bigalois", r);
  }
  return o;
}

// ---- appendix ----

Out appendix_verify(const RunConfig& c) {
  MatrixRep m;
  try {
    m = load_matrix_rep_file(c.file);
  } catch (const std::exception& e) {
    throw InvalidInput(e.what());
  }
  auto params = parse_params(c.params);
  PS xi = params.count("xi") ? params["xi"] : PS::param("xi");
  PS mu = params.count("mu") ? params["mu"] : PS::param("mu");
  if (!params.empty()) m = specialize(m, params);
  if (c.corrupt) {
    auto& y = m.generators.count("y(1 2)") ? m.generators.at("y(1 2)") : m.generators.begin()->second;
    bool done = false;
    for (auto& row : y) {
      for (auto& v : row)
        if (!v.is_zero()) {
          v += PS(1);
          done = true;
          break;
        }
      if (done) break;
    }
  }
  Out o;
  o.body["file"] = c.file;
  o.body["dimension"] = m.dim;
  o.add("relations", verify_matrix_rep(m, s3_full(xi, mu)));
  return o;
}

// ---- hopf ----

Out hopf_cocycle(const RunConfig& c) {
  RackPreset p = group_preset(c);
  Realization re = standard_realization(p);
  BasisAlgebra H(graded_hopf(p, re));
  Coproduct D(H, re);
  Mask G = re.G.full_mask();
  std::string sigma = c.sigma.empty() ? (c.group == "s4" ? "nontrivial" : "sign") : c.sigma;
  GroupCocycle s;
  if (sigma == "trivial") s = trivial_cocycle(re.G, G);
  else if (sigma == "sign") s = sign_pullback_cocycle(re.G, G);
  else if (sigma == "nontrivial" && c.group == "s4") s = s4_nontrivial_cocycle(re.G);
  else throw InvalidInput("unknown cocycle " + sigma);
  HopfCocycleTable t = extend_group_cocycle(s, H);
  if (c.corrupt) t.values.begin()->second = -t.values.begin()->second;
  long samples = c.samples >= 0 ? c.samples : (c.group == "s4" ? 2000 : 0);
  Out o;
  o.body["group"] = c.group;
  o.body["sigma"] = sigma;
  o.body["dimension"] = H.size();
  o.body["triples"] = samples ? ojson(samples) : ojson("all");
  o.add("group_cocycle", check_group_cocycle(re.G, s));
  o.add("hopf_cocycle", verify_hopf_cocycle(t, D, samples, c.seed));
  return o;
}

// ---- classify ----

Out classify_run(const RunConfig& c) {
  RackPreset p = group_preset(c);
  auto orbits = enumerate_data(p);
  Out o;
  o.table = true;
  o.tsv = "Y\tF\tpsi\torbit_size\tfree\titem\n";
  ojson list = ojson::array();
  for (const auto& orb : orbits) {
    list.push_back(orbit_to_json(orb));
    std::vector<std::string> F;
    for (int f : orb.key.F) F.push_back(orb.rep.real.G.el(f).str());
    o.tsv += nlohmann::json(labels(p.rack, orb.rep.Y)).dump() + "\t" + nlohmann::json(F).dump() + "\t" +
             (orb.key.psi_class ? "nontrivial" : "trivial") + "\t" + std::to_string(orb.orbit_size) + "\t" +
             std::to_string(orb.xi.free()) + "\t" + orb.catalog + "\n";
  }
  o.body["group"] = c.group;
  o.body["orbits"] = list;
  if (c.group == "s3") {
    o.add("catalog", compare_s3_families(orbits));
    o.add("orbit_check", exhaustive_orbit_check(orbits));
  }
  return o;
}

Out classify_duality(const RunConfig& c) {
  Out o;
  o.body["rack"] = c.rack;
  o.add("duality", duality_check(preset(c)));
  return o;
}

void common_flags(CLI::App* app, RunConfig& c) {
  app->add_option("--rack", c.rack, "rack preset: o2_3, o2_4, o4_4")->capture_default_str();
  app->add_option("--cocycle", c.cocycle, "rack cocycle: minus, chi")->capture_default_str();
  app->add_option("--group", c.group, "group: s3, s4")->capture_default_str();
  app->add_option("--degree-cap", c.degree_cap, "degree bound for completion")->capture_default_str()
      ->check(CLI::Range(2, 64));
  app->add_option("--prime", c.prime, "prime for modular rank (0: drawn from the seed)");
  app->add_option("--seed", c.seed, "seed for sampling")->capture_default_str();
  app->add_option("--format", c.format, "json or tsv")->capture_default_str()
      ->check(CLI::IsMember({"json", "tsv"}));
  app->add_option("--params", c.params, "parameter assignments k=v");
  app->add_option("--datum", c.datum, "datum JSON (inline or file)");
  app->add_option("--file", c.file, "matrix representation file")->capture_default_str();
  app->add_option("--ql", c.ql, "ql-datum: q3m, q4m, q4chi, d4 (nichols dim: the lifting)")->capture_default_str();
  app->add_option("--sigma", c.sigma, "group cocycle: trivial, sign, nontrivial");
  app->add_option("--item", c.item, "catalog item");
  app->add_option("--samples", c.samples, "sampled triples (0: all)");
  app->add_flag("--corrupt", c.corrupt, "apply the documented single-entry corruption");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nichols algebras, coideal subalgebras and comodule algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::function<Out(const RunConfig&)> action;

  auto group = [&](const std::string& name, const std::string& help,
                   std::vector<std::pair<std::string, std::function<Out(const RunConfig&)>>> subs) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    for (auto& [sub, fn] : subs) {
      CLI::App* s = g->add_subcommand(sub);
      common_flags(s, cfg);
      s->callback([&action, fn]() { action = fn; });
    }
  };
  group("rack", "rack axioms and classes", {{"check", rack_check}, {"classes", rack_classes}});
  group("nichols", "quadratic Nichols algebras", {{"dim", nichols_dim}});
  group("coideal", "coideal subalgebras K_Y", {{"table", coideal_table_cmd}, {"present", coideal_present}});
  group("comodule", "comodule algebras A(Y,F,psi,xi)",
        {{"build", comodule_build},
         {"coaction", comodule_coaction},
         {"galois", comodule_galois},
         {"bigalois", comodule_bigalois},
         {"loewy", comodule_loewy}});
  group("appendix", "matrix representation", {{"verify", appendix_verify}});
  group("hopf", "Hopf 2-cocycles", {{"cocycle", hopf_cocycle}});
  group("classify", "data up to conjugation", {{"run", classify_run}, {"duality", classify_duality}});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    return emit(action(cfg), cfg);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    Out o = zero_algebra("algebra");
    return emit(o, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
