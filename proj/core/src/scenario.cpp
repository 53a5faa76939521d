#include "ramiq/scenario.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace ramiq {

using nlohmann::json;

const CharacterTable& Scenario::character_table() const {
  if (!table) fail(ErrorKind::TableRequired, "scenario has no character table");
  return *table;
}

void Scenario::validate() const {
  if (ambient_dim != 1 && ambient_dim != 2)
    fail(ErrorKind::InvalidInput, "ambient dimension must be 1 or 2");
  std::set<std::string> ids;
  for (const Stratum& z : strata) {
    if (z.stabilizer.parent().get() != group.get())
      fail(ErrorKind::GroupMismatch, "stratum stabilizer belongs to a different group");
    if (!ids.insert(z.id).second)
      fail(ErrorKind::InvalidInput, "duplicate stratum id '" + z.id + "'");
    z.validate(ambient_dim, sheaf_rank);
  }
  if (table && table->group().get() != group.get())
    fail(ErrorKind::GroupMismatch, "character table is for a different group");
}

Rational curve_euler(std::int64_t rank, std::int64_t degree, std::int64_t genus) {
  return Rational(rank) * Rational(1 - genus) + Rational(degree);
}

namespace {

bool is_elementary_abelian_2(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) > 2) return false;
  return true;
}

}  // namespace

Scenario surface_sheaf_presets(Scenario s) {
  if (s.sheaf_kind == SheafKind::general)
    fail(ErrorKind::HypothesisViolation, "no preset requested");
  if (s.ambient_dim != 2)
    fail(ErrorKind::HypothesisViolation, "sheaf presets need a surface ambient");
  if (!s.chi_o || !s.k2)
    fail(ErrorKind::HypothesisViolation, "sheaf presets need chi_O and K2");
  if (!is_elementary_abelian_2(*s.group))
    fail(ErrorKind::HypothesisViolation, "sheaf presets need an elementary abelian 2-group");
  Rational chi_o(*s.chi_o), k2(*s.k2);
  std::int64_t n = s.canonical_n;
  if (s.sheaf_kind == SheafKind::cotangent) {
    s.sheaf_rank = 2;
    s.global_euler = k2 - 10 * chi_o;
  } else {
    s.sheaf_rank = 1;
    s.global_euler = chi_o + Rational(n * (n - 1)) * k2 / 2;
  }
  for (Stratum& z : s.strata) {
    if (z.dim == StratumDim::ambient) {
      if (z.stabilizer.order() > 1)
        fail(ErrorKind::HypothesisViolation,
             "presets do not support non-faithful ambient strata");
      continue;
    }
    z.sheaf.clear();
    if (z.dim == StratumDim::point) {
      if (s.sheaf_kind == SheafKind::cotangent) {
        // Omega^1|_P is the conormal space itself
        for (const auto& e : z.normal)
          z.sheaf.push_back(SheafEigen{e.character, e.multiplicity, 0});
      } else {
        LinearCharacter det = LinearCharacter::trivial(z.stabilizer.group());
        for (const auto& e : z.normal)
          for (int i = 0; i < e.multiplicity; ++i) det = det * e.character;
        z.sheaf.push_back(SheafEigen{det.power(n), 1, 0});
      }
      continue;
    }
    if (z.normal.size() != 1 || z.normal[0].multiplicity != 1)
      fail(ErrorKind::HypothesisViolation, "curve stratum needs a single conormal line");
    const LinearCharacter& phi = z.normal[0].character;
    if (s.sheaf_kind == SheafKind::cotangent) {
      z.sheaf.push_back(SheafEigen{LinearCharacter::trivial(z.stabilizer.group()), 1,
                                   2 * z.genus - 2});
      z.sheaf.push_back(SheafEigen{phi, 1, z.normal[0].degree});
    } else {
      if (!z.kc)
        fail(ErrorKind::HypothesisViolation, "canonical_power needs K.C on curve strata");
      z.sheaf.push_back(SheafEigen{phi.power(n), 1, n * *z.kc});
    }
  }
  return s;
}

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

void check_keys(const json& obj, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) bad(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) bad("unknown key '" + key + "' in " + where);
}

const json& require(const json& obj, const std::string& where, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(where + " is missing '" + key + "'");
  return *it;
}

std::int64_t get_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) bad(where + " must be an integer");
  return v.get<std::int64_t>();
}

Rational get_rational(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  bad(where + " must be an integer or a \"p/q\" string");
}

Cyclotomic get_cyclotomic(const json& v, const std::string& where) {
  if (v.is_number_integer() || v.is_string()) return Cyclotomic(get_rational(v, where));
  if (v.is_array()) {
    if (v.size() != 2) bad(where + " root of unity must be an [N, k] pair");
    return Cyclotomic::root_of_unity(get_int(v[0], where), get_int(v[1], where));
  }
  if (v.is_object()) {
    check_keys(v, where, {"conductor", "coeffs"});
    std::int64_t cond = get_int(require(v, where, "conductor"), where);
    const json& cs = require(v, where, "coeffs");
    if (!cs.is_array()) bad(where + ".coeffs must be an array");
    Cyclotomic out(0);
    for (std::size_t i = 0; i < cs.size(); ++i)
      out += Cyclotomic(get_rational(cs[i], where)) *
             Cyclotomic::root_of_unity(cond, static_cast<std::int64_t>(i));
    return out;
  }
  bad(where + " is not a recognizable exact value");
}

std::shared_ptr<const FiniteGroup> parse_group(const json& v) {
  const std::string where = "group";
  std::string kind = require(v, where, "kind").get<std::string>();
  if (kind == "cyclic") {
    check_keys(v, where, {"kind", "n"});
    return FiniteGroup::cyclic(static_cast<int>(get_int(require(v, where, "n"), where)));
  }
  if (kind == "abelian_product") {
    check_keys(v, where, {"kind", "orders"});
    std::vector<int> orders;
    for (const json& o : require(v, where, "orders"))
      orders.push_back(static_cast<int>(get_int(o, where)));
    return FiniteGroup::abelian_product(orders);
  }
  if (kind == "cayley") {
    check_keys(v, where, {"kind", "table"});
    std::vector<std::vector<int>> table;
    for (const json& row : require(v, where, "table")) {
      table.emplace_back();
      for (const json& e : row) table.back().push_back(static_cast<int>(get_int(e, where)));
    }
    return FiniteGroup::from_cayley_table(std::move(table));
  }
  if (kind == "permutations") {
    check_keys(v, where, {"kind", "generators"});
    std::vector<std::vector<std::vector<int>>> gens;
    for (const json& gen : require(v, where, "generators")) {
      gens.emplace_back();
      for (const json& cyc : gen) {
        gens.back().emplace_back();
        for (const json& p : cyc)
          gens.back().back().push_back(static_cast<int>(get_int(p, where)));
      }
    }
    return FiniteGroup::from_permutation_generators(gens);
  }
  bad("unknown group kind '" + kind + "'");
}

LinearCharacter parse_character(const json& v, const Subgroup& stab,
                                const std::string& where) {
  if (!v.is_object()) bad(where + " must map element indices to values");
  std::vector<Cyclotomic> vals(stab.order());
  std::vector<bool> seen(stab.order(), false);
  for (const auto& [key, value] : v.items()) {
    int parent_idx;
    try {
      parent_idx = std::stoi(key);
    } catch (const std::exception&) {
      bad(where + " has a non-numeric element key '" + key + "'");
    }
    if (!stab.contains(parent_idx))
      bad(where + " assigns a value outside the stabilizer: element " + key);
    int local = stab.to_local(parent_idx);
    if (seen[local]) bad(where + " assigns element " + key + " twice");
    seen[local] = true;
    vals[local] = get_cyclotomic(value, where);
  }
  for (int i = 0; i < stab.order(); ++i)
    if (!seen[i])
      bad(where + " misses a value at element " + std::to_string(stab.to_parent(i)));
  return LinearCharacter(stab.group(), std::move(vals));
}

ClassFunction parse_ambient_chi(const json& v, const Subgroup& stab,
                                const std::string& where) {
  if (!v.is_object()) bad(where + " must map class representatives to values");
  const auto& hg = *stab.group();
  std::vector<Cyclotomic> vals(hg.num_classes());
  std::vector<bool> seen(hg.num_classes(), false);
  for (const auto& [key, value] : v.items()) {
    int parent_idx;
    try {
      parent_idx = std::stoi(key);
    } catch (const std::exception&) {
      bad(where + " has a non-numeric element key '" + key + "'");
    }
    if (!stab.contains(parent_idx))
      bad(where + " names element " + key + " outside the stabilizer");
    int c = hg.class_of(stab.to_local(parent_idx));
    if (seen[c]) bad(where + " assigns a conjugacy class twice");
    seen[c] = true;
    vals[c] = get_cyclotomic(value, where);
  }
  for (int c = 0; c < hg.num_classes(); ++c)
    if (!seen[c]) bad(where + " misses a conjugacy class of the stabilizer");
  return ClassFunction(stab.group(), std::move(vals));
}

Stratum parse_stratum(const json& v, const std::shared_ptr<const FiniteGroup>& g,
                      bool preset) {
  check_keys(v, "stratum",
             {"id", "dim", "stabilizer", "normal", "sheaf", "genus", "KC", "C2",
              "ambient_equivariant_chi"});
  std::string id = require(v, "stratum", "id").get<std::string>();
  const std::string where = "stratum '" + id + "'";

  const json& dim_v = require(v, where, "dim");
  StratumDim dim;
  if (dim_v.is_string() && dim_v.get<std::string>() == "ambient")
    dim = StratumDim::ambient;
  else if (dim_v.is_number_integer() && dim_v.get<int>() == 0)
    dim = StratumDim::point;
  else if (dim_v.is_number_integer() && dim_v.get<int>() == 1)
    dim = StratumDim::curve;
  else
    bad(where + ".dim must be 0, 1, or \"ambient\"");

  std::vector<int> members;
  for (const json& m : require(v, where, "stabilizer"))
    members.push_back(static_cast<int>(get_int(m, where + ".stabilizer")));
  Subgroup stab = g->subgroup(std::move(members));

  std::vector<NormalEigen> normal;
  if (auto it = v.find("normal"); it != v.end()) {
    for (const json& e : *it) {
      check_keys(e, where + ".normal", {"character", "multiplicity", "degree"});
      NormalEigen ne{parse_character(require(e, where, "character"), stab,
                                     where + ".normal character"),
                     1, 0};
      if (auto m = e.find("multiplicity"); m != e.end())
        ne.multiplicity = static_cast<int>(get_int(*m, where + ".multiplicity"));
      if (auto d = e.find("degree"); d != e.end())
        ne.degree = get_int(*d, where + ".degree");
      normal.push_back(std::move(ne));
    }
  }

  std::vector<SheafEigen> sheaf;
  if (auto it = v.find("sheaf"); it != v.end()) {
    if (preset) bad(where + " carries sheaf data, but the preset derives it");
    for (const json& e : *it) {
      check_keys(e, where + ".sheaf", {"character", "rank", "degree"});
      SheafEigen se{parse_character(require(e, where, "character"), stab,
                                    where + ".sheaf character"),
                    static_cast<int>(get_int(require(e, where, "rank"), where + ".rank")),
                    0};
      if (auto d = e.find("degree"); d != e.end())
        se.degree = get_int(*d, where + ".degree");
      sheaf.push_back(std::move(se));
    }
  }

  std::int64_t genus = 0;
  if (auto it = v.find("genus"); it != v.end()) genus = get_int(*it, where + ".genus");
  std::optional<std::int64_t> kc, c2;
  if (auto it = v.find("KC"); it != v.end()) kc = get_int(*it, where + ".KC");
  if (auto it = v.find("C2"); it != v.end()) c2 = get_int(*it, where + ".C2");
  std::optional<ClassFunction> ambient_chi;
  if (auto it = v.find("ambient_equivariant_chi"); it != v.end())
    ambient_chi = parse_ambient_chi(*it, stab, where + ".ambient_equivariant_chi");

  return Stratum{std::move(id), dim,   std::move(stab), std::move(normal),
                 std::move(sheaf), genus, std::move(ambient_chi), kc, c2};
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  check_keys(doc, "scenario",
             {"name", "group", "character_table", "ambient", "sheaf", "strata"});

  Scenario s;
  if (auto it = doc.find("name"); it != doc.end()) s.name = it->get<std::string>();
  s.group = parse_group(require(doc, "scenario", "group"));

  const json& amb = require(doc, "scenario", "ambient");
  check_keys(amb, "ambient", {"dim", "genus", "euler", "chi_O", "K2"});
  s.ambient_dim = static_cast<int>(get_int(require(amb, "ambient", "dim"), "ambient.dim"));
  if (s.ambient_dim != 1 && s.ambient_dim != 2) bad("ambient.dim must be 1 or 2");
  std::int64_t ambient_genus = 0;
  if (s.ambient_dim == 1)
    ambient_genus = get_int(require(amb, "ambient", "genus"), "ambient.genus");
  else if (amb.contains("genus"))
    bad("ambient.genus only applies to curves");
  if (auto it = amb.find("chi_O"); it != amb.end()) s.chi_o = get_int(*it, "ambient.chi_O");
  if (auto it = amb.find("K2"); it != amb.end()) s.k2 = get_int(*it, "ambient.K2");

  const json& sheaf = require(doc, "scenario", "sheaf");
  std::string kind = require(sheaf, "sheaf", "kind").get<std::string>();
  std::int64_t sheaf_degree = 0;
  if (kind == "general") {
    check_keys(sheaf, "sheaf", {"kind", "rank", "degree"});
    s.sheaf_kind = SheafKind::general;
    s.sheaf_rank = static_cast<int>(get_int(require(sheaf, "sheaf", "rank"), "sheaf.rank"));
    if (auto it = sheaf.find("degree"); it != sheaf.end()) {
      if (s.ambient_dim != 1) bad("sheaf.degree only applies to curves");
      sheaf_degree = get_int(*it, "sheaf.degree");
    }
  } else if (kind == "cotangent") {
    check_keys(sheaf, "sheaf", {"kind"});
    s.sheaf_kind = SheafKind::cotangent;
  } else if (kind == "canonical_power") {
    check_keys(sheaf, "sheaf", {"kind", "n"});
    s.sheaf_kind = SheafKind::canonical_power;
    s.canonical_n = static_cast<int>(get_int(require(sheaf, "sheaf", "n"), "sheaf.n"));
  } else {
    bad("unknown sheaf kind '" + kind + "'");
  }

  bool preset = s.sheaf_kind != SheafKind::general;
  const json& strata = require(doc, "scenario", "strata");
  if (!strata.is_array()) bad("strata must be an array");
  for (const json& z : strata) s.strata.push_back(parse_stratum(z, s.group, preset));

  if (preset) {
    s = surface_sheaf_presets(std::move(s));
  } else if (s.ambient_dim == 1) {
    s.global_euler = curve_euler(s.sheaf_rank, sheaf_degree, ambient_genus);
  } else {
    s.global_euler = get_rational(require(amb, "ambient", "euler"), "ambient.euler");
  }

  if (auto it = doc.find("character_table"); it != doc.end()) {
    std::vector<ClassFunction> rows;
    for (const json& row : *it) {
      if (!row.is_array() ||
          static_cast<int>(row.size()) != s.group->num_classes())
        bad("character_table rows must list one value per conjugacy class");
      std::vector<Cyclotomic> vals;
      for (const json& e : row) vals.push_back(get_cyclotomic(e, "character_table"));
      rows.emplace_back(s.group, std::move(vals));
    }
    s.table = irreducible_characters(s.group, std::move(rows));
  } else {
    s.table = irreducible_characters(s.group);
  }

  s.validate();
  return s;
}

}  // namespace ramiq
