#include "tropenum/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>

#include "json.hpp"

namespace tropenum {

using json = nlohmann::json;

std::string fixtures_dir() {
  if (const char* env = std::getenv("TROPENUM_FIXTURES"); env && *env)
    return env;
#ifdef TROPENUM_SOURCE_FIXTURES
  return TROPENUM_SOURCE_FIXTURES;
#else
  return "fixtures";
#endif
}

namespace {

json load_fixture(const std::string& name) {
  const std::string path = fixtures_dir() + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file " + path);
  return json::parse(in);
}

void require(bool ok, const std::string& condition) {
  if (!ok)
    throw std::invalid_argument("parameter constraint violated: " + condition);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

// Affine integer expressions in the placement variables d, f, y, a:
// signed sums of integer literals and single-letter variables.
std::int64_t eval_affine(const std::string& expr,
                         const std::map<char, std::int64_t>& vars) {
  std::int64_t total = 0;
  int sign = 1;
  std::size_t i = 0;
  bool expect_atom = true;
  while (i < expr.size()) {
    const char ch = expr[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (ch == '+' || ch == '-') {
      sign = (ch == '-') ? -sign : sign;
      expect_atom = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::int64_t v = 0;
      while (i < expr.size() &&
             std::isdigit(static_cast<unsigned char>(expr[i])))
        v = v * 10 + (expr[i++] - '0');
      total += sign * v;
      sign = 1;
      expect_atom = false;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      const auto it = vars.find(ch);
      if (it == vars.end())
        throw std::invalid_argument("unknown variable '" + std::string(1, ch) +
                                    "' in expression " + expr);
      total += sign * it->second;
      sign = 1;
      expect_atom = false;
      ++i;
    } else {
      throw std::invalid_argument("bad character in affine expression " + expr);
    }
    (void)expect_atom;
  }
  return total;
}

std::vector<LatticePoint3> family_points(int family_id,
                                         const FamilyParams& p) {
  const auto a = p.a, b = p.b, c = p.c, d = p.d;
  switch (family_id) {
    case 1:
      return {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {0, 2, 0}, {1, 1, 0}};
    case 8:
      return {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}, {0, 2, 1}, {1, 0, 0}, {1, a, b}};
    case 9:
      return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}};
    case 10:
      return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, a, b}};
    case 13:
      return {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 2, 0}, {1, 0, 0}, {1, a, b}};
    case 14:
      return {{0, 0, 0}, {0, 1, 0}, {0, 1, 1}, {0, 2, 0}, {1, 0, 0}, {1, b, a}};
    case 15:
      return {{0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {1, 0, 0}, {1, a, b}};
    case 16:
      return {{0, 0, 0},     {0, 1, 0}, {0, 2, 0},
              {1, 0, 0},     {1, b, a}, {1, 2 * b, 2 * a}};
    case 17:
      return {{0, 0, 0},     {0, 0, 1}, {0, 1, 0},
              {1, 0, 0},     {1, a, b}, {1, 2 * a, 2 * b}};
    case 20:
      return {{0, 1, 0}, {0, 1, 1}, {0, 2, 0}, {1, 0, a}, {1, 1, 0}, {1, 1, 1}};
    case 21:
      return {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, a, b}, {1, c, d}};
    default:
      throw std::invalid_argument("unknown family id " +
                                  std::to_string(family_id));
  }
}

void validate_params(int family_id, const FamilyParams& p) {
  const auto a = p.a, b = p.b, c = p.c, d = p.d;
  switch (family_id) {
    case 1:
    case 9:
      break;  // parameter-free
    case 8:
      require(0 < b && b < a, "family 8 needs 0 < b < a");
      require(gcd64(a, b) == 1, "family 8 needs gcd(a,b) = 1");
      require(2 * b != a, "family 8 needs 2b != a");
      break;
    case 10:
      require(0 < b && b <= a, "family 10 needs 0 < b <= a");
      require(gcd64(a, b) == 1, "family 10 needs gcd(a,b) = 1");
      break;
    case 13:
    case 14:
      require(0 < b && b < a, "families 13/14 need 0 < b < a");
      require(gcd64(a, b) == 1, "families 13/14 need gcd(a,b) = 1");
      break;
    case 15:
    case 16:
      require(0 <= b && b < a, "families 15/16 need 0 <= b < a");
      require(gcd64(a, b) == 1, "families 15/16 need gcd(a,b) = 1");
      break;
    case 17:
      require(0 < b && b <= a, "family 17 needs 0 < b <= a");
      require(gcd64(a, b) == 1, "family 17 needs gcd(a,b) = 1");
      break;
    case 20:
      require(a >= 3, "family 20 needs a >= 3");
      break;
    case 21:
      require(a > 0 && b > 0 && c > 0 && d > 0,
              "family 21 needs a,b,c,d > 0");
      require(a * d - b * c == 1, "family 21 needs ad - bc = 1");
      require(c + d > a + b, "family 21 needs c + d > a + b");
      require(c > a, "family 21 needs c > a");
      break;
    default:
      throw std::invalid_argument("unknown family id " +
                                  std::to_string(family_id));
  }
}

Binodality family_status(int family_id, const FamilyParams& p) {
  switch (family_id) {
    case 1:
    case 9:
    case 15:
    case 16:
    case 17:
      return Binodality::NotBinodal;
    case 10:
      if ((p.a == 1 && p.b == 1) || (p.a == 2 && p.b == 1))
        return Binodality::NotBinodal;
      return Binodality::Binodal;
    case 13:
    case 14:
      if ((p.a == 2 && p.b == 1) || (p.a == 3 && p.b == 1))
        return Binodality::NotBinodal;
      return Binodality::Binodal;
    case 20:
      return p.a == 3 ? Binodality::NotBinodal : Binodality::Binodal;
    default:
      return Binodality::Binodal;  // 8, 21
  }
}

void require_binodal_formula_family(const FamilyInstance& inst) {
  if (inst.status != Binodality::Binodal)
    throw std::invalid_argument("family " + std::to_string(inst.family_id) +
                                " instance is not binodal at these parameters");
  if (inst.family_id == 8)
    throw NoFormulaError(
        "family 8 has no closed-form degree; use the family-8 fixture table");
}

}  // namespace

const std::vector<int>& catalog_family_ids() {
  static const std::vector<int> ids{1, 8, 9, 10, 13, 14, 15, 16, 17, 20, 21};
  return ids;
}

FamilyInstance instantiate(int family_id, const FamilyParams& params) {
  validate_params(family_id, params);
  LatticePolytope polytope(family_points(family_id, params));
  const auto count = polytope.lattice_points().size();
  const auto width = lattice_width(polytope);
  return FamilyInstance{family_id,
                        params,
                        std::move(polytope),
                        family_status(family_id, params),
                        count,
                        width};
}

Int binodal_degree(const FamilyInstance& inst) {
  require_binodal_formula_family(inst);
  const Int a = inst.params.a, b = inst.params.b, c = inst.params.c,
            d = inst.params.d;
  const Int kappa = (a + b) % 2;
  switch (inst.family_id) {
    case 10:
      return (a - 2) * (a + b + 2);
    case 13:
      return (a * a + b * b + (kappa - 2) * (a + b)) / 2 + a * b - 4 + kappa;
    case 14:
      return (a + 1) * (a + b - 4 + kappa);
    case 20:
      return (a - 3) * (a + 2);
    case 21:
      return (d + c + 2) * (d + c - 4);
    default:
      throw std::invalid_argument("no degree formula for family " +
                                  std::to_string(inst.family_id));
  }
}

std::vector<Int> path_multiplicities(const FamilyInstance& inst) {
  require_binodal_formula_family(inst);
  const Int a = inst.params.a, b = inst.params.b, c = inst.params.c,
            d = inst.params.d;
  const Int kappa = (a + b) % 2;
  switch (inst.family_id) {
    case 10:
      return {a - 2, a * (a - 2), a - 2, b * (a - 2)};
    case 13:
      return {(a * a - b * b + (kappa - 4) * (a - b)) / 2, a + b - 4 + kappa,
              b * (a + b - 4 + kappa)};
    case 14:
      return {a + b - 4 + kappa, a * (a + b - 4 + kappa)};
    case 20:
      return {a - 3, a - 3, a - 3, a - 3, (a - 2) * (a - 3)};
    case 21:
      return {c + d - 4, c * (c + d - 4), c + d - 4, (d - b) * (c + d - 4),
              b * (c + d - 4)};
    default:
      throw std::invalid_argument("no multiplicity formulas for family " +
                                  std::to_string(inst.family_id));
  }
}

std::optional<Family8Entry> family8_fixture(std::int64_t a, std::int64_t b) {
  static const json table = load_fixture("family8_degrees.json");
  for (const auto& cell : table.at("cells")) {
    if (cell.at("a").get<std::int64_t>() != a ||
        cell.at("b").get<std::int64_t>() != b)
      continue;
    Family8Entry entry;
    entry.degree = Int(cell.at("degree").get<std::int64_t>());
    for (const auto& m : cell.at("split"))
      entry.split.push_back(Int(m.get<std::int64_t>()));
    return entry;
  }
  return std::nullopt;
}

std::vector<Placement> placements(int family_id, std::int64_t d) {
  if (family_id != 10 && family_id != 13 && family_id != 20)
    throw std::invalid_argument(
        "placements are defined for families 10, 13 and 20 only");
  static const json rules = load_fixture("placement_rules.json");
  static const std::string column_names = "ABCDEF";

  std::vector<Placement> out;
  for (const auto& rule : rules.at("rules")) {
    if (rule.at("family").get<int>() != family_id) continue;
    if (d < rule.at("threshold_d").get<std::int64_t>()) continue;
    for (std::int64_t f = 0; f <= d; ++f)
      for (std::int64_t y = 0; y <= d; ++y)
        for (std::int64_t a = 0; a <= d; ++a) {
          const std::map<char, std::int64_t> vars{
              {'d', d}, {'f', f}, {'y', y}, {'a', a}};
          bool ok = true;
          for (const auto& c : rule.at("constraints"))
            ok = ok && eval_affine(c.get<std::string>(), vars) >= 0;
          if (!ok) continue;
          std::vector<LatticePoint3> cols;
          for (const char name : column_names) {
            const auto& col = rule.at("columns").at(std::string(1, name));
            LatticePoint3 q{eval_affine(col[0].get<std::string>(), vars),
                            eval_affine(col[1].get<std::string>(), vars),
                            eval_affine(col[2].get<std::string>(), vars)};
            // Containment in d*Delta_3 must follow from the constraints.
            if (q.x < 0 || q.y < 0 || q.z < 0 || q.x + q.y + q.z > d)
              throw std::logic_error(
                  "placement rule emitted a column outside the simplex");
            cols.push_back(q);
          }
          std::vector<LatticePoint3> path;
          for (const auto& name : rule.at("path"))
            path.push_back(
                cols[column_names.find(name.get<std::string>()[0])]);
          const auto& mult = rule.at("multiplicity");
          const std::string expr =
              (a % 2 == 0) ? mult.at("even").get<std::string>()
                           : mult.at("odd").get<std::string>();
          out.push_back(Placement{family_id, rule.at("variant").get<int>(), d,
                                  f, y, a, LatticePolytope(cols),
                                  std::move(path),
                                  Int(eval_affine(expr, vars))});
        }
  }
  return out;
}

}  // namespace tropenum
