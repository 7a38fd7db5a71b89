#include "conforma/specfile.hpp"

#include <map>
#include <stdexcept>

#include "conforma/parser.hpp"

namespace conforma {

namespace {

std::string family_str(Family f) {
  switch (f) {
    case Family::L: return "L";
    case Family::H: return "H";
    case Family::X: return "X";
    case Family::Cur: return "C";
    case Family::Gc: return "J";
  }
  return "?";
}

GeneratorId parse_gen(const std::string& s) {
  if (s == "L") return gen_L();
  auto make = [&](Family f) {
    auto us = s.find('_');
    if (us == std::string::npos) throw std::invalid_argument("bad generator name: " + s);
    int idx = std::stoi(s.substr(us + 1));
    GeneratorId g;
    g.fam = f;
    g.a = idx;
    return g;
  };
  switch (s[0]) {
    case 'H': return make(Family::H);
    case 'X': return make(Family::X);
    case 'C': return make(Family::Cur);
    default: throw std::invalid_argument("bad generator name: " + s);
  }
}

}  // namespace

nlohmann::json emit_spec_json(const Algebra& A, int grade_hi) {
  nlohmann::json doc;
  doc["name"] = A.name;
  doc["parameters"] = nlohmann::json::array();
  for (VarId p : A.parameters) doc["parameters"].push_back(symbol_name(p));

  std::vector<GeneratorId> gens =
      A.finite() ? A.finite_basis : A.window_gens(grade_hi);

  // Group generators by family with their grade range.
  std::map<Family, std::pair<int, int>> ranges;
  for (const auto& g : gens) {
    auto it = ranges.find(g.fam);
    if (it == ranges.end())
      ranges[g.fam] = {g.a, g.a};
    else {
      it->second.first = std::min(it->second.first, g.a);
      it->second.second = std::max(it->second.second, g.a);
    }
  }
  doc["generators"] = nlohmann::json::array();
  for (const auto& [fam, range] : ranges) {
    nlohmann::json e;
    e["family"] = family_str(fam);
    e["grade-range"] = {range.first, range.second};
    doc["generators"].push_back(e);
  }

  doc["brackets"] = nlohmann::json::array();
  for (const auto& x : gens)
    for (const auto& y : gens) {
      Element v = A.table(x, y, kVarL);
      if (v.is_zero()) continue;
      nlohmann::json entry;
      entry["lhs"] = gen_str(x);
      entry["rhs"] = gen_str(y);
      entry["value"] = nlohmann::json::array();
      for (const auto& [g, p] : v.comps()) {
        nlohmann::json t;
        t["gen"] = gen_str(g);
        t["poly"] = p.str();
        entry["value"].push_back(t);
      }
      doc["brackets"].push_back(entry);
    }
  return doc;
}

Algebra load_spec_json(const nlohmann::json& doc) {
  Algebra A;
  A.name = doc.at("name").get<std::string>();
  ParseContext ctx;
  if (doc.contains("parameters"))
    for (const auto& p : doc.at("parameters")) {
      VarId v = intern_symbol(p.get<std::string>());
      A.parameters.push_back(v);
      ctx.parameters.insert(v);
    }

  struct Range {
    int lo, hi;
  };
  auto ranges = std::make_shared<std::map<Family, Range>>();
  auto gens = std::make_shared<std::vector<GeneratorId>>();
  for (const auto& ge : doc.at("generators")) {
    std::string fam = ge.at("family").get<std::string>();
    int lo = ge.at("grade-range").at(0).get<int>();
    int hi = ge.at("grade-range").at(1).get<int>();
    Family f;
    if (fam == "L")
      f = Family::L;
    else if (fam == "H")
      f = Family::H;
    else if (fam == "X")
      f = Family::X;
    else if (fam == "C")
      f = Family::Cur;
    else
      throw std::invalid_argument("unsupported generator family: " + fam);
    (*ranges)[f] = {lo, hi};
    for (int i = lo; i <= hi; ++i) {
      GeneratorId g;
      g.fam = f;
      g.a = f == Family::L ? 0 : i;
      gens->push_back(g);
      if (f == Family::L) break;
    }
  }

  auto table = std::make_shared<std::map<std::pair<GeneratorId, GeneratorId>, Element>>();
  if (doc.contains("brackets"))
    for (const auto& be : doc.at("brackets")) {
      GeneratorId lhs = parse_gen(be.at("lhs").get<std::string>());
      GeneratorId rhs = parse_gen(be.at("rhs").get<std::string>());
      Element v;
      for (const auto& te : be.at("value")) {
        GeneratorId g = parse_gen(te.at("gen").get<std::string>());
        v += Element(g, parse_poly(te.at("poly").get<std::string>(), ctx));
      }
      (*table)[{lhs, rhs}] = v;
    }

  A.finite_basis = *gens;
  A.valid = [ranges](const GeneratorId& g) {
    auto it = ranges->find(g.fam);
    if (it == ranges->end()) return false;
    if (g.fam == Family::L) return true;
    return g.a >= it->second.lo && g.a <= it->second.hi;
  };
  A.grade = [](const GeneratorId& g) { return g.fam == Family::L ? 0 : g.a; };
  A.window_gens = [gens](int level) {
    std::vector<GeneratorId> out;
    for (const auto& g : *gens)
      if (g.fam == Family::L || g.a <= level) out.push_back(g);
    return out;
  };
  A.rule = [table](const GeneratorId& x, const GeneratorId& y, VarId slot) -> Element {
    auto direct = table->find({x, y});
    if (direct != table->end()) {
      Poly lam = Poly::var(slot);
      return direct->second.map_coeffs([&](const Poly& p) { return p.substitute(kVarL, lam); });
    }
    auto rev = table->find({y, x});
    if (rev != table->end()) {
      // [x_slot y] = -([y_m x] with m -> -slot - d)
      Poly repl = -Poly::var(slot) - poly_d();
      return (-rev->second).map_coeffs([&](const Poly& p) { return p.substitute(kVarL, repl); });
    }
    return Element();
  };
  return A;
}

}  // namespace conforma
