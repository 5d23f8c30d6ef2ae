#include "okn/io.h"

#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "okn/parser.h"
#include "okn/sexpr.h"

namespace okn {

namespace {

[[noreturn]] void Fail(const SExpr& at, const std::string& msg) { throw ParseError(at.line, at.column, msg); }

SExpr Single(std::string_view text, const char* head) {
  std::vector<SExpr> holder = ReadSExprs(text);
  if (holder.size() != 1) throw ParseError(1, 1, std::string("expected a single (") + head + " ...) form");
  if (!holder[0].IsForm(head)) Fail(holder[0], std::string("expected (") + head + " ...)");
  return std::move(holder[0]);
}

const std::string& Sym(const SExpr& e, const char* what) {
  if (!e.is_symbol()) Fail(e, std::string("expected ") + what);
  return e.text;
}

int Int(const SExpr& e, const char* what) {
  const std::string& s = Sym(e, what);
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  Fail(e, std::string("expected ") + what);
}

Agent AgentOf(const SExpr& e) {
  const std::string& s = Sym(e, "agent a or b");
  if (s == "a") return Agent::kA;
  if (s == "b") return Agent::kB;
  Fail(e, "expected agent a or b");
}

// Keyword arguments ":key value" starting at items[from]; the rest are
// positional forms.
struct Fields {
  std::map<std::string, const SExpr*> keys;
  std::vector<const SExpr*> rest;
};

Fields Split(const SExpr& form, std::size_t from) {
  Fields f;
  for (std::size_t k = from; k < form.items.size(); ++k) {
    const SExpr& it = form.items[k];
    if (it.is_symbol() && !it.text.empty() && it.text[0] == ':') {
      if (k + 1 >= form.items.size()) Fail(it, "missing value for " + it.text);
      if (!f.keys.emplace(it.text.substr(1), &form.items[k + 1]).second) Fail(it, "duplicate key " + it.text);
      ++k;
    } else {
      f.rest.push_back(&it);
    }
  }
  return f;
}

Vocabulary ReadVocab(const SExpr& form) {
  std::vector<std::string> atoms;
  for (std::size_t k = 1; k < form.items.size(); ++k) atoms.push_back(Sym(form.items[k], "atom"));
  try {
    return Vocabulary(std::move(atoms));
  } catch (const std::exception& e) {
    Fail(form, e.what());
  }
}

World Valuation(const Vocabulary& v, const SExpr& form, std::size_t from) {
  World w = 0;
  for (std::size_t k = from; k < form.items.size(); ++k) {
    const int idx = v.IndexOf(Sym(form.items[k], "atom"));
    if (idx < 0) Fail(form.items[k], "atom " + form.items[k].text + " is not in the vocabulary");
    w |= World{1} << idx;
  }
  return w;
}

}  // namespace

ModelFile ReadModel(std::string_view text) {
  const SExpr top = Single(text, "model");
  std::optional<Vocabulary> vocab;
  std::map<std::string, World> worlds;
  std::map<std::string, const SExpr*> defs;
  const SExpr* point = nullptr;
  for (std::size_t k = 1; k < top.items.size(); ++k) {
    const SExpr& f = top.items[k];
    if (f.IsForm("vocab")) {
      if (vocab) Fail(f, "duplicate vocab");
      vocab = ReadVocab(f);
    } else if (f.IsForm("world")) {
      if (!vocab) Fail(f, "world before vocab");
      if (f.items.size() < 2) Fail(f, "world needs a name");
      if (!worlds.emplace(Sym(f.items[1], "world name"), Valuation(*vocab, f, 2)).second) {
        Fail(f, "duplicate world " + f.items[1].text);
      }
    } else if (f.IsForm("struct")) {
      if (f.items.size() < 2) Fail(f, "struct needs a name");
      if (!defs.emplace(Sym(f.items[1], "structure name"), &f).second) Fail(f, "duplicate struct " + f.items[1].text);
    } else if (f.IsForm("point")) {
      if (point) Fail(f, "duplicate point");
      point = &f;
    } else {
      Fail(f, "unexpected form in model");
    }
  }
  if (!vocab) Fail(top, "missing vocab");
  if (!point) Fail(top, "missing point");

  auto world = [&](const SExpr& e) {
    auto it = worlds.find(Sym(e, "world name"));
    if (it == worlds.end()) Fail(e, "unknown world " + e.text);
    return it->second;
  };
  std::map<std::string, StructurePtr> built;
  std::set<std::string> active;
  std::function<StructurePtr(const SExpr&)> build = [&](const SExpr& ref) -> StructurePtr {
    const std::string& name = Sym(ref, "structure name");
    if (auto it = built.find(name); it != built.end()) return it->second;
    auto d = defs.find(name);
    if (d == defs.end()) Fail(ref, "unknown struct " + name);
    if (!active.insert(name).second) Fail(ref, "struct " + name + " contains itself");
    const SExpr& def = *d->second;
    const Fields fields = Split(def, 2);
    if (!fields.keys.count("agent") || !fields.keys.count("depth")) Fail(def, "struct needs :agent and :depth");
    const Agent agent = AgentOf(*fields.keys.at("agent"));
    const int depth = Int(*fields.keys.at("depth"), "depth");
    if (depth < 1) Fail(*fields.keys.at("depth"), "depth must be at least 1");
    std::vector<Pair> pairs;
    for (const SExpr* p : fields.rest) {
      if (!p->IsForm("pair")) Fail(*p, "expected (pair world [struct])");
      if (depth == 1 && p->items.size() != 2) Fail(*p, "depth-1 pairs take only a world");
      if (depth > 1 && p->items.size() != 3) Fail(*p, "pairs above depth 1 take a world and a struct");
      pairs.push_back({world(p->items[1]), depth == 1 ? nullptr : build(p->items[2])});
    }
    StructurePtr e;
    try {
      e = EpistemicStructure::Make(agent, depth, std::move(pairs));
    } catch (const std::exception& ex) {
      Fail(def, ex.what());
    }
    active.erase(name);
    return built[name] = e;
  };

  const Fields pf = Split(*point, 1);
  if (!pf.rest.empty()) Fail(*pf.rest[0], "unexpected item in point");
  ModelFile out{*vocab, {}};
  if (!pf.keys.count("w")) Fail(*point, "point needs :w");
  out.model.world = world(*pf.keys.at("w"));
  for (Agent i : kAgents) {
    const std::string key = i == Agent::kA ? "ea" : "eb";
    auto it = pf.keys.find(key);
    if (it == pf.keys.end()) continue;
    StructurePtr e = build(*it->second);
    if (e->agent() != i) Fail(*it->second, ":" + key + " must be a structure for agent " + AgentChar(i));
    out.model.structure(i) = e;
  }
  for (auto& [name, _] : pf.keys) {
    if (name != "w" && name != "ea" && name != "eb") Fail(*point, "unknown key :" + name);
  }
  // Unreferenced definitions are still checked.
  for (const auto& [name, def] : defs) build(def->items[1]);
  return out;
}

std::string WriteModel(const Vocabulary& v, const PointedModel& m) {
  std::set<World> used{m.world};
  std::vector<StructurePtr> order;
  std::map<const EpistemicStructure*, std::string> names;
  std::map<StructurePtr, std::string, bool (*)(const StructurePtr&, const StructurePtr&)> canonical(
      [](const StructurePtr& x, const StructurePtr& y) { return Compare(x, y) < 0; });
  std::function<std::string(const StructurePtr&)> visit = [&](const StructurePtr& e) -> std::string {
    if (auto it = canonical.find(e); it != canonical.end()) return it->second;
    for (const Pair& p : e->pairs()) {
      used.insert(p.world);
      if (p.inner) visit(p.inner);
    }
    const std::string name = std::string("e") + AgentChar(e->agent()) + std::to_string(e->depth()) + "_" +
                             std::to_string(order.size());
    order.push_back(e);
    return canonical[e] = name;
  };
  std::string ea, eb;
  if (m.ea) ea = visit(m.ea);
  if (m.eb) eb = visit(m.eb);

  std::ostringstream out;
  out << "(model\n  (vocab";
  for (const std::string& a : v.atoms()) out << ' ' << a;
  out << ")\n";
  auto wname = [](World w) { return "w" + std::to_string(w); };
  for (World w : used) {
    out << "  (world " << wname(w);
    for (const std::string& a : v.TrueAtoms(w)) out << ' ' << a;
    out << ")\n";
  }
  for (const StructurePtr& e : order) {
    out << "  (struct " << canonical[e] << " :agent " << AgentChar(e->agent()) << " :depth " << e->depth();
    for (const Pair& p : e->pairs()) {
      out << "\n    (pair " << wname(p.world);
      if (p.inner) out << ' ' << canonical[p.inner];
      out << ')';
    }
    out << ")\n";
  }
  out << "  (point";
  if (!ea.empty()) out << " :ea " << ea;
  if (!eb.empty()) out << " :eb " << eb;
  out << " :w " << wname(m.world) << "))\n";
  return out.str();
}

KripkeFile ReadKripke(std::string_view text) {
  const SExpr top = Single(text, "kripke");
  std::optional<Vocabulary> vocab;
  const SExpr* worlds = nullptr;
  for (std::size_t k = 1; k < top.items.size(); ++k) {
    const SExpr& f = top.items[k];
    if (f.IsForm("vocab")) {
      if (vocab) Fail(f, "duplicate vocab");
      vocab = ReadVocab(f);
    } else if (f.IsForm("worlds")) {
      if (worlds) Fail(f, "duplicate worlds");
      worlds = &f;
    }
  }
  if (!vocab) Fail(top, "missing vocab");
  if (!worlds) Fail(top, "missing worlds");
  std::vector<std::string> labels;
  for (std::size_t k = 1; k < worlds->items.size(); ++k) labels.push_back(Sym(worlds->items[k], "world label"));
  std::optional<KripkeModel> m;
  try {
    m.emplace(*vocab, labels);
  } catch (const std::exception& e) {
    Fail(*worlds, e.what());
  }
  auto label = [&](const SExpr& e) {
    const int idx = m->IndexOf(Sym(e, "world label"));
    if (idx < 0) Fail(e, "unknown world " + e.text);
    return idx;
  };
  KripkeFile out{*m, std::nullopt};
  std::set<int> valued;
  for (std::size_t k = 1; k < top.items.size(); ++k) {
    const SExpr& f = top.items[k];
    if (f.IsForm("vocab") || f.IsForm("worlds")) continue;
    if (f.IsForm("val")) {
      if (f.items.size() < 2) Fail(f, "val needs a world");
      const int w = label(f.items[1]);
      if (!valued.insert(w).second) Fail(f, "duplicate val for " + f.items[1].text);
      out.model.set_valuation(w, Valuation(*vocab, f, 2));
    } else if (f.IsForm("acc")) {
      if (f.items.size() < 2) Fail(f, "acc needs an agent");
      const Agent i = AgentOf(f.items[1]);
      for (std::size_t e = 2; e < f.items.size(); ++e) {
        const SExpr& edge = f.items[e];
        if (!edge.is_list() || edge.items.size() != 2) Fail(edge, "expected (from to)");
        out.model.AddEdge(i, label(edge.items[0]), label(edge.items[1]));
      }
    } else if (f.IsForm("point")) {
      if (out.point || f.items.size() != 2) Fail(f, "expected a single (point world)");
      out.point = label(f.items[1]);
    } else {
      Fail(f, "unexpected form in kripke");
    }
  }
  return out;
}

std::string WriteKripke(const KripkeModel& m, std::optional<int> point) {
  std::ostringstream out;
  out << "(kripke\n  (vocab";
  for (const std::string& a : m.vocabulary().atoms()) out << ' ' << a;
  out << ")\n  (worlds";
  for (const std::string& l : m.labels()) out << ' ' << l;
  out << ")\n";
  for (int w = 0; w < m.size(); ++w) {
    const auto atoms = m.vocabulary().TrueAtoms(m.valuation(w));
    if (atoms.empty()) continue;
    out << "  (val " << m.labels()[w];
    for (const std::string& a : atoms) out << ' ' << a;
    out << ")\n";
  }
  for (Agent i : kAgents) {
    out << "  (acc " << AgentChar(i);
    for (int w = 0; w < m.size(); ++w) {
      for (int s : m.Successors(i, w)) out << " (" << m.labels()[w] << ' ' << m.labels()[s] << ')';
    }
    out << ")\n";
  }
  if (point) out << "  (point " << m.labels().at(*point) << ")\n";
  std::string s = out.str();
  s.insert(s.size() - 1, ")");
  return s;
}

ProofScript ReadProof(std::string_view text) {
  const SExpr top = Single(text, "proof");
  const Fields fields = Split(top, 1);
  ProofScript script;
  for (auto& [key, value] : fields.keys) {
    if (key != "system") Fail(*value, "unknown key :" + key);
    try {
      script.system = ProofSystem::Parse(Sym(*value, "proof system"));
    } catch (const std::invalid_argument& e) {
      Fail(*value, e.what());
    }
  }
  for (const SExpr* line : fields.rest) {
    if (!line->is_list() || line->items.size() != 3) Fail(*line, "expected (number \"formula\" justification)");
    ProofLine pl;
    pl.number = Int(line->items[0], "line number");
    const SExpr& fs = line->items[1];
    if (!fs.is_string()) Fail(fs, "expected a quoted formula");
    try {
      pl.formula = Parse(fs.text);
    } catch (const ParseError& e) {
      Fail(fs, std::string("in formula: ") + e.what());
    }
    const SExpr& j = line->items[2];
    if (!j.is_list() || j.items.empty()) Fail(j, "expected a justification");
    const std::string& rule = Sym(j.items[0], "rule");
    Justification& why = pl.why;
    std::size_t refs_from = 1;
    if (rule == "axiom") {
      if (j.items.size() < 2 || j.items.size() > 3) Fail(j, "expected (axiom NAME [index])");
      why.axiom = Sym(j.items[1], "axiom name");
      if (why.axiom == "A5") {
        why.index = j.items.size() == 3 ? Int(j.items[2], "A5 index") : 1;
      } else if (j.items.size() == 3) {
        Fail(j.items[2], "only A5 takes an index");
      }
      static const std::set<std::string> known = {"A1", "A2", "A3", "A4", "A5", "A5'", "V1", "V2", "V3", "V4"};
      if (!known.count(why.axiom)) Fail(j.items[1], "unknown axiom " + why.axiom);
      refs_from = j.items.size();
    } else if (rule == "mp") {
      why.rule = Justification::Rule::kMp;
      if (j.items.size() != 3) Fail(j, "expected (mp i j)");
    } else if (rule == "nec") {
      why.rule = Justification::Rule::kNec;
      if (j.items.size() != 4) Fail(j, "expected (nec L|N agent i)");
      const std::string& box = Sym(j.items[1], "L or N");
      if (box == "L") {
        why.box = Formula::Kind::kKnow;
      } else if (box == "N") {
        why.box = Formula::Kind::kAtMost;
      } else {
        Fail(j.items[1], "expected L or N");
      }
      why.agent = AgentOf(j.items[2]);
      refs_from = 3;
    } else if (rule == "nec_val") {
      why.rule = Justification::Rule::kNecVal;
      if (j.items.size() != 2) Fail(j, "expected (nec_val i)");
    } else if (rule == "pl") {
      why.rule = Justification::Rule::kPl;
    } else {
      Fail(j.items[0], "unknown rule " + rule);
    }
    for (std::size_t k = refs_from; k < j.items.size(); ++k) why.refs.push_back(Int(j.items[k], "line number"));
    script.lines.push_back(std::move(pl));
  }
  return script;
}

std::string WriteProof(const ProofScript& script) {
  std::ostringstream out;
  out << "(proof :system " << script.system.ToString();
  for (const ProofLine& l : script.lines) {
    out << "\n  (" << l.number << ' ' << QuoteString(ToString(l.formula)) << " (";
    const Justification& j = l.why;
    switch (j.rule) {
      case Justification::Rule::kAxiom:
        out << "axiom " << j.axiom;
        if (j.axiom == "A5") out << ' ' << j.index;
        break;
      case Justification::Rule::kMp: out << "mp"; break;
      case Justification::Rule::kNec:
        out << "nec " << (j.box == Formula::Kind::kKnow ? 'L' : 'N') << ' ' << AgentChar(j.agent);
        break;
      case Justification::Rule::kNecVal: out << "nec_val"; break;
      case Justification::Rule::kPl: out << "pl"; break;
    }
    for (int r : j.refs) out << ' ' << r;
    out << "))";
  }
  out << ")\n";
  return out.str();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw std::runtime_error("cannot write " + path);
}

}  // namespace okn
