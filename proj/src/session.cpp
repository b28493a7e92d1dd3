#include "primas/session.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "primas/decompose.hpp"
#include "primas/error.hpp"
#include "primas/groebner.hpp"

namespace primas {

using nlohmann::json;

Config Config::load(const std::optional<std::string>& path_from_flag) {
  Config cfg;
  std::string path;
  if (path_from_flag) {
    path = *path_from_flag;
  } else if (const char* env = std::getenv("PRIMAS_CONFIG")) {
    path = env;
  }
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw UnsupportedInput("cannot open config file: " + path);
  json j = json::parse(in);
  if (j.contains("order")) cfg.order = j["order"].get<std::string>();
  if (j.contains("pair_budget")) cfg.pair_budget = j["pair_budget"].get<long>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("format")) cfg.format = j["format"].get<std::string>();
  if (j.contains("cache")) cfg.cache = j["cache"].get<bool>();
  return cfg;
}

void Config::apply_engine_settings() const {
  EngineConfig::pair_budget.store(pair_budget);
  EngineConfig::cache_enabled.store(cache);
}

TermOrder Config::term_order() const {
  if (order == "lex") return TermOrder::lex();
  if (order == "grevlex") return TermOrder::grevlex();
  throw UnsupportedInput("unknown term order: " + order);
}

Session::Session(Config cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {
  cfg_.apply_engine_settings();
}

namespace {

// Splits a statement into coarse tokens: identifiers, numbers, and single
// punctuation characters. Polynomial text is re-assembled from token spans,
// so the polynomial grammar stays in one place (parse_polynomial).
struct Tok {
  std::string text;
  std::size_t pos;
};

std::vector<Tok> tokenize(const std::string& s) {
  std::vector<Tok> toks;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      toks.push_back({s.substr(i, j - i), i});
      i = j;
    } else {
      toks.push_back({std::string(1, c), i});
      ++i;
    }
  }
  return toks;
}

}  // namespace

class StatementParser {
 public:
  StatementParser(Session& s, const std::string& text)
      : s_(s), text_(text), toks_(tokenize(text)) {}

  void run();

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, pos_ < toks_.size() ? toks_[pos_].pos : text_.size());
  }
  bool at_end() const { return pos_ >= toks_.size(); }
  const std::string& peek() const {
    static const std::string empty;
    return at_end() ? empty : toks_[pos_].text;
  }
  std::string take() {
    if (at_end()) fail("unexpected end of statement");
    return toks_[pos_++].text;
  }
  void expect(const std::string& t) {
    if (peek() != t) fail("expected '" + t + "'");
    ++pos_;
  }
  bool accept(const std::string& t) {
    if (peek() == t) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string ident() {
    if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()[0])))
      fail("expected a name");
    return take();
  }

  // raw text until a top-level ',', ')' or ']'
  std::string poly_text() {
    std::string out;
    int depth = 0;
    while (!at_end()) {
      const std::string& t = peek();
      if (depth == 0 && (t == "," || t == ")" || t == "]")) break;
      if (t == "(") ++depth;
      if (t == ")") --depth;
      out += take();
      out += " ";
    }
    return out;
  }

  Session::RingDecl& active_ring() {
    if (s_.active_ring_.empty()) fail("no ring declared yet");
    return s_.rings_.at(s_.active_ring_);
  }

  Polynomial parse_poly_here(const std::string& txt) {
    Session::RingDecl& r = active_ring();
    return parse_polynomial(txt, r.dom, &r.vars);
  }

  // '(' p1, ..., pk ')'
  PolyIdeal ideal_literal() {
    expect("(");
    std::vector<Polynomial> gens;
    if (!accept(")")) {
      while (true) {
        gens.push_back(parse_poly_here(poly_text()));
        if (accept(")")) break;
        expect(",");
      }
    }
    return PolyIdeal(std::move(gens), s_.cfg_.term_order());
  }

  // an ideal by name or literal
  PolyIdeal ideal_arg() {
    if (peek() == "(") return ideal_literal();
    std::string name = ident();
    auto it = s_.ideals_.find(name);
    if (it == s_.ideals_.end()) fail("unknown ideal '" + name + "'");
    return it->second;
  }

  const CutIdeal* cut_by_name() {
    if (at_end()) return nullptr;
    auto it = s_.cuts_.find(peek());
    return it == s_.cuts_.end() ? nullptr : &it->second;
  }

  FgModule module_arg() {
    accept("module");
    std::string name = ident();
    auto it = s_.modules_.find(name);
    if (it == s_.modules_.end()) fail("unknown module '" + name + "'");
    return it->second;
  }

  void check_fresh(const std::string& name) {
    if (s_.rings_.count(name) || s_.valrings_.count(name) || s_.ideals_.count(name) ||
        s_.cuts_.count(name) || s_.modules_.count(name))
      fail("name '" + name + "' is already declared");
  }

  long integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()[0])))
      fail("expected an integer");
    return std::stol(take());
  }

  GroupElem group_elem_literal(const ValueGroup& g) {
    // (a,b) or a single number/fraction; entries may be negative
    std::vector<mpq_class> v;
    bool parens = accept("(");
    while (true) {
      bool neg = accept("-");
      std::string num = take();
      mpq_class q(num);
      if (accept("/")) q /= mpq_class(take());
      v.push_back(neg ? mpq_class(-q) : q);
      if (!parens || !accept(",")) break;
    }
    if (parens) expect(")");
    if (static_cast<int>(v.size()) != g.rank) fail("value has wrong rank");
    return v;
  }

  CutIdeal cut_literal(const ValueGroup& g) {
    // cut>=((1,0)) or cut>(0)
    if (take() != "cut") fail("expected cut literal");
    expect(">");
    bool closed = accept("=");
    expect("(");
    GroupElem v = group_elem_literal(g);
    expect(")");
    return closed ? CutIdeal::closed_at(g, v) : CutIdeal::open_at(g, v);
  }

  MultSetSpec mult_set_spec() {
    std::string kind = ident();
    if (kind == "powers") {
      expect("(");
      Polynomial f = parse_poly_here(poly_text());
      expect(")");
      return MultSetSpec::powers_of(f);
    }
    if (kind == "complement") {
      expect("(");
      std::vector<VarId> vs;
      if (!accept(")")) {
        while (true) {
          std::string v = poly_text();
          Polynomial p = parse_poly_here(v);
          auto m = p.as_monomial();
          if (!m || m->degree() != 1) fail("complement(...) takes variables");
          vs.push_back(m->entries().front().first);
          if (accept(")")) break;
          expect(",");
        }
      }
      return MultSetSpec::complement_of_prime(vs);
    }
    if (kind == "set") {
      expect("(");
      std::vector<Polynomial> fs;
      while (true) {
        fs.push_back(parse_poly_here(poly_text()));
        if (accept(")")) break;
        expect(",");
      }
      return MultSetSpec::finitely_generated(fs);
    }
    if (kind == "extend") {
      expect("(");
      MultSetSpec base = mult_set_spec();
      expect(",");
      Polynomial a = parse_poly_here(poly_text());
      expect(")");
      return MultSetSpec::extended(base, a);
    }
    fail("unknown multiplicative set spec '" + kind + "'");
  }

  std::string print_ideal(const PolyIdeal& I) {
    if (I.gens.empty()) return "(0)";
    if (auto m = as_monomial_ideal(I)) return m->str();
    GroebnerBasis G = buchberger(I);
    std::string s = "(";
    for (std::size_t i = 0; i < G.elems.size(); ++i) {
      if (i) s += ", ";
      s += G.elems[i].str(G.order);
    }
    return s + ")";
  }

  MonomialIdeal monomial_arg() {
    PolyIdeal I = ideal_arg();
    auto m = as_monomial_ideal(I);
    if (!m) throw UnsupportedInput("operation needs a monomial ideal: " + I.str());
    return *m;
  }

  Session& s_;
  const std::string& text_;
  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
};

void Session::emit(const std::string& kind, const std::string& text, const json& extra) {
  if (cfg_.format == "json") {
    json j;
    j["kind"] = kind;
    j["result"] = text;
    if (!extra.is_null()) j["detail"] = extra;
    out_ << j.dump() << "\n";
  } else {
    out_ << text << "\n";
    if (!extra.is_null() && extra.contains("pretty"))
      out_ << extra["pretty"].get<std::string>() << "\n";
  }
}

void StatementParser::run() {
  std::string cmd = ident();

  if (cmd == "ring") {
    std::string name = ident();
    check_fresh(name);
    expect("=");
    std::string dom_name = ident();
    CoeffDomain dom;
    if (dom_name == "Q") {
      dom = CoeffDomain::Q();
    } else if (dom_name == "Fp") {
      expect("(");
      dom = CoeffDomain::Fp(static_cast<std::uint32_t>(integer()));
      expect(")");
    } else {
      fail("unknown coefficient domain '" + dom_name + "'");
    }
    expect("[");
    std::vector<VarId> vs;
    while (true) {
      std::string v = take();
      int index = -1;
      std::string base = v;
      if (auto us = v.find('_'); us != std::string::npos) {
        base = v.substr(0, us);
        index = std::stoi(v.substr(us + 1));
      }
      vs.push_back(vars::intern(base, index));
      if (accept("]")) break;
      expect(",");
    }
    s_.rings_[name] = {dom, vs};
    s_.active_ring_ = name;
    s_.emit("ring", "ring " + name + " = " + dom.str() + ", " +
                        std::to_string(vs.size()) + " variables", {});
    return;
  }

  if (cmd == "valring") {
    std::string name = ident();
    check_fresh(name);
    expect("=");
    std::string kind = ident();
    ValueGroup g;
    if (kind == "Zlex") {
      expect("(");
      g = ValueGroup::Zlex(static_cast<int>(integer()));
      expect(")");
    } else if (kind == "Q") {
      g = ValueGroup::Q();
    } else {
      fail("unknown value group '" + kind + "'");
    }
    s_.valrings_[name] = g;
    s_.emit("valring", "valuation ring " + name + " with value group " + g.str(), {});
    return;
  }

  if (cmd == "ideal") {
    std::string name = ident();
    check_fresh(name);
    expect("=");
    PolyIdeal I = ideal_literal();
    s_.ideals_[name] = I;
    s_.emit("ideal", "ideal " + name + " = " + print_ideal(I), {});
    return;
  }

  if (cmd == "cut") {
    std::string name = ident();
    check_fresh(name);
    expect("=");
    // the literal needs its value group, so scan ahead for "in <valring>"
    std::size_t in_pos = pos_;
    while (in_pos < toks_.size() && toks_[in_pos].text != "in") ++in_pos;
    if (in_pos + 1 >= toks_.size()) fail("cut declaration needs 'in <valring>'");
    auto vr = s_.valrings_.find(toks_[in_pos + 1].text);
    if (vr == s_.valrings_.end()) fail("unknown valuation ring");
    CutIdeal c = cut_literal(vr->second);
    expect("in");
    ident();
    s_.cuts_.emplace(name, c);
    s_.emit("cut", "cut " + name + " = " + c.str() + " in " + vr->first, {});
    return;
  }

  if (cmd == "module") {
    std::string name = ident();
    check_fresh(name);
    expect("=");
    std::vector<PolyIdeal> summands;
    while (true) {
      std::string ring = ident();
      if (!s_.rings_.count(ring)) fail("unknown ring '" + ring + "'");
      expect("/");
      summands.push_back(ideal_arg());
      // direct-sum separator (+)
      if (accept("(")) {
        expect("+");
        expect(")");
        continue;
      }
      break;
    }
    FgModule M = FgModule::direct_sum(summands);
    s_.modules_.emplace(name, M);
    s_.emit("module", "module " + name + " = " + M.str(), {});
    return;
  }

  if (cmd == "decompose") {
    MonomialIdeal I = monomial_arg();
    DecompositionReport rep = primary_decompose_monomial(I);
    json detail;
    detail["components"] = json::array();
    for (const auto& c : rep.components)
      detail["components"].push_back({{"component", c.component.str()},
                                      {"prime", c.prime.str()}});
    detail["certified"] = rep.verify();
    detail["normalized"] = rep.normalized;
    std::string pretty = "  certificates: intersection=";
    pretty += rep.certs.intersection_equal ? "ok" : "FAIL";
    pretty += ", primary-components=ok, distinct-primes=";
    pretty += rep.certs.distinct_primes ? "ok" : "FAIL";
    pretty += ", irredundancy-witnesses=[";
    for (std::size_t i = 0; i < rep.certs.irredundancy_witness.size(); ++i) {
      if (i) pretty += ", ";
      pretty += rep.certs.irredundancy_witness[i].str();
    }
    pretty += "]";
    detail["pretty"] = pretty;
    s_.emit("decompose", rep.str(), detail);
    return;
  }

  if (cmd == "normalize") {
    // normalize I1, I2, ... : treat the ideals as primary components
    if (at_end()) fail("normalize needs at least one component");
    std::vector<PrimaryComponent> comps;
    MonomialIdeal ambient = MonomialIdeal::unit();
    bool first = true;
    while (!at_end()) {
      PolyIdeal I = ideal_arg();
      auto m = as_monomial_ideal(I);
      if (!m) throw UnsupportedInput("normalize needs monomial components");
      auto prime = m->is_primary();
      if (!prime) throw UnsupportedInput("component " + m->str() + " is not primary");
      comps.push_back({*m, *prime});
      ambient = first ? *m : ambient.intersect(*m);
      first = false;
      if (!accept(",")) break;
    }
    DecompositionReport rep = normalize_decomposition(comps, ambient);
    s_.emit("normalize", rep.str(), json{{"certified", rep.verify()}});
    return;
  }

  if (cmd == "radical") {
    if (const CutIdeal* c = cut_by_name()) {
      s_.emit("radical", cut_radical(*c).str(), {});
      return;
    }
    MonomialIdeal I = monomial_arg();
    s_.emit("radical", I.radical().str(), {});
    return;
  }

  if (cmd == "minprimes") {
    MonomialIdeal I = monomial_arg();
    if (I.is_unit()) throw UnsupportedInput("minimal primes of the unit ideal");
    std::string out;
    for (const auto& p : I.minimal_primes()) {
      if (!out.empty()) out += ", ";
      out += p.str();
    }
    s_.emit("minprimes", "{" + out + "}", {});
    return;
  }

  if (cmd == "quotient") {
    if (const CutIdeal* a = cut_by_name()) {
      take();
      const CutIdeal* b = cut_by_name();
      if (!b) fail("quotient of a cut needs a second cut");
      take();
      s_.emit("quotient", cut_quotient(*a, *b).str(), {});
      return;
    }
    PolyIdeal I = ideal_arg();
    PolyIdeal J = ideal_arg();
    s_.emit("quotient", print_ideal(ideal_quotient(I, J)), {});
    return;
  }

  if (cmd == "saturate") {
    PolyIdeal I = ideal_arg();
    expect("by");
    // '(' f ')' or bare polynomial text
    Polynomial f = accept("(") ? [&] {
      Polynomial p = parse_poly_here(poly_text());
      expect(")");
      return p;
    }()
                               : parse_poly_here(poly_text());
    s_.emit("saturate", print_ideal(saturate(I, f)), {});
    return;
  }

  if (cmd == "intersect") {
    if (const CutIdeal* a = cut_by_name()) {
      take();
      const CutIdeal* b = cut_by_name();
      if (!b) fail("intersect of a cut needs a second cut");
      take();
      s_.emit("intersect", cut_intersect(*a, *b).str(), {});
      return;
    }
    PolyIdeal I = ideal_arg();
    PolyIdeal J = ideal_arg();
    s_.emit("intersect", print_ideal(intersect(I, J)), {});
    return;
  }

  if (cmd == "scomp") {
    PolyIdeal I = ideal_arg();
    expect("by");
    MultSetSpec S = mult_set_spec();
    s_.emit("scomp", print_ideal(s_component(I, S)), {});
    return;
  }

  if (cmd == "classify") {
    const CutIdeal* c = cut_by_name();
    if (!c) fail("classify needs a declared cut ideal");
    take();
    s_.emit("classify", cut_classify(*c).str(), {});
    return;
  }

  if (cmd == "ass" || cmd == "ass0" || cmd == "ass1") {
    FgModule M = [&] {
      if (peek() == "module" || s_.modules_.count(peek())) return module_arg();
      // an ideal argument means the cyclic module R/I
      return FgModule::cyclic(ideal_arg());
    }();
    PrimeSet ps = cmd == "ass" ? ass(M) : cmd == "ass0" ? ass0(M) : ass1(M);
    s_.emit(cmd, ps.str(), {});
    return;
  }

  if (cmd == "supp") {
    PolyIdeal P = ideal_arg();
    auto mp = as_monomial_ideal(P);
    if (!mp || !mp->is_variable_prime())
      throw UnsupportedInput("supp takes a variable-subset prime");
    FgModule M = module_arg();
    s_.emit("supp", supp_contains(*mp, M) ? "true" : "false", {});
    return;
  }

  if (cmd == "modradical") {
    FgModule M = module_arg();
    s_.emit("modradical", module_radical(M).str(), {});
    return;
  }

  if (cmd == "colon") {
    FgModule M = module_arg();
    if (accept("[")) {
      ModElement x;
      while (true) {
        x.comps.push_back(parse_poly_here(poly_text()));
        if (accept("]")) break;
        expect(",");
      }
      s_.emit("colon", print_ideal(annihilator(x, M)), {});
    } else {
      // ((0) : M) = Ann_R(M): the zero submodule is the summand ideals
      std::vector<ModElement> gens;
      for (std::size_t i = 0; i < M.summand_count(); ++i) gens.push_back(M.generator(i));
      s_.emit("colon", print_ideal(colon(M.summands(), gens, M)), {});
    }
    return;
  }

  if (cmd == "gallery") {
    std::string sub = ident();
    if (sub == "list") {
      for (const ScenarioInfo& info : list_examples())
        s_.emit("gallery", info.id + ": " + info.title + " (" +
                               std::to_string(info.claims.size()) + " claims)",
                {});
      return;
    }
    if (sub == "run") {
      std::string id = take();
      while (peek() == "-") {  // allow ids with dashes
        take();
        id += "-" + take();
      }
      GalleryParams p;
      bool overridden = false;
      p.seed = s_.cfg_.seed;
      while (!at_end()) {
        std::string key = ident();
        expect("=");
        long val = integer();
        overridden = true;
        if (key == "n" || key == "truncation")
          p.truncation = static_cast<int>(val);
        else if (key == "samples")
          p.samples = static_cast<int>(val);
        else if (key == "seed")
          p.seed = static_cast<std::uint64_t>(val);
        else if (key == "degree")
          p.degree_bound = static_cast<int>(val);
        else if (key == "power")
          p.power_bound = static_cast<int>(val);
        else
          fail("unknown gallery parameter '" + key + "'");
      }
      ExampleReport rep =
          run_example(id, overridden || s_.cfg_.seed != 42
                              ? std::optional<GalleryParams>(p)
                              : std::nullopt);
      if (s_.cfg_.format == "json") {
        s_.out_ << rep.to_json().dump(2) << "\n";
      } else {
        s_.out_ << "gallery " << rep.id << ": " << (rep.pass() ? "pass" : "FAIL")
                << " (" << rep.elapsed_ms << " ms)\n";
        for (const ClaimReport& c : rep.claims)
          s_.out_ << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << " ("
                  << c.mode << "): " << c.anchor << "\n";
        s_.out_ << rep.to_json().dump(2) << "\n";  // the report itself
      }
      if (!rep.pass()) throw UnsupportedInput("gallery scenario failed: " + id);
      return;
    }
    fail("gallery subcommand must be list or run");
  }

  if (cmd == "config") {
    std::string key = ident();
    if (key == "seed") {
      s_.cfg_.seed = static_cast<std::uint64_t>(integer());
    } else if (key == "budget") {
      s_.cfg_.pair_budget = integer();
    } else if (key == "order") {
      s_.cfg_.order = ident();
      s_.cfg_.term_order();  // validate
    } else if (key == "format") {
      s_.cfg_.format = ident();
      if (s_.cfg_.format != "text" && s_.cfg_.format != "json")
        fail("format must be text or json");
    } else if (key == "cache") {
      std::string v = ident();
      if (v != "on" && v != "off") fail("cache must be on or off");
      s_.cfg_.cache = v == "on";
    } else {
      fail("unknown config key '" + key + "'");
    }
    s_.cfg_.apply_engine_settings();
    s_.emit("config", "config " + key + " updated", {});
    return;
  }

  fail("unknown command '" + cmd + "'");
}

int Session::exec_text(const std::string& text) {
  std::istringstream in(text);
  return exec_script(in);
}

int Session::exec_script(std::istream& in) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t pos = 0;
  while (pos < all.size()) {
    std::size_t semi = all.find(';', pos);
    std::string stmt =
        semi == std::string::npos ? all.substr(pos) : all.substr(pos, semi - pos);
    pos = semi == std::string::npos ? all.size() : semi + 1;
    // strip comments (# to end of line) and whitespace
    std::string cleaned;
    bool comment = false;
    for (char c : stmt) {
      if (c == '#') comment = true;
      if (c == '\n') comment = false;
      if (!comment) cleaned += c;
    }
    bool blank = std::all_of(cleaned.begin(), cleaned.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    try {
      exec_statement(cleaned);
    } catch (const ParseError& e) {
      out_ << "parse error: " << e.what() << "\n";
      return 2;
    } catch (const BudgetExceeded& e) {
      out_ << "budget exceeded: " << e.what() << "\n";
      return 4;
    } catch (const Error& e) {
      out_ << "error: " << e.what() << "\n";
      return 3;
    }
  }
  return 0;
}

void Session::exec_statement(const std::string& stmt) {
  StatementParser(*this, stmt).run();
}

}  // namespace primas
