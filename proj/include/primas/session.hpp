#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "primas/gallery.hpp"
#include "primas/module.hpp"
#include "primas/valuation.hpp"

namespace primas {

// Runtime configuration: flags beat config file beats defaults. The config
// file location may be overridden with the PRIMAS_CONFIG environment
// variable; the file is JSON with the same keys.
struct Config {
  std::string order = "grevlex";
  long pair_budget = 50000;
  std::uint64_t seed = 42;
  std::string format = "text";  // text | json
  bool cache = true;

  static Config load(const std::optional<std::string>& path_from_flag);
  void apply_engine_settings() const;
  TermOrder term_order() const;
};

// One scripting session: named rings, ideals, modules, cut ideals; executes
// statements in order and prints results in the configured format.
// Exit codes: 0 ok, 2 parse error, 3 computation error, 4 budget exceeded.
class Session {
 public:
  explicit Session(Config cfg, std::ostream& out);

  int exec_script(std::istream& in);
  int exec_text(const std::string& text);

  const Config& config() const { return cfg_; }

 private:
  struct RingDecl {
    CoeffDomain dom;
    std::vector<VarId> vars;
  };

  void exec_statement(const std::string& stmt);
  void emit(const std::string& kind, const std::string& text, const nlohmann::json& extra);

  // declared objects
  std::map<std::string, RingDecl> rings_;
  std::map<std::string, ValueGroup> valrings_;
  std::map<std::string, PolyIdeal> ideals_;
  std::map<std::string, CutIdeal> cuts_;
  std::map<std::string, FgModule> modules_;
  std::string active_ring_;

  Config cfg_;
  std::ostream& out_;

  friend class StatementParser;
};

}  // namespace primas
