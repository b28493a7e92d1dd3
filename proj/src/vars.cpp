#include "primas/vars.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace primas::vars {
namespace {

struct Pool {
  std::shared_mutex mu;
  std::vector<std::pair<std::string, int>> info;
  std::map<std::pair<std::string, int>, VarId> lookup;
};

Pool& pool() {
  static Pool* p = new Pool();
  return *p;
}

}  // namespace

VarId intern(std::string_view name, int index) {
  Pool& p = pool();
  std::pair<std::string, int> key{std::string(name), index};
  {
    std::shared_lock lk(p.mu);
    auto it = p.lookup.find(key);
    if (it != p.lookup.end()) return it->second;
  }
  std::unique_lock lk(p.mu);
  auto [it, inserted] = p.lookup.try_emplace(key, static_cast<VarId>(p.info.size()));
  if (inserted) p.info.push_back(key);
  return it->second;
}

const std::string& name(VarId v) {
  Pool& p = pool();
  std::shared_lock lk(p.mu);
  return p.info[v].first;
}

int index(VarId v) {
  Pool& p = pool();
  std::shared_lock lk(p.mu);
  return p.info[v].second;
}

std::string display(VarId v) {
  Pool& p = pool();
  std::shared_lock lk(p.mu);
  const auto& [nm, idx] = p.info[v];
  if (idx < 0) return nm;
  return nm + "_" + std::to_string(idx);
}

int rank_cmp(VarId a, VarId b) {
  if (a == b) return 0;
  Pool& p = pool();
  std::shared_lock lk(p.mu);
  const auto& ia = p.info[a];
  const auto& ib = p.info[b];
  if (int c = ia.first.compare(ib.first); c != 0) return c < 0 ? -1 : 1;
  if (ia.second != ib.second) return ia.second < ib.second ? -1 : 1;
  return 0;
}

bool rank_less(VarId a, VarId b) { return rank_cmp(a, b) < 0; }

}  // namespace primas::vars
