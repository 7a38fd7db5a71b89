#include "conforma/symbols.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace conforma {

struct SymbolTable::Impl {
  mutable std::mutex mu;
  std::deque<std::string> names;
  std::unordered_map<std::string, VarId> ids;
};

SymbolTable::SymbolTable() : impl_(new Impl) {
  for (const char* s : {"d", "l", "m", "n", "alpha", "beta", "a", "b", "c", "gamma1"}) {
    VarId id = static_cast<VarId>(impl_->names.size());
    impl_->names.emplace_back(s);
    impl_->ids.emplace(s, id);
  }
}

SymbolTable& SymbolTable::instance() {
  static SymbolTable table;
  return table;
}

VarId SymbolTable::intern(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->ids.find(name);
  if (it != impl_->ids.end()) return it->second;
  VarId id = static_cast<VarId>(impl_->names.size());
  impl_->names.push_back(name);
  impl_->ids.emplace(name, id);
  return id;
}

bool SymbolTable::lookup(const std::string& name, VarId& out) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto it = impl_->ids.find(name);
  if (it == impl_->ids.end()) return false;
  out = it->second;
  return true;
}

std::string SymbolTable::name(VarId v) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (v >= impl_->names.size()) throw std::out_of_range("unknown VarId");
  return impl_->names[v];
}

std::size_t SymbolTable::size() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->names.size();
}

}  // namespace conforma
