#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mltt/term.hpp"

namespace mltt {

struct Declaration {
  enum class Kind { Def, Assume };

  Kind kind = Kind::Def;
  std::string name;
  std::vector<std::string> level_params;
  TermPtr type;
  TermPtr body;  // null for Assume
  Span span;
};

struct GlobalEntry {
  std::string name;
  std::vector<std::string> level_params;
  TermPtr type;
  TermPtr body;  // null for assumptions
  Span span;

  bool is_assumption() const { return body == nullptr; }
};

// Table of accepted declarations. Extending yields a new snapshot; existing
// snapshots are never modified.
class GlobalEnv {
 public:
  GlobalEnv();

  const GlobalEntry* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  GlobalEnv extend(GlobalEntry entry) const;

  std::size_t size() const { return order_->size(); }
  // Entries in insertion order.
  const std::vector<std::shared_ptr<const GlobalEntry>>& entries() const { return *order_; }

 private:
  using Table = std::map<std::string, std::shared_ptr<const GlobalEntry>, std::less<>>;
  std::shared_ptr<const Table> table_;
  std::shared_ptr<const std::vector<std::shared_ptr<const GlobalEntry>>> order_;
};

}  // namespace mltt
