#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>

namespace mltt {

class Level;
using LevelPtr = std::shared_ptr<const Level>;

// Universe level expressions: lzero, lsuc l, lmax l l', and level variables.
class Level {
 public:
  struct Zero {};
  struct Var {
    std::string name;
  };
  struct Suc {
    LevelPtr inner;
  };
  struct Max {
    LevelPtr lhs;
    LevelPtr rhs;
  };
  using Node = std::variant<Zero, Var, Suc, Max>;

  explicit Level(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

  static LevelPtr zero();
  static LevelPtr var(std::string name);
  static LevelPtr suc(LevelPtr inner);
  static LevelPtr max(LevelPtr lhs, LevelPtr rhs);
  // lsuc^n lzero
  static LevelPtr constant(std::uint32_t n);

 private:
  Node node_;
};

// Max-plus canonical form: max(constant, max_x (x + atoms[x])).
// The constant is dropped to 0 whenever some atom offset already dominates it,
// so two forms are equal iff their denotations agree everywhere.
class LevelNF {
 public:
  LevelNF() = default;
  LevelNF(std::uint32_t constant, std::map<std::string, std::uint32_t> atoms);

  static LevelNF var(const std::string& name);

  std::uint32_t constant() const { return constant_; }
  const std::map<std::string, std::uint32_t>& atoms() const { return atoms_; }
  bool is_closed() const { return atoms_.empty(); }

  LevelNF suc(std::uint32_t by = 1) const;
  LevelNF max(const LevelNF& other) const;

  // Replaces every variable by the given form (variables without an entry stay put).
  LevelNF substitute(const std::map<std::string, LevelNF>& assignment) const;

  std::uint64_t denote(const std::function<std::uint64_t(const std::string&)>& value_of) const;

  // Canonical level expression with this normal form.
  LevelPtr to_level() const;

  friend bool operator==(const LevelNF&, const LevelNF&) = default;
  friend auto operator<=>(const LevelNF&, const LevelNF&) = default;

 private:
  void canonicalize();

  std::uint32_t constant_ = 0;
  std::map<std::string, std::uint32_t> atoms_;
};

using LevelAssignment = std::map<std::string, LevelNF>;

LevelNF level_normalize(const Level& level);
LevelNF level_normalize(const Level& level, const LevelAssignment& assignment);
bool level_equal(const Level& a, const Level& b);

std::uint64_t level_denote(const Level& level,
                           const std::function<std::uint64_t(const std::string&)>& value_of);

// Calls f on every variable name occurring in the level.
void for_each_level_var(const Level& level, const std::function<void(const std::string&)>& f);

}  // namespace mltt
