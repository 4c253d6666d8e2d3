#include "mltt/level.hpp"

#include <algorithm>

#include "mltt/overloaded.hpp"

namespace mltt {

LevelPtr Level::zero() {
  static const LevelPtr z = std::make_shared<const Level>(Zero{});
  return z;
}

LevelPtr Level::var(std::string name) { return std::make_shared<const Level>(Var{std::move(name)}); }

LevelPtr Level::suc(LevelPtr inner) { return std::make_shared<const Level>(Suc{std::move(inner)}); }

LevelPtr Level::max(LevelPtr lhs, LevelPtr rhs) {
  return std::make_shared<const Level>(Max{std::move(lhs), std::move(rhs)});
}

LevelPtr Level::constant(std::uint32_t n) {
  LevelPtr l = zero();
  for (std::uint32_t i = 0; i < n; ++i) l = suc(l);
  return l;
}

LevelNF::LevelNF(std::uint32_t constant, std::map<std::string, std::uint32_t> atoms)
    : constant_(constant), atoms_(std::move(atoms)) {
  canonicalize();
}

LevelNF LevelNF::var(const std::string& name) { return LevelNF(0, {{name, 0}}); }

void LevelNF::canonicalize() {
  for (const auto& [name, offset] : atoms_) {
    if (offset >= constant_) {
      constant_ = 0;
      return;
    }
  }
}

LevelNF LevelNF::suc(std::uint32_t by) const {
  LevelNF r;
  r.constant_ = constant_ + by;
  for (const auto& [name, offset] : atoms_) r.atoms_[name] = offset + by;
  r.canonicalize();
  return r;
}

LevelNF LevelNF::max(const LevelNF& other) const {
  LevelNF r = *this;
  r.constant_ = std::max(constant_, other.constant_);
  for (const auto& [name, offset] : other.atoms_) {
    auto [it, inserted] = r.atoms_.emplace(name, offset);
    if (!inserted) it->second = std::max(it->second, offset);
  }
  r.canonicalize();
  return r;
}

LevelNF LevelNF::substitute(const std::map<std::string, LevelNF>& assignment) const {
  LevelNF r(constant_, {});
  for (const auto& [name, offset] : atoms_) {
    auto it = assignment.find(name);
    LevelNF image = it == assignment.end() ? LevelNF::var(name) : it->second;
    r = r.max(image.suc(offset));
  }
  return r;
}

std::uint64_t LevelNF::denote(const std::function<std::uint64_t(const std::string&)>& value_of) const {
  std::uint64_t v = constant_;
  for (const auto& [name, offset] : atoms_) v = std::max<std::uint64_t>(v, value_of(name) + offset);
  return v;
}

LevelPtr LevelNF::to_level() const {
  LevelPtr result;
  auto join = [&](LevelPtr l) { result = result ? Level::max(result, std::move(l)) : std::move(l); };
  if (constant_ > 0 || atoms_.empty()) join(Level::constant(constant_));
  for (const auto& [name, offset] : atoms_) {
    LevelPtr l = Level::var(name);
    for (std::uint32_t i = 0; i < offset; ++i) l = Level::suc(l);
    join(std::move(l));
  }
  return result;
}

LevelNF level_normalize(const Level& level, const LevelAssignment& assignment) {
  return std::visit(overloaded{
                        [](const Level::Zero&) { return LevelNF(); },
                        [&](const Level::Var& v) {
                          auto it = assignment.find(v.name);
                          return it == assignment.end() ? LevelNF::var(v.name) : it->second;
                        },
                        [&](const Level::Suc& s) { return level_normalize(*s.inner, assignment).suc(); },
                        [&](const Level::Max& m) {
                          return level_normalize(*m.lhs, assignment).max(level_normalize(*m.rhs, assignment));
                        },
                    },
                    level.node());
}

LevelNF level_normalize(const Level& level) { return level_normalize(level, {}); }

bool level_equal(const Level& a, const Level& b) { return level_normalize(a) == level_normalize(b); }

std::uint64_t level_denote(const Level& level,
                           const std::function<std::uint64_t(const std::string&)>& value_of) {
  return std::visit(overloaded{
                        [](const Level::Zero&) -> std::uint64_t { return 0; },
                        [&](const Level::Var& v) { return value_of(v.name); },
                        [&](const Level::Suc& s) { return level_denote(*s.inner, value_of) + 1; },
                        [&](const Level::Max& m) {
                          return std::max(level_denote(*m.lhs, value_of), level_denote(*m.rhs, value_of));
                        },
                    },
                    level.node());
}

void for_each_level_var(const Level& level, const std::function<void(const std::string&)>& f) {
  std::visit(overloaded{
                 [](const Level::Zero&) {},
                 [&](const Level::Var& v) { f(v.name); },
                 [&](const Level::Suc& s) { for_each_level_var(*s.inner, f); },
                 [&](const Level::Max& m) {
                   for_each_level_var(*m.lhs, f);
                   for_each_level_var(*m.rhs, f);
                 },
             },
             level.node());
}

}  // namespace mltt
