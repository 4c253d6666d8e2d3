#include "mltt/value.hpp"

namespace mltt {

Env Env::extend(ValuePtr v) const {
  Env next = *this;
  next.head_ = std::make_shared<const Node>(Node{std::move(v), head_});
  next.size_ = size_ + 1;
  return next;
}

const ValuePtr* Env::lookup(std::size_t index) const {
  const Node* n = head_.get();
  for (std::size_t i = 0; n && i < index; ++i) n = n->next.get();
  return n ? &n->value : nullptr;
}

std::vector<const Value*> Env::prefix(std::size_t n) const {
  std::vector<const Value*> out;
  out.reserve(n);
  for (const Node* node = head_.get(); node && out.size() < n; node = node->next.get()) out.push_back(node->value.get());
  return out;
}

const Value::Const* Value::as_builtin(Builtin which) const {
  const auto* c = as<Const>();
  return c && c->which == which && c->saturated() ? c : nullptr;
}

ValuePtr make_value(Value::Node node) { return std::make_shared<const Value>(std::move(node)); }

ValuePtr make_var(std::size_t level, ValuePtr type) {
  return make_value(Value::Stuck{Neutral{HeadVar{level, std::move(type)}, {}}});
}

}  // namespace mltt
