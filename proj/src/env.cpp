#include "mltt/env.hpp"

#include "mltt/error.hpp"

namespace mltt {

GlobalEnv::GlobalEnv()
    : table_(std::make_shared<const Table>()),
      order_(std::make_shared<const std::vector<std::shared_ptr<const GlobalEntry>>>()) {}

const GlobalEntry* GlobalEnv::find(const std::string& name) const {
  auto it = table_->find(name);
  return it == table_->end() ? nullptr : it->second.get();
}

GlobalEnv GlobalEnv::extend(GlobalEntry entry) const {
  if (contains(entry.name)) {
    throw KernelError(ErrorClass::UnboundName, entry.span, "duplicate definition of '" + entry.name + "'");
  }
  auto shared = std::make_shared<const GlobalEntry>(std::move(entry));
  auto table = std::make_shared<Table>(*table_);
  table->emplace(shared->name, shared);
  auto order = std::make_shared<std::vector<std::shared_ptr<const GlobalEntry>>>(*order_);
  order->push_back(shared);
  GlobalEnv next;
  next.table_ = std::move(table);
  next.order_ = std::move(order);
  return next;
}

}  // namespace mltt
