#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "mltt/env.hpp"
#include "mltt/error.hpp"
#include "mltt/eval.hpp"

namespace mltt {

struct RunConfig {
  enum class Command { Check, Eval, TypeOf };

  Command command = Command::Check;
  std::vector<std::string> paths;  // Check: files; Eval/TypeOf: exactly one file
  std::string term_text;           // Eval/TypeOf only
  bool safe_mode = false;
  std::uint64_t depth_budget = kDefaultDepthBudget;
  std::vector<std::string> preludes;
};

struct RunResult {
  int exit_code = 0;  // 0 success, 1 type or parse error, 2 usage error
  std::string output;
  // Class of the first reported kernel error, if any.
  std::optional<ErrorClass> error;
};

RunResult run(const RunConfig& config);

// Checks every declaration of `text` on top of `genv`; throws KernelError on the first failure.
GlobalEnv check_source(const GlobalEnv& genv, std::string_view text, const std::string& path, bool safe_mode,
                       std::uint64_t budget = kDefaultDepthBudget, std::size_t* declarations = nullptr);

// Checks files together with their imports. Each file is checked at most once
// per loader; imports resolve relative to the importing file.
class Loader {
 public:
  Loader(bool safe_mode, std::uint64_t budget = kDefaultDepthBudget);

  // Checks `path` (after its imports) on top of `genv`. KernelErrors carry the
  // file they arose in. A file this loader has already checked adds nothing.
  GlobalEnv load(const GlobalEnv& genv, const std::string& path, std::size_t* declarations = nullptr);

 private:
  static std::string key(const std::string& path);

  bool safe_mode_;
  std::uint64_t budget_;
  std::set<std::string> done_;
  std::vector<std::string> active_;
};

// Runs fn on a thread with a large native stack (the checker recurses deeply on big normal forms).
void run_with_large_stack(const std::function<void()>& fn);

std::string format_error(const KernelError& e, const std::string& path);

}  // namespace mltt
