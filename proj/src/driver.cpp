#include "mltt/driver.hpp"

#include <pthread.h>

#include <exception>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "mltt/check.hpp"
#include "mltt/syntax.hpp"

namespace mltt {

namespace {

constexpr std::size_t kStackBytes = std::size_t{1} << 30;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void* trampoline(void* arg) {
  auto* job = static_cast<std::pair<const std::function<void()>*, std::exception_ptr>*>(arg);
  try {
    (*job->first)();
  } catch (...) {
    job->second = std::current_exception();
  }
  return nullptr;
}

}  // namespace

void run_with_large_stack(const std::function<void()>& fn) {
  std::pair<const std::function<void()>*, std::exception_ptr> job{&fn, nullptr};
  pthread_attr_t attr;
  pthread_attr_init(&attr);
  pthread_attr_setstacksize(&attr, kStackBytes);
  pthread_t thread;
  if (pthread_create(&thread, &attr, trampoline, &job) != 0) {
    pthread_attr_destroy(&attr);
    fn();
    return;
  }
  pthread_attr_destroy(&attr);
  pthread_join(thread, nullptr);
  if (job.second) std::rethrow_exception(job.second);
}

std::string format_error(const KernelError& e, const std::string& path) {
  std::ostringstream os;
  os << "ERROR " << error_class_name(e.error_class()) << " at " << (e.file().empty() ? path : e.file()) << ':' << e.span().line << ':'
     << e.span().column << '\n';
  os << "  " << e.what() << '\n';
  if (!e.expected().empty() || !e.got().empty()) {
    os << "  expected: " << e.expected() << '\n';
    os << "  got:      " << e.got() << '\n';
  }
  return os.str();
}

GlobalEnv check_source(const GlobalEnv& genv, std::string_view text, const std::string& path, bool safe_mode,
                       std::uint64_t budget, std::size_t* declarations) {
  SourceModule m = parse_module(text, path);
  GlobalEnv env = genv;
  for (const auto& d : m.declarations) env = check_decl(env, d, safe_mode, budget);
  if (declarations) *declarations = m.declarations.size();
  return env;
}

Loader::Loader(bool safe_mode, std::uint64_t budget) : safe_mode_(safe_mode), budget_(budget) {}

std::string Loader::key(const std::string& path) {
  std::error_code ec;
  auto p = std::filesystem::weakly_canonical(path, ec);
  return ec ? path : p.string();
}

GlobalEnv Loader::load(const GlobalEnv& genv, const std::string& path, std::size_t* declarations) {
  std::string k = key(path);
  if (done_.count(k)) {
    if (declarations) *declarations = 0;
    return genv;
  }
  std::string text = read_file(path);
  GlobalEnv env = genv;
  try {
    SourceModule m = parse_module(text, path);
    active_.push_back(k);
    auto dir = std::filesystem::path(path).parent_path();
    for (const auto& imp : m.imports) {
      std::string target = (dir / imp.path).lexically_normal().string();
      std::string tk = key(target);
      if (std::find(active_.begin(), active_.end(), tk) != active_.end()) {
        throw KernelError(ErrorClass::ParseError, imp.span, "import cycle through '" + imp.path + "'");
      }
      if (done_.count(tk)) continue;
      if (!std::filesystem::is_regular_file(target)) {
        throw KernelError(ErrorClass::ParseError, imp.span, "cannot read imported file '" + imp.path + "'");
      }
      env = load(env, target);
    }
    for (const auto& d : m.declarations) env = check_decl(env, d, safe_mode_, budget_);
    active_.pop_back();
    if (declarations) *declarations = m.declarations.size();
  } catch (KernelError& e) {
    e.set_file(path);
    throw;
  }
  done_.insert(k);
  return env;
}

RunResult run(const RunConfig& config) {
  RunResult result;
  std::ostringstream out;
  std::string current = "<command line>";
  auto report = [&](const KernelError& e) {
    out << format_error(e, current);
    result.exit_code = 1;
    if (!result.error) result.error = e.error_class();
  };
  try {
    run_with_large_stack([&] {
      if (config.depth_budget < 1) throw UsageError("--max-depth must be at least 1");
      GlobalEnv genv;
      Loader preludes(config.safe_mode, config.depth_budget);
      for (const auto& p : config.preludes) {
        current = p;
        genv = preludes.load(genv, p);
      }
      if (config.command == RunConfig::Command::Check) {
        if (config.paths.empty()) throw UsageError("check needs at least one file");
        for (const auto& p : config.paths) {
          if (!std::filesystem::is_regular_file(p)) throw UsageError("cannot read '" + p + "'");
        }
        for (const auto& p : config.paths) {
          current = p;
          try {
            Loader loader = preludes;
            std::size_t n = 0;
            loader.load(genv, current, &n);
            out << "OK " << n << " declarations in " << current << '\n';
          } catch (const KernelError& e) {
            report(e);
          }
        }
        return;
      }
      if (config.paths.size() != 1) throw UsageError("expected exactly one file");
      current = config.paths[0];
      genv = preludes.load(genv, current);
      current = "<term>";
      TermPtr t = parse_term(config.term_text);
      Checker checker(genv, config.depth_budget);
      Context ctx;
      auto [elab, type] = checker.infer(ctx, t);
      if (config.command == RunConfig::Command::Eval) {
        out << print_term(*checker.normalize(ctx, elab, type)) << '\n';
      } else {
        out << print_term(*checker.evaluator().quote_type(0, type)) << '\n';
      }
    });
  } catch (const KernelError& e) {
    report(e);
  } catch (const UsageError& e) {
    out << "usage error: " << e.what() << '\n';
    result.exit_code = 2;
  }
  result.output = out.str();
  return result;
}

}  // namespace mltt
