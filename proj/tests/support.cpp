#include "support.hpp"

#include <algorithm>

#include "mltt/corpus.hpp"
#include "mltt/driver.hpp"

namespace mltt::testing {

std::string corpus_dir() { return MLTT_CORPUS_DIR; }

std::string manifest_path() { return corpus_dir() + "/corpus.manifest"; }

std::vector<std::string> accepted_files(const std::string& tier) {
  std::vector<std::string> out;
  for (const auto& e : load_manifest(manifest_path())) {
    if (e.expect == CorpusEntry::Expect::Reject) continue;
    if (!tier.empty() && e.tier != tier) continue;
    if (std::find(out.begin(), out.end(), e.path) == out.end()) out.push_back(e.path);
  }
  return out;
}

const GlobalEnv& corpus_env() {
  static const GlobalEnv env = [] {
    GlobalEnv g;
    deep([&] {
      Loader loader(false);
      for (const auto& p : accepted_files()) g = loader.load(g, p);
    });
    return g;
  }();
  return env;
}

void deep(const std::function<void()>& fn) { run_with_large_stack(fn); }

}  // namespace mltt::testing
