#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mltt/error.hpp"

namespace mltt {

// One manifest line: path, tier, expected outcome, optional definition name and
// expected printed normal form, safe-mode flag, and prelude files.
struct CorpusEntry {
  enum class Expect { Accept, Reject, NormalForm };
  // Both: identical outcome with and without --safe.
  // Unsafe: outcome holds without --safe; with --safe the file must fail with UnsafeAssume.
  // SafeOnly: only checked with --safe.
  enum class Mode { Both, Unsafe, SafeOnly };

  std::string path;
  std::string tier;
  Expect expect = Expect::Accept;
  ErrorClass reject_class = ErrorClass::TypeMismatch;
  std::string name;
  std::string normal_form;
  Mode mode = Mode::Both;
  std::vector<std::string> preludes;
  std::size_t line = 0;
};

std::vector<CorpusEntry> parse_manifest(const std::string& text, const std::string& base_dir);
std::vector<CorpusEntry> load_manifest(const std::string& path);
std::optional<ErrorClass> error_class_from_name(std::string_view name);

struct CorpusRow {
  const CorpusEntry* entry;
  bool passed;
  std::string detail;
  double seconds;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  std::vector<CorpusRow> rows;
  std::string text;

  bool all_passed() const;
};

// Runs every entry whose tier matches `tier_filter` (empty = all).
CorpusReport run_corpus(std::vector<CorpusEntry> entries, const std::string& tier_filter = {});

}  // namespace mltt
