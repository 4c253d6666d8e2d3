#include "mltt/corpus.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mltt/driver.hpp"

namespace mltt {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && s[i] == ' ') ++i;
  return s.substr(i);
}

std::string outcome(const RunResult& r) {
  if (r.exit_code == 0) return "accepted";
  if (r.error) return "rejected with " + std::string(error_class_name(*r.error));
  return "exit " + std::to_string(r.exit_code) + ": " + trim(r.output);
}

}  // namespace

std::optional<ErrorClass> error_class_from_name(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorClass::Internal); ++i) {
    auto c = static_cast<ErrorClass>(i);
    if (error_class_name(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<CorpusEntry> parse_manifest(const std::string& text, const std::string& base_dir) {
  std::vector<CorpusEntry> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto resolve = [&](const std::string& p) { return (std::filesystem::path(base_dir) / p).lexically_normal().string(); };
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto f = split(line, '\t');
    auto bad = [&](const std::string& why) {
      return std::runtime_error("manifest line " + std::to_string(lineno) + ": " + why);
    };
    if (f.size() < 3) throw bad("expected at least path, tier and expected outcome");
    f.resize(7);
    for (auto& x : f) x = trim(x);
    CorpusEntry e;
    e.line = lineno;
    e.path = resolve(f[0]);
    e.tier = f[1];
    if (f[2] == "accept") {
      e.expect = CorpusEntry::Expect::Accept;
    } else if (f[2] == "normal-form") {
      e.expect = CorpusEntry::Expect::NormalForm;
    } else if (f[2].rfind("reject:", 0) == 0) {
      e.expect = CorpusEntry::Expect::Reject;
      auto c = error_class_from_name(f[2].substr(7));
      if (!c) throw bad("unknown error class '" + f[2].substr(7) + "'");
      e.reject_class = *c;
    } else {
      throw bad("unknown expected outcome '" + f[2] + "'");
    }
    if (f[3] != "-") e.name = f[3];
    if (f[4] != "-") e.normal_form = f[4];
    if (e.expect == CorpusEntry::Expect::NormalForm && (e.name.empty() || e.normal_form.empty())) {
      throw bad("normal-form entries need a name and an expected normal form");
    }
    if (f[5] == "unsafe") {
      e.mode = CorpusEntry::Mode::Unsafe;
    } else if (f[5] == "safe") {
      e.mode = CorpusEntry::Mode::SafeOnly;
    } else if (!f[5].empty() && f[5] != "-") {
      throw bad("unknown mode '" + f[5] + "'");
    }
    if (!f[6].empty() && f[6] != "-") {
      for (const auto& p : split(f[6], ',')) e.preludes.push_back(resolve(trim(p)));
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_manifest(ss.str(), std::filesystem::path(path).parent_path().string());
}

bool CorpusReport::all_passed() const {
  for (const auto& r : rows) {
    if (!r.passed) return false;
  }
  return true;
}

CorpusReport run_corpus(std::vector<CorpusEntry> entries, const std::string& tier_filter) {
  CorpusReport report;
  report.entries = std::move(entries);
  std::ostringstream text;
  for (const auto& e : report.entries) {
    if (!tier_filter.empty() && e.tier != tier_filter) continue;
    auto start = std::chrono::steady_clock::now();
    std::string problem;

    auto expect_outcome = [&](bool safe) {
      RunConfig c;
      c.paths = {e.path};
      c.preludes = e.preludes;
      c.safe_mode = safe;
      RunResult r = run(c);
      std::string mode = safe ? " (--safe)" : "";
      if (e.expect == CorpusEntry::Expect::Reject) {
        if (r.exit_code != 1 || r.error != e.reject_class) {
          problem = "expected " + std::string(error_class_name(e.reject_class)) + mode + ", got " + outcome(r);
        }
        return;
      }
      if (r.exit_code != 0) {
        problem = "expected acceptance" + mode + ", got " + outcome(r) + "\n" + r.output;
        return;
      }
      if (e.expect == CorpusEntry::Expect::NormalForm) {
        RunConfig ev = c;
        ev.command = RunConfig::Command::Eval;
        ev.term_text = e.name;
        RunResult nf = run(ev);
        if (nf.exit_code != 0 || trim(nf.output) != e.normal_form) {
          problem = "normal form of " + e.name + mode + ": expected " + e.normal_form + ", got " + trim(nf.output);
        }
      }
    };

    switch (e.mode) {
      case CorpusEntry::Mode::Both:
        expect_outcome(false);
        if (problem.empty()) expect_outcome(true);
        break;
      case CorpusEntry::Mode::SafeOnly:
        expect_outcome(true);
        break;
      case CorpusEntry::Mode::Unsafe: {
        expect_outcome(false);
        if (!problem.empty()) break;
        RunConfig c;
        c.paths = {e.path};
        c.preludes = e.preludes;
        c.safe_mode = true;
        RunResult r = run(c);
        if (r.exit_code != 1 || r.error != ErrorClass::UnsafeAssume) {
          problem = "expected UnsafeAssume under --safe, got " + outcome(r);
        }
        break;
      }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.rows.push_back({&e, problem.empty(), problem, secs});
    text << (problem.empty() ? "PASS " : "FAIL ") << "[" << e.tier << "] " << e.path;
    if (!problem.empty()) text << "\n  " << problem;
    text << '\n';
  }
  report.text = text.str();
  return report;
}

}  // namespace mltt
