#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mltt/env.hpp"

namespace mltt::testing {

std::string corpus_dir();
std::string manifest_path();

// Every file of the given tier that the manifest expects to be accepted, in manifest order.
std::vector<std::string> accepted_files(const std::string& tier = {});

// All accepted corpus files (with their imports) checked into one environment, without --safe.
const GlobalEnv& corpus_env();

// Runs fn on a thread with a large stack, rethrowing its exceptions.
void deep(const std::function<void()>& fn);

}  // namespace mltt::testing
