#pragma once
// cli.hpp - Command-line front door, configuration, result persistence
//
// Subcommands: measure, variance, moments, charfn, cylinders, oracle,
// corr, clt, cdf, cusick. With --out PATH the result table lands in PATH
// and a reproduction manifest in PATH.manifest.json; otherwise results go
// to standard output. Exact values stay rational strings unless --float.

#include <string>
#include <vector>

namespace digitdrift::cli {

inline constexpr const char* kToolVersion = "digitdrift 0.1.0";

// Exit codes: 0 success, 1 computation/integrity failure, 2 usage error
int run(const std::vector<std::string>& args);

} // namespace digitdrift::cli
