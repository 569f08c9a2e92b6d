#pragma once
// Command line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage or IO error.

#include <iostream>
#include <string>
#include <vector>

namespace hexa::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name
int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr);

}  // namespace hexa::cli
