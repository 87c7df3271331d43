#pragma once

#include <k3crc/invariants.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace k3crc::cli {

enum class OutputFormat { json, csv, pretty };

struct Config {
    int q_order = 12;
    int u_order = 16;
    int basis_size = 24;
    SignConvention sign_convention = SignConvention::paper;
    OutputFormat output = OutputFormat::json;
};

/// Runs one k3crc command. `args` excludes the program name.
/// Exit codes: 0 success, 1 failed verification or golden mismatch,
/// 2 usage error. The environment variable K3CRC_MAX_ORDER, when set,
/// caps every order-like flag.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace k3crc::cli
