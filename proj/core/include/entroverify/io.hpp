#pragma once

// JSON file formats and number formatting.
//
//   state   {"dims": [..], "matrix_real": [[..]], "matrix_imag": [[..]]}
//   channel {"dimIn": n, "dimOut": m, "kraus": [{"real": [[..]], "imag": [[..]]}, ..]}
//
// Loading validates the documented invariants; channels use a 1e-8
// trace-preservation tolerance.

#include <string>

#include "entroverify/channels.hpp"

namespace entroverify {

inline constexpr double kChannelFileTol = 1e-8;

/// 17 significant digits; infinities print as "inf" / "-inf", NaN as "nan".
std::string format_number(double x);
/// JSON token: a number, or the quoted strings "inf" / "-inf"; NaN gives null.
std::string json_number(double x);

DensityOperator parse_state(const std::string& json_text);
std::string state_to_json(const DensityOperator& rho);
QuantumChannel parse_channel(const std::string& json_text);
std::string channel_to_json(const QuantumChannel& n);

/// Whole-file helpers; IoError when the file cannot be read or written.
std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& text);

DensityOperator load_state(const std::string& path);
void save_state(const std::string& path, const DensityOperator& rho);
QuantumChannel load_channel(const std::string& path);
void save_channel(const std::string& path, const QuantumChannel& n);

}  // namespace entroverify
