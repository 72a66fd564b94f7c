#pragma once

// INI-style run configuration.
//
//   [study]    name
//   [medium]   tau_r, gamma1, gamma2, gamma_xpm
//   [pulse1]   n_bar0, envelope = constant | gaussian, tau_p
//   [pulse2]   same keys as pulse1
//   [sweep]    variable = phi01 | omega, start, stop, step, omega, omega0, t
//   [output]   path, kind = normalized | raw
//   [curve.X]  optional, one per curve labelled X, in file order; keys are
//              section-qualified overrides of the base sections, e.g.
//              pulse2.n_bar0 = 500000
//
// Without curve sections the base sections describe a single curve "a".
// Lines starting with '#' or ';' are comments.

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "stokes/sweep.hpp"

namespace stokes {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

sweep::RunConfig parse_config(std::istream& in, const std::string& source = "<config>");
sweep::RunConfig load_config(const std::string& path);

// Inverse of parse_config; numbers are written in shortest round-trip form so
// the parsed configuration is bit-identical.
std::string to_config_text(const sweep::RunConfig& config);

}  // namespace stokes
