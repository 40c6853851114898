#pragma once

#include <map>
#include <string>
#include <vector>

#include "omitread/params.hpp"
#include "omitread/siv.hpp"

namespace omitread {

// Parsed contents of a key = value configuration file. Frequencies in the
// file are ordinary Hz and are converted to angular rates on load.
struct Config {
    SystemParams sys;
    DriveConfig drive;
    SpinParams spin;
    SivLevelParams siv;
    double e_egx = 0.0;    // default strain drive, rad/s (set from e_egx_hz)
    double e_egy = 0.0;
    double omega_s = 0.0;  // target qubit splitting, rad/s

    int points = 0;        // 0 = command default
    double tolerance = 1.0;

    std::vector<std::string> warnings; // duplicate-key notices etc.
};

// Strict parser: every key must be known, required keys must be present,
// values must be numeric (or `auto` for c_om). Errors carry the file name
// and line number. Later occurrences of a key win, with a warning.
Config parse_config_file(const std::string& path,
                         const std::vector<std::string>& overrides = {});

// Same, on an in-memory string ("name" only labels error messages).
Config parse_config_text(const std::string& text, const std::string& name,
                         const std::vector<std::string>& overrides = {});

// The resolved key = value dump written to .meta sidecars; parseable by
// parse_config_text, so a sidecar alone reproduces a run.
std::string config_dump(const Config& c);

// SiV device-sheet defaults used by tests and shipped example configs.
Config siv_default_config();

} // namespace omitread
