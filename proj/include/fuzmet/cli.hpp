#pragma once

namespace fuzmet {

// Config-driven command-line front end. Commands:
//   check | crispify | fuzzify | roundtrip | balls | catalog-list
// Exit codes: 0 all checks pass, 1 a property was violated, 2 usage or
// config error. See README.md for the config schema per command.
int run_cli(int argc, const char* const* argv);

}  // namespace fuzmet
