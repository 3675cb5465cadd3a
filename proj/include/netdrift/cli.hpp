#pragma once

namespace netdrift {

/// Entry point behind the netdrift binary. Subcommands: gen-graph, simulate,
/// predict, sweep. Returns 0 on success (including --help/--version), 1 on
/// usage, parse, or validation errors, 2 on I/O errors.
int cli_main(int argc, char** argv);

}  // namespace netdrift
