#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "clkeys_cli/json_codec.hpp"

namespace clkeys::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitLimit = 3;
inline constexpr int kExitCheckFailed = 4;

/// Runs one command line (without the program name). The output document
/// goes to out, diagnostics to err; the return value is the exit code.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// The document without its "timings_ms" block. Identical inputs must give
/// byte-identical canonical sections.
io::Json canonical_section(const io::Json& document);

/// Human-readable rendering of an output document.
std::string render_text(const io::Json& document);

}  // namespace clkeys::cli
