#ifndef SPOKIT_PRESENTATION_FILE_HPP
#define SPOKIT_PRESENTATION_FILE_HPP

#include <optional>
#include <string>

#include "spokit/examples.hpp"
#include "spokit/presentation.hpp"
#include "spokit/spo_code.hpp"

namespace spokit {

// A presentation read from a definition file, plus whichever richer
// structures the file yields: the overlap code for spo files, the
// example aggregates for builder files.
struct LoadedSystem {
    Presentation presentation;
    std::optional<SpoCode> code;
    std::optional<Example1> example1;
    std::optional<Example2> example2;
    std::optional<ChargeSystem> charges;
};

// Parses definition text. One directive per line, '#' starts a comment.
// Throws ParseError with line and column on malformed input.
LoadedSystem parse_system_text(const std::string& text);

// Reads a definition file; unreadable path reported as line 0.
LoadedSystem load_system_file(const std::string& path);

}  // namespace spokit

#endif
