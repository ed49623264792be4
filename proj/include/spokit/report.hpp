#ifndef SPOKIT_REPORT_HPP
#define SPOKIT_REPORT_HPP

#include <string>

#include "json.hpp"

namespace spokit {

// Structured reports are insertion-ordered JSON trees; field order is part
// of the byte-level contract.
using Report = nlohmann::ordered_json;

// Canonical byte form of a structured report.
std::string render_structured(const Report& r);

// The same tree flattened to indented text. Every text report comes from
// its structured form through this one function.
std::string render_text(const Report& r);

}  // namespace spokit

#endif
