#pragma once

#include <ostream>
#include <string>

#include "flagbound/serialization.hpp"

namespace flagbound::cli {

enum class Format { table, json, csv };

/// Writes a command result. Objects of scalars render as aligned key/value
/// lines (a lone scalar prints bare); arrays of objects render as columns.
void render(std::ostream& out, const Json& body, Format format);

}  // namespace flagbound::cli
