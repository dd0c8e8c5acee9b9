#pragma once

#include <string>

#include "alcove/serialize.hpp"

namespace alcove::cli {

enum class Format { kJson, kCsv, kMarkdown };

/// Flattens nested objects to dotted paths. Arrays of scalars become one ';'-joined cell.
std::string render_csv(const Json& doc);
std::string render_markdown(const Json& doc);
std::string render(const Json& doc, Format format);

/// Adds "value_at_q" next to every serialized polynomial in doc.
void attach_q_values(Json& doc, long q0);

}  // namespace alcove::cli
