#pragma once

#include "zkdesk/circuit.hpp"

#include <string>

namespace zkdesk {

/// Syntax error in CKT v1 text; carries the 1-based line number.
class ParseError : public std::runtime_error {
  public:
    ParseError(uint32_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    uint32_t line() const { return line_; }

  private:
    uint32_t line_;
};

/// CKT v1, bit-exact:
///   CKT v1 <n_inputs> <n_gates> <m_outputs>
///   g<k> <OP> <arg> [<arg>]        one line per gate, k ascending from 0
///   OUT <ref> ... <ref>            m_outputs refs
/// Args are i<j> (input) or g<j> (gate). '#' starts a comment line.
/// LF line endings. Parsing checks syntax only; semantic problems such as
/// forward references are reported by validate(), not here.
Circuit parse_ckt(const std::string& text);

std::string serialize_ckt(const Circuit& c);

Circuit load_ckt_file(const std::string& path);
void save_ckt_file(const Circuit& c, const std::string& path);

} // namespace zkdesk
