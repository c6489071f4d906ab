#pragma once

// Text syntax shared by the CLI, environment files and the Python module.
//
//   field element  3   1/2   X   (X - 1)/X   2*X^2 - 1/X^3
//   set            {0, 1}   iv(rough:0, 1/2:closed)   unit   mon(a)
//                  left(a)   right(a)   A u B
//   value          (T, I, F)
//   formula        not A and B -> C    (also ! & | ; -> is right-associative)
//   environment    one `Name := (T, I, F)` per line, `#` comments,
//                  optional `@semantics corrected|original|clamped`

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nsl/formula.hpp"
#include "nsl/nlogic.hpp"
#include "nsl/nset.hpp"
#include "nsl/ratfunc.hpp"

namespace nsl::cli {

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
        position_(position),
        detail_(message) {}
  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

private:
  std::size_t position_;
  std::string detail_;
};

ordfield::RationalFunction parse_field_elem(std::string_view text);
nsets::NSet parse_nset(std::string_view text);
nlogic::NValue parse_nvalue(std::string_view text);
nlogic::Formula parse_formula(std::string_view text);
/// Errors carry the line number in the message.
nlogic::Environment parse_environment(std::string_view text);

std::string to_string(const nlogic::Environment& env);

}  // namespace nsl::cli
