/*
   Copyright 2026 The equivloc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EQUIVLOC_CLASS_PARSER_HPP
#define EQUIVLOC_CLASS_PARSER_HPP

#include <string_view>

#include "equivloc/polynomial.hpp"

namespace equivloc {

// Parses a class expression into an expanded polynomial.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*        divisor must be a nonzero constant
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | name | builtin '[' integer (',' integer)* ']' | '(' expr ')'
//
// Names are the variables of the table (t1, z2, ...).  Builtins s[...],
// e[k], h[k], p[k] expand over all residue variables.  Whitespace is
// ignored.  Errors are reported as ParseError with a 0-based offset.
Polynomial parse_class(std::string_view expr, const VarTablePtr& vars);

}  // namespace equivloc

#endif  // EQUIVLOC_CLASS_PARSER_HPP
