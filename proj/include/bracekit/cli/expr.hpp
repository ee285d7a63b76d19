#pragma once

// Tiny expression language over a brace, used by --eval:
//   sum     := ['-'] product { ('+' | '-') product }
//   product := atom { ['*' | '∘'] atom }      (juxtaposition multiplies)
//   atom    := label | '#' index | '(' sum ')'
// Labels are matched longest first, so "(0,1)" is an element when the
// brace carries that label and a parenthesised group otherwise.

#include <string>

#include "bracekit/brace.hpp"

namespace bracekit::cli {

/// Throws InputError on a malformed expression or unknown element.
Elem evaluate(const Brace& b, const std::string& expr);

}  // namespace bracekit::cli
