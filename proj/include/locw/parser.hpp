#ifndef LOCW_PARSER_HPP
#define LOCW_PARSER_HPP

#include <string>
#include <string_view>

#include "locw/sentence.hpp"

namespace locw {

// Parses one sentence file:
//
//   sig { fn f/2; fn i/1; rel P/1; const a; }    # optional when empty
//   forall x y z . <matrix>
//
// Matrix grammar (loosest to tightest): `->`/`<->`, `|`, `&`, `!`; atoms
// are t1 = t2, t1 < t2, t1 <= t2 (sugar for t1 < t2 | t1 = t2),
// t1 != t2 (sugar for !(t1 = t2)), R(t1,...,tk), `true`, `false`.
// `#` starts a comment running to end of line. `<` and `=` are built in
// and cannot be declared. Throws ParseError / InvalidInput.
Sentence parse_sentence(std::string_view text);

Sentence load_sentence_file(const std::string& path);

}  // namespace locw

#endif  // LOCW_PARSER_HPP
