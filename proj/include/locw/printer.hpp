#ifndef LOCW_PRINTER_HPP
#define LOCW_PRINTER_HPP

#include <string>

#include "locw/sentence.hpp"

namespace locw {

// Canonical text forms. Variables print as x1..xq; parentheses are emitted
// so that parse(print(s)) reproduces s exactly (left-nested connective
// chains keep their grouping).
std::string print_term(const Term& t);
std::string print_formula(const Formula& f);
std::string print_signature(const Signature& sig);
std::string print_sentence(const Sentence& s);

}  // namespace locw

#endif  // LOCW_PRINTER_HPP
