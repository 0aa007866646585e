#ifndef LOCW_DUMP_HPP
#define LOCW_DUMP_HPP

#include <string>

#include "locw/structure.hpp"

namespace locw {

// Text model dump:
//
//   domain 4
//   fn i: (0) -> 0
//   fn i: (1) -> 0
//   rel P: (0)
//   const a = 1
//
// fn lines in lexicographic argument order, rel lines sorted, const lines
// sorted by name. Parsing requires the signature (from the sentence file)
// and ignores `#` comments and blank lines.
std::string dump_structure(const FiniteStructure& m);

FiniteStructure parse_structure_dump(const std::string& text,
                                     const Signature& sig);

}  // namespace locw

#endif  // LOCW_DUMP_HPP
