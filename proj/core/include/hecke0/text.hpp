#pragma once

// Canonical text forms used on the command line: partitions "[2,2]",
// permutations "[2,3,1]", row sets "{{2,3,6,8},{1,4,5},{7}}" (bottom-up),
// and words either bracketed or as a bare digit string "23322313".
// Whitespace is ignored everywhere.

#include <string_view>
#include <vector>

#include "hecke0/combinatorics.hpp"
#include "hecke0/tableau.hpp"

namespace hecke0::text {

/// "[a,b,...]" or "(a,b,...)"; throws ParseError.
std::vector<int> parse_int_list(std::string_view s);
Partition parse_partition(std::string_view s);
Permutation parse_permutation(std::string_view s);
/// Bracketed list or a bare string of single digits.
Word parse_word(std::string_view s);
std::vector<std::vector<int>> parse_row_sets(std::string_view s);
Tableau parse_tableau(std::string_view s);
Tabloid parse_tabloid(std::string_view s);

}  // namespace hecke0::text
