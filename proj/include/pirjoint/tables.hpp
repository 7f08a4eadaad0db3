#ifndef PIRJOINT_TABLES_HPP
#define PIRJOINT_TABLES_HPP

#include <string>
#include <vector>

namespace pirjoint {

/// Markdown rendering of the reference tables 1..14 that document the
/// constructions. Tables 1-9 are fully instantiated symbolic tables
/// ((2,4,2) over GF(3) with exponent offset 1; (3,4,3); general parity at
/// K=3 and K=4) and are byte-compared against checked-in golden files.
/// Tables 10-14 are structural: their entries stay parameterized, with a
/// note, because the underlying coefficients are chosen at build time.
std::string render_reference_table(int index);

/// "table_I.md" .. "table_XIV.md".
std::string table_file_name(int index);

inline constexpr int kTableCount = 14;
inline constexpr int kGoldenTableCount = 9;

}  // namespace pirjoint

#endif
