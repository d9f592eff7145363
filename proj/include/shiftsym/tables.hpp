#pragma once

// Reference values for the harmonic basis up to weight 10 and the
// q-brackets of its elements.

#include <span>
#include <string_view>

namespace shiftsym {

struct TableRow {
  std::string_view lambda;   // partition, e.g. "(4,3,3)"
  std::string_view h;        // h_lambda in the expression grammar
  std::string_view bracket;  // <h_lambda>_q as a QMForm string ("0" for odd weight)
};

std::span<const TableRow> even_table_rows();
std::span<const TableRow> odd_table_rows();

}  // namespace shiftsym
