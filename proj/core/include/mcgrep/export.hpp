#pragma once

// JSON export records. A matrix is written as
//   {"dim": d, "entries": [{"row": i, "col": j,
//                           "poly": [{"coeff": "c", "q": [a, b], "t": [e, f]}]}]}
// with 1-based indices, zero entries omitted, entries in row-major order and
// terms in the polynomial's canonical order. Output is byte-stable.

#include <cstdint>
#include <string>
#include <string_view>

#include "mcgrep/genus2.hpp"
#include "mcgrep/matrix.hpp"

namespace mcgrep {

std::string export_matrix(const RingMatrix& m);
RingMatrix import_matrix(std::string_view json_text);

/// {"block_dim": b, "block_perm": [...], "blocks": {"r,c": <matrix record>}}
/// with 1-based block indices.
std::string export_block_structure(const BlockStructure& s);

/// {"dim": d, "rows": [[...], ...]}
std::string export_integer_matrix(const IntMatrix& m);

/// 64-bit FNV-1a, used as a stable digest of exported records.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace mcgrep
