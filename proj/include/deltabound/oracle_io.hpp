#pragma once

#include <iosfwd>

#include "deltabound/oracle.hpp"

namespace deltabound {

/// Writes the oracle run as a single JSON document plus newline:
///   {"alpha": .., "box": .., "energy": .., "grid_n": .., "lambda": ..,
///    "residual": ..}
void write_oracle_json(std::ostream& out, const OracleResult& result);

/// Binary wavefunction dump: three little-endian int32 header fields
/// (dim, rows, cols) - (2, n, n) for a 2D grid, (1, 1, n) for 1D - followed
/// by rows*cols little-endian IEEE doubles in row-major order.
void write_wavefunction_binary(std::ostream& out, const OracleResult& result);

}  // namespace deltabound
