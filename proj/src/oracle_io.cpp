#include "deltabound/oracle_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <type_traits>

#include <json.hpp>

namespace deltabound {

namespace {

template <class T>
void write_le(std::ostream& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<std::byte, sizeof(T)>>(value);
    std::reverse(bytes.begin(), bytes.end());
    out.write(reinterpret_cast<const char*>(bytes.data()), sizeof(T));
  } else {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
  }
}

}  // namespace

void write_oracle_json(std::ostream& out, const OracleResult& result) {
  nlohmann::json doc;
  doc["energy"] = result.energy;
  doc["lambda"] = result.params.lambda;
  doc["alpha"] = result.params.alpha;
  doc["grid_n"] = result.grid.n;
  doc["box"] = result.grid.half_length;
  doc["residual"] = result.residual_norm;
  out << doc.dump() << '\n';
}

void write_wavefunction_binary(std::ostream& out, const OracleResult& result) {
  const std::int32_t dim = result.grid.dim;
  const std::int32_t n = static_cast<std::int32_t>(result.grid.n);
  write_le(out, dim);
  write_le(out, dim == 2 ? n : std::int32_t{1});
  write_le(out, n);
  for (Index i = 0; i < result.wavefunction.size(); ++i)
    write_le(out, result.wavefunction[i]);
}

}  // namespace deltabound
