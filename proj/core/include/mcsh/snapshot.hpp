#pragma once

// State snapshot files.
//
// Text format, one item per line:
//
//   mcsh-snapshot 1
//   grid <n> <length> <dealias_factor>
//   time <t>
//   params <e> <kappa> <v>
//   seed <seed>
//   field <name> <u|du> <real|complex>
//   <re> <im>            (n*n lines, FFT-ordered coefficients)
//   ...                  (ten field blocks: u then du for A0 A1 A2 phi N)
//   end
//
// Every floating-point number is written as a C99 hexadecimal float, so a
// write/read cycle reproduces the state bit for bit.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mcsh/state.hpp"

namespace mcsh {

struct Snapshot {
  SystemState state;
  PhysicalParams params;
  std::uint64_t seed = 0;
};

class SnapshotFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_snapshot(std::ostream& out, const Snapshot& snap);
Snapshot read_snapshot(std::istream& in);
void save_snapshot(const std::string& path, const Snapshot& snap);
Snapshot load_snapshot(const std::string& path);

}  // namespace mcsh
