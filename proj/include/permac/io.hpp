#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "permac/types.hpp"
#include "permac/zero_region.hpp"

namespace permac {

// Matrix files are one-object JSON documents:
//   {"kind":"matrix","n":2,"entries":[[1,0],[0.9,0.1],1.05,[1,-0.1]]}
//   {"kind":"symmetric","n":2,"entries":[... (2n)^2 pairs ...]}
//   {"kind":"tensor","nu":3,"n":2,"entries":[... n^nu pairs ...]}
// Entries are [re, im] pairs in row-major (lexicographic) order; bare
// numbers are accepted on input and mean im = 0. For the symmetric kind, n
// counts pairs: the matrix is 2n x 2n and must be exactly symmetric.

enum class InputKind { Matrix, Symmetric, Tensor };

struct ParsedInput {
  InputKind kind;
  std::variant<SquareMatrix, EvenSymmetricMatrix, CubicalTensor> value;
};

ParsedInput parse_matrix_file(const std::string& text);

std::string write_matrix_file(const SquareMatrix& m);
std::string write_matrix_file(const EvenSymmetricMatrix& m);
std::string write_matrix_file(const CubicalTensor& t);

/// Hex SHA-256 of the given bytes (the canonical input digest).
std::string sha256_hex(std::string_view bytes);

struct ApproxRecordFields {
  int m = 0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double additive_bound = 0.0;
  double relative_bound = 0.0;
  double wall_time_seconds = 0.0;
};

struct ResultRecord {
  std::string input_sha256;
  std::string operation;
  Complex value;
  std::optional<ApproxRecordFields> approx;  // absent on exact records
};

/// One-line JSON rendering of a record (no trailing newline).
std::string to_json_line(const ResultRecord& record);

/// Line-oriented probe report: one line per summary field, then the argmin
/// matrix as a matrix-file JSON line.
std::string serialize_probe_report(const ProbeReport& report);

}  // namespace permac
