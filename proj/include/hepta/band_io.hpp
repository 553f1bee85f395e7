#ifndef HEPTA_BAND_IO_HPP_
#define HEPTA_BAND_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hepta/dense_matrix.hpp"
#include "hepta/hepta_matrix.hpp"

namespace hepta {

enum class MatrixKind { cyclic, anti };

std::string to_string(MatrixKind kind);
MatrixKind parse_kind(const std::string& text);  // ParseError on anything else

using LoadedMatrix = std::variant<CyclicHeptaMatrix, AntiCyclicHeptaMatrix>;

std::size_t loaded_size(const LoadedMatrix& m);
MatrixKind loaded_kind(const LoadedMatrix& m);
const CyclicHeptaMatrix& loaded_core(const LoadedMatrix& m);
DenseMatrix<Rational> loaded_dense(const LoadedMatrix& m);

// "hepta-band-v1" documents: a JSON object with the format tag, the kind,
// n, and the seven arrays d, a, A, C, b, B, D of length n. Values are
// strings ("p" or "p/q"); plain JSON integers are accepted on input.
// For kind=anti the arrays describe the cyclic core (M = core * P).
LoadedMatrix load_band_file(const std::filesystem::path& path);
LoadedMatrix parse_band_text(const std::string& text);

// Canonical serialization: fixed key order, canonical value strings.
// load(save(x)) == x byte-for-byte.
std::string band_file_text(const CyclicHeptaMatrix& core, MatrixKind kind);
void save_band_file(const std::filesystem::path& path, const CyclicHeptaMatrix& core,
                    MatrixKind kind);

// RHS files: n lines, one rational each.
std::vector<Rational> load_rhs_file(const std::filesystem::path& path);

// Dense interchange format: CSV of exact rational tokens, one row per line.
std::string csv_text(const DenseMatrix<Rational>& m);
void save_csv(const std::filesystem::path& path, const DenseMatrix<Rational>& m);
DenseMatrix<Rational> parse_csv_text(const std::string& text);
DenseMatrix<Rational> load_csv(const std::filesystem::path& path);

}  // namespace hepta

#endif  // HEPTA_BAND_IO_HPP_
