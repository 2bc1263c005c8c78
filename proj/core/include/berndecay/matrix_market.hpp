#pragma once

// Matrix Market exchange for SparseSymMatrix: coordinate real symmetric,
// 1-based indices, lower triangle on write.  The reader also accepts
// "general" coordinate files as long as they are exactly symmetric.

#include <iosfwd>
#include <string>

#include "berndecay/graphs.hpp"

namespace berndecay::graphs {

SparseSymMatrix read_matrix_market(std::istream& in);
SparseSymMatrix read_matrix_market_file(const std::string& path);

void write_matrix_market(const SparseSymMatrix& A, std::ostream& out);
void write_matrix_market_file(const SparseSymMatrix& A, const std::string& path);

} // namespace berndecay::graphs
