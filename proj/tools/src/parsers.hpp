#pragma once

#include <string>
#include <vector>

#include <ubkit/constructions.hpp>
#include <ubkit/types.hpp>

namespace ubkit::cli {

/// "2,2,3" -> SystemShape({2,2,3})
SystemShape parse_shape(const std::string& text);

/// "1", "-2.5", "1+2i", "3i", "1-i"
cplx parse_complex(const std::string& text);

/// "inf" or any parse_complex form
ExtendedComplex parse_extended(const std::string& text);

/// "0,0;1,1;inf,inf" -> one IndexTuple per ';' group
std::vector<IndexTuple> parse_index_set(const std::string& text);

/// "1,2,3,4" (entries may be complex)
std::vector<cplx> parse_points(const std::string& text);

std::vector<std::string> split(const std::string& text, char sep);

}  // namespace ubkit::cli
