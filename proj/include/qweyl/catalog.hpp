#pragma once

// Built-in example braidings and the JSON matrix file format.
//
// Catalog keys (parameters given as key=value pairs):
//   super-A11       N=<order>            the rank-2 super family, N > 2
//   super-A11-p     N=<order>            its image under r_1
//   super-A11-r     N=<order>            its image under r_2
//   super-A11-t     N=<order>            transpose
//   super-A11-pt    N=<order>            transpose of the r_1 image
//   super-A11-rt    N=<order>            transpose of the r_2 image
//   cartan-A2       q=<order>            symmetric A2 braiding q_ij = z^{c_ij}
//   cartan-B2       q=<order>            B2 braiding with symmetrizer (2,1)
//   cartan          C=<rows> d=<ints> q=<order>   generic q_ij = z^{d_i c_ij}
//
// Matrix files are JSON: {"theta": 2, "entries": [["1/2","3/4"],["1/2","1/2"]]}
// with entries the rotation exponents a/N of e^{2 pi i a/N}.

#include <map>
#include <string>

#include "qweyl/braiding.hpp"

namespace qweyl {

using ParamMap = std::map<std::string, std::string>;

std::vector<std::string> catalog_keys();
BraidingMatrix catalog_matrix(const std::string& key, const ParamMap& params);

BraidingMatrix parse_matrix_json(const std::string& text);
std::string matrix_to_json(const BraidingMatrix& q);
BraidingMatrix load_matrix_file(const std::string& path);

}  // namespace qweyl
