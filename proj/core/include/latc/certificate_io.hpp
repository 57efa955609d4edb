#pragma once

#include <iosfwd>
#include <string>

#include "latc/compactness.hpp"

namespace latc {

// "latcert v1" text format:
//
//   latcert 1 n=<n>
//   kind strict|weak
//   width <c>
//   transform
//   <n lines of n integers>           basis vectors as columns
//   witnesses m=<m>
//   w <target coefficients> | <witness coefficients>     m lines
//
// Blank lines and lines starting with '#' are ignored. Reading does not check
// soundness; pass the result through verify_certificate.
CompactnessCertificate read_latcert(std::istream& in);
void write_latcert(std::ostream& out, const CompactnessCertificate& cert);

CompactnessCertificate load_latcert(const std::string& path);
void save_latcert(const std::string& path, const CompactnessCertificate& cert);

// n lines of n integers, the format of a bare transform file.
IntegerMatrix read_integer_matrix(std::istream& in);
IntegerMatrix load_integer_matrix(const std::string& path);

}  // namespace latc
