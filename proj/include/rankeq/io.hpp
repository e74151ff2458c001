#ifndef RANKEQ_IO_HPP
#define RANKEQ_IO_HPP

#include <iosfwd>
#include <string>

#include "rankeq/codes.hpp"
#include "rankeq/equiv.hpp"

namespace rankeq {

// Text formats. All integers are space-separated ASCII element codes; the
// shared field header line is `field <p> <e> [<c_0> ... <c_e>]` with the
// coefficient list omitted for prime fields. Lines starting with '#' are
// ignored on input.

void write_mcode(std::ostream& os, const MatrixCode& c);
MatrixCode read_mcode(std::istream& is);

void write_vcode(std::ostream& os, const VectorCode& v);
VectorCode read_vcode(std::istream& is);

void write_gmat(std::ostream& os, const MatFq& g);
MatFq read_gmat(std::istream& is);

void write_witness(std::ostream& os, const FqPtr& field, const Witness& w);
std::pair<FqPtr, Witness> read_witness(std::istream& is);

// File helpers; throw std::runtime_error when the file cannot be opened and
// ParseError when its contents are malformed.
MatrixCode load_mcode(const std::string& path);
void save_mcode(const std::string& path, const MatrixCode& c);
MatFq load_gmat(const std::string& path);
void save_gmat(const std::string& path, const MatFq& g);
std::pair<FqPtr, Witness> load_witness(const std::string& path);
void save_witness(const std::string& path, const FqPtr& field,
                  const Witness& w);
VectorCode load_vcode(const std::string& path);
void save_vcode(const std::string& path, const VectorCode& v);

}  // namespace rankeq

#endif
