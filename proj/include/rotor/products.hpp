#pragma once

#include <stdexcept>
#include <string>

#include "rotor/rotor_code.hpp"

namespace rotor {

class FactorStructureViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ProductFlavor { General, FreeFree, TorsionFree, TorsionTorsion };

std::string to_string(ProductFlavor f);
ProductFlavor parse_flavor(const std::string& s);  // "free-free", "torsion-free", ...

// Two boundary maps acting on row vectors: dc is r_C x c_C, dd is r_D x c_D.
// The product has
//   H_X = [ dc (x) I_{r_D} | -I_{r_C} (x) dd ]
//   H_Z = [ I_{c_C} (x) dd^T | dc^T (x) I_{c_D} ]
// on n = c_C r_D + r_C c_D rotors.
struct ProductInput {
  IntMatrix dc;
  IntMatrix dd;
  ProductFlavor flavor = ProductFlavor::General;
};

RotorCode tensor_product(const ProductInput& in, const std::string& name = "product");

struct ProductLogicals {
  IntMatrix lx;
  IntMatrix lz;
  std::vector<Int> orders;  // expected order of each lx class, 0 for free
};

// Logical generators assembled from factor data for the given flavor.
// Throws FactorStructureViolation when the factors do not have the shape
// the flavor requires.
ProductLogicals product_logicals(const ProductInput& in);

// H_1 predicted from factor cokernels and kernels.
AbelianGroup kunneth_prediction(const IntMatrix& dc, const IntMatrix& dd);

// True when the classes of `rows` generate the first homology of `code`.
bool generates_homology(const RotorCode& code, const IntMatrix& rows);

struct Bezout {
  Int u, v, g;  // u d - v p = g
};

// Smallest nonnegative u, then smallest |v|.
Bezout bezout_min(const Int& d, const Int& p);

// [7,4,3] Hamming data: parity checks, codeword generator, complement of
// the check row space, and H^T H mod 2.
IntMatrix hamming_h();
IntMatrix hamming_g();
IntMatrix hamming_e();
IntMatrix hamming_square();

// Named factor matrices reachable from the command line.
IntMatrix named_factor(const std::string& name);

RotorCode hamming_free_free();
RotorCode hamming_torsion_free();
RotorCode hamming_torsion_torsion();

}  // namespace rotor
