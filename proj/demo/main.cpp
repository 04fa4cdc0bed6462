// Small tour: products in the cubic algebra, the spinor map of a 2x2 matrix
// and the Lorentz matrix of its cover.

#include <iostream>

#include "quarkalg/covariance.hpp"
#include "quarkalg/graded_algebra.hpp"

using namespace quarkalg;

int main() {
  const AlgebraElement a = theta(1), b = theta(2);
  std::cout << "t1 * t2 * t1        = " << (a * b * a).to_string() << "\n";
  std::cout << "t2 * t1 * t1        = " << (b * a * a).to_string() << "\n";
  std::cout << "t1 * t1 * t1        = " << (a * a * a).to_string() << "\n";
  std::cout << "(t1 t2 t1)(tb1)     = " << ((a * b * a) * AlgebraElement(theta_bar(1))).to_string() << "\n";

  const ExactMatrix u{{2, CycloScalar::j()}, {CycloScalar::i(), 1}};
  const ExactMatrix lambda = lambda_from_U(u);
  std::cout << "\nU      = " << u << "\nLambda = " << lambda << "\n";
  std::cout << "det Lambda = " << determinant(lambda).to_string() << ", (det U)^3 = "
            << determinant(u).pow(3).to_string() << "\n";

  const ExactMatrix l{{1, 1}, {0, 1}};
  const ExactMatrix cover = spinor_cover(l);
  std::cout << "\ncover of [[1,1],[0,1]] = " << cover << "\ndet = " << determinant(cover).to_string() << "\n";
  std::cout << "4-vector matrix = " << vector_rep(cover) << "\n";
}
