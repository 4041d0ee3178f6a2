// Evaluates both sides of the top-degree identity at one multirectangular point.
// usage: second_theorem_point [n] [A]   (P' = (1,2), Q' = (3,1))

#include <cstdlib>
#include <iostream>

#include "ribbon/embeddings.hpp"
#include "ribbon/jack.hpp"
#include "ribbon/stanley.hpp"

int main(int argc, char** argv) {
  using namespace ribbon;
  const int n = argc > 1 ? std::atoi(argv[1]) : 3;
  const Rational a = argc > 2 ? Rational::parse(argv[2]) : Rational(2);
  const MultiRect mr = MultiRect::from_isotropic({1, 2}, {3, 1}, a);
  const Partition lambda = multirectangular(mr).shape();

  std::cout << mr.str() << "  gamma=" << mr.gamma() << "  lambda=" << lambda.str() << "\n";
  std::cout << "oriented map sum     " << chtop_map_sum(n, mr) << "\n";
  std::cout << "one-face mon_top sum " << ogs_top_map_sum_signed(n, mr) << "\n";
  if (n <= 3) {
    std::cout << "printed top part     " << printed_stanley_ch(n, mr.point(), true) << "\n";
    std::cout << "printed polynomial   " << printed_stanley_ch(n, mr.point()) << "\n";
    std::cout << "Jack character       " << ch(Partition{n}, lambda, a * a, a) << "\n";
  }
}
