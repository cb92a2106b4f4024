// A walk through the split octonions over Q: identities, Peirce blocks,
// derivations and one decomposition of a Lie 2-derivation.

#include <altring/altring.hpp>

#include <iomanip>
#include <iostream>
#include <random>

using namespace altring;

int main() {
  const Field Q = Field::rationals();
  auto z = make_zorn<Rational>(Q);
  const char* names[] = {"e1", "u1", "u2", "u3", "v1", "v2", "v3", "e2"};

  std::cout << "Zorn vector matrices, dim " << z.dim() << "\n\nproducts of basis elements:\n";
  for (std::size_t i = 0; i < z.dim(); ++i) {
    std::cout << "  ";
    for (std::size_t j = 0; j < z.dim(); ++j) {
      auto p = z.mul(z.basis(i), z.basis(j));
      std::string s;
      for (std::size_t k = 0; k < z.dim(); ++k) {
        if (p[k] == Rational()) continue;
        s += (p[k] == Rational(-1) ? "-" : s.empty() ? "" : "+") + std::string(names[k]);
      }
      std::cout << std::setw(6) << (s.empty() ? "0" : s);
    }
    std::cout << "\n";
  }

  auto id = classify_identities(z);
  std::cout << "\nassociative " << to_string(id.associative) << ", alternative " << to_string(id.alternative)
            << ", flexible " << to_string(id.flexible) << "\n";
  std::cout << "(u1,u2,u3) = (" << vec_to_string<Rational>(associator(z, z.basis(1), z.basis(2), z.basis(3))) << ")\n";
  std::cout << "center dim " << center(z).dim() << ", nucleus dim " << nucleus(z).dim() << "\n";

  auto ctx = peirce_context(z);
  auto d = ctx.dims();
  std::cout << "\nPeirce blocks at e1: R11 " << d[0] << ", R12 " << d[1] << ", R21 " << d[2] << ", R22 " << d[3] << "\n";
  std::cout << "relations " << to_string(verify_peirce_relations(ctx).all()) << ", conditions (1)-(4) "
            << to_string(check_conditions_1_to_4(ctx).all()) << "\n";

  auto der = derivation_space(z);
  auto lie2 = lie_n_derivation_space(z, 2);
  std::cout << "\ndim Der = " << der.dim() << ", dim LieDer_2 = " << lie2.space.dim() << "\n";

  // A Lie 2-derivation passing (a)-(c), split into derivation + central part.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto abc = abc_subspace(ctx, lie2.space);
  auto v = zero_vec<Rational>(Q, 64);
  for (const auto& b : abc.basis_vectors()) v = v + Rational(coef(rng)) * b;
  auto map = vec_to_map<Rational>(Q, 8, std::span<const Rational>(v));
  auto r = decompose(ctx, map, 2);
  std::cout << "\nrandom D in LieDer_2:\n" << map.to_string() << "\n";
  std::cout << "delta is a derivation: " << (is_derivation(z, r.delta) ? "yes" : "no")
            << ", tau = 0: " << (r.tau.is_zero() ? "yes" : "no") << "\n";
}
