// Builds a Lie 2-derivation of M2(GF(3)) that is not additive: ad_E11 plus
// a central-valued map vanishing on commutators, then shows where additivity breaks.

#include <altring/altring.hpp>

#include <iostream>

using namespace altring;

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 0;
  auto a = make_mat2<ModP>(Field::gf(3));
  auto ctx = peirce_context(a);
  FiniteRing r(a);
  auto delta = mul_operator(a, a.basis(0), Side::left) - mul_operator(a, a.basis(0), Side::right);

  for (std::uint64_t s = seed; s < seed + 10; ++s) {
    auto ex = construct_converse_example(ctx, r, delta, 2, s);
    std::cout << "seed " << s << ": " << ex.pn_count << " of " << r.size() << " elements are commutators, identity "
              << to_string(ex.lie.status) << " on " << ex.lie.checked << " pairs, ";
    if (ex.additivity.additive) {
      std::cout << "additive\n";
      continue;
    }
    const auto [x, y, defect] = *ex.additivity.first_defect;
    std::cout << "not additive\n\n  T(x+y) - T(x) - T(y) = (" << vec_to_string<ModP>(r.element(defect)) << ")"
              << " for x = (" << vec_to_string<ModP>(r.element(x)) << "), y = (" << vec_to_string<ModP>(r.element(y))
              << ")\n\n  nonzero values of tau:\n";
    int shown = 0;
    for (FiniteRing::Index e = 0; e < r.size() && shown < 8; ++e)
      if (ex.tau[e] != 0 && ++shown)
        std::cout << "    tau(" << vec_to_string<ModP>(r.element(e)) << ") = (" << vec_to_string<ModP>(r.element(ex.tau[e]))
                  << ")\n";
    std::cout << "    ...\n";
    return 0;
  }
  std::cout << "no non-additive table in this seed range\n";
  return 1;
}
