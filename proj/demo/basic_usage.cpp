// A tour: closure of a function, a neighbourhood test, a topology comparison
// and a bounded containment check.

#include <iostream>  // for cout

#include "waning/waning.hpp"

int main() {
  using namespace waning;

  GenFn const    f{{5, 5, 5}, 0, 0};
  WaningFn const fp = closure(f);
  std::cout << "closure of " << io::to_json(f).dump() << " is " << io::to_json(fp).dump() << '\n';

  PartialBijection const g{{0, 0}, {2, 5}};
  Nat const              r = valid_r_min(fp, g);
  auto const             w = SetDescriptor::w_nbhd(fp, g, r);
  std::cout << "W_{f',g," << r << "} contains " << g.to_string() << ": " << w.contains(g) << '\n';

  auto const t2 = PolishTopology::direct(WaningFn::const_omega());
  auto const t3 = PolishTopology::dual(WaningFn::const_omega());
  std::cout << "I_2 vs I_3: " << to_string(compare(t2, t3)) << '\n';
  std::cout << "I_2 join I_3: " << io::to_json(join_topology(t2, t3)).dump() << '\n';

  auto const report = subset_check(SetDescriptor::w_nbhd(fp, g, r + 2), w, BoundedUniverse(5));
  std::cout << report.to_text(false);
  return report.passed() ? 0 : 1;
}
