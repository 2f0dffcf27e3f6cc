// Indicator vectors of a ternary relation, one column per base element.
#include <iostream>

#include "catfuse/vectorize.hpp"

int main() {
  using namespace catfuse;
  RelObject r(SetObject({"a", "b", "c", "d", "e"}), 3,
                                       {{"a", "b", "c"}, {"b", "c", "e"}, {"c", "a", "e"}, {"d", "b", "e"}});
  auto img = krel_to_fvect(r);
  for (std::size_t i = 0; i < img.indicators.size(); ++i)
    std::cout << img.space.label(i) << " = " << to_string(img.indicators[i]) << "\n";
  std::cout << "rank " << img.subspace.rank() << " in R^" << img.ambient.dim() << "\n";
}
