// Sample program: runs the worked examples through the library and prints
// each input/output pair.

#include <iostream>

#include "ulam/ulam.hpp"

using namespace ulam;

namespace {

void show(const char* title, const std::pair<Tableau, Tableau>& in, const std::pair<Tableau, Tableau>& out) {
  std::cout << title << "\n  " << to_string(in.first) << "  " << to_string(in.second) << "\n  -> "
            << to_string(out.first) << "  " << to_string(out.second) << "\n";
}

}  // namespace

int main() {
  std::cout << "hook base table\n";
  for (const auto& e : hook_base_table()) {
    const auto out = hook_inject(e.n, e.k, e.l, e.in1, e.in2);
    std::cout << "  n=" << e.n << " k=" << e.k << " l=" << e.l << ": " << to_string(e.in1) << "  "
              << to_string(e.in2) << " -> " << to_string(out.first) << "  " << to_string(out.second)
              << "\n";
  }

  const auto a1 = parse_tableau("1,2/3/4/5"), a2 = parse_tableau("1,2,4,5/3");
  show("hook n=5, down/right", {a1, a2}, hook_inject(5, 2, 4, a1, a2));
  const auto b1 = parse_tableau("1,2,5/3/4"), b2 = parse_tableau("1,2,3,4,5");
  show("hook n=5, right/right", {b1, b2}, hook_inject(5, 3, 5, b1, b2));

  const auto p1 = parse_tableau("1,3,6,9/2,4,7,15/5,8/10,13/11/12/14");
  const auto p2 = parse_tableau("1,2,3,4,11,14/5,6,8,12/7,10,13,15/9");
  show("(4,12)-protected, n=15", {p1, p2}, protected_inject(15, 5, 4, 12, p1, p2));

  const LatticePath P("EENENNE"), Q("ENEEEEE");
  const auto f = flip_inject(P, Q);
  std::cout << "path flip\n  " << P.steps() << "  " << Q.steps() << "\n  -> " << f.first.steps() << "  "
            << f.second.steps() << "\n";

  std::cout << "u(n,k)\n";
  for (int n = 1; n <= 8; ++n) {
    std::cout << "  n=" << n << ":";
    for (const auto& [k, c] : shape_sequence({ClassKind::all_permutations}, n).counts) std::cout << " " << c;
    std::cout << "\n";
  }
}
