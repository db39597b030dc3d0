// A short tour: build a division algebra class over the completed field with
// period 9 and index 27, watch the index drop under multiplication by 3, and
// list the admissible noncrossed-product parameters for the same (p, q).

#include <iostream>

#include "brauerkit/brauerkit.hpp"

int main() {
    using namespace brauerkit;
    PrimeField f2(2);

    std::cout << "Base field F_2(t); target: period 3^2, index 3^3.\n\n";

    IndecomposableResult r = build_indecomposable(f2, {3, 2, 3});
    std::cout << "constant character theta of order " << r.witnesses.theta.order()
              << " has local order 3 at the places\n  v1 = " << r.witnesses.v1.to_string()
              << "   v2 = " << r.witnesses.v2.to_string() << "\n";

    std::cout << "residue class alpha0 carries the invariants\n";
    for (const auto& [v, x] : r.gamma.alpha0().invariants())
        std::cout << "  inv_{" << v.to_string() << "} = " << x.to_string() << "\n";

    std::cout << "\nWitt pair gamma = alpha0 + (theta, pi):\n";
    std::cout << "  period  " << r.gamma.period() << "\n";
    std::cout << "  index   " << r.certificate.ind
              << "  (= |theta| * index of alpha0 over the cover cut out by theta)\n";
    std::cout << "  3*gamma has index " << r.certificate.ind_q << "\n";
    std::cout << "  verdict: " << r.certificate.verdict << " [" << r.certificate.branch
              << "]\n";

    std::cout << "\nrestriction of alpha0 to the theta-cover, place by place:\n";
    RestrictedClass res = restrict_class(r.gamma.alpha0(), r.gamma.chi0());
    for (const auto& [w, x] : res.invariants())
        std::cout << "  inv_{" << w.to_string() << "} = " << x.to_string() << "\n";

    std::cout << "\nlift off the special fiber (degree-preserving names):\n  ";
    for (const auto& w : r.lifted.lifted_support()) std::cout << w.name() << "  ";
    std::cout << "\n  index " << r.report.ind << ", character-order bound " << r.report.bound
              << " -> upper bound check: " << r.report.upper_bound_check << "\n";

    std::cout << "\nadmissible noncrossed-product parameters for q = 3 over F_2(t), l <= 3:\n";
    for (const NcpParams& x : ncp_admissible(3, f2, 1, 3))
        std::cout << "  (n,m,l,a) = (" << x.n << "," << x.m << "," << x.l << "," << x.a
                  << ")  period " << x.period_value << "  index " << x.index_value << "\n";
    std::cout << "(parameters only; the algebras themselves are not constructed)\n";
    return 0;
}
