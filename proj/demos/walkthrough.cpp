// A short tour: cohomology tables, the block collection and its dual, an E1
// page with its K-class check, and the splitting criterion, all on P^1 x P^2.

#include <iostream>

#include "sheafcoh/sheafcoh.hpp"

using namespace sheafcoh;

int main() {
    space X({1, 2});

    sheaf_sum F = parse_sheaf("O(0)#Om^1(1) + O(-2)#O(0)", X);
    std::cout << "F = " << to_string(F) << ", rank " << rank(F) << ", chi " << chi(F) << "\n";
    for (const auto& [q, h] : cohomology(F)) std::cout << "  h^" << q << " = " << h << "\n";

    block_collection blocks = standard_blocks(X);
    std::cout << "\nblock collection type: (";
    for (size_t i = 0; i < blocks.type().size(); ++i)
        std::cout << (i ? ", " : "") << blocks.type()[i];
    std::cout << "), axiom violations: " << verify_block_axioms(blocks).size() << "\n";

    std::cout << "dual collection entries:\n";
    dual_blocks duals = dual_collection(X);
    for (const dual_entry& e : duals.entries)
        std::cout << "  k=" << e.k << "  O" << to_string(e.source) << "  ->  "
                  << to_string(e.image) << "\n";

    e1_page page = beilinson_e1(X, F, ss_variant::II);
    kclass_result kc = kclass_check(page);
    std::cout << "\nE1 page of F has " << page.cells.size()
              << " nonzero cells; K-class check: " << (kc.pass ? "pass" : "fail") << "\n";

    for (const char* expr : {"O(1)#O(1) + O(-1)#O(-1)", "O(0)#Om^1(1)"}) {
        split_result r = split_check(X, parse_sheaf(expr, X));
        std::cout << expr << "  ->  " << (r.certified ? "CERTIFIED_SPLIT" : "INCONCLUSIVE")
                  << "\n";
    }

    sheaf_sum om = omega_bundle(X, 1);
    std::cout << "\nomega_bundle(X, 1) = " << to_string(om) << "\ncharacterize: "
              << (characterize(X, 1, om).pass ? "PASS" : "FAIL") << "\n";
    return 0;
}
