// Small tour of the library API: invariants for a few classic spaces and one
// connected sum, plus the machine-readable record for the last of them.

#include <iostream>

#include <brieskorn/brieskorn.hpp>

int main() {
    using namespace brieskorn;

    for (const char* expr : {"Sigma(2,3,5)", "Sigma(2,3,7)", "Sigma(2,3,11)"}) {
        InvariantReport rep = analyze(expr);
        std::cout << record_table(rep) << "\n";
    }

    InvariantReport sum = analyze("2*Sigma(2,3,11)");
    std::cout << record_table(sum) << "\n";
    std::cout << "same record as JSON:\n" << record_json(sum).dump(2) << "\n";
    return 0;
}
