#ifndef RADON_VERIFY_HPP
#define RADON_VERIFY_HPP

#include <string>
#include <vector>

// User-facing smoke test: runs the oracle-equivalence and weight-bound checks
// and reports one result per invariant group.

namespace radon::verify {

struct GroupResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

enum class Level { Quick, Full };

std::vector<GroupResult> run(Level level);

} // namespace radon::verify

#endif
