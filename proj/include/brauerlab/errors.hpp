#ifndef BRAUERLAB_ERRORS_HPP
#define BRAUERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brauerlab {

// Raised when an enumeration or linear-algebra request exceeds the
// configured size limit instead of silently grinding away.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace brauerlab

#endif
