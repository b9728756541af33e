#pragma once

#include <stdexcept>
#include <string>

namespace equihom {

/// Base coefficient ring for every computation in the library.
enum class Coeff { F2, Z };

inline std::string coeff_name(Coeff c) { return c == Coeff::F2 ? "f2" : "z"; }

/// Error in the mathematical domain (bad degrees, incompatible groups,
/// resource guards, ...).  The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw domain_error(msg);
}

} // namespace equihom
