#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace gdual {

// Every validation failure carries a stable code (the failure kind) plus a
// human-readable witness (the element/pair/triple that broke the law).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

namespace detail {
inline void format_into(std::ostringstream&) {}
template <typename T, typename... Rest>
void format_into(std::ostringstream& os, const T& v, const Rest&... rest) {
    os << v;
    format_into(os, rest...);
}
} // namespace detail

template <typename... Parts>
[[noreturn]] void fail(const std::string& code, const Parts&... parts) {
    std::ostringstream os;
    detail::format_into(os, parts...);
    throw Error(code, os.str());
}

} // namespace gdual
