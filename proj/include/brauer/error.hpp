#ifndef BRAUER_ERROR_HPP_
#define BRAUER_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace brauer {

  enum class ErrorKind {
    invalid_argument,  // malformed or out-of-range input
    size_mismatch,     // operands of incompatible sizes
    dimension_cap,     // oracle module larger than the configured cap
    internal           // a checked invariant failed
  };

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept {
      return kind_;
    }

   private:
    ErrorKind kind_;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& what) {
    throw Error(kind, what);
  }

}  // namespace brauer

// Invariant checks stay on in release builds: the oracle exists to catch
// exactly these.
#define BRAUER_ASSERT(cond, msg)                                          \
  do {                                                                    \
    if (!(cond)) {                                                        \
      ::brauer::fail(::brauer::ErrorKind::internal,                       \
                     std::string("assertion failed: ") + #cond + " (" +   \
                         std::string(msg) + ")");                         \
    }                                                                     \
  } while (false)

#endif  // BRAUER_ERROR_HPP_
