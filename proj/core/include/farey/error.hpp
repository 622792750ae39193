#pragma once

#include <stdexcept>
#include <string>

namespace farey {

enum class errc {
  non_positive,
  not_coprime,
  bad_discriminant,
  bad_trace,
  overflow,
  bad_residue,
  square_input,
  not_fundamental,
  no_convergence,
  degenerate_sample,
  bad_binning,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace farey
