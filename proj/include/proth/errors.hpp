#pragma once

#include <stdexcept>
#include <string>

namespace proth {

// Base class for all library errors. code() is a stable machine-readable
// identifier; what() carries the human-readable diagnostic.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

struct empty_input_error : error {
  explicit empty_input_error(const std::string& msg = "generator list is empty")
      : error("EmptyInput", msg) {}
};

struct not_coprime_error : error {
  explicit not_coprime_error(const std::string& msg)
      : error("NotCoprime", msg) {}
};

struct modulus_not_in_semigroup_error : error {
  explicit modulus_not_in_semigroup_error(const std::string& msg)
      : error("ModulusNotInSemigroup", msg) {}
};

struct overflow_error : error {
  explicit overflow_error(const std::string& msg =
                              "bounded-width arithmetic exceeded")
      : error("Overflow", msg) {}
};

struct semigroup_is_all_naturals_error : error {
  explicit semigroup_is_all_naturals_error(
      const std::string& msg = "operation undefined for S = N")
      : error("SemigroupIsAllNaturals", msg) {}
};

struct index_out_of_range_error : error {
  explicit index_out_of_range_error(const std::string& msg)
      : error("IndexOutOfRange", msg) {}
};

struct n_too_small_error : error {
  explicit n_too_small_error(const std::string& msg = "n must exceed 2")
      : error("NTooSmall", msg) {}
};

struct k_even_error : error {
  explicit k_even_error(const std::string& msg = "k must be odd")
      : error("KEven", msg) {}
};

struct k_too_large_error : error {
  explicit k_too_large_error(const std::string& msg)
      : error("KTooLarge", msg) {}
};

struct k_is_one_error : error {
  explicit k_is_one_error(
      const std::string& msg = "k = 1 (Cunningham case) is not supported")
      : error("KIsOne", msg) {}
};

struct closed_form_unavailable_error : error {
  explicit closed_form_unavailable_error(const std::string& msg)
      : error("ClosedFormUnavailable", msg) {}
};

struct engine_scale_exceeded_error : error {
  explicit engine_scale_exceeded_error(const std::string& msg)
      : error("EngineScaleExceeded", msg) {}
};

struct unsupported_format_error : error {
  explicit unsupported_format_error(const std::string& msg)
      : error("UnsupportedFormat", msg) {}
};

}  // namespace proth
