#ifndef SBFLAG_ALGEBRA_HPP
#define SBFLAG_ALGEBRA_HPP

#include <optional>
#include <vector>

#include "sbflag/global_field.hpp"
#include "sbflag/local_field.hpp"

namespace sbflag {

enum class BaseKind { Abstract, Local, Global };

// A central simple algebra over an abstract, local, or global base
// field, reduced to the data the index and torsion formulas consume.
// For local and global kinds the index and exponent are computed from
// the Brauer data and equal each other; for the abstract kind they are
// user-declared and validated.
struct AlgebraDescriptor {
  BaseKind kind = BaseKind::Abstract;
  Int degree = 1;    // multiple of the index
  Int index = 1;
  Int exponent = 1;  // divides index, same prime support
  std::optional<bool> char_divides_index;         // abstract kind only
  std::optional<LocalBrauerClass> local_data;     // kind Local
  std::optional<GlobalBrauerClass> global_data;   // kind Global

  static AlgebraDescriptor abstract_algebra(
      const Int& index, const Int& exponent,
      const std::optional<Int>& degree = std::nullopt,
      const std::optional<bool>& char_divides_index = std::nullopt);
  static AlgebraDescriptor local_algebra(
      LocalBrauerClass data, const std::optional<Int>& degree = std::nullopt);
  static AlgebraDescriptor global_algebra(
      GlobalBrauerClass data, const std::optional<Int>& degree = std::nullopt);

  void validate() const;
};

Int algebra_index(const AlgebraDescriptor& a);

// One component per prime dividing the index; the component indices
// multiply back to the index. Brauer data decomposes place-wise.
std::vector<AlgebraDescriptor> primary_decompose(const AlgebraDescriptor& a);

AlgebraDescriptor restrict_algebra(const AlgebraDescriptor& a,
                                   const FormalExtension& e);

}  // namespace sbflag

#endif
