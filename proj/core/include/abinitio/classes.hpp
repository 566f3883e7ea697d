#ifndef ABINITIO_CLASSES_HPP
#define ABINITIO_CLASSES_HPP

#include <optional>
#include <string>
#include <string_view>

#include "abinitio/structure.hpp"

namespace abinitio {

/// The five classes of finite structures the library decides.
///  CLQ0 - distinct maximal cliques meet in fewer than n points.
///  CLQ  - CLQ0 and every singleton is strong.
///  SYM  - CLQ and every maximal clique has exactly n points.
///  GEO  - every X with |X| >= n and predim(X) < n lies in exactly one maximal clique.
///  C    - SYM and every (n-1)-subset is independent in the associated geometry.
enum class ClassId { CLQ0, CLQ, SYM, GEO, C };

inline constexpr ClassId kAllClasses[] = {ClassId::CLQ0, ClassId::CLQ, ClassId::SYM,
                                          ClassId::GEO, ClassId::C};

std::string_view to_string(ClassId c) noexcept;
std::optional<ClassId> parse_class(std::string_view s) noexcept;

struct Membership {
  bool member = true;
  std::string reason;  // empty when member
  VertexSet witness;   // violating subset, when there is one

  explicit operator bool() const noexcept { return member; }
};

/// Decides membership by checking the defining condition exhaustively.
/// Never throws for well-formed structures; a failure comes with a witness.
Membership class_member(const SStructure& a, ClassId c);

}  // namespace abinitio

#endif  // ABINITIO_CLASSES_HPP
