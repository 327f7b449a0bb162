#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sadm/semantics.hpp"

namespace sadm {

// Text form shared by `solve` output and `verify` input:
//
//   in: A C
//   out: B
//   undec: D E F G H
//   mm: A=1 B=2 C=3
//
// Names are listed in index order; "inf" stands for an infinite number.
std::string format_labelling(const ArgumentationFramework& af, const Labelling& lab);
std::string format_numbering(const ArgumentationFramework& af, const MinMaxNumbering& mm);
std::string format_certificate(const ArgumentationFramework& af, const Labelling& lab,
                               const MinMaxNumbering& mm);

struct Certificate {
  Labelling lab;
  std::optional<MinMaxNumbering> mm;  // absent when there is no mm line
};

// Arguments not mentioned on any of the three label lines are undec. An
// argument listed twice, an unknown name, or a malformed mm entry is a
// SyntaxError.
Certificate parse_certificate(const ArgumentationFramework& af, std::string_view text);

}  // namespace sadm
