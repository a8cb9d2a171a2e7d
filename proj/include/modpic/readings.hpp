#pragma once

#include <string>
#include <vector>

namespace modpic {

// How textual ambiguities are resolved.  The defaults are the consistent
// readings; every field can be flipped to demonstrate the resulting failure.
struct Readings {
  // Sign of the genus-2-tail image of δ_{g−2} (marks on the genus-(g−2) side).
  int g2_sign = -1;
  // Highest θ index on M̄_{0,g+1}: g−2 (valid) or the literal g−1.
  bool theta_top_literal = false;
  // θ_{i;S} uses T ∪ (S+g); the literal reading shifts by n instead.
  bool theta_shift_by_n = false;
  // Genus of the fixed curve in the genus-2-tail map: g−2, or the literal g.
  bool tail_genus_literal = false;

  int theta_shift(int g, int n) const { return theta_shift_by_n ? n : g; }
  int theta_top(int g) const { return theta_top_literal ? g - 1 : g - 2; }
  bool is_default() const {
    return g2_sign == -1 && !theta_top_literal && !theta_shift_by_n && !tail_genus_literal;
  }

  // One note per reading, suitable for report output.
  std::vector<std::string> notes() const;
};

}  // namespace modpic
