#pragma once

#include <cstddef>
#include <optional>

namespace gpr {

/// Deliberate defects for mutation testing. Default-constructed means none.
struct Faults {
  /// Use f_n = +d_n instead of -d_n.
  bool flip_fn_sign = false;
  /// Drop the (k - 1) Id term from the diagonal Δ^k.
  bool drop_delta_shift = false;
  /// Add 1 to the predicted root m_i (0-based i).
  std::optional<std::size_t> perturb_sigma2_root;
  /// Negate the central term x_i f ⊗ I v in the action of p_i.
  bool flip_p_central_sign = false;

  bool any() const { return flip_fn_sign || drop_delta_shift || perturb_sigma2_root || flip_p_central_sign; }
};

}  // namespace gpr
