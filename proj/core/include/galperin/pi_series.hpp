#pragma once

#include <gmpxx.h>

namespace galperin {

/// floor(pi * 10^n) from Gibbons' streaming spigot. Exact integer arithmetic
/// only; every emitted digit is final. Cost grows quadratically in n.
mpz_class pi_floor_spigot(unsigned n);

}  // namespace galperin
