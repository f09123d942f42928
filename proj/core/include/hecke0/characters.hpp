#pragma once

// Symmetric-group character values by the Murnaghan-Nakayama rule.

#include <cstdint>

#include "hecke0/combinatorics.hpp"

namespace hecke0 {

/// chi^lam evaluated on the class of cycle type mu, by border-strip removal.
/// Throws InvalidArgument when |lam| != |mu|.
std::int64_t mn_character(const Partition& lam, const Partition& mu);

/// z_mu = prod_i i^{m_i} m_i!, the centralizer order of the class mu.
std::int64_t centralizer_size(const Partition& mu);

/// The canonical class representative (1..mu_1)(mu_1+1..mu_1+mu_2)...
Permutation class_representative(const Partition& mu);

}  // namespace hecke0
