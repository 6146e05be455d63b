#pragma once

#include <memory>

#include "incmat/qrank.hpp"

namespace incmat::detail {

/// Process-wide SubspaceCatalog cache, keyed by (n, k, q).
std::shared_ptr<const SubspaceCatalog> shared_catalog(int n, int k, std::uint64_t q);

} // namespace incmat::detail
