#pragma once

// Random inputs for property tests, the acceptance suite and the CLI. All
// generators draw from a caller-owned std::mt19937_64.

#include <cstdint>
#include <random>

#include "thompson/baker.hpp"
#include "thompson/cantor.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/element.hpp"
#include "thompson/monoid.hpp"
#include "thompson/sigma.hpp"

namespace thompson::corpus {

using Rng = std::mt19937_64;

/// THOMPSON_NV_SEED if set and numeric, otherwise fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

/// Pattern built by `splits` half-splits of uniformly chosen bricks along
/// uniformly chosen axes, numbered in split order.
cantor::NumberedPattern random_split_pattern(Rng& rng, std::size_t dim, std::size_t splits);
/// Same pattern with the numbering shuffled.
cantor::NumberedPattern random_numbered_pattern(Rng& rng, std::size_t dim, std::size_t splits);

/// Domain and range each built from the same number of splits, at most
/// max_splits, range numbering shuffled.
nv::Element random_element(Rng& rng, std::size_t dim, std::size_t max_splits);
dyn::TreePair random_tree_pair(Rng& rng, std::size_t max_splits);

cantor::PeriodicWord random_periodic_word(Rng& rng, std::size_t max_pre, std::size_t max_period);
cantor::Point random_point(Rng& rng, std::size_t dim, std::size_t max_pre, std::size_t max_period);
baker::TwoSidedPoint random_two_sided_point(Rng& rng, std::size_t max_pre, std::size_t max_period);

pi::MonoidWord random_monoid_word(Rng& rng, std::size_t max_length, std::size_t max_index);
sigma::SigmaWord random_sigma_word(Rng& rng, std::size_t max_length, std::size_t max_index);

} // namespace thompson::corpus
