#ifndef ALTRING_ALTRING_HPP
#define ALTRING_ALTRING_HPP

// Everything except the command-line frontend.

#include <altring/catalog.hpp>
#include <altring/finite_search.hpp>
#include <altring/identities.hpp>
#include <altring/lie_type.hpp>
#include <altring/peirce.hpp>
#include <altring/saf_io.hpp>

#endif  // ALTRING_ALTRING_HPP
