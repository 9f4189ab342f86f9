/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "llwb/core/sequent.hpp"

namespace llwb {

/* Fragments of propositional linear logic. The lattice is the powerset of
 * {multiplicative, additive, exponential}; the enumerator value is the bit
 * set, so join is bitwise or. */
enum class Fragment : unsigned {
	MLL = 1,
	ALL = 2,
	MALL = 3,
	ELL = 4,
	MELL = 5,
	AELL = 6,
	LL = 7,
};

Fragment join(Fragment a, Fragment b);
bool leq(Fragment a, Fragment b);

std::string_view to_string(Fragment f);
std::optional<Fragment> fragment_from_string(std::string_view s);

/* Least fragment containing every connective, unit and modality of the
 * input. 1 and bot count as multiplicative, top and 0 as additive. A
 * sequent of bare literals is reported as MLL. */
Fragment classify_fragment(const Formula &f);
Fragment classify_fragment(const Sequent &s);

/* Raised when an input lies outside the fragment an operation supports. */
class FragmentError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

} // namespace llwb
