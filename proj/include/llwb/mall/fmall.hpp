/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "llwb/calculus/prove.hpp"

namespace llwb {

/* Multi-focussed MALL.
 *
 * A state is a plain cedent plus an optional zone that is either being
 * decomposed positively (Down, after a decide D) or negatively (Up, after
 * a co-decide D^). Deterministic rules (id, bot, 1, top, par) fire
 * eagerly in the plain part; D picks a non-empty multiset of tensor/plus
 * formulas, D^ a non-empty multiset of with formulas. Literals, 1 and 0
 * are released like atoms. */
enum class Phase { None, Down, Up };

struct FocusSequent {
	std::vector<Formula> plain;
	std::vector<Formula> zone;
	Phase phase = Phase::None;
};

enum class FocusMode {
	Multi,      // any non-empty decide multiset
	Focussed,   // D picks one formula
	Cofocussed, // D^ picks one formula
	Bifocussed, // both
};

struct FmallOptions {
	FocusMode mode = FocusMode::Bifocussed;
	/* Maximum number of D/D^ switches along any branch; nullopt means
	 * unbounded. */
	std::optional<std::size_t> alternation_budget;
};

/* The complexity measures of a proof: sigma is the largest number of D/D^
 * switches on a branch, except that a proof without D^ steps has sigma 1;
 * pi is symmetric. */
struct FmallResult {
	/* NotProvable means: no proof within the budget. The proof is the plain
	 * MALL projection (decides and releases erased). */
	SearchResult search;
	std::size_t alternations = 0;
	std::size_t sigma = 0;
	std::size_t pi = 0;
};

/* Throws FragmentError outside MALL. */
FmallResult fmall_prove(const Sequent &s, const FmallOptions &opts = {});

/* Least sigma(Phi) (resp. pi(Phi)) over all FMALL proofs in `mode`;
 * nullopt when the sequent is not provable. */
std::optional<std::size_t> fmall_min_sigma(const Sequent &s, FocusMode mode = FocusMode::Multi);
std::optional<std::size_t> fmall_min_pi(const Sequent &s, FocusMode mode = FocusMode::Multi);

/* The inductive overapproximations of sigma and pi. "Least" formulas are
 * chosen by (size, printed form). Throws FragmentError outside MALL. */
std::size_t fmall_sigma(const Sequent &s);
std::size_t fmall_pi(const Sequent &s);
std::size_t fmall_sigma(const FocusSequent &s);
std::size_t fmall_pi(const FocusSequent &s);

/* The c-formulas: bot, and plus-trees of bot and literals in which every
 * plus has a c-formula child. */
bool is_c_formula(const Formula &f);

} // namespace llwb
