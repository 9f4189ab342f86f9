/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <string_view>

#include "llwb/calculus/proof.hpp"
#include "llwb/core/sequent.hpp"

namespace llwb {

enum class Verdict { Provable, NotProvable, Unknown };

std::string_view to_string(Verdict v);

struct SearchStats {
	std::size_t nodes_expanded = 0;
	std::size_t max_depth = 0;
};

struct SearchResult {
	Verdict verdict = Verdict::Unknown;
	ProofPtr proof; // set iff verdict == Provable
	SearchStats stats;
};

struct ProveOptions {
	/* Maximum number of rule applications along a branch; 0 selects
	 * default_depth(s). */
	std::size_t depth_limit = 0;
	/* Restrict id to literals (proofs come out eta-expanded). */
	bool atomic_axioms = false;
	/* Give up with Unknown after this many expanded nodes; 0 = no limit. */
	std::size_t node_limit = 0;
};

std::size_t default_depth(const Sequent &s);

/* Cut-free proof search. Provable results carry a tree accepted by
 * check_proof. NotProvable is only reported when the search space was
 * exhausted without touching the depth or node limit. */
SearchResult prove(const Sequent &s, const ProveOptions &opts = {});

/* Cheap sound refutation used as a search prune: true only if `s` is
 * certainly unprovable (a stray 0 or literal without a dual, or an atom
 * count that no additive slice can balance). Never true when top occurs. */
bool quick_refute(const Sequent &s);

} // namespace llwb
