/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "llwb/calculus/proof.hpp"
#include "llwb/calculus/prove.hpp"

namespace llwb {

enum class LinkKind { Axiom, Cut, Tensor, Par };

/* Endpoints are occurrence indices. Axiom links have two conclusions and
 * no premises, cut links two premises and no conclusion, tensor and par
 * links premises {left, right} and one conclusion. */
struct Link {
	LinkKind kind;
	std::vector<std::size_t> premises;
	std::vector<std::size_t> conclusions;

	friend bool operator==(const Link &, const Link &) = default;
};

struct ProofNet {
	std::vector<Formula> occurrences;
	std::vector<Link> links;
	std::vector<std::size_t> conclusions;
};

/* Empty string when the structure is well formed, else the first problem. */
std::string well_formedness(const ProofNet &net);

/* Translates an MLL proof (rules id, cut, tensor, par). Compound axioms are
 * eta-expanded. Throws FragmentError on any other rule or on units. */
ProofNet from_proof(const ProofTree &t);

struct ContractResult {
	bool valid = false;
	std::string reason;
	std::size_t steps = 0;
};

/* Danos-style contraction: axiom links create nodes, tensor and cut links
 * merge two distinct nodes, par links fire only inside one node. With a
 * seed, the order in which applicable links are tried is shuffled. */
ContractResult contract(const ProofNet &net, std::optional<std::uint64_t> seed = std::nullopt);

struct MllResult {
	Verdict verdict = Verdict::Unknown;
	/* The cut-free structure of the first valid linking, when found by
	 * linking enumeration. */
	std::optional<ProofNet> net;
	/* Set when the sequent contains units and was handed to prove(). */
	std::optional<SearchResult> routed;
	std::size_t linkings_tried = 0;
};

/* Throws FragmentError unless the sequent is in MLL. */
MllResult decide_mll(const Sequent &s);

/* Cut-free proof structure of `s` for an explicit axiom linking; `pairs`
 * refers to atom leaves in left-to-right order (see atom_leaves). */
ProofNet structure_with_linking(const Sequent &s, const std::vector<std::pair<std::size_t, std::size_t>> &pairs);

/* Literal leaves of `s` in left-to-right order. */
std::vector<Formula> atom_leaves(const Sequent &s);

nlohmann::json net_to_json(const ProofNet &net);
ProofNet net_from_json(const nlohmann::json &j);
std::string net_to_dot(const ProofNet &net);

std::string_view to_string(LinkKind k);

} // namespace llwb
