/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The llwb Authors
 */

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llwb/core/sequent.hpp"

namespace llwb {

enum class Rule {
	Id,
	Cut,
	Top,
	With,
	Plus1,
	Plus2,
	One,
	False,
	Tensor,
	Par,
	OfCourse,
	Weakening,
	Dereliction,
	Contraction,
};

std::string_view to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

struct ProofTree;
using ProofPtr = std::shared_ptr<const ProofTree>;

/* A derivation node. `principal` indexes into `conclusion` and is absent
 * for id, one, cut and (optionally) top. */
struct ProofTree {
	Sequent conclusion;
	Rule rule;
	std::optional<std::size_t> principal;
	std::vector<ProofPtr> premises;
};

ProofPtr make_proof(Sequent conclusion, Rule rule, std::optional<std::size_t> principal,
                    std::vector<ProofPtr> premises = {});

struct CheckResult {
	bool ok = true;
	std::string diagnostic;
	/* Premise indices leading from the root to the first offending node. */
	std::vector<std::size_t> path;

	explicit operator bool() const { return ok; }
};

CheckResult check_proof(const ProofTree &t);

std::size_t proof_size(const ProofTree &t);
std::size_t proof_height(const ProofTree &t);
bool uses_rule(const ProofTree &t, Rule r);

nlohmann::json proof_to_json(const ProofTree &t);

/* Throws std::invalid_argument (or ParseError for bad conclusions). */
ProofPtr proof_from_json(const nlohmann::json &j);

} // namespace llwb
